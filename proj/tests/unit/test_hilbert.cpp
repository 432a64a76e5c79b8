#include "expbasis/errors.hpp"
#include "expbasis/gram.hpp"
#include "expbasis/hilbert.hpp"
#include "expbasis/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace expbasis;

namespace {

const double kPiD = 3.14159265358979323846;

SparseSeq randomSeq(std::size_t d, std::size_t points, std::int64_t spread, std::uint64_t seed) {
    CounterRng rng(seed, 0);
    SparseSeq a(d);
    while (a.size() < points) {
        IntVector n(d);
        for (auto& c : n) c = static_cast<std::int64_t>(rng.nextU64() % static_cast<std::uint64_t>(2 * spread + 1)) - spread;
        const double re = rng.normal();
        a.set(n, Complex(re, rng.normal()));
    }
    return a;
}

// ∫_{M−½}^{M+½} e^{2πiux} dx from the antiderivative.
Complex intervalIntegral(double u, double M) {
    if (u == 0.0) return 1.0;
    const Complex hi = std::polar(1.0, 2.0 * kPiD * u * (M + 0.5));
    const Complex lo = std::polar(1.0, 2.0 * kPiD * u * (M - 0.5));
    return (hi - lo) / Complex(0.0, 2.0 * kPiD * u);
}

}  // namespace

TEST_CASE("SparseSeq bookkeeping") {
    SparseSeq a(2);
    a.set({1, -2}, 3.0);
    a.set({0, 0}, Complex(0.0, 1.0));
    CHECK(a.size() == 2);
    a.add({1, -2}, -3.0);
    CHECK(a.size() == 1);
    a.set({0, 0}, 0.0);
    CHECK(a.empty());
    CHECK_THROWS_AS(a.set({1}, 1.0), Error);
    const SparseSeq b = randomSeq(2, 4, 3, 7);
    CHECK(b.supportRadius() <= 3);
    CHECK((b - b).empty());
    CHECK(std::abs(innerProduct(b, b) - b.l2Norm() * b.l2Norm()) < 1e-12);
}

TEST_CASE("applyT1d examples") {
    const SparseSeq d0 = SparseSeq::delta({0});
    SUBCASE("t = 0 is the identity") {
        const auto r = applyT1d(0.0, randomSeq(1, 5, 4, 3), 10);
        CHECK((r.seq - randomSeq(1, 5, 4, 3)).empty());
        CHECK(r.tailBound == 0.0);
    }
    SUBCASE("t = 1 maps δ0 to −δ−1") {
        const auto r = applyT1d(1.0, d0, 5);
        CHECK(r.seq.size() == 1);
        CHECK(r.seq.at({-1}) == Complex(-1.0));
        CHECK(r.tailBound == 0.0);
    }
    SUBCASE("t = 1/2 on δ0") {
        const auto r = applyT1d(0.5, d0, 50);
        CHECK(r.seq.at({0}).real() == doctest::Approx(2.0 / kPiD).epsilon(1e-15));
        for (std::int64_t m = -50; m <= 50; ++m) {
            CHECK(std::abs(r.seq.at({m}) - 1.0 / (kPiD * (m + 0.5))) < 1e-15);
        }
        CHECK(r.tailBound == doctest::Approx((1.0 / kPiD) * std::sqrt(2.0 / 50.0)));
    }
    SUBCASE("integer shifts drop mass outside the window") {
        SparseSeq a(1);
        a.set({2}, 3.0);
        a.set({-1}, 4.0);
        const auto r = applyT1d(-2.0, a, 3);
        CHECK(r.seq.at({1}) == Complex(4.0));
        CHECK(r.seq.size() == 1);
        CHECK(r.tailBound == 3.0);
    }
    SUBCASE("radius checks") {
        CHECK_THROWS_AS(applyT1d(0.5, SparseSeq::delta({3}), 3), Error);
        try {
            applyT1d(5.5, d0, 3);
            FAIL("expected RadiusTooSmall");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::RadiusTooSmall);
        }
    }
    SUBCASE("tail bound shrinks with R") {
        const auto a = randomSeq(1, 4, 5, 11);
        CHECK(applyT1d(0.3, a, 400).tailBound < applyT1d(0.3, a, 100).tailBound);
    }
}

TEST_CASE("applyTnd examples") {
    const SparseSeq d00 = SparseSeq::delta({0, 0});
    SUBCASE("zero vector is the identity") {
        const std::vector<double> t{0.0, 0.0};
        const auto a = randomSeq(2, 5, 3, 5);
        CHECK((applyTnd(t, a, 4).seq - a).empty());
    }
    SUBCASE("integer vector is a signed shift") {
        const std::vector<double> t{1.0, -2.0};
        const auto a = randomSeq(2, 5, 3, 9);
        const auto r = applyTnd(t, a, 8);
        CHECK(r.tailBound == 0.0);
        CHECK(r.seq.size() == a.size());
        for (const auto& [n, v] : a.entries()) CHECK(r.seq.at({n[0] - 1, n[1] + 2}) == -v);
    }
    SUBCASE("t = (1/2, 1) factorizes along the axes") {
        const std::vector<double> t{0.5, 1.0};
        const auto r = applyTnd(t, d00, 20);
        for (std::int64_t m = -20; m <= 20; ++m) {
            CHECK(std::abs(r.seq.at({m, -1}) + 1.0 / (kPiD * (m + 0.5))) < 1e-15);
            CHECK(r.seq.at({m, 0}) == Complex(0.0));
        }
    }
    SUBCASE("axis-order independence within the tail bounds") {
        const std::vector<double> t{0.3, -0.7};
        const auto a = randomSeq(2, 3, 2, 21);
        const std::vector<std::size_t> forward{0, 1}, backward{1, 0};
        const auto x = applyTndOrdered(t, a, 20, forward);
        const auto y = applyTndOrdered(t, a, 20, backward);
        CHECK((x.seq - y.seq).l2Norm() <= x.tailBound + y.tailBound + 1e-12);
    }
    CHECK_THROWS_AS(applyTnd(std::vector<double>{0.5}, d00, 4), Error);
}

TEST_CASE("applyH") {
    const auto r = applyH(SparseSeq::delta({0}), 30);
    CHECK(r.seq.at({0}) == Complex(0.0));
    for (std::int64_t m = 1; m <= 30; ++m) {
        CHECK(std::abs(r.seq.at({m}) - 1.0 / (kPiD * m)) < 1e-16);
        CHECK(std::abs(r.seq.at({-m}) + 1.0 / (kPiD * m)) < 1e-16);
    }
    CHECK(applyH(SparseSeq(1), 5).seq.empty());
    const auto a = randomSeq(1, 4, 4, 1);
    const auto b = randomSeq(1, 3, 4, 2);
    const auto lhs = applyH(a + b, 12).seq;
    const auto rhs = applyH(a, 12).seq + applyH(b, 12).seq;
    CHECK((lhs - rhs).l2Norm() < 1e-14);
}

TEST_CASE("isometry") {
    SUBCASE("t = 1/2, δ0, R = 10^4") {
        const std::vector<double> t{0.5};
        const auto r = applyTnd(t, SparseSeq::delta({0}), 10000);
        const double n2 = r.seq.l2Norm() * r.seq.l2Norm();
        CHECK(std::abs(n2 - 1.0) < 1e-3);
        CHECK(checkIsometry(t, SparseSeq::delta({0}), 10000).withinBound);
    }
    SUBCASE("integer t is exact") {
        const std::vector<double> t{3.0, -1.0};
        const auto c = checkIsometry(t, randomSeq(2, 5, 3, 4), 10);
        CHECK(c.residual < 1e-12);
    }
    SUBCASE("random inputs") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const std::vector<double> t{0.17 + 0.3 * static_cast<double>(seed)};
            const auto c = checkIsometry(t, randomSeq(1, 5, 6, seed), 1000);
            CHECK(c.withinBound);
            CHECK(c.residual <= c.bound + 1e-12);
        }
    }
}

TEST_CASE("group law") {
    const SparseSeq d0 = SparseSeq::delta({0});
    const std::vector<double> half{0.5};
    SUBCASE("s = t = 1/2 reaches −δ−1") {
        const auto c = checkGroupLaw(half, half, d0, 200);
        CHECK(c.withinBound);
        const auto twice = applyTnd(half, applyTnd(half, d0, 200).seq, 401);
        const auto target = SparseSeq::delta({-1}, -1.0);
        CHECK((twice.seq - target).l2Norm() <= applyTnd(half, d0, 200).tailBound + twice.tailBound + 1e-12);
    }
    SUBCASE("s = −t returns to a") {
        const std::vector<double> t{0.37}, s{-0.37};
        CHECK(checkGroupLaw(s, t, randomSeq(1, 4, 3, 8), 150).withinBound);
    }
    SUBCASE("s = 0") {
        const std::vector<double> z{0.0}, t{0.8};
        const auto c = checkGroupLaw(z, t, randomSeq(1, 3, 3, 2), 100);
        CHECK(c.withinBound);
    }
    SUBCASE("two dimensions") {
        const std::vector<double> s{0.2, -0.4}, t{0.6, 0.1};
        CHECK(checkGroupLaw(s, t, randomSeq(2, 3, 2, 3), 12).withinBound);
    }
}

TEST_CASE("adjoint and unitarity") {
    SUBCASE("integer t is exact") {
        const std::vector<double> t{2.0};
        const auto c = checkAdjoint(t, randomSeq(1, 4, 3, 5), randomSeq(1, 4, 3, 6), 10);
        CHECK(c.adjoint.residual < 1e-14);
        CHECK(c.unitarity.residual < 1e-14);
        CHECK(c.doubled.residual < 1e-14);
    }
    SUBCASE("t = 1/2, δ0 and δ1") {
        const std::vector<double> t{0.5};
        const auto c = checkAdjoint(t, SparseSeq::delta({0}), SparseSeq::delta({1}), 500);
        CHECK(c.adjoint.withinBound);
        CHECK(c.unitarity.withinBound);
        CHECK(c.doubled.withinBound);
    }
    SUBCASE("⟨T_t a, T_{−t} a⟩ is ⟨T_{2t} a, a⟩, not ‖a‖²") {
        const std::vector<double> t{0.25}, minus{-0.25};
        const SparseSeq d0 = SparseSeq::delta({0});
        const auto x = applyTnd(t, d0, 2000);
        const auto y = applyTnd(minus, d0, 2000);
        const Complex v = innerProduct(x.seq, y.seq);
        CHECK(std::abs(v - 2.0 / kPiD) <= x.tailBound + y.tailBound + 1e-12);
        CHECK(std::abs(v - 1.0) > 0.3);
        CHECK(checkAdjoint(t, d0, d0, 2000).doubled.withinBound);
    }
    SUBCASE("random inputs in two dimensions") {
        const std::vector<double> t{0.31, -1.2};
        const auto c = checkAdjoint(t, randomSeq(2, 3, 2, 40), randomSeq(2, 3, 2, 41), 15);
        CHECK(c.adjoint.withinBound);
        CHECK(c.unitarity.withinBound);
        CHECK(c.doubled.withinBound);
    }
}

TEST_CASE("generator πH") {
    const std::vector<double> steps{1e-1, 1e-2, 1e-3};
    const auto g = checkGenerator(SparseSeq::delta({0}), steps, 1000);
    CHECK(g.decreasing);
    CHECK(g.order >= 0.9);
    CHECK(g.order == doctest::Approx(1.0).epsilon(0.05));
    for (std::size_t i = 0; i < steps.size(); ++i) CHECK(g.certified[i] >= g.windowed[i]);

    const auto zero = checkGenerator(SparseSeq(1), steps, 10);
    for (double r : zero.windowed) CHECK(r == 0.0);
    CHECK(std::isinf(zero.order));

    // A wider window sees more of r(h) and certifies a smaller remainder.
    const auto narrow = checkGenerator(SparseSeq::delta({0}), steps, 100);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        CHECK(narrow.windowed[i] <= g.windowed[i] + 1e-15);
        CHECK(g.windowed[i] <= narrow.certified[i]);
        CHECK(g.certified[i] - g.windowed[i] < narrow.certified[i] - narrow.windowed[i]);
    }
    CHECK_THROWS_AS(checkGenerator(SparseSeq::delta({0}), std::vector<double>{1e-3, 1e-2}, 10), Error);
}

TEST_CASE("continuity at integers") {
    const auto a = randomSeq(1, 4, 3, 12);
    const std::vector<double> k{1.0};
    const auto base = applyTnd(k, a, 500).seq;
    double previous = INFINITY;
    for (double eps : {1e-2, 1e-4}) {
        const std::vector<double> t{1.0 + eps};
        const double dist = (applyTnd(t, a, 500).seq - base).l2Norm();
        CHECK(dist < previous);
        previous = dist;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("twisted inner-product identity") {
    SUBCASE("M = 0, s = t, δ0 against itself") {
        const std::vector<std::int64_t> M{0};
        const std::vector<double> s{0.0};
        const auto c = checkTwistedInnerProduct(M, s, s, SparseSeq::delta({0}), SparseSeq::delta({0}), 10);
        CHECK(std::abs(c.lhs - 1.0) < 1e-15);
        CHECK(std::abs(c.rhs - 1.0) < 1e-15);
        CHECK(c.integerCase);
    }
    SUBCASE("integer s − t matches exactly") {
        const std::vector<std::int64_t> M{3, -2};
        const std::vector<double> s{1.25, -0.5}, t{0.25, 1.5};
        const auto c = checkTwistedInnerProduct(M, s, t, randomSeq(2, 4, 3, 70), randomSeq(2, 4, 3, 71), 20);
        CHECK(c.integerCase);
        CHECK(c.residual < 1e-12);
    }
    SUBCASE("d = 1, M = 3, s = 0.3, t = 0.1, R = 1000") {
        const std::vector<std::int64_t> M{3};
        const std::vector<double> s{0.3}, t{0.1};
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto c = checkTwistedInnerProduct(M, s, t, randomSeq(1, 3, 4, seed), randomSeq(1, 3, 4, seed + 100), 1000);
            CHECK_FALSE(c.integerCase);
            CHECK(c.withinBound);
        }
    }
    SUBCASE("left side agrees with the antiderivative oracle") {
        const std::int64_t M = 3;
        const double s = 0.3, t = 0.1;
        const auto a = randomSeq(1, 3, 4, 5);
        const auto b = randomSeq(1, 3, 4, 6);
        Complex oracle = 0.0;
        for (const auto& [n, an] : a.entries()) {
            for (const auto& [m, bm] : b.entries()) {
                oracle += an * std::conj(bm) *
                          intervalIntegral(static_cast<double>(n[0] - m[0]) + s - t, static_cast<double>(M));
            }
        }
        const std::vector<std::int64_t> Mv{M};
        const std::vector<double> sv{s}, tv{t};
        CHECK(std::abs(checkTwistedInnerProduct(Mv, sv, tv, a, b, 50).lhs - oracle) < 1e-12);
    }
}
