#include "expbasis/bounds.hpp"
#include "expbasis/errors.hpp"
#include "expbasis/gamma.hpp"
#include "expbasis/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <set>

using namespace expbasis;

namespace {

ShiftFamily exactFamily(std::size_t d, std::vector<std::vector<Rational>> rows) {
    std::vector<ShiftVector> v;
    for (auto& r : rows) v.emplace_back(r.begin(), r.end());
    return {d, std::move(v)};
}

HermitianMatrix hermitian2(Complex a, Complex b, Complex d) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 1) = d;
    return HermitianMatrix::fromUpper(m);
}

struct Instance {
    MultiRectangle q;
    ShiftFamily s;
};

Instance randomInstance(CounterRng& rng) {
    const std::size_t d = 1 + rng.nextU64() % 3;
    const std::size_t N = 2 + rng.nextU64() % 7;
    std::set<IntVector> cubes;
    while (cubes.size() < N) {
        IntVector m(d);
        for (auto& c : m) c = static_cast<std::int64_t>(rng.nextU64() % 11) - 5;
        cubes.insert(m);
    }
    std::vector<std::vector<double>> shifts(N, std::vector<double>(d));
    for (auto& v : shifts) {
        for (auto& c : v) c = rng.uniform();
    }
    return {MultiRectangle(d, {cubes.begin(), cubes.end()}), ShiftFamily::fromDoubles(d, shifts)};
}

}  // namespace

TEST_CASE("gershgorinHermitian examples") {
    ComplexMatrix diag(3, 3);
    diag(0, 0) = 4.0;
    diag(1, 1) = -1.0;
    diag(2, 2) = 2.5;
    const auto g = gershgorinHermitian(HermitianMatrix(diag));
    CHECK(g.maxLo == 4.0);
    CHECK(g.maxHi == 4.0);
    CHECK(g.minLo == -1.0);
    CHECK(g.minHi == -1.0);

    const auto h = gershgorinHermitian(hermitian2(2.0, Complex(1.0, 1.0), 2.0));
    const double r2 = std::sqrt(2.0);
    CHECK(h.minLo == doctest::Approx(2.0 - r2));
    CHECK(h.minHi == doctest::Approx(2.0 + r2));
    CHECK(h.maxLo <= 2.0 + r2);
    CHECK(h.maxHi >= 2.0 + r2 - 1e-15);

    const auto k = gershgorinHermitian(hermitian2(3.0, 0.5, 1.0));
    const double top = 2.0 + std::sqrt(1.25);
    CHECK(k.maxLo == doctest::Approx(2.5));
    CHECK(k.maxHi == doctest::Approx(3.5));
    CHECK(k.maxLo <= top);
    CHECK(top <= k.maxHi);
}

TEST_CASE("radii examples and row-sum identities") {
    SUBCASE("two cubes, δ = {0, 1/4}") {
        const auto r = radii(MultiRectangle(1, {{0}, {1}}), exactFamily(1, {{Rational(0)}, {Rational(1, 4)}}));
        CHECK(r.r[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
        CHECK(r.r[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    }
    SUBCASE("S(1/3) triple has ρ = 0") {
        const MultiRectangle q(1, {{0}, {1}, {2}});
        const auto r = radii(q, ShiftFamily::progression(std::vector<Scalar>{Scalar(Rational(1, 3))}, 3));
        for (double v : r.rho) CHECK(v == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("identical shifts give r = N − 1") {
        const auto r = radii(MultiRectangle(1, {{0}, {1}}), exactFamily(1, {{Rational(1, 5)}, {Rational(1, 5)}}));
        CHECK(r.r[0] == 1.0);
        CHECK(r.r[1] == 1.0);
    }
    SUBCASE("N·r_i and N·ρ_p are off-diagonal row sums of A and B") {
        CounterRng rng(5, 0);
        for (int t = 0; t < 50; ++t) {
            const auto inst = randomInstance(rng);
            const auto r = radii(inst.q, inst.s);
            const auto A = buildA(inst.q, inst.s);
            const auto B = buildB(inst.q, inst.s);
            const double N = static_cast<double>(inst.q.size());
            for (std::size_t i = 0; i < inst.q.size(); ++i) {
                double ra = 0.0, rb = 0.0;
                for (std::size_t j = 0; j < inst.q.size(); ++j) {
                    if (j == i) continue;
                    ra += std::abs(A(i, j));
                    rb += std::abs(B(i, j));
                }
                CHECK(std::abs(N * r.r[i] - ra) < 1e-10);
                CHECK(std::abs(N * r.rho[i] - rb) < 1e-10);
                CHECK(r.r[i] <= N - 1.0 + 1e-12);
                CHECK(r.rho[i] >= 0.0);
            }
        }
    }
    SUBCASE("agreement with the sine form") {
        CounterRng rng(6, 0);
        for (int t = 0; t < 50; ++t) {
            const auto inst = randomInstance(rng);
            const auto r = radii(inst.q, inst.s);
            const std::size_t N = inst.q.size();
            const double n2 = static_cast<double>(N * N);
            for (std::size_t i = 0; i < N; ++i) {
                double ri = 0.0;
                for (std::size_t j = 0; j < N; ++j) {
                    if (j == i) continue;
                    double sum = 0.0;
                    for (std::size_t p = 0; p < N; ++p) {
                        for (std::size_t q = p + 1; q < N; ++q) {
                            double x = 0.0;
                            for (std::size_t k = 0; k < inst.q.dimension(); ++k) {
                                x += (inst.s[i][k].value() - inst.s[j][k].value()) *
                                     static_cast<double>(inst.q[p][k] - inst.q[q][k]);
                            }
                            sum += std::pow(std::sin(3.14159265358979323846 * x), 2);
                        }
                    }
                    ri += std::sqrt(std::max(0.0, 1.0 - 4.0 / n2 * sum));
                }
                CHECK(std::abs(ri - r.r[i]) < 1e-6);
            }
        }
    }
    CHECK_THROWS_AS(radii(MultiRectangle(1, {{0}, {1}}), exactFamily(1, {{Rational(0)}})), Error);
}

TEST_CASE("sRadii") {
    const std::vector<Scalar> third{Scalar(Rational(1, 3))};
    for (double v : sRadii(MultiRectangle(1, {{0}, {1}, {2}}), third)) CHECK(v == 0.0);

    const std::vector<Scalar> quarter{Scalar(Rational(1, 4))};
    const auto s = sRadii(MultiRectangle(1, {{0}, {1}}), quarter);
    CHECK(s[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    try {
        sRadii(MultiRectangle(1, {{0}, {2}}), std::vector<Scalar>{Scalar(Rational(1, 2))});
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateDenominator);
    }

    // N·s_p is the off-diagonal row sum of B̃.
    const MultiRectangle q(2, {{0, 0}, {1, 2}, {3, -1}, {-2, 1}});
    const std::vector<Scalar> delta{Scalar(Rational(2, 11)), Scalar(Rational(1, 7))};
    const auto sv = sRadii(q, delta);
    const auto bt = buildBtilde(q, delta);
    for (std::size_t p = 0; p < 4; ++p) {
        double row = 0.0;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r != p) row += std::abs(bt.matrix(p, r));
        }
        CHECK(std::abs(4.0 * sv[p] - row) < 1e-10);
    }
}

TEST_CASE("envelope examples") {
    SUBCASE("two cubes, δ = {0, 1/4} is tight") {
        const auto b = envelope(MultiRectangle(1, {{0}, {1}}), exactFamily(1, {{Rational(0)}, {Rational(1, 4)}}));
        CHECK(std::abs(b.lower - (2.0 - std::sqrt(2.0))) < 1e-12);
        CHECK(std::abs(b.upper - (2.0 + std::sqrt(2.0))) < 1e-12);
        CHECK(b.tight);
        CHECK(b.contained);
    }
    SUBCASE("S(1/3) triple gives [3, 3]") {
        const MultiRectangle q(1, {{0}, {1}, {2}});
        const std::vector<Scalar> third{Scalar(Rational(1, 3))};
        const auto b = envelopeSdelta(q, third);
        CHECK(b.lower == doctest::Approx(3.0));
        CHECK(b.upper == doctest::Approx(3.0));
        CHECK(b.tight);
        REQUIRE(b.sVals.has_value());
        CHECK(b.sVals->size() == 3);
    }
    SUBCASE("identical shifts clamp to [0, 2N]") {
        const auto b = envelope(MultiRectangle(1, {{0}, {1}}), exactFamily(1, {{Rational(1, 5)}, {Rational(1, 5)}}));
        CHECK(b.lower == 0.0);
        CHECK(b.upper == 4.0);
        CHECK(b.contained);
    }
    SUBCASE("literal lower bound can overshoot λ") {
        // One shift pair far from degenerate, another nearly equal: min radius is small, λ is tiny.
        const MultiRectangle q(1, {{0}, {1}, {2}});
        const auto s = ShiftFamily::fromDoubles(1, {{0.0}, {0.001}, {0.5}});
        const auto b = envelope(q, s);
        CHECK(b.contained);
        CHECK(b.literalLower > b.lambda);
        CHECK_FALSE(b.warnings.empty());
    }
}

TEST_CASE("envelope soundness on 1000 random basis instances") {
    CounterRng rng(2024, 1);
    int violations = 0;
    int bases = 0;
    while (bases < 1000) {
        const auto inst = randomInstance(rng);
        const auto b = envelope(inst.q, inst.s);
        if (b.lambda <= kSigmaTol * static_cast<double>(inst.q.size())) continue;
        ++bases;
        if (!(b.lower <= b.lambda + 1e-10 && b.Lambda <= b.upper + 1e-10)) ++violations;
        // Width is 2N·rad, so it shrinks whenever every radius does.
        const double N = static_cast<double>(inst.q.size());
        const double rad = std::min(*std::max_element(b.rVals.begin(), b.rVals.end()),
                                    *std::max_element(b.rhoVals.begin(), b.rhoVals.end()));
        CHECK(b.upper - N == doctest::Approx(N * rad));
    }
    CHECK(violations == 0);
}

TEST_CASE("sufficientConditionA") {
    const MultiRectangle two(1, {{0}, {1}});
    SUBCASE("half-difference, a = 0.9") {
        const auto s = exactFamily(1, {{Rational(0)}, {Rational(1, 2)}});
        const auto c = sufficientConditionA(two, s, 0.9);
        CHECK(c.holds);
        const auto a = analyze(two, s);
        CHECK(c.lower <= a.lambda);
        CHECK(a.Lambda <= c.upper);
        CHECK(c.lower == doctest::Approx(1.8));
        CHECK(c.upper == doctest::Approx(2.2));
    }
    SUBCASE("identical shifts") {
        CHECK_FALSE(sufficientConditionA(two, exactFamily(1, {{Rational(1, 3)}, {Rational(1, 3)}}), 0.5).holds);
    }
    SUBCASE("quarter difference, a = 0.29") {
        const auto s = exactFamily(1, {{Rational(0)}, {Rational(1, 4)}});
        const auto c = sufficientConditionA(two, s, 0.29);
        CHECK(c.holds);
        const auto a = analyze(two, s);
        CHECK(a.lambda >= c.lower);
        CHECK(a.Lambda <= c.upper);
        CHECK_FALSE(sufficientConditionA(two, s, 0.3).holds);
    }
    SUBCASE("implication on random instances") {
        CounterRng rng(77, 0);
        int fired = 0;
        for (int t = 0; t < 400; ++t) {
            const auto inst = randomInstance(rng);
            for (double a : {0.05, 0.2, 0.5}) {
                const auto c = sufficientConditionA(inst.q, inst.s, a);
                if (!c.holds) continue;
                ++fired;
                const auto an = analyze(inst.q, inst.s);
                CHECK(an.lambda >= c.lower - 1e-10);
                CHECK(an.Lambda <= c.upper + 1e-10);
            }
        }
        MESSAGE("condition held on " << fired << " instance/a pairs");
    }
    CHECK_THROWS_AS(sufficientConditionA(two, exactFamily(1, {{Rational(0)}, {Rational(1, 2)}}), 1.0), Error);
}
