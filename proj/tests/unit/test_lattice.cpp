#include "expbasis/errors.hpp"
#include "expbasis/lattice.hpp"
#include "expbasis/rng.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace expbasis;

namespace {

RationalRectSet rectSet(std::size_t d, std::vector<std::vector<RationalInterval>> rects) {
    return {d, std::move(rects)};
}

ErrorKind kindOf(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

// Oracle: count unit cells of the scaled set by testing each cell centre of the
// bounding box for membership in some input rectangle.
std::set<IntVector> cellsByMembership(const RationalRectSet& rs, const IntVector& scale) {
    const std::size_t d = rs.dimension;
    IntVector lo(d, INT64_MAX), hi(d, INT64_MIN);
    for (const auto& r : rs.rects) {
        for (std::size_t k = 0; k < d; ++k) {
            lo[k] = std::min(lo[k], (r[k].lo * Rational(scale[k])).floor());
            hi[k] = std::max(hi[k], (r[k].hi * Rational(scale[k])).floor() + 1);
        }
    }
    std::set<IntVector> out;
    IntVector c = lo;
    while (true) {
        for (const auto& r : rs.rects) {
            bool inside = true;
            for (std::size_t k = 0; k < d && inside; ++k) {
                const Rational x = (Rational(c[k]) + Rational(1, 2)) / Rational(scale[k]);
                inside = r[k].lo <= x && x < r[k].hi;
            }
            if (inside) {
                out.insert(c);
                break;
            }
        }
        std::size_t k = d;
        while (k-- > 0) {
            if (++c[k] < hi[k]) break;
            c[k] = lo[k];
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

}  // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(1, {{0}, {1}}));
    CHECK(kindOf([] { validate(1, {{0}, {0}}); }) == ErrorKind::DuplicateCube);
    CHECK(kindOf([] { validate(1, {{0}, {1, 2}}); }) == ErrorKind::DimensionMismatch);
    CHECK(kindOf([] { validate(1, {}); }) == ErrorKind::InvalidArgument);
    CHECK(kindOf([] { MultiRectangle(2, {{0, 0}, {0, 0}}); }) == ErrorKind::DuplicateCube);
}

TEST_CASE("boundingExtent") {
    CHECK(boundingExtent(MultiRectangle(1, {{0}})) == 1);
    CHECK(boundingExtent(MultiRectangle(1, {{0}, {3}})) == 4);
    CHECK(boundingExtent(MultiRectangle(2, {{0, 0}, {2, 1}})) == 3);
}

TEST_CASE("boundingExtent is translation invariant") {
    CounterRng rng(9, 0);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<IntVector> cubes;
        while (cubes.size() < 4) {
            cubes.insert({static_cast<std::int64_t>(rng.nextU64() % 7), static_cast<std::int64_t>(rng.nextU64() % 7)});
        }
        const MultiRectangle q(2, {cubes.begin(), cubes.end()});
        const IntVector v{static_cast<std::int64_t>(rng.nextU64() % 100) - 50, -17};
        CHECK(boundingExtent(q.translated(v)) == boundingExtent(q));
        CHECK(q.translated(v).contains(IntVector{q[0][0] + v[0], q[0][1] + v[1]}));
    }
}

TEST_CASE("normalize: unit interval") {
    const auto r = normalize(rectSet(1, {{{Rational(0), Rational(1)}}}));
    CHECK(r.scale == IntVector{1});
    CHECK(r.volumeFactor == 1);
    CHECK(r.target.cubes() == std::vector<IntVector>{{0}});
    CHECK(r.translation == std::vector<Rational>{Rational(-1, 2)});
}

TEST_CASE("normalize: two pieces with mixed denominators") {
    const auto rs = rectSet(1, {{{Rational(0), Rational(1, 2)}}, {{Rational(3, 4), Rational(1)}}});
    const auto r = normalize(rs);
    CHECK(r.scale == IntVector{4});
    CHECK(r.volumeFactor == 4);
    CHECK(r.target.cubes() == std::vector<IntVector>{{0}, {1}, {3}});
    const auto oracle = cellsByMembership(rs, r.scale);
    CHECK(std::set<IntVector>(r.target.cubes().begin(), r.target.cubes().end()) == oracle);
}

TEST_CASE("normalize: 2-d box") {
    const auto rs = rectSet(2, {{{Rational(-1, 2), Rational(3, 2)}, {Rational(-1, 2), Rational(1, 2)}}});
    const auto r = normalize(rs);
    CHECK(r.scale == IntVector{2, 2});
    CHECK(r.volumeFactor == 4);
    CHECK(r.target.size() == 8);
    const auto oracle = cellsByMembership(rs, r.scale);
    CHECK(oracle.size() == 8);
    CHECK(std::set<IntVector>(r.target.cubes().begin(), r.target.cubes().end()) == oracle);
}

TEST_CASE("normalize invariants on random rational sets") {
    CounterRng rng(4, 0);
    for (int trial = 0; trial < 40; ++trial) {
        // Disjoint boxes: each lives in its own integer column along axis 0.
        RationalRectSet rs{2, {}};
        for (std::int64_t col = 0; col < 3; ++col) {
            std::vector<RationalInterval> box;
            for (std::size_t k = 0; k < 2; ++k) {
                const std::int64_t den = 1 + static_cast<std::int64_t>(rng.nextU64() % 4);
                const std::int64_t a = static_cast<std::int64_t>(rng.nextU64() % den);
                const std::int64_t b = a + 1 + static_cast<std::int64_t>(rng.nextU64() % den);
                const Rational base(k == 0 ? 3 * col : 0);
                box.push_back({base + Rational(a, den), base + Rational(b, den)});
            }
            rs.rects.push_back(box);
        }
        const auto r = normalize(rs);
        CHECK(Rational(static_cast<std::int64_t>(r.target.size())) == Rational(r.volumeFactor) * rs.volume());
        const auto oracle = cellsByMembership(rs, r.scale);
        CHECK(std::set<IntVector>(r.target.cubes().begin(), r.target.cubes().end()) == oracle);
    }
}

TEST_CASE("normalize is idempotent on integer-vertex sets") {
    const auto rs = rectSet(2, {{{Rational(0), Rational(2)}, {Rational(1), Rational(3)}},
                                {{Rational(5), Rational(6)}, {Rational(-4), Rational(-1)}}});
    const auto r = normalize(rs);
    CHECK(r.scale == IntVector{1, 1});
    CHECK(r.volumeFactor == 1);
    CHECK(r.target.size() == 7);
}

TEST_CASE("normalize errors") {
    CHECK(kindOf([] {
              normalize(rectSet(1, {{{Rational(0), Rational(1)}}, {{Rational(1, 2), Rational(2)}}}));
          }) == ErrorKind::Overlap);
    // Touching half-open rectangles are disjoint.
    CHECK_NOTHROW(normalize(rectSet(1, {{{Rational(0), Rational(1)}}, {{Rational(1), Rational(2)}}})));
    CHECK(kindOf([] { normalize(rectSet(1, {{{Rational(1), Rational(1)}}})); }) == ErrorKind::InvalidArgument);
    CHECK(kindOf([] {
              normalize(rectSet(1, {{{Rational(0), Rational(1, 3037000493LL)}},
                                    {{Rational(1), Rational(1) + Rational(1, 3037000453LL)}},
                                    {{Rational(2), Rational(2) + Rational(1, 3037000427LL)}}}));
          }) == ErrorKind::Overflow);
    CHECK(kindOf([] { normalize(rectSet(1, {{{Rational(0), Rational(1, 1 << 22)}}, {{Rational(1), Rational(2)}}})); }) ==
          ErrorKind::TooManyCells);
}
