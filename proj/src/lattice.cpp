#include "expbasis/lattice.hpp"

#include "expbasis/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace expbasis {

namespace {

std::string vecToString(const IntVector& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

}  // namespace

void validate(std::size_t dimension, const std::vector<IntVector>& cubes) {
    if (dimension == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    if (cubes.empty()) throw Error(ErrorKind::InvalidArgument, "at least one cube is required");
    std::set<IntVector> seen;
    for (std::size_t p = 0; p < cubes.size(); ++p) {
        if (cubes[p].size() != dimension) {
            throw Error(ErrorKind::DimensionMismatch, "cube " + std::to_string(p) + " " + vecToString(cubes[p]) +
                                                          " has length " + std::to_string(cubes[p].size()) +
                                                          ", expected " + std::to_string(dimension));
        }
        if (!seen.insert(cubes[p]).second) {
            throw Error(ErrorKind::DuplicateCube, "cube " + vecToString(cubes[p]) + " appears more than once");
        }
    }
}

MultiRectangle::MultiRectangle(std::size_t dimension, std::vector<IntVector> cubes)
    : dim_(dimension), cubes_(std::move(cubes)) {
    validate(dim_, cubes_);
}

MultiRectangle MultiRectangle::translated(std::span<const std::int64_t> v) const {
    std::vector<IntVector> out;
    out.reserve(cubes_.size());
    for (const auto& m : cubes_) {
        IntVector t(dim_);
        for (std::size_t k = 0; k < dim_; ++k) t[k] = checked::add(m[k], v[k]);
        out.push_back(std::move(t));
    }
    return {dim_, std::move(out)};
}

bool MultiRectangle::contains(std::span<const std::int64_t> m) const {
    return std::any_of(cubes_.begin(), cubes_.end(),
                       [&](const IntVector& c) { return std::equal(c.begin(), c.end(), m.begin(), m.end()); });
}

std::int64_t boundingExtent(const MultiRectangle& q) {
    std::int64_t extent = 0;
    for (std::size_t k = 0; k < q.dimension(); ++k) {
        std::int64_t lo = q[0][k];
        std::int64_t hi = q[0][k];
        for (const auto& m : q.cubes()) {
            lo = std::min(lo, m[k]);
            hi = std::max(hi, m[k]);
        }
        extent = std::max(extent, checked::sub(hi, lo));
    }
    return checked::add(extent, 1);
}

Rational RationalRectSet::volume() const {
    Rational total(0);
    for (const auto& r : rects) {
        Rational v(1);
        for (const auto& iv : r) v *= iv.hi - iv.lo;
        total += v;
    }
    return total;
}

NormalizationResult normalize(const RationalRectSet& rects) {
    const std::size_t d = rects.dimension;
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    if (rects.rects.empty()) throw Error(ErrorKind::InvalidArgument, "at least one rectangle is required");
    for (std::size_t i = 0; i < rects.rects.size(); ++i) {
        const auto& r = rects.rects[i];
        if (r.size() != d) {
            throw Error(ErrorKind::DimensionMismatch, "rectangle " + std::to_string(i) + " has " +
                                                          std::to_string(r.size()) + " intervals, expected " +
                                                          std::to_string(d));
        }
        for (const auto& iv : r) {
            if (!(iv.lo < iv.hi)) {
                throw Error(ErrorKind::InvalidArgument, "degenerate interval [" + iv.lo.toString() + ", " +
                                                            iv.hi.toString() + ") in rectangle " + std::to_string(i));
            }
        }
    }
    // Half-open boxes intersect iff their intervals overlap on every axis.
    for (std::size_t i = 0; i < rects.rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.rects.size(); ++j) {
            bool overlap = true;
            for (std::size_t k = 0; k < d && overlap; ++k) {
                const auto& a = rects.rects[i][k];
                const auto& b = rects.rects[j][k];
                overlap = a.lo < b.hi && b.lo < a.hi;
            }
            if (overlap) {
                throw Error(ErrorKind::Overlap,
                            "rectangles " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
            }
        }
    }

    NormalizationResult result;
    result.scale.assign(d, 1);
    for (std::size_t k = 0; k < d; ++k) {
        for (const auto& r : rects.rects) {
            result.scale[k] = checked::lcm(result.scale[k], r[k].lo.den());
            result.scale[k] = checked::lcm(result.scale[k], r[k].hi.den());
        }
        result.volumeFactor = checked::mul(result.volumeFactor, result.scale[k]);
    }
    result.translation.assign(d, Rational(-1, 2));

    // A cell [c, c+1) of the scaled set becomes Q0 + c after the −1/2 shift.
    std::vector<IntVector> cubes;
    for (const auto& r : rects.rects) {
        IntVector lo(d), hi(d);
        std::size_t cells = 1;
        for (std::size_t k = 0; k < d; ++k) {
            const Rational a = r[k].lo * Rational(result.scale[k]);
            const Rational b = r[k].hi * Rational(result.scale[k]);
            lo[k] = a.num();
            hi[k] = b.num();
            const auto width = static_cast<std::size_t>(checked::sub(hi[k], lo[k]));
            if (width > kMaxNormalizedCells || cells * width > kMaxNormalizedCells) {
                throw Error(ErrorKind::TooManyCells, "normalized set exceeds " +
                                                         std::to_string(kMaxNormalizedCells) + " unit cells");
            }
            cells *= width;
        }
        if (cubes.size() + cells > kMaxNormalizedCells) {
            throw Error(ErrorKind::TooManyCells,
                        "normalized set exceeds " + std::to_string(kMaxNormalizedCells) + " unit cells");
        }
        IntVector cell = lo;
        for (std::size_t n = 0; n < cells; ++n) {
            cubes.push_back(cell);
            for (std::size_t k = d; k-- > 0;) {
                if (++cell[k] < hi[k]) break;
                cell[k] = lo[k];
            }
        }
    }
    result.target = MultiRectangle(d, std::move(cubes));
    return result;
}

}  // namespace expbasis
