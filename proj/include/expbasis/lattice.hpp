#pragma once

#include "expbasis/rational.hpp"
#include "expbasis/scalar.hpp"

#include <cstdint>
#include <vector>

namespace expbasis {

/// Union of unit cubes Q0 + M_p, Q0 = [-1/2, 1/2)^d, with distinct integer
/// translates M_p. Cube order is kept exactly as given.
class MultiRectangle {
public:
    MultiRectangle() = default;
    /// Validates; throws DuplicateCube or DimensionMismatch.
    MultiRectangle(std::size_t dimension, std::vector<IntVector> cubes);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return cubes_.size(); }
    const IntVector& operator[](std::size_t p) const { return cubes_[p]; }
    const std::vector<IntVector>& cubes() const noexcept { return cubes_; }

    MultiRectangle translated(std::span<const std::int64_t> v) const;
    bool contains(std::span<const std::int64_t> m) const;

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> cubes_;
};

/// Succeeds iff every cube has length d, N >= 1 and cubes are distinct.
void validate(std::size_t dimension, const std::vector<IntVector>& cubes);

/// T̄ = 1 + max over axes of (max_p M_pk − min_p M_pk). After translating the
/// minimum corner to the origin, Q ⊂ [−1/2, T̄ − 1/2)^d.
std::int64_t boundingExtent(const MultiRectangle& q);

struct RationalInterval {
    Rational lo;
    Rational hi;
};

/// Finite union of disjoint half-open rational boxes.
struct RationalRectSet {
    std::size_t dimension = 0;
    std::vector<std::vector<RationalInterval>> rects;

    Rational volume() const;
};

struct NormalizationResult {
    MultiRectangle target;
    /// Per-axis least common denominator l_k.
    IntVector scale;
    /// L = ∏ l_k. Frame constants on the input set are those on target divided by L.
    std::int64_t volumeFactor = 1;
    /// x ↦ x ⊙ scale + translation maps the input onto the union of target cubes.
    std::vector<Rational> translation;
};

/// Hard cap on the number of unit cells produced by normalize.
inline constexpr std::size_t kMaxNormalizedCells = 1u << 20;

/// Scales a rational multi-rectangle to integer vertices and cuts it into unit
/// cubes. Throws Overlap, Overflow, DimensionMismatch, InvalidArgument, TooManyCells.
NormalizationResult normalize(const RationalRectSet& rects);

}  // namespace expbasis
