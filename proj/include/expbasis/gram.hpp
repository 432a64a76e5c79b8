#pragma once

#include "expbasis/lattice.hpp"
#include "expbasis/matrix.hpp"
#include "expbasis/scalar.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace expbasis {

/// ∫_Q e^{2πi⟨λ, x⟩} conj(e^{2πi⟨μ, x⟩}) dx
///   = Σ_p e^{2πi⟨λ − μ, M_p⟩} ∏_k sinc(π(λ_k − μ_k)).
Complex expInnerProduct(std::span<const double> lambda, std::span<const double> mu, const MultiRectangle& q);

/// Largest allowed section order J·(2R + 1)^d.
inline constexpr std::size_t kMaxSectionOrder = 4096;

/// Gram matrix of e^{2πi⟨n + δ_j, x⟩} on Q over shifts j and |n_k| ≤ R.
/// Row index is j·(2R + 1)^d + lexicographic position of n.
struct GramSection {
    std::int64_t radius = 0;
    std::size_t dimension = 0;
    std::size_t shifts = 0;
    HermitianMatrix matrix;
    double minEig = 0.0;
    double maxEig = 0.0;

    std::size_t order() const noexcept { return matrix.order(); }
    /// Lattice points per shift, (2R + 1)^d.
    std::size_t pointsPerShift() const noexcept { return shifts == 0 ? 0 : order() / shifts; }
};

/// Throws SectionTooLarge, DimensionMismatch, InvalidArgument (R < 0).
GramSection gramSection(const MultiRectangle& q, const ShiftFamily& s, std::int64_t R);

struct FrameSum {
    /// Σ_{j, |n| ≤ R} |⟨g, e_{n+δ_j}⟩|² / ‖g‖² for g = Σ_p conj(w_p)·1_{Q0+M_p}.
    double ratio = 0.0;
    /// ⟨Bw, w⟩ / ‖w‖², the limit of ratio as R → ∞.
    double target = 0.0;
    /// Upper bound on target − ratio from the discarded lattice points.
    double tailBound = 0.0;
};

/// Throws ZeroVector, DimensionMismatch.
FrameSum frameSumIndicator(const MultiRectangle& q, const ShiftFamily& s, std::span<const Complex> w,
                           std::int64_t R);

/// Σ_{|n| > R} sinc²(π(n + δ)) ≤ min(1, 2/(π²(R + ½ − |δ|))).
double sincSquaredTail(double delta, std::int64_t R);

struct VerificationReport {
    double lambda = 0.0;
    double Lambda = 0.0;
    std::size_t trials = 0;
    double minQuotient = 0.0;
    double maxQuotient = 0.0;
    /// minQuotient − λ and Λ − maxQuotient; negative means a violation.
    double lowerMargin = 0.0;
    double upperMargin = 0.0;
    double sectionMin = 0.0;
    double sectionMax = 0.0;
    /// Extremes of the section at radius R/2.
    double halfMin = 0.0;
    double halfMax = 0.0;
    bool quotientsContained = false;
    bool extremesContained = false;
    bool monotone = false;
    bool passed = false;
};

inline constexpr double kContainmentTol = 1e-9;

/// Rayleigh quotients of the radius-R section at seeded random vectors, plus
/// containment of the section extremes in [λ, Λ] and tightening from R/2 to R.
/// Throws NotABasis.
VerificationReport verifyFrameBounds(const MultiRectangle& q, const ShiftFamily& s, std::size_t trials,
                                     std::int64_t R, std::uint64_t seed);

}  // namespace expbasis
