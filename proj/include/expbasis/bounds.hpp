#pragma once

#include "expbasis/lattice.hpp"
#include "expbasis/matrix.hpp"
#include "expbasis/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace expbasis {

/// Gershgorin brackets for the extreme eigenvalues of a Hermitian matrix:
/// maxLo ≤ λ_max ≤ maxHi and minLo ≤ λ_min ≤ minHi.
struct GershgorinBrackets {
    double maxLo = 0.0;
    double maxHi = 0.0;
    double minLo = 0.0;
    double minHi = 0.0;
};

GershgorinBrackets gershgorinHermitian(const HermitianMatrix& h);

struct Radii {
    /// r_i = Σ_{j≠i} |α_ij| / N, from the sine form with the radicand clamped at 0.
    std::vector<double> r;
    /// ρ_p = Σ_{q≠p} |β_pq| / N.
    std::vector<double> rho;
};

/// Square families only; throws DimensionMismatch.
Radii radii(const MultiRectangle& q, const ShiftFamily& s);

/// s_p = Σ_{q≠p} |sin(πN⟨δ, M_q − M_p⟩) / (N sin(π⟨δ, M_q − M_p⟩))|.
/// Throws DegenerateDenominator when some ⟨δ, M_q − M_p⟩ is an integer.
std::vector<double> sRadii(const MultiRectangle& q, std::span<const Scalar> delta);

struct BoundsReport {
    std::vector<double> rVals;
    std::vector<double> rhoVals;
    std::optional<std::vector<double>> sVals;
    /// Sound envelope N(1 ∓ rad), rad = min(max r, max ρ) or max s; lower clamped at 0.
    double lower = 0.0;
    double upper = 0.0;
    /// The envelope as printed in the source, min radius on the lower side.
    /// For comparison only; it is not a certificate.
    double literalLower = 0.0;
    double literalUpper = 0.0;
    /// Optimal constants from analyze, for the containment audit.
    double lambda = 0.0;
    double Lambda = 0.0;
    bool contained = false;
    /// [lower, upper] equals [λ, Λ] within 1e−10.
    bool tight = false;
    std::vector<std::string> warnings;
};

BoundsReport envelope(const MultiRectangle& q, const ShiftFamily& s);
/// S(δ) variant, built from s_p on B̃.
BoundsReport envelopeSdelta(const MultiRectangle& q, std::span<const Scalar> delta);

struct SufficientCondition {
    bool holds = false;
    /// aN and (2 − a)N.
    double lower = 0.0;
    double upper = 0.0;
};

/// min_{p<q} sin²(π⟨δ_i − δ_j, M_p − M_q⟩) ≥ (N/(2(N−1)))(1 − ((1−a)/(N−1))²)
/// for every i ≠ j. When it holds, aN ≤ λ ≤ Λ ≤ (2 − a)N. Throws InvalidArgument
/// unless 0 < a < 1.
SufficientCondition sufficientConditionA(const MultiRectangle& q, const ShiftFamily& s, double a);

}  // namespace expbasis
