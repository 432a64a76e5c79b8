#pragma once

#include "expbasis/lattice.hpp"
#include "expbasis/matrix.hpp"
#include "expbasis/scalar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace expbasis {

/// Γ_{j,p} = e^{2πi⟨δ_j, M_p⟩}. Square families only; throws DimensionMismatch.
ComplexMatrix buildGamma(const MultiRectangle& q, const ShiftFamily& s);
/// Same entries for any J × P shape.
ComplexMatrix buildGammaRectangular(const MultiRectangle& q, const ShiftFamily& s);

/// β_{pq} = Σ_j e^{2πi⟨δ_j, M_q − M_p⟩}, i.e. B = Γ*Γ.
HermitianMatrix buildB(const MultiRectangle& q, const ShiftFamily& s);
/// α_{ij} = Σ_p e^{2πi⟨δ_i − δ_j, M_p⟩}, i.e. A = ΓΓ*.
HermitianMatrix buildA(const MultiRectangle& q, const ShiftFamily& s);

/// Default relative singularity threshold: min eig(B) ≤ kSigmaTol·N means singular.
inline constexpr double kSigmaTol = 1e-10;

struct AnalyzeOptions {
    double sigmaTol = kSigmaTol;
    /// Work cap, in field multiplications, for the modular determinant.
    double exactBudget = 4e8;
};

struct BasisAnalysis {
    ComplexMatrix gamma;
    double detAbs2 = 0.0;
    /// Eigenvalues of B = Γ*Γ, ascending, clamped at 0. These are the squares
    /// of the conventional singular values of Γ.
    std::vector<double> singularValues;
    double lambda = 0.0;
    double Lambda = 0.0;
    bool isBasis = false;
    /// Λ/λ, or +∞ when not a basis.
    double condition = 0.0;
    ScalarKind method = ScalarKind::Floating;
    /// How the verdict was reached: sdelta-criterion, equal-rows, equal-columns,
    /// modular-determinant, single-cube or eigenvalue-threshold.
    std::string decidedBy;
    /// min eig(B) compared with sigmaTol·N.
    double threshold = 0.0;
    std::vector<std::string> warnings;
};

/// Basis analysis of a square family. Exact families are decided
/// exactly; the floating threshold verdict is computed too and any
/// disagreement is reported as a warning.
BasisAnalysis analyze(const MultiRectangle& q, const ShiftFamily& s, const AnalyzeOptions& options = {});

/// Extension to J shifts on P cubes. Frame ⇔ Γ*Γ (P×P) is nonsingular;
/// Riesz sequence ⇔ ΓΓ* (J×J) is nonsingular; threshold sigmaTol·max(J, P).
struct RectangularAnalysis {
    bool isFrame = false;
    bool isRieszSequence = false;
    std::pair<double, double> frameBounds{0.0, 0.0};
    std::pair<double, double> rieszBounds{0.0, 0.0};
    double threshold = 0.0;
    static constexpr const char* label = "extension";
};

RectangularAnalysis analyzeRectangular(const MultiRectangle& q, const ShiftFamily& s,
                                       double sigmaTol = kSigmaTol);

// ---- The progression family S(δ) = {0, δ, ..., (N−1)δ} ----

/// ⟨M_p − M_q, δ⟩ ∉ ℤ for every p ≠ q. Exact for rational δ.
bool sdeltaIsBasis(const MultiRectangle& q, std::span<const Scalar> delta);

struct FlaggedHermitian {
    HermitianMatrix matrix;
    /// Upper-triangle positions where the quotient of sines was replaced by its limit.
    std::vector<std::pair<std::size_t, std::size_t>> flagged;
};

/// β̃_{pq} = sin(πN x)/sin(πx), x = ⟨δ, M_q − M_p⟩, N on the diagonal. At
/// integer x the entry is the limit (−1)^{(N−1)x}·N and is flagged.
FlaggedHermitian buildBtilde(const MultiRectangle& q, std::span<const Scalar> delta);

/// 2^{N(N−1)} ∏_{p<q} sin²(π⟨M_p − M_q, δ⟩) = |det Γ|² for S(δ).
double vandermondeDetSq(const MultiRectangle& q, std::span<const Scalar> delta);

/// For all p ≠ q: ⟨M_p − M_q, δ⟩ ∉ ℤ and N⟨M_p − M_q, δ⟩ ∈ ℤ.
bool isOrthogonalSdelta(const MultiRectangle& q, std::span<const Scalar> delta);

/// True when s is S(δ) modulo integer vectors, with δ = s[1] (or 0 if N = 1).
bool isProgression(const ShiftFamily& s);

// ---- Closed forms ----

struct TwoCubeConstants {
    double lambda = 0.0;
    double Lambda = 0.0;
    bool isBasis = false;
    bool orthogonal = false;
};

/// λ, Λ = 2(1 ∓ |cos πx|), x = ⟨ΔM, Δδ⟩. Throws InvalidArgument for ΔM = 0.
TwoCubeConstants twoCubeConstants(std::span<const std::int64_t> mDiff, std::span<const Scalar> dDiff);

struct IntervalCheck {
    bool isBasis = false;
    FlaggedHermitian atilde;
};

/// Shifts δ_j on [−½, N − ½): basis ⇔ δ_i − δ_j ∉ ℤ. Ã as for β̃ with x = δ_i − δ_j.
IntervalCheck intervalBasisCheck(std::size_t N, std::span<const Scalar> deltas);

/// (ε_i − ε_j + i − j)/N ∉ ℤ for distinct i, j in one period.
bool kadecPeriodicCheck(std::size_t N, std::span<const Scalar> eps);

/// Least L ≥ boundingExtent(q) dividing no ⟨M_p − M_q, 1⃗⟩. Throws
/// DegenerateDiagonal when one of those is 0.
std::int64_t findExtractionShift(const MultiRectangle& q);

/// σ with ⟨M_j, σ⟩ = j/N over the non-origin cubes in input order (j = 1..N−1),
/// free variables 0. Throws MissingOrigin, RankDeficient, Overflow.
std::vector<Rational> spectralShiftSolve(const MultiRectangle& q);

struct SampleOptions {
    double sigmaTol = kSigmaTol;
    /// Test hook: copy δ_1 onto δ_2 in every trial.
    bool forceEqualFirstTwo = false;
};

struct SampleResult {
    std::size_t trials = 0;
    std::size_t singularCount = 0;
    double minEigMin = 0.0;
    double minDetAbs2 = 0.0;
};

/// Uniform shift tuples on [0,1)^{dN}, trial t drawn from stream t of the
/// counter generator under `seed`.
SampleResult randomShiftSample(const MultiRectangle& q, std::size_t trials, std::uint64_t seed,
                               const SampleOptions& options = {});

struct ComplementDuality {
    bool left = false;
    bool right = false;
    bool holds = false;
    std::size_t complementCubes = 0;
    std::size_t complementShifts = 0;
    std::vector<std::string> warnings;
};

/// Left: S(1⃗/L) is a basis on q. Right: the grid shifts {j/L} minus the N
/// diagonal shifts {(j/L)1⃗ : j < N} form a Riesz basis on the cubes of
/// {0..L−1}^d not in q. holds = (left ⇔ right).
ComplementDuality complementDualityCheck(const MultiRectangle& q, std::int64_t L);

}  // namespace expbasis
