#pragma once

#include "expbasis/scalar.hpp"
#include "expbasis/trig.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace expbasis {

/// Finitely supported sequence on ℤ^d. Exact zeros are never stored.
class SparseSeq {
public:
    using Map = std::map<IntVector, Complex>;

    explicit SparseSeq(std::size_t dimension = 1);
    static SparseSeq delta(IntVector index, Complex value = 1.0);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const Map& entries() const noexcept { return entries_; }

    /// Throws DimensionMismatch on an index of the wrong length.
    void set(const IntVector& index, Complex value);
    void add(const IntVector& index, Complex value);
    Complex at(const IntVector& index) const;

    double l1Norm() const;
    double l2Norm() const;
    /// max |n_k| over the support; 0 when empty.
    std::int64_t supportRadius() const;

    SparseSeq& operator+=(const SparseSeq& rhs);
    SparseSeq& operator-=(const SparseSeq& rhs);
    SparseSeq& operator*=(Complex c);

private:
    void checkIndex(const IntVector& index) const;

    std::size_t dim_;
    Map entries_;
};

SparseSeq operator+(SparseSeq a, const SparseSeq& b);
SparseSeq operator-(SparseSeq a, const SparseSeq& b);
/// Σ a_n conj(b_n)
Complex innerProduct(const SparseSeq& a, const SparseSeq& b);

struct TruncatedResult {
    /// Output restricted to the window [−R, R]^d.
    SparseSeq seq;
    std::int64_t radius = 0;
    /// Upper bound on ‖exact output − seq‖ in ℓ².
    double tailBound = 0.0;
};

/// (T_t a)_m = (sin πt/π) Σ_n a_n/(m − n + t), or (−1)^t a_{m+t} for integer t,
/// on |m| ≤ R. Needs R ≥ S + 1 with S the support radius; for non-integer t the
/// tail bound is (|sin πt|/π)·‖a‖₁·√(2/G), G = R − S − max(0, |t| − ½) > 0.
/// Throws RadiusTooSmall.
TruncatedResult applyT1d(double t, const SparseSeq& a, std::int64_t R);

/// T_t = T_{t_1 e_1} ∘ … ∘ T_{t_d e_d}, applied axis d first. Stage tail bounds add.
TruncatedResult applyTnd(std::span<const double> t, const SparseSeq& a, std::int64_t R);

/// Axis operators applied in the given order instead of d, d−1, ..., 1.
TruncatedResult applyTndOrdered(std::span<const double> t, const SparseSeq& a, std::int64_t R,
                                std::span<const std::size_t> axisOrder);

/// (Ha)_m = (1/π) Σ_{n≠m} a_n/(m − n), tail (1/π)‖a‖₁√(2/(R − S)).
TruncatedResult applyH(const SparseSeq& a, std::int64_t R);

/// A measured residual against the rigorous bound it must respect.
struct CheckResult {
    double residual = 0.0;
    double bound = 0.0;
    bool withinBound = false;
};

/// Slack added to every bound for floating rounding in the sums themselves.
inline constexpr double kRoundingSlack = 1e-12;

/// |‖T_t a‖² − ‖a‖²| on the window, against 2τ‖a‖ + τ².
CheckResult checkIsometry(std::span<const double> t, const SparseSeq& a, std::int64_t R);

/// ‖T_s(T_t a) − T_{s+t} a‖: inner window R, outer and reference window 2R + 1.
CheckResult checkGroupLaw(std::span<const double> s, std::span<const double> t, const SparseSeq& a,
                          std::int64_t R);

struct AdjointCheck {
    /// |⟨T_t a, b⟩ − ⟨a, T_{−t} b⟩|
    CheckResult adjoint;
    /// |⟨T_t a, T_t b⟩ − ⟨a, b⟩|
    CheckResult unitarity;
    /// |⟨T_t a, T_{−t} b⟩ − ⟨T_{2t} a, b⟩|
    CheckResult doubled;
};

AdjointCheck checkAdjoint(std::span<const double> t, const SparseSeq& a, const SparseSeq& b, std::int64_t R);

struct GeneratorCheck {
    std::vector<double> steps;
    /// r(h) = ‖(T_h a − a)/h − πHa‖ on the window.
    std::vector<double> windowed;
    /// windowed + rigorous bound on the same expression outside the window.
    std::vector<double> certified;
    /// Least-squares slope of log r against log h; +∞ when every r(h) is 0.
    double order = 0.0;
    bool decreasing = false;
};

/// d = 1 only; steps must lie in (0, ½].
GeneratorCheck checkGenerator(const SparseSeq& a, std::span<const double> steps, std::int64_t R);

struct TwistedInnerProductCheck {
    Complex lhs;
    Complex rhs;
    double residual = 0.0;
    double bound = 0.0;
    bool withinBound = false;
    /// s − t ∈ ℤ^d, so the right side collapses to an exact shift.
    bool integerCase = false;
};

/// Left: ⟨Σ a_n e^{2πi⟨n+s,x⟩}, Σ b_m e^{2πi⟨m+t,x⟩}⟩ on Q0 + M via exact integrals.
/// Right: e^{2πi⟨s−t,M⟩}⟨T_t α, T_s β⟩ with α_n = (−1)^{Σn} e^{2πi⟨n,M⟩} a_n, β alike.
TwistedInnerProductCheck checkTwistedInnerProduct(std::span<const std::int64_t> M, std::span<const double> s, std::span<const double> t,
                          const SparseSeq& a, const SparseSeq& b, std::int64_t R);

}  // namespace expbasis
