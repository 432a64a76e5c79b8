#include "phases.hpp"

#include "expbasis/errors.hpp"

namespace expbasis::detail {

namespace {

constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 40;
constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 16;

}  // namespace

PhaseGrid::PhaseGrid(const MultiRectangle& q, const ShiftFamily& s) : J_(s.size()), P_(q.size()) {
    if (s.dimension() != q.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "shift dimension " + std::to_string(s.dimension()) +
                                                      " differs from cube dimension " +
                                                      std::to_string(q.dimension()));
    }
    turns_.resize(J_ * P_);
    if (s.kind() == ScalarKind::Exact) {
        std::vector<Rational> fr(J_ * P_);
        std::uint64_t D = 1;
        bool fits = true;
        for (std::size_t j = 0; j < J_; ++j) {
            for (std::size_t p = 0; p < P_; ++p) {
                const Rational r = dot(q[p], s[j]).rational().fractionalPart();
                fr[j * P_ + p] = r;
                turns_[j * P_ + p] = r.toDouble();
                if (fits) {
                    try {
                        D = static_cast<std::uint64_t>(checked::lcm(static_cast<std::int64_t>(D), r.den()));
                    } catch (const Error&) {
                        fits = false;
                    }
                    fits = fits && D <= kMaxDenominator;
                }
            }
        }
        if (fits) {
            integral_ = true;
            D_ = D;
            exps_.resize(J_ * P_);
            for (std::size_t i = 0; i < fr.size(); ++i) {
                exps_[i] = static_cast<std::uint64_t>(fr[i].num()) * (D / static_cast<std::uint64_t>(fr[i].den()));
            }
            if (D <= kMaxTable) {
                table_.resize(D);
                for (std::uint64_t k = 0; k < D; ++k) table_[k] = unitPhase(static_cast<double>(k) / static_cast<double>(D));
            }
        }
    } else {
        for (std::size_t j = 0; j < J_; ++j) {
            for (std::size_t p = 0; p < P_; ++p) turns_[j * P_ + p] = dot(q[p], s[j]).fractionalTurns();
        }
    }
}

Complex PhaseGrid::fromExponent(std::uint64_t e) const {
    if (!table_.empty()) return table_[e];
    return unitPhase(static_cast<double>(e) / static_cast<double>(D_));
}

Complex PhaseGrid::phase(std::size_t j, std::size_t p) const {
    if (integral_) return fromExponent(exps_[j * P_ + p]);
    return unitPhase(turns_[j * P_ + p]);
}

Complex PhaseGrid::phaseDiff(std::size_t j, std::size_t p, std::size_t k, std::size_t r) const {
    if (integral_) {
        const std::uint64_t a = exps_[j * P_ + p];
        const std::uint64_t b = exps_[k * P_ + r];
        return fromExponent(a >= b ? a - b : a + D_ - b);
    }
    return unitPhase(turns_[j * P_ + p] - turns_[k * P_ + r]);
}

}  // namespace expbasis::detail
