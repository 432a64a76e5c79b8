#pragma once

#include "expbasis/lattice.hpp"
#include "expbasis/scalar.hpp"
#include "expbasis/trig.hpp"

#include <cstdint>
#include <vector>

namespace expbasis::detail {

/// Turns ⟨δ_j, M_p⟩ mod 1 for every (shift, cube) pair, flat index j·P + p.
///
/// For exact families with a manageable common denominator D the turns are
/// held as integers e/D, so differences reduce exactly before conversion.
class PhaseGrid {
public:
    PhaseGrid(const MultiRectangle& q, const ShiftFamily& s);

    std::size_t shifts() const noexcept { return J_; }
    std::size_t cubes() const noexcept { return P_; }
    bool integral() const noexcept { return integral_; }
    std::uint64_t denominator() const noexcept { return D_; }
    std::uint64_t exponent(std::size_t j, std::size_t p) const { return exps_[j * P_ + p]; }

    /// e^{2πi⟨δ_j, M_p⟩}
    Complex phase(std::size_t j, std::size_t p) const;
    /// e^{2πi(⟨δ_j, M_p⟩ − ⟨δ_k, M_r⟩)}
    Complex phaseDiff(std::size_t j, std::size_t p, std::size_t k, std::size_t r) const;

private:
    Complex fromExponent(std::uint64_t e) const;

    std::size_t J_ = 0;
    std::size_t P_ = 0;
    bool integral_ = false;
    std::uint64_t D_ = 0;
    std::vector<std::uint64_t> exps_;
    std::vector<double> turns_;
    std::vector<Complex> table_;
};

}  // namespace expbasis::detail
