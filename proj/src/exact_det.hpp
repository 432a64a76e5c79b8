#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace expbasis::detail {

enum class DetVerdict { Nonsingular, Singular, Undecided };

struct ExactDetResult {
    DetVerdict verdict = DetVerdict::Undecided;
    int primesUsed = 0;
    std::string note;
};

/// Decides whether det[ζ^{e_jp}] vanishes, ζ = e^{2πi/D}, for a square
/// exponent table with entries in [0, D).
///
/// The determinant lies in ℤ[ζ]. It is reduced modulo every prime ideal above
/// primes p ≡ 1 (mod D), where ζ maps to the D-th roots of unity of F_p. A
/// nonzero residue proves nonsingularity. If the determinant vanishes at every
/// ideal above primes whose product exceeds the Hadamard bound N^{N/2}, its
/// norm is divisible by a number larger than the norm can be, so it is zero.
/// Gives up (Undecided) once roughly `budget` field multiplications are spent.
ExactDetResult rootOfUnityDeterminant(const std::vector<std::vector<std::uint64_t>>& exponents, std::uint64_t D,
                                      double budget);

bool isPrime64(std::uint64_t n);

}  // namespace expbasis::detail
