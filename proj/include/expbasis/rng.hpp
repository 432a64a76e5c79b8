#pragma once

#include <cstdint>

namespace expbasis {

/// Counter-based 64-bit generator.
///
/// Output i of stream s under seed k is
///     key   = mix(k + G * (s + 1))
///     out_i = mix(key + G * (i + 1))
/// with G = 0x9E3779B97F4A7C15 and mix the SplitMix64 finalizer
/// (xor-shift 30, multiply 0xBF58476D1CE4E5B9, xor-shift 27,
/// multiply 0x94D049BB133111EB, xor-shift 31), all arithmetic mod 2^64.
/// Uniform doubles take the top 53 bits; normals use Box-Muller on two
/// consecutive uniforms. Streams are independent of evaluation order, so
/// per-trial streams can be drawn in any order or in parallel.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t nextU64();
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal.
    double normal();

    static std::uint64_t mix(std::uint64_t z);
    static std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool hasSpare_ = false;
    double spare_ = 0.0;
};

}  // namespace expbasis
