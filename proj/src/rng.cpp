#include "expbasis/rng.hpp"

#include "expbasis/trig.hpp"

#include <cmath>

namespace expbasis {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const std::uint64_t key = mix(seed + kGolden * (stream + 1));
    return mix(key + kGolden * (index + 1));
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed + kGolden * (stream + 1))) {}

std::uint64_t CounterRng::nextU64() { return mix(key_ + kGolden * (++counter_)); }

double CounterRng::uniform() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
    if (hasSpare_) {
        hasSpare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * sinPi(2.0 * u2);
    hasSpare_ = true;
    return radius * cosPi(2.0 * u2);
}

}  // namespace expbasis
