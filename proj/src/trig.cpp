#include "expbasis/trig.hpp"

#include <cmath>

namespace expbasis {

namespace {

// Reduce x to r in [-1/4, 1/4] with x = r + k/2; returns k mod 4.
int halfTurnOctant(double x, double& r) {
    const double k = std::nearbyint(2.0 * x);
    r = x - 0.5 * k;
    const auto q = static_cast<long long>(std::fmod(k, 4.0));
    return static_cast<int>((q % 4 + 4) % 4);
}

}  // namespace

double sinPi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = 0.0;
    const int q = halfTurnOctant(x, r);
    const double a = kPi * r;
    switch (q) {
        case 0: return std::sin(a);
        case 1: return std::cos(a);
        case 2: return r == 0.0 ? 0.0 : -std::sin(a);
        default: return -std::cos(a);
    }
}

double cosPi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = 0.0;
    const int q = halfTurnOctant(x, r);
    const double a = kPi * r;
    switch (q) {
        case 0: return std::cos(a);
        case 1: return r == 0.0 ? 0.0 : -std::sin(a);
        case 2: return -std::cos(a);
        default: return r == 0.0 ? 0.0 : std::sin(a);
    }
}

Complex unitPhase(double turns) { return {cosPi(2.0 * turns), sinPi(2.0 * turns)}; }

double sinc(double z) {
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

double sincPi(double u) {
    const double z = kPi * u;
    if (std::abs(z) < 1e-4) return sinc(z);
    return sinPi(u) / z;
}

}  // namespace expbasis
