#include "exact_det.hpp"

#include "wide.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace expbasis::detail {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> primeFactors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Element of multiplicative order exactly D in F_p, p ≡ 1 (mod D).
std::uint64_t rootOfOrder(std::uint64_t D, std::uint64_t p, const std::vector<std::uint64_t>& factorsOfD) {
    for (std::uint64_t x = 2;; ++x) {
        const std::uint64_t y = powmod(x, (p - 1) / D, p);
        bool ok = true;
        for (auto r : factorsOfD) {
            if (powmod(y, D / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return y;
    }
}

bool detIsZeroModP(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return true;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
        }
        const std::uint64_t inv = powmod(a[c * n + c], p - 2, p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const std::uint64_t f = mulmod(a[r * n + c], inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) {
                const std::uint64_t sub = mulmod(f, a[c * n + k], p);
                a[r * n + k] = a[r * n + k] >= sub ? a[r * n + k] - sub : a[r * n + k] + p - sub;
            }
        }
    }
    return false;
}

}  // namespace

bool isPrime64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ExactDetResult rootOfUnityDeterminant(const std::vector<std::vector<std::uint64_t>>& exponents, std::uint64_t D,
                                      double budget) {
    ExactDetResult out;
    const std::size_t n = exponents.size();
    if (n == 0) {
        out.verdict = DetVerdict::Nonsingular;
        return out;
    }
    if (D == 0 || D > (std::uint64_t{1} << 40)) {
        out.note = "common denominator too large for the modular determinant";
        return out;
    }
    const auto factorsOfD = primeFactors(D);
    // log2 of the Hadamard bound N^{N/2} on every conjugate of the determinant.
    const double neededBits = 0.5 * static_cast<double>(n) * std::log2(static_cast<double>(n)) + 1.0;
    const double cubic = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n) / 3.0 + 1.0;

    double collectedBits = 0.0;
    double spent = 0.0;
    std::uint64_t candidate = ((std::uint64_t{1} << 62) - 1) / D * D + 1;
    std::vector<std::uint64_t> table(std::min<std::uint64_t>(D, 1u << 16));
    std::vector<std::uint64_t> a(n * n);
    while (collectedBits <= neededBits) {
        while (candidate > D && !isPrime64(candidate)) candidate -= D;
        if (candidate <= D) {
            out.note = "ran out of primes congruent to 1 mod D";
            return out;
        }
        const std::uint64_t p = candidate;
        candidate -= D;
        const std::uint64_t zeta = rootOfOrder(D, p, factorsOfD);
        // The embeddings ζ ↦ zeta^u, u coprime to D, enumerate the ideals above p.
        for (std::uint64_t u = 1; u <= D; ++u) {
            if (std::gcd(u, D) != 1) continue;
            if (spent + cubic > budget) {
                out.note = "modular determinant budget exhausted";
                return out;
            }
            spent += cubic;
            const std::uint64_t z = powmod(zeta, u, p);
            const bool tabulated = D <= table.size();
            if (tabulated) {
                table[0] = 1;
                for (std::uint64_t k = 1; k < D; ++k) table[k] = mulmod(table[k - 1], z, p);
            }
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t q = 0; q < n; ++q) {
                    const std::uint64_t e = exponents[j][q];
                    a[j * n + q] = tabulated ? table[e] : powmod(z, e, p);
                }
            }
            if (!detIsZeroModP(a, n, p)) {
                out.verdict = DetVerdict::Nonsingular;
                ++out.primesUsed;
                return out;
            }
        }
        ++out.primesUsed;
        collectedBits += std::log2(static_cast<double>(p));
    }
    out.verdict = DetVerdict::Singular;
    return out;
}

}  // namespace expbasis::detail
