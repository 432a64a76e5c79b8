#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace expbasis {

/// Exact rational with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator. Every operation is
/// overflow-checked and throws Error(Overflow) instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool isInteger() const noexcept { return den_ == 1; }
    bool isZero() const noexcept { return num_ == 0; }
    double toDouble() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Largest integer not above the value.
    std::int64_t floor() const noexcept;
    /// Value minus its floor, in [0, 1).
    Rational fractionalPart() const;

    /// Accepts "p/q", "p", and optional leading sign. Throws Error(Parse).
    static Rational parse(std::string_view text);
    std::string toString() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace expbasis
