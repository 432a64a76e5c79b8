#include "expbasis/rational.hpp"

#include "expbasis/errors.hpp"
#include "wide.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace expbasis {

const char* errorKindName(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DuplicateCube: return "DuplicateCube";
        case ErrorKind::Overlap: return "OverlapError";
        case ErrorKind::Overflow: return "OverflowError";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::RadiusTooSmall: return "RadiusTooSmall";
        case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::MissingOrigin: return "MissingOrigin";
        case ErrorKind::SectionTooLarge: return "SectionTooLarge";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotABasis: return "NotABasis";
        case ErrorKind::TooManyCells: return "TooManyCells";
    }
    return "Error";
}

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit addition overflow");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit subtraction overflow");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit multiplication overflow");
    return r;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::int64_t g = std::gcd(a, b);
    return mul(a / g, b < 0 ? -b : b);
}

}  // namespace checked

namespace {

std::int64_t absChecked(std::int64_t v) {
    if (v == INT64_MIN) throw Error(ErrorKind::Overflow, "cannot negate INT64_MIN");
    return v < 0 ? -v : v;
}

}  // namespace

Rational::Rational(std::int64_t numerator) : num_(numerator), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (denominator < 0) {
        numerator = checked::mul(numerator, -1);
        denominator = checked::mul(denominator, -1);
    }
    const std::int64_t g = std::gcd(absChecked(numerator), denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::fractionalPart() const { return *this - Rational(floor()); }

Rational Rational::operator-() const { return {checked::mul(num_, -1), den_}; }

Rational& Rational::operator+=(const Rational& rhs) {
    const std::int64_t g = std::gcd(den_, rhs.den_);
    const std::int64_t a = checked::mul(num_, rhs.den_ / g);
    const std::int64_t b = checked::mul(rhs.num_, den_ / g);
    *this = Rational(checked::add(a, b), checked::mul(den_ / g, rhs.den_));
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    // Cross-reduce first so intermediate products stay small.
    const std::int64_t g1 = std::gcd(absChecked(num_), rhs.den_);
    const std::int64_t g2 = std::gcd(absChecked(rhs.num_), den_);
    const std::int64_t n = checked::mul(num_ / g1, rhs.num_ / g2);
    const std::int64_t d = checked::mul(den_ / g2, rhs.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return *this *= Rational(rhs.den_, rhs.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<detail::i128>(a.num_) * b.den_;
    const auto rhs = static_cast<detail::i128>(b.num_) * a.den_;
    return lhs < rhs;
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parseInt = [&](std::string_view s) {
        s = trim(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parseInt(text));
    const std::int64_t d = parseInt(text.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return {parseInt(text.substr(0, slash)), d};
}

std::string Rational::toString() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

}  // namespace expbasis
