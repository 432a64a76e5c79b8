#pragma once

#include "expbasis/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace expbasis {

enum class ScalarKind { Exact, Floating };

const char* scalarKindName(ScalarKind kind);

/// Tolerance for integer-membership tests on floating scalars. Exact scalars
/// are tested with no tolerance.
inline constexpr double kFloatingIntegralityTol = 1e-12;

/// A shift component: exact rational or double.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational r) : value_(r) {}  // NOLINT(google-explicit-constructor)
    Scalar(double x) : value_(x) {}    // NOLINT(google-explicit-constructor)

    bool isExact() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }
    double value() const noexcept;

    /// Value mod 1 as a double in [0, 1). Exact scalars reduce before converting.
    double fractionalTurns() const;
    /// Value mod 2 in [0, 2), reduced exactly for exact scalars.
    double halfTurns() const;
    bool isInteger() const;

    std::string toString() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, std::int64_t k);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

private:
    std::variant<Rational, double> value_;
};

/// sin(πx) and cos(πx) after exact reduction mod 2, so rational arguments
/// keep their exact zeros regardless of magnitude.
double sinPiOf(const Scalar& x);
double cosPiOf(const Scalar& x);

using IntVector = std::vector<std::int64_t>;
using ShiftVector = std::vector<Scalar>;

bool allExact(std::span<const Scalar> v);
std::vector<double> toDoubles(std::span<const Scalar> v);
ShiftVector demoteToFloating(std::span<const Scalar> v);

/// ⟨m, δ⟩, exact when δ is exact.
Scalar dot(std::span<const std::int64_t> m, std::span<const Scalar> delta);
IntVector subtract(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
ShiftVector subtract(std::span<const Scalar> a, std::span<const Scalar> b);

/// Ordered list of shift vectors of one dimension, uniformly exact or floating.
///
/// Construction demotes every component to floating when any component is
/// floating, so a family is never mixed.
class ShiftFamily {
public:
    ShiftFamily() = default;
    ShiftFamily(std::size_t dimension, std::vector<ShiftVector> shifts);

    static ShiftFamily fromDoubles(std::size_t dimension, const std::vector<std::vector<double>>& shifts);
    /// The arithmetic progression {0, δ, 2δ, ..., (count−1)δ}.
    static ShiftFamily progression(std::span<const Scalar> delta, std::size_t count);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return shifts_.size(); }
    ScalarKind kind() const noexcept { return kind_; }
    const ShiftVector& operator[](std::size_t j) const { return shifts_[j]; }
    const std::vector<ShiftVector>& shifts() const noexcept { return shifts_; }

private:
    std::size_t dim_ = 0;
    std::vector<ShiftVector> shifts_;
    ScalarKind kind_ = ScalarKind::Exact;
};

}  // namespace expbasis
