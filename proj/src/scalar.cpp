#include "expbasis/scalar.hpp"

#include "expbasis/errors.hpp"
#include "expbasis/trig.hpp"

#include <cmath>
#include <sstream>

namespace expbasis {

const char* scalarKindName(ScalarKind kind) { return kind == ScalarKind::Exact ? "exact" : "floating"; }

double Scalar::value() const noexcept {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->toDouble();
    return std::get<double>(value_);
}

double Scalar::fractionalTurns() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->fractionalPart().toDouble();
    const double x = std::get<double>(value_);
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    return f;
}

double Scalar::halfTurns() const {
    if (const auto* r = std::get_if<Rational>(&value_)) {
        const Rational half = *r / Rational(2);
        return (half.fractionalPart() * Rational(2)).toDouble();
    }
    const double x = std::get<double>(value_);
    double f = x - 2.0 * std::floor(0.5 * x);
    if (f >= 2.0) f = 0.0;
    return f;
}

double sinPiOf(const Scalar& x) { return sinPi(x.halfTurns()); }
double cosPiOf(const Scalar& x) { return cosPi(x.halfTurns()); }

bool Scalar::isInteger() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->isInteger();
    const double x = std::get<double>(value_);
    return std::abs(x - std::nearbyint(x)) <= kFloatingIntegralityTol;
}

std::string Scalar::toString() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->toString();
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(value_);
    return os.str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.isExact() && b.isExact()) return a.rational() + b.rational();
    return a.value() + b.value();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.isExact() && b.isExact()) return a.rational() - b.rational();
    return a.value() - b.value();
}

Scalar operator*(const Scalar& a, std::int64_t k) {
    if (a.isExact()) return a.rational() * Rational(k);
    return a.value() * static_cast<double>(k);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.isExact() && b.isExact()) return a.rational() * b.rational();
    return a.value() * b.value();
}

bool allExact(std::span<const Scalar> v) {
    for (const auto& s : v) {
        if (!s.isExact()) return false;
    }
    return true;
}

std::vector<double> toDoubles(std::span<const Scalar> v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.value());
    return out;
}

ShiftVector demoteToFloating(std::span<const Scalar> v) {
    ShiftVector out;
    out.reserve(v.size());
    for (const auto& s : v) out.emplace_back(s.value());
    return out;
}

Scalar dot(std::span<const std::int64_t> m, std::span<const Scalar> delta) {
    if (m.size() != delta.size()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of vectors of length " + std::to_string(m.size()) +
                                                      " and " + std::to_string(delta.size()));
    }
    if (allExact(delta)) {
        Rational acc(0);
        for (std::size_t k = 0; k < m.size(); ++k) acc += delta[k].rational() * Rational(m[k]);
        return acc;
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k) acc += static_cast<double>(m[k]) * delta[k].value();
    return acc;
}

IntVector subtract(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    IntVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked::sub(a[k], b[k]);
    return out;
}

ShiftVector subtract(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    ShiftVector out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] - b[k]);
    return out;
}

ShiftFamily::ShiftFamily(std::size_t dimension, std::vector<ShiftVector> shifts)
    : dim_(dimension), shifts_(std::move(shifts)) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidArgument, "shift dimension must be positive");
    bool exact = true;
    for (std::size_t j = 0; j < shifts_.size(); ++j) {
        if (shifts_[j].size() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "shift " + std::to_string(j) + " has length " +
                                                          std::to_string(shifts_[j].size()) + ", expected " +
                                                          std::to_string(dim_));
        }
        exact = exact && allExact(shifts_[j]);
    }
    kind_ = exact ? ScalarKind::Exact : ScalarKind::Floating;
    if (!exact) {
        for (auto& s : shifts_) s = demoteToFloating(s);
    }
}

ShiftFamily ShiftFamily::fromDoubles(std::size_t dimension, const std::vector<std::vector<double>>& shifts) {
    std::vector<ShiftVector> v;
    v.reserve(shifts.size());
    for (const auto& s : shifts) v.emplace_back(s.begin(), s.end());
    return {dimension, std::move(v)};
}

ShiftFamily ShiftFamily::progression(std::span<const Scalar> delta, std::size_t count) {
    std::vector<ShiftVector> v;
    v.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        ShiftVector s;
        s.reserve(delta.size());
        for (const auto& c : delta) s.push_back(c * static_cast<std::int64_t>(j));
        v.push_back(std::move(s));
    }
    return {delta.size(), std::move(v)};
}

}  // namespace expbasis
