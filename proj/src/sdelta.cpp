#include "expbasis/errors.hpp"
#include "expbasis/gamma.hpp"
#include "expbasis/trig.hpp"

#include <algorithm>
#include <cmath>

namespace expbasis {

namespace {

void requireDimension(const MultiRectangle& q, std::span<const Scalar> delta) {
    if (delta.size() != q.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "shift has length " + std::to_string(delta.size()) +
                                                      ", cubes have dimension " + std::to_string(q.dimension()));
    }
}

// Normalise δ so mixed input behaves as one floating vector.
ShiftVector uniform(std::span<const Scalar> delta) {
    if (allExact(delta)) return {delta.begin(), delta.end()};
    return demoteToFloating(delta);
}

struct SineRatio {
    double value;
    bool limit;
};

// sin(πNx)/sin(πx), or its limit (−1)^{(N−1)x}·N at integer x.
SineRatio sineRatio(std::size_t N, const Scalar& x) {
    const auto n = static_cast<std::int64_t>(N);
    if (x.isInteger()) {
        const auto k = static_cast<std::int64_t>(std::llround(x.value()));
        const bool odd = ((n - 1) % 2 != 0) && (k % 2 != 0);
        return {odd ? -static_cast<double>(N) : static_cast<double>(N), true};
    }
    return {sinPiOf(x * n) / sinPiOf(x), false};
}

}  // namespace

bool sdeltaIsBasis(const MultiRectangle& q, std::span<const Scalar> delta) {
    requireDimension(q, delta);
    const ShiftVector d = uniform(delta);
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (std::size_t r = p + 1; r < q.size(); ++r) {
            if (dot(subtract(q[p], q[r]), d).isInteger()) return false;
        }
    }
    return true;
}

FlaggedHermitian buildBtilde(const MultiRectangle& q, std::span<const Scalar> delta) {
    requireDimension(q, delta);
    const ShiftVector d = uniform(delta);
    const std::size_t N = q.size();
    ComplexMatrix m(N, N);
    FlaggedHermitian out;
    for (std::size_t p = 0; p < N; ++p) {
        m(p, p) = static_cast<double>(N);
        for (std::size_t r = p + 1; r < N; ++r) {
            const auto v = sineRatio(N, dot(subtract(q[r], q[p]), d));
            m(p, r) = v.value;
            if (v.limit) out.flagged.emplace_back(p, r);
        }
    }
    out.matrix = HermitianMatrix::fromUpper(m);
    return out;
}

double vandermondeDetSq(const MultiRectangle& q, std::span<const Scalar> delta) {
    requireDimension(q, delta);
    const ShiftVector d = uniform(delta);
    double prod = 1.0;
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (std::size_t r = p + 1; r < q.size(); ++r) {
            const double s = sinPiOf(dot(subtract(q[p], q[r]), d));
            prod *= 4.0 * s * s;
        }
    }
    return prod;
}

bool isOrthogonalSdelta(const MultiRectangle& q, std::span<const Scalar> delta) {
    requireDimension(q, delta);
    const ShiftVector d = uniform(delta);
    const auto N = static_cast<std::int64_t>(q.size());
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (std::size_t r = p + 1; r < q.size(); ++r) {
            const Scalar x = dot(subtract(q[p], q[r]), d);
            if (x.isInteger() || !(x * N).isInteger()) return false;
        }
    }
    return true;
}

TwoCubeConstants twoCubeConstants(std::span<const std::int64_t> mDiff, std::span<const Scalar> dDiff) {
    if (std::all_of(mDiff.begin(), mDiff.end(), [](std::int64_t v) { return v == 0; })) {
        throw Error(ErrorKind::InvalidArgument, "the two cubes must differ");
    }
    const Scalar x = dot(mDiff, uniform(dDiff));
    const double c = std::abs(cosPiOf(x));
    TwoCubeConstants out;
    out.lambda = 2.0 * (1.0 - c);
    out.Lambda = 2.0 * (1.0 + c);
    out.isBasis = !x.isInteger();
    out.orthogonal = out.isBasis && (x * 2).isInteger();
    return out;
}

IntervalCheck intervalBasisCheck(std::size_t N, std::span<const Scalar> deltas) {
    if (N == 0 || deltas.size() != N) {
        throw Error(ErrorKind::InvalidArgument, "interval check needs N >= 1 and exactly N shifts");
    }
    const ShiftVector d = uniform(deltas);
    IntervalCheck out;
    out.isBasis = true;
    ComplexMatrix m(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        m(i, i) = static_cast<double>(N);
        for (std::size_t j = i + 1; j < N; ++j) {
            const auto v = sineRatio(N, d[i] - d[j]);
            m(i, j) = v.value;
            if (v.limit) {
                out.atilde.flagged.emplace_back(i, j);
                out.isBasis = false;
            }
        }
    }
    out.atilde.matrix = HermitianMatrix::fromUpper(m);
    return out;
}

bool kadecPeriodicCheck(std::size_t N, std::span<const Scalar> eps) {
    if (N == 0 || eps.size() != N) {
        throw Error(ErrorKind::InvalidArgument, "Kadec check needs N >= 1 and exactly N perturbations");
    }
    const ShiftVector e = uniform(eps);
    const bool exact = allExact(e);
    const auto n = static_cast<std::int64_t>(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            const auto ij = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
            const Scalar num = e[i] - e[j] + (exact ? Scalar(Rational(ij)) : Scalar(static_cast<double>(ij)));
            const Scalar quotient = exact ? Scalar(num.rational() / Rational(n)) : Scalar(num.value() / N);
            if (quotient.isInteger()) return false;
        }
    }
    return true;
}

}  // namespace expbasis
