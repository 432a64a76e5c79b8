#include "expbasis/bounds.hpp"

#include "expbasis/errors.hpp"
#include "expbasis/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace expbasis {

namespace {

constexpr double kTightTol = 1e-10;

void requireSquare(const MultiRectangle& q, const ShiftFamily& s) {
    if (s.dimension() != q.dimension() || s.size() != q.size()) {
        throw Error(ErrorKind::DimensionMismatch, "radii need N shifts of dimension " +
                                                      std::to_string(q.dimension()) + " for N = " +
                                                      std::to_string(q.size()) + " cubes");
    }
}

double sinSquared(const ShiftVector& di, const ShiftVector& dj, const IntVector& mp, const IntVector& mq) {
    const double v = sinPiOf(dot(subtract(mp, mq), subtract(di, dj)));
    return v * v;
}

double maxOf(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }
double minOf(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end()); }

void finish(BoundsReport& out, double N, double rad, double literalRad, const BasisAnalysis& a) {
    out.lower = std::max(0.0, N * (1.0 - rad));
    out.upper = N * (1.0 + rad);
    out.literalLower = N * (1.0 - literalRad);
    out.lambda = a.lambda;
    out.Lambda = a.Lambda;
    const double slack = kTightTol * N;
    out.contained = out.lower <= a.lambda + slack && a.Lambda <= out.upper + slack;
    out.tight = std::abs(out.lower - a.lambda) <= kTightTol && std::abs(out.upper - a.Lambda) <= kTightTol;
    if (out.literalLower > a.lambda + slack) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "literal lower bound " << out.literalLower << " exceeds lambda = " << a.lambda;
        out.warnings.push_back(msg.str());
    }
}

}  // namespace

GershgorinBrackets gershgorinHermitian(const HermitianMatrix& h) {
    const std::size_t n = h.order();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
    GershgorinBrackets g{-INFINITY, -INFINITY, INFINITY, INFINITY};
    for (std::size_t j = 0; j < n; ++j) {
        double radius = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) radius += std::abs(h(j, i));
        }
        const double c = h(j, j).real();
        g.maxLo = std::max(g.maxLo, c - radius);
        g.maxHi = std::max(g.maxHi, c + radius);
        g.minLo = std::min(g.minLo, c - radius);
        g.minHi = std::min(g.minHi, c + radius);
    }
    return g;
}

Radii radii(const MultiRectangle& q, const ShiftFamily& s) {
    requireSquare(q, s);
    // The sine form of r_i is (1 − (4/N²)Σ sin²)^{1/2} = |α_ij|/N, and likewise
    // for ρ_p with β_pq. The radicand cancels to rounding noise near zero, whose
    // square root is ~1e−8, so the moduli are taken from the exact-phase A and B.
    const auto A = buildA(q, s);
    const auto B = buildB(q, s);
    const std::size_t N = q.size();
    const double n = static_cast<double>(N);
    Radii out{std::vector<double>(N, 0.0), std::vector<double>(N, 0.0)};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (j == i) continue;
            out.r[i] += std::abs(A(i, j)) / n;
            out.rho[i] += std::abs(B(i, j)) / n;
        }
    }
    return out;
}

std::vector<double> sRadii(const MultiRectangle& q, std::span<const Scalar> delta) {
    if (delta.size() != q.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "delta has length " + std::to_string(delta.size()));
    }
    const ShiftVector d = allExact(delta) ? ShiftVector(delta.begin(), delta.end()) : demoteToFloating(delta);
    const std::size_t N = q.size();
    const auto n = static_cast<std::int64_t>(N);
    std::vector<double> out(N, 0.0);
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t r = 0; r < N; ++r) {
            if (r == p) continue;
            const Scalar x = dot(subtract(q[r], q[p]), d);
            if (x.isInteger()) {
                throw Error(ErrorKind::DegenerateDenominator,
                            "<delta, M_" + std::to_string(r) + " - M_" + std::to_string(p) + "> is an integer");
            }
            out[p] += std::abs(sinPiOf(x * n) / (static_cast<double>(N) * sinPiOf(x)));
        }
    }
    return out;
}

BoundsReport envelope(const MultiRectangle& q, const ShiftFamily& s) {
    const auto rr = radii(q, s);
    BoundsReport out;
    out.rVals = rr.r;
    out.rhoVals = rr.rho;
    const double rad = std::min(maxOf(rr.r), maxOf(rr.rho));
    const double literal = std::min(minOf(rr.r), minOf(rr.rho));
    out.literalUpper = static_cast<double>(q.size()) * (1.0 + std::max(maxOf(rr.r), maxOf(rr.rho)));
    finish(out, static_cast<double>(q.size()), rad, literal, analyze(q, s));
    return out;
}

BoundsReport envelopeSdelta(const MultiRectangle& q, std::span<const Scalar> delta) {
    const ShiftFamily family = ShiftFamily::progression(delta, q.size());
    auto sv = sRadii(q, delta);
    BoundsReport out;
    const auto rr = radii(q, family);
    out.rVals = rr.r;
    out.rhoVals = rr.rho;
    const double rad = maxOf(sv);
    const double literal = minOf(sv);
    out.literalUpper = static_cast<double>(q.size()) * (1.0 + rad);
    out.sVals = std::move(sv);
    finish(out, static_cast<double>(q.size()), rad, literal, analyze(q, family));
    return out;
}

SufficientCondition sufficientConditionA(const MultiRectangle& q, const ShiftFamily& s, double a) {
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorKind::InvalidArgument, "a must lie in (0, 1)");
    requireSquare(q, s);
    const std::size_t N = q.size();
    const double n = static_cast<double>(N);
    SufficientCondition out;
    out.lower = a * n;
    out.upper = (2.0 - a) * n;
    if (N == 1) {
        out.holds = true;
        return out;
    }
    const double ratio = (1.0 - a) / (n - 1.0);
    const double needed = n / (2.0 * (n - 1.0)) * (1.0 - ratio * ratio);
    out.holds = true;
    for (std::size_t i = 0; i < N && out.holds; ++i) {
        for (std::size_t j = 0; j < N && out.holds; ++j) {
            if (i == j) continue;
            for (std::size_t p = 0; p < N && out.holds; ++p) {
                for (std::size_t r = p + 1; r < N; ++r) {
                    if (sinSquared(s[i], s[j], q[p], q[r]) < needed) {
                        out.holds = false;
                        break;
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace expbasis
