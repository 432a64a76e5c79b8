#include "expbasis/gram.hpp"

#include "expbasis/eigen.hpp"
#include "expbasis/errors.hpp"
#include "expbasis/gamma.hpp"
#include "expbasis/rng.hpp"
#include "phases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace expbasis {

namespace {

void requireShiftDimension(const MultiRectangle& q, const ShiftFamily& s) {
    if (s.size() == 0) throw Error(ErrorKind::InvalidArgument, "the shift family is empty");
    if (s.dimension() != q.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "shifts have dimension " + std::to_string(s.dimension()) +
                                                      ", cubes have dimension " + std::to_string(q.dimension()));
    }
}

// sinc(πx) with exact 1 and 0 at integer x, whatever the magnitude.
double sincPiOf(const Scalar& x) {
    if (x.isInteger()) return std::abs(x.value()) < 0.5 ? 1.0 : 0.0;
    const double v = x.value();
    if (std::abs(kPi * v) < 1e-4) return sincPi(v);
    return sinPiOf(x) / (kPi * v);
}

std::size_t windowPoints(std::size_t d, std::int64_t R) {
    const auto side = static_cast<std::size_t>(2 * R + 1);
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) {
        if (total > kMaxSectionOrder / side + 1) return kMaxSectionOrder + 1;
        total *= side;
    }
    return total;
}

// Advances n through [−R, R]^d in lexicographic order (last axis fastest).
void nextPoint(IntVector& n, std::int64_t R) {
    for (std::size_t k = n.size(); k-- > 0;) {
        if (++n[k] <= R) return;
        n[k] = -R;
    }
}

}  // namespace

Complex expInnerProduct(std::span<const double> lambda, std::span<const double> mu, const MultiRectangle& q) {
    const std::size_t d = q.dimension();
    if (lambda.size() != d || mu.size() != d) {
        throw Error(ErrorKind::DimensionMismatch, "frequencies must have length " + std::to_string(d));
    }
    double envelope = 1.0;
    for (std::size_t k = 0; k < d; ++k) envelope *= sincPi(lambda[k] - mu[k]);
    if (envelope == 0.0) return 0.0;
    Complex sum = 0.0;
    for (const auto& m : q.cubes()) {
        double turns = 0.0;
        for (std::size_t k = 0; k < d; ++k) turns += (lambda[k] - mu[k]) * static_cast<double>(m[k]);
        sum += unitPhase(turns - std::floor(turns));
    }
    return envelope * sum;
}

GramSection gramSection(const MultiRectangle& q, const ShiftFamily& s, std::int64_t R) {
    requireShiftDimension(q, s);
    if (R < 0) throw Error(ErrorKind::InvalidArgument, "section radius must be nonnegative");
    const std::size_t d = q.dimension();
    const std::size_t J = s.size();
    const std::size_t P = q.size();
    const std::size_t points = windowPoints(d, R);
    if (points > kMaxSectionOrder || J * points > kMaxSectionOrder) {
        throw Error(ErrorKind::SectionTooLarge, "section order exceeds " + std::to_string(kMaxSectionOrder) +
                                                    "; lower the radius");
    }
    const detail::PhaseGrid grid(q, s);
    const auto side = static_cast<std::size_t>(4 * R + 1);

    // sinc(π(o + δ_i,k − δ_j,k)) for offsets o ∈ [−2R, 2R], per (i, j, axis).
    std::vector<double> sincTable(J * J * d * side);
    auto sincAt = [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t o) -> double& {
        return sincTable[((i * J + j) * d + k) * side + static_cast<std::size_t>(o + 2 * R)];
    };
    for (std::size_t i = 0; i < J; ++i) {
        for (std::size_t j = 0; j < J; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar delta = s[i][k] - s[j][k];
                for (std::int64_t o = -2 * R; o <= 2 * R; ++o) {
                    const Scalar off = s.kind() == ScalarKind::Exact ? Scalar(Rational(o)) : Scalar(static_cast<double>(o));
                    sincAt(i, j, k, o) = sincPiOf(off + delta);
                }
            }
        }
    }
    // Σ_p e^{2πi⟨δ_i − δ_j, M_p⟩}; the integer part n − m contributes no phase.
    std::vector<Complex> phaseSum(J * J, 0.0);
    for (std::size_t i = 0; i < J; ++i) {
        for (std::size_t j = 0; j < J; ++j) {
            for (std::size_t p = 0; p < P; ++p) phaseSum[i * J + j] += grid.phaseDiff(i, p, j, p);
        }
    }

    std::vector<IntVector> lattice;
    lattice.reserve(points);
    IntVector n(d, -R);
    for (std::size_t t = 0; t < points; ++t, nextPoint(n, R)) lattice.push_back(n);

    const std::size_t order = J * points;
    ComplexMatrix m(order, order);
    for (std::size_t i = 0; i < J; ++i) {
        for (std::size_t a = 0; a < points; ++a) {
            const std::size_t row = i * points + a;
            for (std::size_t j = i; j < J; ++j) {
                for (std::size_t b = (j == i ? a : 0); b < points; ++b) {
                    double env = 1.0;
                    for (std::size_t k = 0; k < d && env != 0.0; ++k) {
                        env *= sincAt(i, j, k, lattice[a][k] - lattice[b][k]);
                    }
                    m(row, j * points + b) = env * phaseSum[i * J + j];
                }
            }
        }
    }
    GramSection out;
    out.radius = R;
    out.dimension = d;
    out.shifts = J;
    out.matrix = HermitianMatrix::fromUpper(m);
    const auto eig = hermitianEigenvalues(out.matrix);
    out.minEig = eig.front();
    out.maxEig = eig.back();
    return out;
}

double sincSquaredTail(double delta, std::int64_t R) {
    // Σ_{n ≥ R+1} (n − a)^{-2} ≤ ∫_{R+½}^∞ (x − a)^{-2} dx by convexity, on each side.
    const double gap = static_cast<double>(R) + 0.5 - std::abs(delta);
    if (gap <= 0.0) return 1.0;
    return std::min(1.0, 2.0 / (kPi * kPi * gap));
}

FrameSum frameSumIndicator(const MultiRectangle& q, const ShiftFamily& s, std::span<const Complex> w,
                           std::int64_t R) {
    requireShiftDimension(q, s);
    const std::size_t P = q.size();
    const std::size_t d = q.dimension();
    if (w.size() != P) {
        throw Error(ErrorKind::DimensionMismatch, "weight vector has length " + std::to_string(w.size()) +
                                                      ", expected " + std::to_string(P));
    }
    if (R < 0) throw Error(ErrorKind::InvalidArgument, "radius must be nonnegative");
    const double wn = norm2(w);
    if (wn == 0.0) throw Error(ErrorKind::ZeroVector, "the weight vector is zero");

    const detail::PhaseGrid grid(q, s);
    const auto side = static_cast<std::size_t>(2 * R + 1);
    double sum = 0.0;
    double missing = 0.0;
    std::vector<double> axisSinc(d * side);
    for (std::size_t j = 0; j < s.size(); ++j) {
        // ⟨g, e_ν⟩ = Σ_p conj(w_p) e^{−2πi⟨ν, M_p⟩} ∏_k sinc(πν_k), ν = n + δ_j.
        Complex c = 0.0;
        for (std::size_t p = 0; p < P; ++p) c += std::conj(w[p] * grid.phase(j, p));
        double tails = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            tails += sincSquaredTail(s[j][k].value(), R);
            for (std::int64_t o = -R; o <= R; ++o) {
                const Scalar off = s.kind() == ScalarKind::Exact ? Scalar(Rational(o)) : Scalar(static_cast<double>(o));
                axisSinc[k * side + static_cast<std::size_t>(o + R)] = sincPiOf(off + s[j][k]);
            }
        }
        missing += std::norm(c) * tails;
        std::vector<std::size_t> idx(d, 0);
        const std::size_t total = [&] {
            std::size_t t = 1;
            for (std::size_t k = 0; k < d; ++k) t *= side;
            return t;
        }();
        for (std::size_t t = 0; t < total; ++t) {
            double env = 1.0;
            for (std::size_t k = 0; k < d; ++k) env *= axisSinc[k * side + idx[k]];
            sum += std::norm(c * env);
            for (std::size_t k = d; k-- > 0;) {
                if (++idx[k] < side) break;
                idx[k] = 0;
            }
        }
    }
    FrameSum out;
    out.ratio = sum / wn;
    out.target = buildB(q, s).quadraticForm(w) / wn;
    out.tailBound = missing / wn;
    return out;
}

VerificationReport verifyFrameBounds(const MultiRectangle& q, const ShiftFamily& s, std::size_t trials,
                                     std::int64_t R, std::uint64_t seed) {
    if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    const auto analysis = analyze(q, s);
    if (!analysis.isBasis) {
        throw Error(ErrorKind::NotABasis, "the system is not a Riesz basis (decided by " + analysis.decidedBy + ")");
    }
    const auto full = gramSection(q, s, R);
    const auto half = gramSection(q, s, R / 2);

    VerificationReport out;
    out.lambda = analysis.lambda;
    out.Lambda = analysis.Lambda;
    out.trials = trials;
    out.minQuotient = std::numeric_limits<double>::infinity();
    out.maxQuotient = -std::numeric_limits<double>::infinity();
    std::vector<Complex> v(full.order());
    for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng(seed, t);
        for (auto& c : v) {
            const double re = rng.normal();
            c = Complex(re, rng.normal());
        }
        const double quotient = full.matrix.quadraticForm(v) / norm2(v);
        out.minQuotient = std::min(out.minQuotient, quotient);
        out.maxQuotient = std::max(out.maxQuotient, quotient);
    }
    out.lowerMargin = out.minQuotient - out.lambda;
    out.upperMargin = out.Lambda - out.maxQuotient;
    out.sectionMin = full.minEig;
    out.sectionMax = full.maxEig;
    out.halfMin = half.minEig;
    out.halfMax = half.maxEig;
    out.quotientsContained = out.lowerMargin >= -kContainmentTol && out.upperMargin >= -kContainmentTol;
    out.extremesContained =
        full.minEig >= out.lambda - kContainmentTol && full.maxEig <= out.Lambda + kContainmentTol;
    out.monotone = full.minEig <= half.minEig + kContainmentTol && full.maxEig >= half.maxEig - kContainmentTol;
    out.passed = out.quotientsContained && out.extremesContained && out.monotone;
    return out;
}

}  // namespace expbasis
