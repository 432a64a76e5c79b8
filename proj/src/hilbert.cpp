#include "expbasis/hilbert.hpp"

#include "expbasis/errors.hpp"
#include "expbasis/gram.hpp"
#include "expbasis/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace expbasis {

SparseSeq::SparseSeq(std::size_t dimension) : dim_(dimension) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidArgument, "sequence dimension must be positive");
}

SparseSeq SparseSeq::delta(IntVector index, Complex value) {
    SparseSeq s(index.size());
    s.set(index, value);
    return s;
}

void SparseSeq::checkIndex(const IntVector& index) const {
    if (index.size() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "index of length " + std::to_string(index.size()) +
                                                      " in a sequence on Z^" + std::to_string(dim_));
    }
}

void SparseSeq::set(const IntVector& index, Complex value) {
    checkIndex(index);
    if (value == Complex(0.0)) {
        entries_.erase(index);
    } else {
        entries_[index] = value;
    }
}

void SparseSeq::add(const IntVector& index, Complex value) {
    checkIndex(index);
    auto it = entries_.find(index);
    if (it == entries_.end()) {
        if (value != Complex(0.0)) entries_.emplace(index, value);
        return;
    }
    it->second += value;
    if (it->second == Complex(0.0)) entries_.erase(it);
}

Complex SparseSeq::at(const IntVector& index) const {
    checkIndex(index);
    const auto it = entries_.find(index);
    return it == entries_.end() ? Complex(0.0) : it->second;
}

double SparseSeq::l1Norm() const {
    double s = 0.0;
    for (const auto& [k, v] : entries_) s += std::abs(v);
    return s;
}

double SparseSeq::l2Norm() const {
    double s = 0.0;
    for (const auto& [k, v] : entries_) s += std::norm(v);
    return std::sqrt(s);
}

std::int64_t SparseSeq::supportRadius() const {
    std::int64_t r = 0;
    for (const auto& [k, v] : entries_) {
        for (auto c : k) r = std::max(r, c < 0 ? -c : c);
    }
    return r;
}

SparseSeq& SparseSeq::operator+=(const SparseSeq& rhs) {
    if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "sequences on different lattices");
    for (const auto& [k, v] : rhs.entries_) add(k, v);
    return *this;
}

SparseSeq& SparseSeq::operator-=(const SparseSeq& rhs) {
    if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "sequences on different lattices");
    for (const auto& [k, v] : rhs.entries_) add(k, -v);
    return *this;
}

SparseSeq& SparseSeq::operator*=(Complex c) {
    if (c == Complex(0.0)) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_) v *= c;
    return *this;
}

SparseSeq operator+(SparseSeq a, const SparseSeq& b) { return a += b; }
SparseSeq operator-(SparseSeq a, const SparseSeq& b) { return a -= b; }

Complex innerProduct(const SparseSeq& a, const SparseSeq& b) {
    if (a.dimension() != b.dimension()) throw Error(ErrorKind::DimensionMismatch, "sequences on different lattices");
    Complex s = 0.0;
    for (const auto& [k, v] : a.entries()) {
        const auto it = b.entries().find(k);
        if (it != b.entries().end()) s += v * std::conj(it->second);
    }
    return s;
}

namespace {

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

using Fiber = std::vector<std::pair<std::int64_t, Complex>>;

// Σ_n a_n/(m − n + shift), largest terms first, compensated.
Complex kernelSum(const Fiber& fiber, std::int64_t m, double shift, bool skipDiagonal, std::vector<Complex>& terms) {
    terms.clear();
    for (const auto& [n, v] : fiber) {
        if (skipDiagonal && n == m) continue;
        terms.push_back(v / (static_cast<double>(m - n) + shift));
    }
    std::sort(terms.begin(), terms.end(), [](const Complex& x, const Complex& y) { return std::norm(x) > std::norm(y); });
    Neumaier re, im;
    for (const auto& z : terms) {
        re.add(z.real());
        im.add(z.imag());
    }
    return {re.value(), im.value()};
}

enum class Kernel { Shift, Hilbert };

// One axis of T_t (Kernel::Shift) or of H, on the window |m_axis| ≤ R.
// Returns the stage output and its tail bound.
std::pair<SparseSeq, double> applyAxis(Kernel kernel, double t, const SparseSeq& a, std::size_t axis, std::int64_t R) {
    const std::size_t d = a.dimension();
    SparseSeq out(d);
    if (a.empty()) return {out, 0.0};
    if (kernel == Kernel::Shift && t == 0.0) return {a, 0.0};

    std::map<IntVector, Fiber> fibers;
    std::int64_t S = 0;
    for (const auto& [idx, v] : a.entries()) {
        IntVector key = idx;
        key[axis] = 0;
        fibers[key].emplace_back(idx[axis], v);
        S = std::max(S, idx[axis] < 0 ? -idx[axis] : idx[axis]);
    }
    if (R < S + 1) {
        throw Error(ErrorKind::RadiusTooSmall, "radius " + std::to_string(R) + " must be at least support radius " +
                                                   std::to_string(S) + " + 1");
    }

    if (kernel == Kernel::Shift && t == std::nearbyint(t)) {
        const auto k = static_cast<std::int64_t>(t);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        double dropped = 0.0;
        for (const auto& [idx, v] : a.entries()) {
            IntVector m = idx;
            m[axis] = checked::sub(idx[axis], k);
            if (m[axis] < -R || m[axis] > R) {
                dropped += std::norm(v);
            } else {
                out.set(m, sign * v);
            }
        }
        return {out, std::sqrt(dropped)};
    }

    double gap = static_cast<double>(R - S);
    double scale = 1.0 / kPi;
    if (kernel == Kernel::Shift) {
        gap -= std::max(0.0, std::abs(t) - 0.5);
        scale = sinPi(t) / kPi;
    }
    if (!(gap > 0.0)) {
        throw Error(ErrorKind::RadiusTooSmall, "radius " + std::to_string(R) + " leaves no gap beyond support " +
                                                   std::to_string(S) + " for t = " + std::to_string(t));
    }
    const double shift = kernel == Kernel::Shift ? t : 0.0;
    const bool skipDiagonal = kernel == Kernel::Hilbert;
    double l1sq = 0.0;
    std::vector<Complex> terms;
    for (const auto& [key, fiber] : fibers) {
        double l1 = 0.0;
        for (const auto& e : fiber) l1 += std::abs(e.second);
        l1sq += l1 * l1;
        IntVector m = key;
        for (std::int64_t mi = -R; mi <= R; ++mi) {
            m[axis] = mi;
            out.set(m, scale * kernelSum(fiber, mi, shift, skipDiagonal, terms));
        }
    }
    // Per fiber, Σ_{|m|>R} |m − n + t|^{-2} ≤ 2/gap; fibers are orthogonal.
    return {out, std::abs(scale) * std::sqrt(2.0 / gap) * std::sqrt(l1sq)};
}

void requireDimension(std::span<const double> t, const SparseSeq& a) {
    if (t.size() != a.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "parameter has length " + std::to_string(t.size()) +
                                                      ", sequence lives on Z^" + std::to_string(a.dimension()));
    }
}

void requireRadius(const SparseSeq& a, std::int64_t R) {
    if (R < a.supportRadius() + 1) {
        throw Error(ErrorKind::RadiusTooSmall, "radius " + std::to_string(R) + " must be at least support radius " +
                                                   std::to_string(a.supportRadius()) + " + 1");
    }
}

CheckResult makeCheck(double residual, double bound, double scale) {
    return {residual, bound, residual <= bound + kRoundingSlack * (1.0 + scale)};
}

}  // namespace

TruncatedResult applyTndOrdered(std::span<const double> t, const SparseSeq& a, std::int64_t R,
                                std::span<const std::size_t> axisOrder) {
    requireDimension(t, a);
    requireRadius(a, R);
    TruncatedResult out{a, R, 0.0};
    for (std::size_t axis : axisOrder) {
        if (axis >= a.dimension()) throw Error(ErrorKind::InvalidArgument, "axis out of range");
        auto [seq, tail] = applyAxis(Kernel::Shift, t[axis], out.seq, axis, R);
        out.seq = std::move(seq);
        out.tailBound += tail;
    }
    return out;
}

TruncatedResult applyTnd(std::span<const double> t, const SparseSeq& a, std::int64_t R) {
    std::vector<std::size_t> order(a.dimension());
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    return applyTndOrdered(t, a, R, order);
}

TruncatedResult applyT1d(double t, const SparseSeq& a, std::int64_t R) {
    if (a.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "applyT1d needs a sequence on Z");
    const double tv[1] = {t};
    return applyTnd(tv, a, R);
}

TruncatedResult applyH(const SparseSeq& a, std::int64_t R) {
    if (a.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "applyH needs a sequence on Z");
    requireRadius(a, R);
    auto [seq, tail] = applyAxis(Kernel::Hilbert, 0.0, a, 0, R);
    return {std::move(seq), R, tail};
}

CheckResult checkIsometry(std::span<const double> t, const SparseSeq& a, std::int64_t R) {
    const auto r = applyTnd(t, a, R);
    const double na = a.l2Norm();
    const double no = r.seq.l2Norm();
    const double tau = r.tailBound;
    return makeCheck(std::abs(no * no - na * na), 2.0 * tau * na + tau * tau, na * na);
}

CheckResult checkGroupLaw(std::span<const double> s, std::span<const double> t, const SparseSeq& a,
                          std::int64_t R) {
    requireDimension(s, a);
    const std::int64_t outer = 2 * R + 1;
    const auto inner = applyTnd(t, a, R);
    const auto composed = applyTnd(s, inner.seq, outer);
    std::vector<double> st(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) st[k] = s[k] + t[k];
    const auto direct = applyTnd(st, a, outer);
    const double residual = (composed.seq - direct.seq).l2Norm();
    return makeCheck(residual, inner.tailBound + composed.tailBound + direct.tailBound, a.l2Norm());
}

AdjointCheck checkAdjoint(std::span<const double> t, const SparseSeq& a, const SparseSeq& b, std::int64_t R) {
    requireDimension(t, b);
    std::vector<double> minus(t.size()), twice(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        minus[k] = -t[k];
        twice[k] = 2.0 * t[k];
    }
    const auto ta = applyTnd(t, a, R);
    const auto tb = applyTnd(t, b, R);
    const auto mb = applyTnd(minus, b, R);
    const auto t2a = applyTnd(twice, a, R);
    const double na = a.l2Norm();
    const double nb = b.l2Norm();
    AdjointCheck out;
    out.adjoint = makeCheck(std::abs(innerProduct(ta.seq, b) - innerProduct(a, mb.seq)),
                            ta.tailBound * nb + na * mb.tailBound, na * nb);
    out.unitarity = makeCheck(std::abs(innerProduct(ta.seq, tb.seq) - innerProduct(a, b)),
                              ta.tailBound * nb + na * tb.tailBound, na * nb);
    out.doubled = makeCheck(std::abs(innerProduct(ta.seq, mb.seq) - innerProduct(t2a.seq, b)),
                            ta.tailBound * nb + na * mb.tailBound + t2a.tailBound * nb, na * nb);
    return out;
}

GeneratorCheck checkGenerator(const SparseSeq& a, std::span<const double> steps, std::int64_t R) {
    if (a.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "the generator check is one-dimensional");
    if (steps.empty()) throw Error(ErrorKind::InvalidArgument, "at least one step is required");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0 && steps[i] <= 0.5) || (i > 0 && !(steps[i] < steps[i - 1]))) {
            throw Error(ErrorKind::InvalidArgument, "steps must be decreasing values in (0, 1/2]");
        }
    }
    requireRadius(a, R);
    const auto h = applyH(a, R);
    SparseSeq piH = h.seq;
    piH *= kPi;
    const double gap = static_cast<double>(R - a.supportRadius());
    const double l1 = a.l1Norm();

    GeneratorCheck out;
    out.steps.assign(steps.begin(), steps.end());
    for (double step : steps) {
        SparseSeq diff = applyT1d(step, a, R).seq - a;
        diff *= 1.0 / step;
        diff -= piH;
        const double r = diff.l2Norm();
        // Outside the window each term obeys |s/(k+h) − 1/k| ≤ 2(1−s)/|k| + 2h/k², s = sinc(πh).
        const double s = sincPi(step);
        const double outside =
            l1 * (2.0 * (1.0 - s) * std::sqrt(2.0 / gap) + 2.0 * step * std::sqrt(2.0 / (3.0 * gap * gap * gap)));
        out.windowed.push_back(r);
        out.certified.push_back(r + outside);
    }
    out.decreasing = true;
    for (std::size_t i = 1; i < out.windowed.size(); ++i) {
        if (!(out.windowed[i] < out.windowed[i - 1]) && out.windowed[i - 1] != 0.0) out.decreasing = false;
    }
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (out.windowed[i] > 0.0) {
            xs.push_back(std::log(steps[i]));
            ys.push_back(std::log(out.windowed[i]));
        }
    }
    if (xs.empty()) {
        out.order = std::numeric_limits<double>::infinity();
    } else if (xs.size() == 1) {
        out.order = 0.0;
    } else {
        const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
        const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        out.order = sxy / sxx;
    }
    return out;
}

TwistedInnerProductCheck checkTwistedInnerProduct(std::span<const std::int64_t> M, std::span<const double> s, std::span<const double> t,
                          const SparseSeq& a, const SparseSeq& b, std::int64_t R) {
    const std::size_t d = M.size();
    if (s.size() != d || t.size() != d || a.dimension() != d || b.dimension() != d) {
        throw Error(ErrorKind::DimensionMismatch, "cube, shifts and sequences must share one dimension");
    }
    const MultiRectangle cube(d, {IntVector(M.begin(), M.end())});

    TwistedInnerProductCheck out;
    std::vector<double> lam(d), mu(d);
    for (const auto& [n, an] : a.entries()) {
        for (const auto& [m, bm] : b.entries()) {
            for (std::size_t k = 0; k < d; ++k) {
                lam[k] = static_cast<double>(n[k]) + s[k];
                mu[k] = static_cast<double>(m[k]) + t[k];
            }
            out.lhs += an * std::conj(bm) * expInnerProduct(lam, mu, cube);
        }
    }

    // e^{2πi⟨n,M⟩} = 1 for integer n and M, so the twist is the sign (−1)^{Σn}.
    auto twist = [](const SparseSeq& x) {
        SparseSeq y(x.dimension());
        for (const auto& [n, v] : x.entries()) {
            const std::int64_t sum = std::accumulate(n.begin(), n.end(), std::int64_t{0});
            y.set(n, sum % 2 == 0 ? v : -v);
        }
        return y;
    };
    const SparseSeq alpha = twist(a);
    const SparseSeq beta = twist(b);

    double turns = 0.0;
    std::vector<double> tMinusS(d);
    out.integerCase = true;
    for (std::size_t k = 0; k < d; ++k) {
        const double diff = s[k] - t[k];
        turns += diff * static_cast<double>(M[k]);
        tMinusS[k] = -diff;
        if (std::abs(diff - std::nearbyint(diff)) > kFloatingIntegralityTol) out.integerCase = false;
    }
    const Complex prefactor = unitPhase(turns - std::floor(turns));
    const double na = a.l2Norm();
    const double nb = b.l2Norm();
    if (out.integerCase) {
        // ⟨T_t α, T_s β⟩ = ⟨T_{t−s} α, β⟩, an exact signed shift.
        for (auto& v : tMinusS) v = std::nearbyint(v);
        const auto shifted = applyTnd(tMinusS, alpha, R);
        out.rhs = prefactor * innerProduct(shifted.seq, beta);
        out.bound = shifted.tailBound * nb;
    } else {
        const auto ta = applyTnd(t, alpha, R);
        const auto sb = applyTnd(s, beta, R);
        out.rhs = prefactor * innerProduct(ta.seq, sb.seq);
        out.bound = ta.tailBound * nb + na * sb.tailBound;
    }
    out.residual = std::abs(out.lhs - out.rhs);
    out.withinBound = out.residual <= out.bound + kRoundingSlack * (1.0 + na * nb);
    return out;
}

}  // namespace expbasis
