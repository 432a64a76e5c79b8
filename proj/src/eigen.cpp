#include "expbasis/eigen.hpp"

#include "expbasis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace expbasis {

namespace {

double offDiagonalMass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary J = diag(1, u) · [[c, s], [−s, c]], u = conj(a_pq)/|a_pq|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double b = std::abs(apq);
    if (b == 0.0) return;
    const Complex u = std::conj(apq) / b;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * b);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex jqp = -s * u;
    const Complex jqq = c * u;
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) {
        const Complex x = a(r, p);
        const Complex y = a(r, q);
        a(r, p) = x * c + y * jqp;
        a(r, q) = x * s + y * jqq;
    }
    for (std::size_t r = 0; r < n; ++r) {
        const Complex x = a(p, r);
        const Complex y = a(q, r);
        a(p, r) = c * x + std::conj(jqp) * y;
        a(q, r) = s * x + std::conj(jqq) * y;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * b;
    a(q, q) = aqq + t * b;
    for (std::size_t r = 0; r < n; ++r) {
        const Complex x = v(r, p);
        const Complex y = v(r, q);
        v(r, p) = x * c + y * jqp;
        v(r, q) = x * s + y * jqq;
    }
}

// Implicit QL on a symmetric tridiagonal matrix: diag d, off-diagonal e[i]
// coupling i and i+1 (e[n-1] unused). Eigenvalues overwrite d.
void tridiagonalQl(std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e[n - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (++iter > 60) throw Error(ErrorKind::ConvergenceFailure, "tridiagonal QL did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                bool deflated = false;
                for (std::size_t i = m; i-- > l;) {
                    const double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        deflated = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (deflated) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

EigenSystem jacobiEigenSystem(const HermitianMatrix& h, const JacobiOptions& options) {
    const std::size_t n = h.order();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = options.tolerance * a.frobeniusNorm();
    int sweep = 0;
    while (offDiagonalMass(a) > target) {
        if (sweep == options.maxSweeps) {
            throw Error(ErrorKind::ConvergenceFailure,
                        "Jacobi eigensolver did not converge in " + std::to_string(options.maxSweeps) + " sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem out;
    out.sweeps = sweep;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> tridiagonalEigenvalues(const HermitianMatrix& h) {
    const std::size_t n = h.order();
    ComplexMatrix a = h.matrix();
    std::vector<Complex> v(n), p(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        double xnorm = 0.0;
        for (std::size_t i = 0; i < m; ++i) xnorm += std::norm(a(k + 1 + i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const Complex x0 = a(k + 1, k);
        const double ax0 = std::abs(x0);
        const Complex phase = ax0 == 0.0 ? Complex(1.0) : x0 / ax0;
        const Complex alpha = -phase * xnorm;
        for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        v[0] -= alpha;
        const double vnorm = std::sqrt(2.0 * xnorm * (xnorm + ax0));
        for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;
        // H A H = A − 2 v w* − 2 w v*, w = A v − (v* A v) v.
        double kappa = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += a(k + 1 + i, k + 1 + j) * v[j];
            p[i] = acc;
        }
        for (std::size_t i = 0; i < m; ++i) kappa += (std::conj(v[i]) * p[i]).real();
        for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * v[i];
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                a(k + 1 + i, k + 1 + j) -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]));
            }
        }
        a(k + 1, k) = alpha;
        a(k, k + 1) = std::conj(alpha);
        for (std::size_t i = 1; i < m; ++i) {
            a(k + 1 + i, k) = 0.0;
            a(k, k + 1 + i) = 0.0;
        }
    }
    std::vector<double> d(n), e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
    tridiagonalQl(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> hermitianEigenvalues(const HermitianMatrix& h) {
    if (h.order() > kJacobiMaxOrder) return tridiagonalEigenvalues(h);
    return jacobiEigenSystem(h).values;
}

}  // namespace expbasis
