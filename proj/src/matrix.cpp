#include "expbasis/matrix.hpp"

#include "expbasis/errors.hpp"

#include <algorithm>
#include <cmath>

namespace expbasis {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

double ComplexMatrix::maxAbs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobeniusNorm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double maxAbsDifference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square");
    const double tol = 1e-12 * std::max(m.maxAbs(), 1e-300);
    m_ = ComplexMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                throw Error(ErrorKind::InvalidArgument, "matrix is not Hermitian at (" + std::to_string(i) + "," +
                                                            std::to_string(j) + ")");
            }
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = i == j ? Complex(v.real(), 0.0) : v;
            m_(j, i) = std::conj(m_(i, j));
        }
    }
}

HermitianMatrix HermitianMatrix::fromUpper(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square");
    HermitianMatrix h;
    h.m_ = ComplexMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        h.m_(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            h.m_(i, j) = m(i, j);
            h.m_(j, i) = std::conj(m(i, j));
        }
    }
    return h;
}

double HermitianMatrix::quadraticForm(std::span<const Complex> v) const {
    const auto hv = apply(v);
    return innerProduct(hv, v).real();
}

std::vector<Complex> HermitianMatrix::apply(std::span<const Complex> v) const {
    const std::size_t n = order();
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length differs from matrix order");
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        const auto r = m_.row(i);
        for (std::size_t j = 0; j < n; ++j) acc += r[j] * v[j];
        out[i] = acc;
    }
    return out;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

Complex innerProduct(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

}  // namespace expbasis
