#pragma once

#include "expbasis/trig.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace expbasis {

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Complex> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    /// max_ij |a_ij|
    double maxAbs() const;
    double frobeniusNorm() const;

    static ComplexMatrix identity(std::size_t n);

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// max_ij |a_ij − b_ij|; matrices must have equal shape.
double maxAbsDifference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square matrix equal to its conjugate transpose.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    /// Checks ‖H − H*‖_max ≤ 1e−12·‖H‖_max, then stores (H + H*)/2 so the
    /// result is exactly Hermitian. Throws InvalidArgument otherwise.
    explicit HermitianMatrix(const ComplexMatrix& m);

    /// Builds from the upper triangle of m; the lower triangle is its mirror.
    static HermitianMatrix fromUpper(const ComplexMatrix& m);

    std::size_t order() const noexcept { return m_.rows(); }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const ComplexMatrix& matrix() const noexcept { return m_; }

    /// ⟨Hv, v⟩ = v* H v, real.
    double quadraticForm(std::span<const Complex> v) const;
    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    ComplexMatrix m_;
};

double norm2(std::span<const Complex> v);
Complex innerProduct(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace expbasis
