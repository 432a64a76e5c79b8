#pragma once

#include "expbasis/matrix.hpp"

#include <vector>

namespace expbasis {

struct JacobiOptions {
    /// Stop when the off-diagonal Frobenius mass is at most tolerance·‖H‖_F.
    double tolerance = 1e-13;
    int maxSweeps = 50;
};

struct EigenSystem {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    ComplexMatrix vectors;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations. Throws ConvergenceFailure past maxSweeps.
EigenSystem jacobiEigenSystem(const HermitianMatrix& h, const JacobiOptions& options = {});

/// Householder reduction to real tridiagonal form followed by implicit QL.
/// Values only, ascending. Throws ConvergenceFailure.
std::vector<double> tridiagonalEigenvalues(const HermitianMatrix& h);

/// Orders above this use the tridiagonal path in hermitianEigenvalues.
inline constexpr std::size_t kJacobiMaxOrder = 192;

/// Ascending eigenvalues: Jacobi for small orders, tridiagonal QL beyond.
std::vector<double> hermitianEigenvalues(const HermitianMatrix& h);

}  // namespace expbasis
