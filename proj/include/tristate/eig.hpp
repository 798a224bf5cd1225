#pragma once

#include <vector>

#include "tristate/matrix.hpp"

namespace tristate {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors are the matching orthonormal columns of `vectors`.
struct Spectrum {
    std::vector<double> values;
    ComplexMatrix vectors;

    Vec vector(int i) const;
};

/// Cyclic Jacobi diagonalization. Input must be Hermitian to 1e-12 relative;
/// it is symmetrized as (M+M^dag)/2 before solving. Column phases are fixed so
/// the largest-magnitude coordinate of each eigenvector is real positive.
/// Throws std::invalid_argument on non-Hermitian or non-finite input,
/// std::runtime_error if 100 sweeps do not converge.
Spectrum eig_hermitian(const ComplexMatrix& m);

/// Number of eigenvalues above tol_rel * max(max|lambda|, 1).
int rank_tol(const ComplexMatrix& m, double tol_rel);
int rank_tol(const Spectrum& s, double tol_rel);

double lambda_min(const ComplexMatrix& m);

}  // namespace tristate
