#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tristate {

using cx = std::complex<double>;
using Vec = std::vector<cx>;

/// Dense square complex matrix, row-major.
struct ComplexMatrix {
    int n = 0;
    std::vector<cx> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);

    cx& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const cx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(cx s, const ComplexMatrix& x);
ComplexMatrix operator*(double s, const ComplexMatrix& x);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transposed(const ComplexMatrix& m);
/// (M + M^dag)/2
ComplexMatrix hermitized(const ComplexMatrix& m);

cx trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y);
/// max |M_ij - conj(M_ji)|
double hermiticity_defect(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// |v><v| (no normalization applied)
ComplexMatrix outer(std::span<const cx> v);
/// Matrix-vector product.
Vec mat_vec(const ComplexMatrix& m, std::span<const cx> v);

cx inner(std::span<const cx> x, std::span<const cx> y);  // <x|y>, conjugate-linear in x
double norm2(std::span<const cx> v);

}  // namespace tristate
