#include "tristate/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace tristate {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

static void check_same_dim(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    ComplexMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    ComplexMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    const int n = x.n;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cx xik = x.at(i, k);
            if (xik == cx{}) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

ComplexMatrix operator*(cx s, const ComplexMatrix& x) {
    ComplexMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& x) { return cx(s, 0.0) * x; }

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(i, j) = std::conj(m.at(j, i));
    return r;
}

ComplexMatrix transposed(const ComplexMatrix& m) {
    ComplexMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(i, j) = m.at(j, i);
    return r;
}

ComplexMatrix hermitized(const ComplexMatrix& m) {
    ComplexMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            r.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    return r;
}

cx trace(const ComplexMatrix& m) {
    cx t = 0.0;
    for (int i = 0; i < m.n; ++i) t += m.at(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const cx& z : m.a) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    for (const cx& z : m.a) s = std::max(s, std::abs(z));
    return s;
}

double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) s = std::max(s, std::abs(x.a[i] - y.a[i]));
    return s;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i; j < m.n; ++j)
            s = std::max(s, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return s;
}

bool all_finite(const ComplexMatrix& m) {
    for (const cx& z : m.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix outer(std::span<const cx> v) {
    ComplexMatrix r(static_cast<int>(v.size()));
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) r.at(i, j) = v[i] * std::conj(v[j]);
    return r;
}

Vec mat_vec(const ComplexMatrix& m, std::span<const cx> v) {
    if (static_cast<int>(v.size()) != m.n) throw std::invalid_argument("mat_vec: size mismatch");
    Vec r(v.size());
    for (int i = 0; i < m.n; ++i) {
        cx s = 0.0;
        for (int j = 0; j < m.n; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

cx inner(std::span<const cx> x, std::span<const cx> y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: size mismatch");
    cx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double norm2(std::span<const cx> v) {
    double s = 0.0;
    for (const cx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace tristate
