#include "tristate/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tristate {

namespace {

void project_out(Vec& w, std::span<const Vec> basis) {
    for (const Vec& b : basis) {
        const cx c = inner(b, w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
    }
}

void fix_leading_phase_by_magnitude(Vec& v) {
    int imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best + 1e-15) {
            best = a;
            imax = static_cast<int>(i);
        }
    }
    if (best <= 0.0) return;
    const cx phase = std::conj(v[imax]) / std::abs(v[imax]);
    for (cx& z : v) z *= phase;
}

}  // namespace

std::vector<Vec> orthonormal_span(std::span<const Vec> vectors, double tol) {
    std::vector<Vec> basis;
    if (vectors.empty()) return basis;
    const std::size_t len = vectors.front().size();
    for (const Vec& v : vectors) {
        if (v.size() != len) throw std::invalid_argument("orthonormal_span: length mismatch");
        const double nv = norm2(v);
        if (nv == 0.0) continue;
        Vec w = v;
        project_out(w, basis);
        project_out(w, basis);  // re-orthogonalization pass
        const double nw = norm2(w);
        if (nw < tol * nv) continue;
        for (cx& z : w) z /= nw;
        fix_leading_phase_by_magnitude(w);
        basis.push_back(std::move(w));
    }
    return basis;
}

double residual_outside_span(std::span<const cx> v, std::span<const Vec> basis) {
    const double nv = norm2(v);
    if (nv == 0.0) return 0.0;
    Vec w(v.begin(), v.end());
    project_out(w, basis);
    return std::clamp(norm2(w) / nv, 0.0, 1.0);
}

Vec orth_in_2d_span(std::span<const cx> x, std::span<const cx> y) {
    if (x.size() != y.size()) throw std::invalid_argument("orth_in_2d_span: length mismatch");
    const double nx = norm2(x), ny = norm2(y);
    if (nx == 0.0 || ny == 0.0)
        throw std::invalid_argument("orth_in_2d_span: zero input vector");
    Vec w(y.begin(), y.end());
    const cx c = inner(x, y) / cx(nx * nx, 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * x[i];
    const double nw = norm2(w);
    if (nw <= 1e-12 * ny)
        throw std::invalid_argument("orth_in_2d_span: inputs are linearly dependent");
    for (cx& z : w) z /= nw;
    // First nonzero coordinate made real positive.
    for (const cx& z : w) {
        const double a = std::abs(z);
        if (a > 1e-12) {
            const cx phase = std::conj(z) / a;
            for (cx& t : w) t *= phase;
            break;
        }
    }
    return w;
}

bool SpanAccumulator::add(std::span<const cx> v) {
    const double nv = norm2(v);
    if (nv == 0.0) return false;
    Vec w(v.begin(), v.end());
    project_out(w, basis_);
    project_out(w, basis_);
    const double nw = norm2(w);
    if (nw < tol_ * nv) return false;
    for (cx& z : w) z /= nw;
    basis_.push_back(std::move(w));
    return true;
}

}  // namespace tristate
