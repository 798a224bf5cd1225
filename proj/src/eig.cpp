#include "tristate/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tristate {

Vec Spectrum::vector(int i) const {
    Vec v(vectors.n);
    for (int r = 0; r < vectors.n; ++r) v[r] = vectors.at(r, i);
    return v;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

// Fix each column's phase: largest-magnitude coordinate made real positive.
void fix_column_phases(ComplexMatrix& v) {
    for (int j = 0; j < v.n; ++j) {
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < v.n; ++i) {
            const double a = std::abs(v.at(i, j));
            if (a > best + 1e-15) {
                best = a;
                imax = i;
            }
        }
        const cx z = v.at(imax, j);
        if (std::abs(z) == 0.0) continue;
        const cx phase = std::conj(z) / std::abs(z);
        for (int i = 0; i < v.n; ++i) v.at(i, j) *= phase;
    }
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& m) {
    if (!all_finite(m)) throw std::invalid_argument("eig_hermitian: non-finite entries");
    const double defect = hermiticity_defect(m);
    if (defect > 1e-12 * std::max(1.0, max_abs(m)))
        throw std::invalid_argument("eig_hermitian: matrix not Hermitian (defect " +
                                    std::to_string(defect) + ")");

    ComplexMatrix a = hermitized(m);
    const int n = a.n;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double fro = frobenius_norm(a);
    const double stop = 1e-14 * fro;

    if (fro > 0.0) {
        bool converged = false;
        for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const cx apq = a.at(p, q);
                    const double r = std::abs(apq);
                    if (r <= 1e-300) continue;
                    const double alpha = a.at(p, p).real();
                    const double beta = a.at(q, q).real();
                    const cx phase = apq / r;  // apq = r * phase

                    // t = s/c solves t^2 + 2*tau*t - 1 = 0 with the
                    // smaller-magnitude root; zeroes the (p,q) entry.
                    const double tau = (beta - alpha) / (2.0 * r);
                    double t;
                    if (std::abs(tau) > 1e150) {
                        t = 1.0 / (2.0 * tau);
                    } else {
                        t = (tau >= 0.0 ? 1.0 : -1.0) /
                            (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cx sp = s * phase;        // s * e^{i phi}
                    const cx spc = std::conj(sp);   // s * e^{-i phi}

                    // A <- U^dag A U with U = I except
                    // U[p][p]=c, U[p][q]=s e^{i phi}, U[q][p]=-s e^{-i phi}, U[q][q]=c
                    for (int k = 0; k < n; ++k) {  // columns
                        const cx akp = a.at(k, p), akq = a.at(k, q);
                        a.at(k, p) = c * akp - spc * akq;
                        a.at(k, q) = sp * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {  // rows
                        const cx apk = a.at(p, k), aqk = a.at(q, k);
                        a.at(p, k) = c * apk - sp * aqk;
                        a.at(q, k) = spc * apk + c * aqk;
                    }
                    a.at(p, q) = 0.0;
                    a.at(q, p) = 0.0;
                    a.at(p, p) = cx(a.at(p, p).real(), 0.0);
                    a.at(q, q) = cx(a.at(q, q).real(), 0.0);

                    for (int k = 0; k < n; ++k) {  // V <- V U
                        const cx vkp = v.at(k, p), vkq = v.at(k, q);
                        v.at(k, p) = c * vkp - spc * vkq;
                        v.at(k, q) = sp * vkp + c * vkq;
                    }
                }
            }
            converged = offdiag_frobenius(a) < stop;
        }
        if (!converged && offdiag_frobenius(a) >= stop)
            throw std::runtime_error("eig_hermitian: Jacobi failed to converge in 100 sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

    Spectrum out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a.at(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
    }
    fix_column_phases(out.vectors);
    return out;
}

int rank_tol(const Spectrum& s, double tol_rel) {
    double amax = 0.0;
    for (double x : s.values) amax = std::max(amax, std::abs(x));
    const double thr = tol_rel * std::max(amax, 1.0);
    int r = 0;
    for (double x : s.values)
        if (x > thr) ++r;
    return r;
}

int rank_tol(const ComplexMatrix& m, double tol_rel) {
    return rank_tol(eig_hermitian(m), tol_rel);
}

double lambda_min(const ComplexMatrix& m) { return eig_hermitian(m).values.front(); }

}  // namespace tristate
