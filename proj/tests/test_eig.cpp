#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tristate/eig.hpp"
#include "tristate/family.hpp"

using namespace tristate;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = cx(g(rng), g(rng));
    return hermitized(m);
}

ComplexMatrix reconstruct(const Spectrum& s) {
    const int n = s.vectors.n;
    ComplexMatrix lam(n);
    for (int i = 0; i < n; ++i) lam.at(i, i) = s.values[i];
    return s.vectors * lam * adjoint(s.vectors);
}

// Independent route to the smallest eigenvalue: power iteration on s*I - M
// with s a Gershgorin upper bound, so the dominant eigenvalue is s - lmin.
double lambda_min_power_iteration(const ComplexMatrix& m) {
    const int n = m.n;
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(m.at(i, j));
        shift = std::max(shift, row);
    }
    ComplexMatrix sm(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sm.at(i, j) = (i == j ? cx(shift, 0.0) : cx(0.0)) - m.at(i, j);
    Vec v(n);
    std::mt19937 rng(7);
    std::normal_distribution<double> g(0.0, 1.0);
    for (cx& z : v) z = cx(g(rng), g(rng));
    double prev = 0.0;
    for (int it = 0; it < 200000; ++it) {
        Vec w = mat_vec(sm, v);
        const double nw = norm2(w);
        for (cx& z : w) z /= nw;
        const double ray = inner(w, mat_vec(sm, w)).real();
        v = std::move(w);
        if (it > 10 && std::abs(ray - prev) < 1e-14 * std::max(1.0, std::abs(ray)))
            return shift - ray;
        prev = ray;
    }
    return shift - prev;
}

}  // namespace

TEST_CASE("identity and zero matrices") {
    const Spectrum si = eig_hermitian(ComplexMatrix::identity(8));
    for (double v : si.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    const Spectrum sz = eig_hermitian(ComplexMatrix(8));
    for (double v : sz.values) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("rejects bad input") {
    ComplexMatrix m(3);
    m.at(0, 1) = cx(1.0, 0.0);
    m.at(1, 0) = cx(0.5, 0.0);  // not Hermitian
    CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);

    ComplexMatrix bad(2);
    bad.at(0, 0) = cx(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(eig_hermitian(bad), std::invalid_argument);
}

TEST_CASE("reconstruction and orthonormality on random Hermitian matrices") {
    std::mt19937 rng(20240811);
    for (int n : {4, 8, 27, 64}) {
        for (int trial = 0; trial < 25; ++trial) {
            const ComplexMatrix m = random_hermitian(n, rng);
            const Spectrum s = eig_hermitian(m);
            // ascending order
            for (int i = 1; i < n; ++i) CHECK(s.values[i - 1] <= s.values[i]);
            // reconstruction
            const double err = frobenius_norm(m - reconstruct(s));
            CHECK(err <= 1e-10 * frobenius_norm(m));
            // orthonormal columns
            const ComplexMatrix g = adjoint(s.vectors) * s.vectors;
            CHECK(max_abs_diff(g, ComplexMatrix::identity(n)) <= 1e-10);
        }
    }
}

TEST_CASE("eigenvalue invariants: lambda_i satisfy M v = lambda v") {
    std::mt19937 rng(99);
    const ComplexMatrix m = random_hermitian(27, rng);
    const Spectrum s = eig_hermitian(m);
    const double scale = frobenius_norm(m);
    for (int i = 0; i < 27; ++i) {
        const Vec v = s.vector(i);
        const Vec mv = mat_vec(m, v);
        double err = 0.0;
        for (int r = 0; r < 27; ++r) err += std::norm(mv[r] - s.values[i] * v[r]);
        CHECK(std::sqrt(err) <= 1e-10 * scale);
    }
}

TEST_CASE("phase convention is deterministic") {
    std::mt19937 rng(5);
    const ComplexMatrix m = random_hermitian(8, rng);
    const Spectrum s1 = eig_hermitian(m);
    const Spectrum s2 = eig_hermitian(m);
    CHECK(max_abs_diff(s1.vectors, s2.vectors) == 0.0);
    for (int j = 0; j < 8; ++j) {
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < 8; ++i)
            if (std::abs(s1.vectors.at(i, j)) > best + 1e-15) {
                best = std::abs(s1.vectors.at(i, j));
                imax = i;
            }
        CHECK(s1.vectors.at(imax, j).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(s1.vectors.at(imax, j).real() > 0.0);
    }
}

TEST_CASE("chi PT_A minimum eigenvalue cross-checked against power iteration") {
    const Operator pt = partial_transpose(chi(), Party::A);
    const double via_jacobi = lambda_min(pt.mat);
    const double via_power = lambda_min_power_iteration(pt.mat);
    CHECK(via_jacobi < 0.0);
    CHECK(via_jacobi == doctest::Approx(via_power).epsilon(1e-8));
    CHECK(via_jacobi == doctest::Approx(-0.0882905698).epsilon(1e-6));
}

TEST_CASE("rank_tol") {
    const ComplexMatrix i27 = (1.0 / 27.0) * ComplexMatrix::identity(27);
    CHECK(rank_tol(i27, 1e-9) == 27);

    ComplexMatrix d(4);
    d.at(0, 0) = 1.0;
    d.at(1, 1) = 1e-3;
    d.at(2, 2) = 1e-12;
    CHECK(rank_tol(d, 1e-9) == 2);
    CHECK(rank_tol(d, 1e-15) == 3);
}
