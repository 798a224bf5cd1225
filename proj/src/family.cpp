#include "tristate/family.hpp"

#include <cmath>
#include <stdexcept>

#include "tristate/eig.hpp"
#include "tristate/subspace.hpp"
#include "tristate/upb.hpp"

namespace tristate {

namespace {

constexpr PartyDims kQubits{};  // (2,2,2)

void check_b(double b) {
    if (!(b >= 0.0 && b <= 1.0))
        throw std::invalid_argument("family parameter b must lie in [0,1]");
}

}  // namespace

FamilyParams FamilyParams::at(double b) {
    check_b(b);
    FamilyParams p{};
    p.b = b;
    const double s = 1.0 + 7.0 * b;
    p.mu = b / (3.0 * s);
    p.nu = (1.0 + 3.0 * b) / (6.0 * s);
    p.eps = 2.0 * b / (3.0 * s);
    p.Gamma = b / s;
    p.Lambda = (1.0 + 3.0 * b) / (6.0 * s);
    p.Delta = (1.0 + 5.0 * b) / (6.0 * s);
    p.zeta = (1.0 + b) / (2.0 * s);
    p.Omega = (2.0 * b + std::sqrt(1.0 - b * b)) / (6.0 * s);
    p.Theta = (3.0 + 21.0 * b) / (3.0 + 17.0 * b);
    return p;
}

StateVector psi_k(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("psi_k: k must be 1..3");
    StateVector s{kQubits, Vec(8)};
    const double w = 1.0 / std::sqrt(2.0);
    // |0>|x> + |1>|x+1> over the BC pair read as a 2-bit integer x = k-1.
    s.amp[k - 1] = w;
    s.amp[4 + k] = w;
    return s;
}

StateVector phi_b(double b) {
    check_b(b);
    StateVector s{kQubits, Vec(8)};
    s.amp[4] = std::sqrt((1.0 + b) / 2.0);  // |1,0,0>
    s.amp[7] = std::sqrt((1.0 - b) / 2.0);  // |1,1,1>
    return s;
}

Operator chi() {
    ComplexMatrix m(8);
    for (int k = 1; k <= 3; ++k) m = m + (2.0 / 7.0) * outer(psi_k(k).amp);
    StateVector e011{kQubits, Vec(8)};
    e011.amp[3] = 1.0;
    m = m + (1.0 / 7.0) * outer(e011.amp);
    return {kQubits, m};
}

Operator sigma_b(double b) {
    check_b(b);
    const double w = 7.0 * b + 1.0;
    const Operator x = chi();
    ComplexMatrix m = (7.0 * b / w) * x.mat + (1.0 / w) * outer(phi_b(b).amp);
    return {kQubits, m};
}

Operator sigma_b_matrix(double b) {
    check_b(b);
    const double s = 1.0 / (7.0 * b + 1.0);
    const double root = std::sqrt(1.0 - b * b) / 2.0;
    const double half = (1.0 + b) / 2.0;
    const double e[8][8] = {
        {b, 0, 0, 0, 0, b, 0, 0},
        {0, b, 0, 0, 0, 0, b, 0},
        {0, 0, b, 0, 0, 0, 0, b},
        {0, 0, 0, b, 0, 0, 0, 0},
        {0, 0, 0, 0, half, 0, 0, root},
        {b, 0, 0, 0, 0, b, 0, 0},
        {0, b, 0, 0, 0, 0, b, 0},
        {0, 0, b, 0, root, 0, 0, half},
    };
    Operator o{kQubits, ComplexMatrix(8)};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) o.mat.at(i, j) = s * e[i][j];
    return o;
}

Operator eta_b(double b) {
    const Operator s = sigma_b(b);
    const Operator fwd = permute_parties(s, kRoleShiftForward);
    const Operator bwd = permute_parties(s, kRoleShiftBackward);
    return {kQubits, (1.0 / 3.0) * (s.mat + fwd.mat + bwd.mat)};
}

Operator h_b(double b) {
    const FamilyParams p = FamilyParams::at(b);
    Vec v1(8), v2(8), v3(8), v4(8), v5(8), v6(8);
    v1[1] = v1[6] = 1.0;
    v2[2] = v2[5] = 1.0;
    v3[1] = 1.0;
    v4[2] = 1.0;
    v5[6] = 1.0;
    v6[5] = 1.0;
    const auto sym = [](const Vec& x, const Vec& y) {
        ComplexMatrix m(8);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m.at(i, j) = x[i] * y[j] + y[i] * x[j];
        return m;
    };
    ComplexMatrix m = eta_b(b).mat;
    m = m - p.mu * (outer(v1) + outer(v2));
    m = m + p.nu * sym(v3, v4);
    m = m + p.eps * sym(v5, v6);
    return {kQubits, m};
}

Operator rho2_b(double b) {
    const FamilyParams p = FamilyParams::at(b);
    return {kQubits, p.Theta * h_b(b).mat};
}

Operator rho2_matrix(double b) {
    const FamilyParams p = FamilyParams::at(b);
    const double G = p.Gamma, L = p.Lambda, D = p.Delta, z = p.zeta, Om = p.Omega;
    const double g = G / 3.0, g2 = 2.0 * G / 3.0;
    const double e[8][8] = {
        {G, 0, 0, g, 0, g, g, 0},
        {0, L, L, 0, 0, 0, 0, Om},
        {0, L, L, 0, 0, 0, 0, Om},
        {g, 0, 0, G, g, 0, 0, 0},
        {0, 0, 0, g, D, 0, 0, Om},
        {g, 0, 0, 0, 0, g2, g2, 0},
        {g, 0, 0, 0, 0, g2, g2, 0},
        {0, Om, Om, 0, Om, 0, 0, z},
    };
    Operator o{kQubits, ComplexMatrix(8)};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) o.mat.at(i, j) = p.Theta * e[i][j];
    return o;
}

Operator rho2_ptC_matrix(double b) {
    const FamilyParams p = FamilyParams::at(b);
    const double G = p.Gamma, L = p.Lambda, D = p.Delta, z = p.zeta, Om = p.Omega;
    const double g = G / 3.0, g2 = 2.0 * G / 3.0;
    const double e[8][8] = {
        {G, 0, 0, L, 0, 0, g, 0},
        {0, L, g, 0, g, 0, 0, Om},
        {0, g, L, 0, 0, g, 0, 0},
        {L, 0, 0, G, 0, 0, Om, 0},
        {0, g, 0, 0, D, 0, 0, g2},
        {0, 0, g, 0, 0, g2, Om, 0},
        {g, 0, 0, Om, 0, Om, g2, 0},
        {0, Om, 0, 0, g2, 0, 0, z},
    };
    Operator o{kQubits, ComplexMatrix(8)};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) o.mat.at(i, j) = p.Theta * e[i][j];
    return o;
}

Vec witness_u(double b) {
    check_b(b);
    const double den = 3.0 + 17.0 * b;
    Vec u(8);
    u[2] = b / den;
    u[5] = 2.0 * b / den;
    u[6] = (2.0 * b + std::sqrt(1.0 - b * b)) / (6.0 + 34.0 * b);
    return u;
}

bool PptReport::all_ppt() const {
    return cuts[0].ppt && cuts[1].ppt && cuts[2].ppt;
}

PptReport ppt_report(const Operator& rho, double tol) {
    PptReport r;
    for (int c = 0; c < 3; ++c) {
        const Operator pt = partial_transpose(rho, static_cast<Party>(c));
        const Spectrum s = eig_hermitian(pt.mat);
        r.cuts[c].lmin = s.values.front();
        r.cuts[c].ppt = s.values.front() >= -tol;
        r.cuts[c].pt_rank = rank_tol(s, 1e-9);
    }
    return r;
}

ThresholdResult ppt_threshold(const FamilyFn& family, Party party, double lo, double hi,
                              double tol_b) {
    if (!(lo < hi)) throw std::invalid_argument("ppt_threshold: empty interval");
    constexpr double kPsdEps = 1e-10;
    const auto lmin_at = [&](double b) {
        return lambda_min(partial_transpose(family(b), party).mat);
    };
    const auto negative = [&](double f) { return f < -kPsdEps; };

    // Coarse pre-scan; with several brackets keep the largest root.
    constexpr int kScan = 101;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    bool have_bracket = false;
    double prev_b = lo;
    double prev_f = lmin_at(lo);
    for (int i = 1; i < kScan; ++i) {
        const double b = lo + (hi - lo) * i / (kScan - 1);
        const double f = lmin_at(b);
        if (negative(prev_f) != negative(f)) {
            bracket_lo = prev_b;
            bracket_hi = b;
            have_bracket = true;
        }
        prev_b = b;
        prev_f = f;
    }
    if (!have_bracket) {
        ThresholdResult r;
        r.found = false;
        r.note = "no sign change of lambda_min over the interval";
        return r;
    }

    bool lo_negative = negative(lmin_at(bracket_lo));
    while (bracket_hi - bracket_lo > tol_b) {
        const double mid = 0.5 * (bracket_lo + bracket_hi);
        if (negative(lmin_at(mid)) == lo_negative)
            bracket_lo = mid;
        else
            bracket_hi = mid;
    }
    ThresholdResult r;
    r.found = true;
    r.b_star = 0.5 * (bracket_lo + bracket_hi);
    return r;
}

RangeCriterionOptions RangeCriterionOptions::standard() {
    RangeCriterionOptions o;
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) {
            const double re = -3.0 + 6.0 * i / 14.0;
            const double im = -3.0 + 6.0 * j / 14.0;
            const cx t(re, im);
            if (std::abs(t) < 1e-12) continue;
            o.t_grid.push_back(t);
        }
    for (int k = 1; k <= 50; ++k) {
        const double t = -5.0 + 10.0 * k / 51.0;  // interior points, never 0
        o.t_grid.push_back(cx(t, 0.0));
    }
    return o;
}

namespace {

// psi x phi over the AB|C split; the natural lexicographic index already has
// the (AB) pair slowest, so no reshuffle is needed.
Vec product_ab_c(std::span<const cx> psi, const cx phi0, const cx phi1) {
    Vec v(8);
    for (int i = 0; i < 4; ++i) {
        v[2 * i] = psi[i] * phi0;
        v[2 * i + 1] = psi[i] * phi1;
    }
    return v;
}

// Solutions psi of (I - P)(psi x phi) = 0, via the nullspace of the 8x4
// residual map (smallest eigenvectors of its 4x4 Gram).
std::vector<Vec> in_range_solutions(std::span<const Vec> range_basis, cx phi0, cx phi1,
                                    double null_tol) {
    ComplexMatrix residual_map(8);  // columns 0..3 used
    for (int i = 0; i < 4; ++i) {
        Vec e(4);
        e[i] = 1.0;
        Vec col = product_ab_c(e, phi0, phi1);
        Vec proj(8);
        for (const Vec& b : range_basis) {
            const cx c = inner(b, col);
            for (int r = 0; r < 8; ++r) proj[r] += c * b[r];
        }
        for (int r = 0; r < 8; ++r) residual_map.at(r, i) = col[r] - proj[r];
    }
    ComplexMatrix gram(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cx s = 0.0;
            for (int r = 0; r < 8; ++r)
                s += std::conj(residual_map.at(r, i)) * residual_map.at(r, j);
            gram.at(i, j) = s;
        }
    const Spectrum sp = eig_hermitian(gram);
    double smax = 0.0;
    for (double v : sp.values) smax = std::max(smax, std::sqrt(std::max(v, 0.0)));
    const double thr = null_tol * std::max(smax, 1.0);
    std::vector<Vec> out;
    for (int i = 0; i < 4; ++i) {
        const double sv = std::sqrt(std::max(sp.values[i], 0.0));
        if (sv <= thr) out.push_back(sp.vector(i));
    }
    return out;
}

std::vector<Vec> range_basis_of(const ComplexMatrix& m, double tol_rel) {
    const Spectrum s = eig_hermitian(m);
    double amax = 0.0;
    for (double v : s.values) amax = std::max(amax, std::abs(v));
    const double thr = tol_rel * std::max(amax, 1.0);
    std::vector<Vec> basis;
    for (int i = 0; i < m.n; ++i)
        if (s.values[i] > thr) basis.push_back(s.vector(i));
    return basis;
}

}  // namespace

RangeCriterionVerdict range_criterion_ab_c(const Operator& rho, std::span<const cx> witness,
                                           const RangeCriterionOptions& opts) {
    if (rho.dims != PartyDims(2, 2, 2))
        throw std::invalid_argument("range_criterion_ab_c: state must have dims (2,2,2)");
    if (witness.size() != 8)
        throw std::invalid_argument("range_criterion_ab_c: witness must have length 8");

    RangeCriterionVerdict v;
    const Spectrum rho_spec = eig_hermitian(rho.mat);
    if (rho_spec.values.front() < -1e-10)
        throw std::invalid_argument("range_criterion_ab_c: state is not PSD");

    const Operator ptc = partial_transpose(rho, Party::C);
    const Spectrum ptc_spec = eig_hermitian(ptc.mat);
    if (ptc_spec.values.front() < -1e-10) {
        v.note = "state is NPT across AB|C; the range criterion is unnecessary";
        return v;
    }

    const std::vector<Vec> range_rho = range_basis_of(rho.mat, 1e-9);
    const std::vector<Vec> range_ptc = range_basis_of(ptc.mat, 1e-9);

    SpanAccumulator w(opts.span_drop_tol);
    // phi = (1,0) and (0,1): real factors, conjugation is the identity.
    v.family_phi10 = in_range_solutions(range_rho, 1.0, 0.0, opts.null_tol);
    for (const Vec& psi : v.family_phi10) w.add(product_ab_c(psi, 1.0, 0.0));
    v.family_phi01 = in_range_solutions(range_rho, 0.0, 1.0, opts.null_tol);
    for (const Vec& psi : v.family_phi01) w.add(product_ab_c(psi, 0.0, 1.0));
    v.t_samples = 2;
    // phi = (1,t): solve in range(rho), then conjugate the C factor.
    for (const cx& t : opts.t_grid) {
        const auto sols = in_range_solutions(range_rho, 1.0, t, opts.null_tol);
        for (const Vec& psi : sols) w.add(product_ab_c(psi, 1.0, std::conj(t)));
        ++v.t_samples;
    }

    v.sampled_span_dim = w.dim();
    v.witness_in_ptc_residual = residual_outside_span(witness, range_ptc);
    v.witness_residual = residual_outside_span(witness, w.basis());
    v.violated = v.witness_in_ptc_residual <= opts.in_range_tol &&
                 v.witness_residual > opts.violation_threshold;
    return v;
}

RangeCriterionVerdict range_criterion_rho2(double b, const RangeCriterionOptions& opts) {
    const Vec u = witness_u(b);
    return range_criterion_ab_c(rho2_b(b), u, opts);
}

}  // namespace tristate
