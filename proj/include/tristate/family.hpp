#pragma once

#include <functional>
#include <optional>
#include <string>

#include "tristate/hilbert.hpp"

namespace tristate {

/// Derived constants of the parameterized 3-qubit family, all rational in b
/// except Omega's sqrt(1-b^2) term.
struct FamilyParams {
    double b;
    double mu, nu, eps;                    // h-correction weights
    double Gamma, Lambda, Delta, zeta, Omega, Theta;  // closed-form entries

    static FamilyParams at(double b);
};

/// |psi^k>, k = 1..3: (|0>|0,k-1 bits...>) ladder states; unit norm.
StateVector psi_k(int k);
/// |phi^(b)> = |1> ( sqrt((1+b)/2)|00> + sqrt((1-b)/2)|11> ); unit norm.
StateVector phi_b(double b);

/// chi = (2/7) sum_k P[psi^k] + (1/7) P[011].
Operator chi();

/// sigma^(b) = (7b/(7b+1)) chi + (1/(7b+1)) P[phi^(b)], built from projectors.
Operator sigma_b(double b);
/// The same operator assembled entry-by-entry from its closed form.
Operator sigma_b_matrix(double b);

/// Cyclic symmetrization of sigma^(b) over the three parties.
Operator eta_b(double b);

/// eta^(b) with the rank-lowering corrections; PSD, trace 1/Theta.
Operator h_b(double b);
/// rho^[2](b) = Theta h^(b).
Operator rho2_b(double b);

/// Closed-form matrices of rho^[2](b) and of its partial transpose on C.
Operator rho2_matrix(double b);
Operator rho2_ptC_matrix(double b);

/// The AB|C range witness: Theta * (column 5 of the PT_C closed form).
Vec witness_u(double b);

struct CutReport {
    double lmin = 0.0;
    bool ppt = false;
    int pt_rank = 0;
};

/// Per-cut spectra of the three partial transposes, cuts in fixed order
/// A|BC, B|CA, C|AB. PSD verdict is lmin >= -tol.
struct PptReport {
    std::array<CutReport, 3> cuts;

    const CutReport& cut(Cut c) const { return cuts[static_cast<int>(c)]; }
    bool all_ppt() const;
};

PptReport ppt_report(const Operator& rho, double tol = 1e-10);

using FamilyFn = std::function<Operator(double)>;

struct ThresholdResult {
    bool found = false;
    double b_star = 0.0;
    std::string note;
};

/// Bisection root of b -> lambda_min(PT_party(family(b))) over [lo,hi],
/// bracketed by a 101-point pre-scan; with several brackets the largest root
/// is taken. `found=false` with a note when the scan shows no sign change.
ThresholdResult ppt_threshold(const FamilyFn& family, Party party, double lo = 0.0,
                              double hi = 1.0, double tol_b = 1e-10);

struct RangeCriterionOptions {
    /// C-factors phi = (1,t) sampled over this grid, plus the (1,0) and (0,1)
    /// endpoint families which are always included.
    std::vector<cx> t_grid;
    double null_tol = 1e-9;        // singular values below this count as zero
    double span_drop_tol = 1e-10;  // accumulator drop tolerance
    double in_range_tol = 1e-8;    // witness membership in range(PT_C)
    double violation_threshold = 1e-3;

    /// 15x15 complex grid over [-3,3]^2 (t=0 excluded) plus 50 real points
    /// inside (-5,5).
    static RangeCriterionOptions standard();
};

struct RangeCriterionVerdict {
    bool violated = false;
    double witness_residual = 0.0;
    int sampled_span_dim = 0;
    int t_samples = 0;
    double witness_in_ptc_residual = 0.0;
    std::string note;
    /// psi solutions of (I - P_range)(psi x phi) = 0 for phi=(1,0) and (0,1).
    std::vector<Vec> family_phi10, family_phi01;
};

/// Range-criterion check across AB|C for a (2,2,2) state: collect every
/// product vector psi x phi in range(rho), partially conjugate (phi -> phi*),
/// accumulate the span W, and test whether the witness (a vector in
/// range(rho^T_C)) escapes W. Reports rather than refuses when rho is NPT
/// across the cut (the criterion is then unnecessary).
RangeCriterionVerdict range_criterion_ab_c(const Operator& rho, std::span<const cx> witness,
                                           const RangeCriterionOptions& opts =
                                               RangeCriterionOptions::standard());

/// Convenience wrapper running the check on rho^[2](b) with witness_u(b).
RangeCriterionVerdict range_criterion_rho2(double b,
                                           const RangeCriterionOptions& opts =
                                               RangeCriterionOptions::standard());

}  // namespace tristate
