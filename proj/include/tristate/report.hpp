#pragma once

#include <optional>
#include <string>

#include "tristate/family.hpp"

namespace tristate {

/// Per-cut PPT verdicts with derived set-membership evidence. Flags carry
/// only one-sided claims: PPT evidence and proven inseparability, never
/// separability.
struct ClassificationReport {
    PartyDims dims;
    double trace = 0.0;
    double lmin_overall = 0.0;
    int state_rank = 0;
    std::array<CutReport, 3> cuts;  // A|BC, B|CA, C|AB
    bool p_int_evidence = false;
    bool b_int_excluded = false;
    std::string provenance;
};

/// Extra knowledge attached by the catalog: a proof of inseparability that
/// does not follow from the spectra alone.
struct ProvenanceNote {
    bool excluded = false;
    std::string text;
};

/// Build the report from the spectra; `extra` merges in catalog-backed
/// evidence. NPT on any cut always sets b_int_excluded (PPT is necessary
/// for separability across that cut).
ClassificationReport classify(const Operator& rho, double tol = 1e-10,
                              const std::optional<ProvenanceNote>& extra = std::nullopt);

std::string render_text(const ClassificationReport& r);
std::string render_json(const ClassificationReport& r);

/// CSV rows "b,lmin_A,lmin_B,lmin_C" with 17 significant digits.
std::string sweep_csv_header();
std::string sweep_csv_row(double b, double la, double lb, double lc);

}  // namespace tristate
