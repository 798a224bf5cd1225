#include "tristate/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "tristate/eig.hpp"

namespace tristate {

ClassificationReport classify(const Operator& rho, double tol,
                              const std::optional<ProvenanceNote>& extra) {
    ClassificationReport r;
    r.dims = rho.dims;
    r.trace = trace(rho.mat).real();
    const Spectrum s = eig_hermitian(rho.mat);
    r.lmin_overall = s.values.front();
    r.state_rank = rank_tol(s, 1e-9);
    const PptReport p = ppt_report(rho, tol);
    r.cuts = p.cuts;
    r.p_int_evidence = p.all_ppt();

    std::ostringstream prov;
    bool excluded = false;
    std::string npt_cuts;
    for (int c = 0; c < 3; ++c)
        if (!r.cuts[c].ppt) {
            if (!npt_cuts.empty()) npt_cuts += ", ";
            npt_cuts += cut_name(static_cast<Cut>(c));
        }
    if (!npt_cuts.empty()) {
        excluded = true;
        prov << "inseparability proven via NPT (" << npt_cuts
             << "): PPT is necessary for separability across a cut";
    }
    if (extra && extra->excluded) {
        excluded = true;
        if (prov.tellp() > 0) prov << "; ";
        prov << extra->text;
    } else if (extra && !extra->text.empty()) {
        if (prov.tellp() > 0) prov << "; ";
        prov << extra->text;
    }
    r.b_int_excluded = excluded;
    r.provenance = prov.str();
    if (r.provenance.empty()) r.provenance = "none";
    return r;
}

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string render_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "dims: (" << r.dims.d1 << "," << r.dims.d2 << "," << r.dims.d3 << ")\n";
    os << "trace: " << fmt17(r.trace) << "\n";
    os << "lambda_min: " << fmt17(r.lmin_overall) << "\n";
    os << "state rank: " << r.state_rank << "\n";
    static constexpr Cut kCuts[3] = {Cut::A_BC, Cut::B_CA, Cut::C_AB};
    for (int c = 0; c < 3; ++c) {
        const CutReport& cr = r.cuts[c];
        os << "cut " << cut_name(kCuts[c]) << ": lmin(PT) = " << fmt17(cr.lmin) << "  ["
           << (cr.ppt ? "PPT" : "NPT") << "]  PT rank " << cr.pt_rank << "\n";
    }
    os << "P^int evidence (all cuts PPT): " << (r.p_int_evidence ? "yes" : "no") << "\n";
    os << "excluded from B^int: " << (r.b_int_excluded ? "yes" : "no") << "\n";
    os << "provenance: " << r.provenance << "\n";
    return os.str();
}

std::string render_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["dims"] = {r.dims.d1, r.dims.d2, r.dims.d3};
    j["trace"] = r.trace;
    j["state_rank"] = r.state_rank;
    const char* names[3] = {"A_BC", "B_CA", "C_AB"};
    for (int c = 0; c < 3; ++c) {
        j["cuts"][names[c]] = {
            {"lmin", r.cuts[c].lmin}, {"ppt", r.cuts[c].ppt}, {"pt_rank", r.cuts[c].pt_rank}};
    }
    j["p_int_evidence"] = r.p_int_evidence;
    j["b_int_excluded"] = r.b_int_excluded;
    j["provenance"] = r.provenance;
    return j.dump(2);
}

std::string sweep_csv_header() { return "b,lmin_A,lmin_B,lmin_C"; }

std::string sweep_csv_row(double b, double la, double lb, double lc) {
    return fmt17(b) + "," + fmt17(la) + "," + fmt17(lb) + "," + fmt17(lc);
}

}  // namespace tristate
