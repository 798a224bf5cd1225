#include "tristate/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "tristate/family.hpp"

namespace tristate {

namespace {

std::optional<ProvenanceNote> upb_deficit_note(const char* which) {
    ProvenanceNote n;
    n.excluded = true;
    n.text = std::string("inseparability proven via UPB-complement deficit (") + which +
             "): too few cut-separable states are orthogonal to the UPB to span the support";
    return n;
}

std::optional<ProvenanceNote> rho2_range_note(double b) {
    const RangeCriterionVerdict v = range_criterion_rho2(b);
    ProvenanceNote n;
    n.excluded = v.violated;
    std::ostringstream os;
    os << "range criterion (AB|C): violated=" << (v.violated ? "true" : "false")
       << ", witness residual " << v.witness_residual << ", span dim " << v.sampled_span_dim
       << " from " << v.t_samples << " factor samples";
    n.text = os.str();
    return n;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    const auto state = [&](std::string id, PartyDims dims, bool needs_b, std::string desc,
                           std::function<Operator(double)> make,
                           std::function<std::optional<ProvenanceNote>(double)> prov = {}) {
        CatalogEntry e;
        e.id = std::move(id);
        e.dims = dims;
        e.needs_b = needs_b;
        e.is_state = true;
        e.description = std::move(desc);
        e.make_state = std::move(make);
        e.provenance = std::move(prov);
        c.push_back(std::move(e));
    };
    const auto set = [&](std::string id, PartyDims dims, std::string desc,
                         std::function<ProductSet()> make) {
        CatalogEntry e;
        e.id = std::move(id);
        e.dims = dims;
        e.is_product_set = true;
        e.description = std::move(desc);
        e.make_set = std::move(make);
        c.push_back(std::move(e));
    };

    set("shifts", PartyDims(2, 2, 2), "Shifts UPB, 4 members", shifts_upb);
    state("rho-su", PartyDims(2, 2, 2), false,
          "normalized complement of the Shifts UPB; carries an explicit A|BC product decomposition",
          [](double) { return rho_su(); });
    set("topb3", PartyDims(3, 3, 3), "twisted orthogonal product basis, 27 members", topb3);
    set("upb3", PartyDims(3, 3, 3), "19-member UPB carved from topb3", upb3);
    state("rho3-8", PartyDims(3, 3, 3), false,
          "rank-8 complement state of upb3; PPT on all cuts, not biseparable",
          [](double) { return rho3_8(); },
          [](double) { return upb_deficit_note("upb3"); });
    set("topb4", PartyDims(4, 4, 4), "twisted orthogonal product basis, 64 members", topb4);
    set("upb4", PartyDims(4, 4, 4), "56-member UPB carved from topb4", upb4);
    state("rho4-8", PartyDims(4, 4, 4), false,
          "rank-8 complement state of upb4; PPT on all cuts, not biseparable",
          [](double) { return rho4_8(); },
          [](double) { return upb_deficit_note("upb4"); });
    state("chi", PartyDims(2, 2, 2), false, "rank-4 mixture, NPT across A|BC",
          [](double) { return chi(); });
    state("sigma", PartyDims(2, 2, 2), true,
          "Horodecki 2x4 construction as a 3-qubit state; PPT across A|BC only",
          [](double b) { return sigma_b(b); });
    state("eta", PartyDims(2, 2, 2), true, "cyclic symmetrization of sigma",
          [](double b) { return eta_b(b); });
    state("rho2", PartyDims(2, 2, 2), true,
          "rank-lowered symmetrized family; PPT on all cuts for large b",
          [](double b) { return rho2_b(b); },
          [](double b) { return rho2_range_note(b); });
    return c;
}

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

const CatalogEntry* find_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

std::string suggest_id(const std::string& id) {
    int best = 1 << 30;
    std::string who;
    for (const auto& e : catalog()) {
        const int d = edit_distance(id, e.id);
        if (d < best) {
            best = d;
            who = e.id;
        }
    }
    return who;
}

}  // namespace tristate
