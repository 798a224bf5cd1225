// tristate: build, classify and sweep the tripartite state catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tristate/catalog.hpp"
#include "tristate/eig.hpp"
#include "tristate/report.hpp"
#include "tristate/state_io.hpp"
#include "tristate/sweep.hpp"
#include "tristate/upb.hpp"

namespace {

using namespace tristate;

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

double default_tol() {
    if (const char* env = std::getenv("TRISTATE_TOL")) {
        try {
            return std::stod(env);
        } catch (...) {
            throw std::invalid_argument("TRISTATE_TOL is not a number: " + std::string(env));
        }
    }
    return 1e-10;
}

int cmd_catalog() {
    for (const auto& e : catalog()) {
        std::cout << e.id << " (" << e.dims.d1 << "," << e.dims.d2 << "," << e.dims.d3 << ")";
        if (e.needs_b) std::cout << ", parameter b";
        if (e.is_product_set) std::cout << " [product set]";
        std::cout << " - " << e.description << "\n";
    }
    return 0;
}

Operator resolve_state(const std::string& name, std::optional<double> b) {
    if (const CatalogEntry* e = find_entry(name)) {
        if (!e->is_state)
            throw std::invalid_argument("\"" + name + "\" is a product set, not a state; try " +
                                        "`upb verify " + name + "`");
        if (e->needs_b && !b)
            throw std::invalid_argument("state \"" + name + "\" needs --b");
        return e->make_state(b.value_or(0.0));
    }
    // Not a catalog id: treat as a file path if it exists on disk.
    std::ifstream probe(name);
    if (probe.good()) return load_state(name);
    throw std::invalid_argument("unknown state \"" + name + "\"; did you mean \"" +
                                suggest_id(name) + "\"?");
}

int cmd_check(const std::string& name, std::optional<double> b, double tol,
              const std::string& format) {
    const Operator rho = resolve_state(name, b);
    const Spectrum s = eig_hermitian(rho.mat);
    if (s.values.front() < -tol)
        throw std::invalid_argument("input is not a state: lambda_min = " +
                                    std::to_string(s.values.front()));
    std::optional<ProvenanceNote> note;
    if (const CatalogEntry* e = find_entry(name); e && e->provenance)
        note = e->provenance(b.value_or(0.0));
    const ClassificationReport r = classify(rho, tol, note);
    std::cout << (format == "json" ? render_json(r) : render_text(r)) << "\n";
    return 0;
}

int cmd_sweep(const std::string& name, double from, double to, int steps) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw std::invalid_argument("unknown family \"" + name + "\"");
    if (!e->is_state || !e->needs_b)
        throw std::invalid_argument("\"" + name + "\" is not a b-parameterized family");
    if (steps < 1) throw std::invalid_argument("sweep needs at least one step");
    const auto bs = linspace(from, to, steps);
    const auto rows = sweep_parallel(e->make_state, bs);
    std::cout << sweep_csv_header() << "\n";
    for (const SweepRow& r : rows)
        std::cout << sweep_csv_row(r.b, r.lmin_a, r.lmin_b, r.lmin_c) << "\n";
    return 0;
}

int cmd_threshold(const std::string& name, const std::string& party_name, double tol_b) {
    const CatalogEntry* e = find_entry(name);
    if (!e || !e->is_state || !e->needs_b)
        throw std::invalid_argument("\"" + name + "\" is not a b-parameterized family");
    Party party;
    if (party_name == "A")
        party = Party::A;
    else if (party_name == "B")
        party = Party::B;
    else if (party_name == "C")
        party = Party::C;
    else
        throw std::invalid_argument("party must be A, B or C");
    const ThresholdResult r = ppt_threshold(e->make_state, party, 0.0, 1.0, tol_b);
    if (r.found) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f", r.b_star);
        std::cout << "b* = " << buf << "\n";
    } else {
        std::cout << r.note << "\n";
    }
    return 0;
}

int cmd_upb_verify(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw std::invalid_argument("unknown set \"" + name + "\"; did you mean \"" +
                                        suggest_id(name) + "\"?");
    if (!e->is_product_set)
        throw std::invalid_argument("\"" + name + "\" is not a product set; try `check`");
    const ProductSet set = e->make_set();
    const auto orth = verify_mutual_orthogonality(set, 1e-12);
    const UpbVerdict v = verify_unextendible(set);
    std::cout << "members: " << set.size() << "\n";
    std::cout << "orthogonal: " << (orth.orthogonal ? "yes" : "no")
              << " (max off-diagonal " << orth.max_offdiag << ")\n";
    std::cout << "unextendible: " << (v.is_unextendible ? "yes" : "no") << "\n";
    std::cout << "complement dim: " << v.complement_dim << "\n";
    if (v.witness_assignment) {
        std::cout << "witness assignment (member -> party):";
        for (int p : *v.witness_assignment) std::cout << " " << "ABC"[p];
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tripartite state catalog: PPT cuts, UPB checks, sweeps"};
    app.require_subcommand(1);

    auto* c_catalog = app.add_subcommand("catalog", "list catalog identifiers");

    std::string check_state, check_format = "text";
    double check_b = -1.0;
    double tol;
    try {
        tol = default_tol();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    auto* c_check = app.add_subcommand("check", "classify a state across all cuts");
    c_check->add_option("state", check_state, "catalog id or state file path")->required();
    c_check->add_option("--b", check_b, "family parameter in [0,1]");
    c_check->add_option("--tol", tol, "PSD tolerance");
    c_check->add_option("--format", check_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string sweep_id;
    double sweep_from = 0.0, sweep_to = 1.0;
    int sweep_steps = 101;
    auto* c_sweep = app.add_subcommand("sweep", "CSV of lambda_min per cut over b");
    c_sweep->add_option("family", sweep_id, "b-parameterized catalog id")->required();
    c_sweep->add_option("--from", sweep_from, "start of b range")->required();
    c_sweep->add_option("--to", sweep_to, "end of b range")->required();
    c_sweep->add_option("--steps", sweep_steps, "number of rows")->required();

    std::string thr_id, thr_party;
    double thr_tol = 1e-10;
    auto* c_thr = app.add_subcommand("threshold", "bisect the PPT onset of a family");
    c_thr->add_option("family", thr_id, "b-parameterized catalog id")->required();
    c_thr->add_option("--party", thr_party, "A, B or C")->required();
    c_thr->add_option("--tol", thr_tol, "bisection tolerance in b");

    auto* c_upb = app.add_subcommand("upb", "product-set checks");
    c_upb->require_subcommand(1);
    std::string upb_id;
    auto* c_upb_verify = c_upb->add_subcommand("verify", "orthogonality and unextendibility");
    c_upb_verify->add_option("set", upb_id, "product-set catalog id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (c_catalog->parsed()) return cmd_catalog();
        if (c_check->parsed()) {
            std::optional<double> b;
            if (c_check->count("--b")) b = check_b;
            return cmd_check(check_state, b, tol, check_format);
        }
        if (c_sweep->parsed()) return cmd_sweep(sweep_id, sweep_from, sweep_to, sweep_steps);
        if (c_thr->parsed()) return cmd_threshold(thr_id, thr_party, thr_tol);
        if (c_upb->parsed() && c_upb_verify->parsed()) return cmd_upb_verify(upb_id);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
