#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tristate/catalog.hpp"
#include "tristate/report.hpp"
#include "tristate/state_io.hpp"

using namespace tristate;
using nlohmann::json;

namespace {

std::string temp_path(const char* name) {
    return std::string("tristate_test_") + name + ".json";
}

// Run the CLI binary, capture stdout, return exit code.
int run_cli(const std::string& args, std::string* out = nullptr) {
    const std::string out_file = "tristate_cli_out.txt";
    const std::string cmd = std::string(TRISTATE_BIN) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(out_file);
        std::stringstream ss;
        ss << in.rdbuf();
        *out = ss.str();
    }
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

}  // namespace

TEST_CASE("state file round trip is bit exact") {
    const Operator r = rho2_b(0.9);
    const std::string path = temp_path("roundtrip");
    save_state(r, path);
    const Operator back = load_state(path);
    CHECK(back.dims == r.dims);
    REQUIRE(back.mat.n == r.mat.n);
    for (std::size_t i = 0; i < r.mat.a.size(); ++i) CHECK(back.mat.a[i] == r.mat.a[i]);
    std::remove(path.c_str());
}

TEST_CASE("state file validation") {
    // truncated file
    {
        const std::string path = temp_path("truncated");
        std::ofstream(path) << R"({"dims":[2,2,2],"matrix":[[1,0],[0,)";
        CHECK_THROWS_WITH_AS(load_state(path), doctest::Contains("byte"), std::invalid_argument);
        std::remove(path.c_str());
    }
    // dims / matrix length mismatch
    {
        json j;
        j["dims"] = {2, 2, 3};
        j["matrix"] = json::array();
        for (int i = 0; i < 64; ++i) j["matrix"].push_back({i == 0 ? 1.0 : 0.0, 0.0});
        CHECK_THROWS_AS(state_from_json(j.dump()), std::invalid_argument);
    }
    // non-Hermitian beyond tolerance
    {
        json j;
        j["dims"] = {2, 2, 2};
        j["matrix"] = json::array();
        for (int i = 0; i < 64; ++i) j["matrix"].push_back({0.0, 0.0});
        j["matrix"][1] = {0.5, 0.0};  // (0,1) without matching (1,0)
        CHECK_THROWS_AS(state_from_json(j.dump()), std::invalid_argument);
    }
    CHECK_THROWS_AS(load_state("definitely_missing_file.json"), std::invalid_argument);
}

TEST_CASE("classification report JSON schema") {
    const ClassificationReport r = classify(rho3_8());
    const json j = json::parse(render_json(r));
    REQUIRE(j.contains("dims"));
    REQUIRE(j.contains("trace"));
    REQUIRE(j.contains("state_rank"));
    REQUIRE(j.contains("cuts"));
    REQUIRE(j.contains("p_int_evidence"));
    REQUIRE(j.contains("b_int_excluded"));
    REQUIRE(j.contains("provenance"));
    for (const char* cut : {"A_BC", "B_CA", "C_AB"}) {
        REQUIRE(j["cuts"].contains(cut));
        CHECK(j["cuts"][cut].contains("lmin"));
        CHECK(j["cuts"][cut].contains("ppt"));
        CHECK(j["cuts"][cut].contains("pt_rank"));
    }
    CHECK(j["dims"] == json({3, 3, 3}));
    CHECK(j["state_rank"] == 8);
    CHECK(j["p_int_evidence"] == true);
}

TEST_CASE("classify semantics") {
    // rho3-8 with catalog provenance: PPT everywhere, excluded from B^int
    const CatalogEntry* e = find_entry("rho3-8");
    REQUIRE(e);
    const ClassificationReport r = classify(e->make_state(0.0), 1e-10, e->provenance(0.0));
    CHECK(r.p_int_evidence);
    CHECK(r.b_int_excluded);
    CHECK(r.provenance.find("UPB") != std::string::npos);

    // chi: NPT across A|BC forces exclusion with no catalog help
    const ClassificationReport rc = classify(chi());
    CHECK(!rc.p_int_evidence);
    CHECK(rc.b_int_excluded);
    CHECK(rc.provenance.find("NPT") != std::string::npos);

    // maximally mixed: no claims
    const Operator mixed{PartyDims(2, 2, 2), (1.0 / 8.0) * ComplexMatrix::identity(8)};
    const ClassificationReport rm = classify(mixed);
    CHECK(rm.p_int_evidence);
    CHECK(!rm.b_int_excluded);
    CHECK(rm.provenance == "none");
}

TEST_CASE("CSV formatting survives a parse round trip") {
    CHECK(sweep_csv_header() == "b,lmin_A,lmin_B,lmin_C");
    const double vals[4] = {0.123456789012345678, -3.0303620283112421e-05, 1.0 / 3.0, -0.25};
    const std::string row = sweep_csv_row(vals[0], vals[1], vals[2], vals[3]);
    std::stringstream ss(row);
    std::string field;
    for (int i = 0; i < 4; ++i) {
        REQUIRE(std::getline(ss, field, ','));
        CHECK(std::stod(field) == vals[i]);
    }
}

TEST_CASE("catalog lookups") {
    CHECK(find_entry("rho2") != nullptr);
    CHECK(find_entry("rho2")->needs_b);
    CHECK(find_entry("upb3")->is_product_set);
    CHECK(find_entry("bogus") == nullptr);
    CHECK(suggest_id("rho-2") == "rho2");
    CHECK(suggest_id("shifs") == "shifts");
}

TEST_CASE("CLI: catalog lists the identifiers") {
    std::string out;
    CHECK(run_cli("catalog", &out) == 0);
    CHECK(out.find("rho3-8 (3,3,3)") != std::string::npos);
    CHECK(out.find("rho2 (2,2,2), parameter b") != std::string::npos);
    for (const char* id : {"shifts", "rho-su", "upb3", "upb4", "rho4-8", "chi", "sigma", "eta"})
        CHECK(out.find(id) != std::string::npos);
}

TEST_CASE("CLI: check json output") {
    std::string out;
    CHECK(run_cli("check rho2 --b 0.9 --format json", &out) == 0);
    const json j = json::parse(out);
    CHECK(j["p_int_evidence"] == true);
    CHECK(j["cuts"]["B_CA"]["ppt"] == true);
    CHECK(j["provenance"].get<std::string>().find("range criterion") != std::string::npos);

    CHECK(run_cli("check rho2 --b 0.5 --format json", &out) == 0);
    const json j5 = json::parse(out);
    CHECK(j5["cuts"]["A_BC"]["ppt"] == true);
    CHECK(j5["cuts"]["B_CA"]["ppt"] == false);
    CHECK(j5["cuts"]["C_AB"]["ppt"] == false);
    CHECK(j5["b_int_excluded"] == true);
}

TEST_CASE("CLI: invalid inputs exit with code 2") {
    std::string out;
    CHECK(run_cli("check upb3", &out) == 2);              // product set, not a state
    CHECK(run_cli("check nosuchthing", &out) == 2);       // unknown id
    CHECK(out.find("did you mean") != std::string::npos);
    CHECK(run_cli("check rho2", &out) == 2);              // missing --b
    CHECK(run_cli("check chi --b 2.0", &out) == 0);       // b ignored for chi
    CHECK(run_cli("threshold rho2 --party X", &out) == 2);
    CHECK(run_cli("sweep rho2 --from 0 --to 1 --steps 0", &out) == 2);
    CHECK(run_cli("definitely-not-a-command", &out) == 2);
}

TEST_CASE("CLI: threshold") {
    std::string out;
    CHECK(run_cli("threshold rho2 --party B", &out) == 0);
    CHECK(out.find("b* = 0.8173") != std::string::npos);
    CHECK(run_cli("threshold rho2 --party A", &out) == 0);
    CHECK(out.find("b* = 0.3597") != std::string::npos);
    CHECK(run_cli("threshold sigma --party A", &out) == 0);
    CHECK(out.find("no sign change") != std::string::npos);
}

TEST_CASE("CLI: sweep matches check at the same b") {
    std::string out;
    CHECK(run_cli("sweep rho2 --from 0.9 --to 0.9 --steps 1", &out) == 0);
    std::stringstream ss(out);
    std::string header, row;
    REQUIRE(std::getline(ss, header));
    CHECK(header == "b,lmin_A,lmin_B,lmin_C");
    REQUIRE(std::getline(ss, row));
    std::stringstream rs(row);
    std::string field;
    double vals[4];
    for (int i = 0; i < 4; ++i) {
        REQUIRE(std::getline(rs, field, ','));
        vals[i] = std::stod(field);
    }
    CHECK(vals[0] == 0.9);

    std::string check_out;
    CHECK(run_cli("check rho2 --b 0.9 --format json", &check_out) == 0);
    const json j = json::parse(check_out);
    CHECK(std::abs(vals[1] - j["cuts"]["A_BC"]["lmin"].get<double>()) <= 1e-12);
    CHECK(std::abs(vals[2] - j["cuts"]["B_CA"]["lmin"].get<double>()) <= 1e-12);
    CHECK(std::abs(vals[3] - j["cuts"]["C_AB"]["lmin"].get<double>()) <= 1e-12);
}

TEST_CASE("CLI: upb verify") {
    std::string out;
    CHECK(run_cli("upb verify upb3", &out) == 0);
    CHECK(out.find("members: 19") != std::string::npos);
    CHECK(out.find("orthogonal: yes") != std::string::npos);
    CHECK(out.find("unextendible: yes") != std::string::npos);
    CHECK(out.find("complement dim: 8") != std::string::npos);

    CHECK(run_cli("upb verify shifts", &out) == 0);
    CHECK(out.find("complement dim: 4") != std::string::npos);

    CHECK(run_cli("upb verify topb3", &out) == 0);
    CHECK(out.find("complement dim: 0") != std::string::npos);

    CHECK(run_cli("upb verify rho2", &out) == 2);
}

TEST_CASE("CLI: check accepts a state file") {
    const std::string path = temp_path("cli_file");
    save_state(rho_su(), path);
    std::string out;
    CHECK(run_cli("check " + path + " --format json", &out) == 0);
    const json j = json::parse(out);
    CHECK(j["state_rank"] == 4);
    CHECK(j["p_int_evidence"] == true);
    std::remove(path.c_str());

    std::ofstream bad("tristate_bad.json");
    bad << "{not json";
    bad.close();
    CHECK(run_cli("check tristate_bad.json", &out) == 2);
    CHECK(out.find("byte") != std::string::npos);
    std::remove("tristate_bad.json");
}

TEST_CASE("CLI: non-PSD input is rejected as not a state") {
    Operator o{PartyDims(2, 2, 2), ComplexMatrix::identity(8)};
    o.mat.at(7, 7) = -0.1;
    const std::string path = temp_path("nonpsd");
    save_state(o, path);
    std::string out;
    CHECK(run_cli("check " + path, &out) == 2);
    CHECK(out.find("not a state") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("CLI: TRISTATE_TOL is honored") {
    // An absurdly loose tolerance flips NPT verdicts to PPT.
    std::string out;
    const std::string cmd = std::string("TRISTATE_TOL=1.0 ") + TRISTATE_BIN +
                            " check chi --format json > tristate_tol_out.txt 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in("tristate_tol_out.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    const json j = json::parse(ss.str());
    CHECK(j["cuts"]["A_BC"]["ppt"] == true);
    std::remove("tristate_tol_out.txt");
}
