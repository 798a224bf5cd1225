#include "tristate/state_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "tristate/matrix.hpp"

namespace tristate {

using nlohmann::json;

std::string state_to_json(const Operator& o) {
    json j;
    j["dims"] = {o.dims.d1, o.dims.d2, o.dims.d3};
    json m = json::array();
    for (const cx& z : o.mat.a) m.push_back({z.real(), z.imag()});
    j["matrix"] = std::move(m);
    return j.dump();
}

Operator state_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte carries the offset of the failure.
        throw std::invalid_argument("state file parse error at byte " + std::to_string(e.byte) +
                                    ": " + e.what());
    }
    if (!j.contains("dims") || !j.contains("matrix"))
        throw std::invalid_argument("state file must contain \"dims\" and \"matrix\"");
    const auto& jd = j["dims"];
    if (!jd.is_array() || jd.size() != 3)
        throw std::invalid_argument("\"dims\" must be an array of three integers");
    const PartyDims dims(jd[0].get<int>(), jd[1].get<int>(), jd[2].get<int>());
    const int n = dims.total();
    const auto& jm = j["matrix"];
    if (!jm.is_array() || static_cast<int>(jm.size()) != n * n)
        throw std::invalid_argument("\"matrix\" length " + std::to_string(jm.size()) +
                                    " does not match dims (expected " + std::to_string(n * n) +
                                    " entries)");
    Operator o{dims, ComplexMatrix(n)};
    for (int k = 0; k < n * n; ++k) {
        const auto& e = jm[k];
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix entry " + std::to_string(k) +
                                        " must be a [re,im] pair");
        o.mat.a[k] = cx(e[0].get<double>(), e[1].get<double>());
    }
    if (!all_finite(o.mat)) throw std::invalid_argument("state file contains non-finite entries");
    const double defect = hermiticity_defect(o.mat);
    if (defect > 1e-10 * std::max(1.0, max_abs(o.mat)))
        throw std::invalid_argument("state matrix is not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    return o;
}

Operator load_state(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return state_from_json(text);
}

void save_state(const Operator& o, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << state_to_json(o) << '\n';
}

}  // namespace tristate
