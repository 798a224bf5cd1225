#pragma once

#include <string>

#include "tristate/hilbert.hpp"

namespace tristate {

/// State file format: {"dims":[d1,d2,d3],"matrix":[[re,im],...]} with the
/// matrix row-major over the lexicographic basis (A slowest), length
/// (d1*d2*d3)^2. Load validates dimensions and Hermiticity (1e-10).
/// Round-trips are bit-exact for finite values.
Operator load_state(const std::string& path);
void save_state(const Operator& o, const std::string& path);

std::string state_to_json(const Operator& o);
Operator state_from_json(const std::string& text);

}  // namespace tristate
