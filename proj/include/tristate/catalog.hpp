#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tristate/report.hpp"
#include "tristate/upb.hpp"

namespace tristate {

/// One catalog entry: either a density operator (possibly b-parameterized)
/// or a product set usable with `upb verify`.
struct CatalogEntry {
    std::string id;
    PartyDims dims;
    bool needs_b = false;
    bool is_state = false;        // has make_state
    bool is_product_set = false;  // has make_set
    std::string description;
    std::function<Operator(double)> make_state;
    std::function<ProductSet()> make_set;
    /// Catalog-backed inseparability evidence for cmd_check, if any.
    std::function<std::optional<ProvenanceNote>(double b)> provenance;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);
/// Closest id by edit distance, for error messages.
std::string suggest_id(const std::string& id);

}  // namespace tristate
