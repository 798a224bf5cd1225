#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tristate/hilbert.hpp"

namespace tristate {

/// Ordered set of fully product states with the per-party factors retained
/// (unnormalized, exactly as constructed).
struct ProductMember {
    std::array<Vec, 3> factor;
    StateVector assembled;
};

struct ProductSet {
    PartyDims dims;
    std::vector<ProductMember> members;

    int size() const { return static_cast<int>(members.size()); }
};

ProductSet make_product_set(PartyDims dims,
                            std::span<const std::array<Vec, 3>> factors);

struct OrthogonalityCheck {
    bool orthogonal = false;
    double max_offdiag = 0.0;
};

/// Gram matrix of the normalized members against the identity.
OrthogonalityCheck verify_mutual_orthogonality(const ProductSet& set, double tol = 1e-12);

struct UpbVerdict {
    bool is_orthogonal = false;
    bool is_unextendible = false;
    int complement_dim = 0;
    /// Present when extendible: member -> party assignment whose per-party
    /// spans all stay proper, plus one product vector orthogonal to every member.
    std::optional<std::vector<int>> witness_assignment;
    std::optional<std::array<Vec, 3>> witness_extension;
};

/// Partition test for unextendibility: the set is extendible iff the members
/// can be assigned to parties so that every party's assigned local factors
/// span a proper subspace of its local space. Branch-and-bound over
/// assignments in input order; a member already inside some party's
/// accumulated span is placed there greedily (this never loses a feasible
/// completion), so branching only happens on rank-raising members.
UpbVerdict verify_unextendible(const ProductSet& set);

/// Same test by exhaustive enumeration of all 3^n assignments.
/// Test oracle for small sets; no pruning.
UpbVerdict verify_unextendible_exhaustive(const ProductSet& set);

/// Normalized projector onto the orthogonal complement of the set:
/// (I - sum |psi~><psi~|) / (dim - |members|). Requires an orthogonal,
/// incomplete set.
Operator complement_state(const ProductSet& set);

// Catalog constructions.

/// Shifts UPB in (C^2)^x3: |0,1,+>, |1,+,0>, |+,0,1>, |-,-,->.
ProductSet shifts_upb();

/// The four A|BC-product states kappa_1..4 completing the Shifts UPB to an
/// orthonormal basis of C^8. Product across A|BC only, so returned as
/// assembled states rather than a ProductSet.
std::vector<StateVector> shifts_completion_a_bc();

/// rho_SU = (1/4)(I_8 - sum |S_i><S_i|).
Operator rho_su();

/// Twisted orthogonal product basis of (C^3)^x3, 27 members.
ProductSet topb3();
/// 19-member UPB carved from topb3 (drops psi(0,0)_l, adds |S>).
ProductSet upb3();
Operator rho3_8();

/// The four mutually orthogonal A|BC-product states orthogonal to upb3.
std::vector<StateVector> biseparable_quad3();

/// Twisted orthogonal product basis of (C^4)^x3, 64 members.
ProductSet topb4();
/// 56-member UPB carved from topb4.
ProductSet upb4();
Operator rho4_8();

}  // namespace tristate
