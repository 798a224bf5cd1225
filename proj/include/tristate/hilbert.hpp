#pragma once

#include <array>
#include <string_view>

#include "tristate/matrix.hpp"

namespace tristate {

/// Local dimensions of parties A, B, C. Basis ordering throughout is
/// lexicographic with A slowest: index of |p,q,r> is (p*d2 + q)*d3 + r.
struct PartyDims {
    int d1 = 2, d2 = 2, d3 = 2;

    PartyDims() = default;
    PartyDims(int a, int b, int c);

    int total() const { return d1 * d2 * d3; }
    int dim(int party) const { return party == 0 ? d1 : party == 1 ? d2 : d3; }
    int index(int p, int q, int r) const { return (p * d2 + q) * d3 + r; }

    bool operator==(const PartyDims&) const = default;
};

struct StateVector {
    PartyDims dims;
    Vec amp;
};

struct Operator {
    PartyDims dims;
    ComplexMatrix mat;
};

enum class Party { A = 0, B = 1, C = 2 };
enum class Cut { A_BC = 0, B_CA = 1, C_AB = 2 };

/// The one-party side of a cut: A|BC -> A, B|CA -> B, C|AB -> C.
Party singleton_of(Cut cut);
std::string_view cut_name(Cut cut);

/// Named local kets, stored exactly as defined (unnormalized where the
/// construction writes them unnormalized). Known names: digits "0".."3",
/// "+","-" (d=2, carrying 1/sqrt2), "eta0..2", "xi0..2", "phi0","phi1" (d=4),
/// "S" (all-ones). Throws std::invalid_argument for unknown (name, d) pairs.
Vec ket(std::string_view name, int d);

Vec normalized(std::span<const cx> v);

StateVector tensor3(std::span<const cx> a, std::span<const cx> b, std::span<const cx> c,
                    PartyDims dims);

Operator identity_operator(PartyDims dims);
/// |v><v| / <v|v>
Operator projector(const StateVector& v);

Operator partial_transpose(const Operator& o, Party party);

/// Relabel parties: `to[p]` is the destination slot of party p's index, so
/// to = {1,2,0} sends the role of A to B, B to C, C to A. Trace and spectrum
/// are preserved.
Operator permute_parties(const Operator& o, const std::array<int, 3>& to);

inline constexpr std::array<int, 3> kRoleShiftForward{1, 2, 0};   // A->B, B->C, C->A
inline constexpr std::array<int, 3> kRoleShiftBackward{2, 0, 1};  // A->C, B->A, C->B

/// Bipartite view of an operator across a cut, singleton party first.
struct BipartiteView {
    int d_single = 0;
    int d_pair = 0;
    ComplexMatrix mat;
};

BipartiteView flatten_cut(const Operator& o, Cut cut);
Operator unflatten_cut(const BipartiteView& view, Cut cut, PartyDims dims);

/// Number of nonzero Schmidt coefficients of a pure state across a cut.
int schmidt_rank(const StateVector& v, Cut cut, double tol = 1e-9);

}  // namespace tristate
