#include "tristate/upb.hpp"

#include <stdexcept>

#include "tristate/eig.hpp"
#include "tristate/subspace.hpp"

namespace tristate {

ProductSet make_product_set(PartyDims dims, std::span<const std::array<Vec, 3>> factors) {
    ProductSet set{dims, {}};
    set.members.reserve(factors.size());
    for (const auto& f : factors) {
        ProductMember m;
        m.factor = f;
        m.assembled = tensor3(f[0], f[1], f[2], dims);
        set.members.push_back(std::move(m));
    }
    return set;
}

OrthogonalityCheck verify_mutual_orthogonality(const ProductSet& set, double tol) {
    OrthogonalityCheck r;
    std::vector<Vec> norm;
    norm.reserve(set.members.size());
    for (const auto& m : set.members) norm.push_back(normalized(m.assembled.amp));
    for (std::size_t i = 0; i < norm.size(); ++i)
        for (std::size_t j = i + 1; j < norm.size(); ++j)
            r.max_offdiag = std::max(r.max_offdiag, std::abs(inner(norm[i], norm[j])));
    r.orthogonal = r.max_offdiag <= tol;
    return r;
}

namespace {

constexpr double kInSpanTol = 1e-9;

struct PartitionSearch {
    const ProductSet& set;
    std::array<std::vector<Vec>, 3> basis;  // accumulated orthonormal local spans
    std::array<int, 3> local_dim;
    std::vector<int> assignment;
    std::array<std::vector<Vec>, 3> locals_of;  // normalized per-party factors

    explicit PartitionSearch(const ProductSet& s) : set(s) {
        local_dim = {s.dims.d1, s.dims.d2, s.dims.d3};
        assignment.assign(s.members.size(), -1);
        for (int p = 0; p < 3; ++p) {
            locals_of[p].reserve(s.members.size());
            for (const auto& m : s.members) locals_of[p].push_back(normalized(m.factor[p]));
        }
    }

    bool in_span(int member, int p) const {
        return residual_outside_span(locals_of[p][member], basis[p]) <= kInSpanTol;
    }

    // True once a full assignment is found (stored in `assignment`).
    bool search(std::size_t i) {
        if (i == set.members.size()) return true;
        // A member already inside some party's span adds nothing there; taking
        // that placement never loses a feasible completion, so don't branch.
        for (int p = 0; p < 3; ++p) {
            if (in_span(static_cast<int>(i), p)) {
                assignment[i] = p;
                if (search(i + 1)) return true;
                assignment[i] = -1;
                return false;
            }
        }
        for (int p = 0; p < 3; ++p) {
            if (static_cast<int>(basis[p].size()) + 1 >= local_dim[p]) continue;  // would fill
            Vec w = locals_of[p][i];
            for (const Vec& b : basis[p]) {
                const cx c = inner(b, w);
                for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * b[k];
            }
            const double nw = norm2(w);
            for (cx& z : w) z /= nw;
            basis[p].push_back(std::move(w));
            assignment[i] = p;
            if (search(i + 1)) return true;
            assignment[i] = -1;
            basis[p].pop_back();
        }
        return false;
    }
};

// Any unit vector orthogonal to the given (orthonormal) local span.
Vec orthogonal_completion(const std::vector<Vec>& basis, int d) {
    for (int k = 0; k < d; ++k) {
        Vec e(static_cast<std::size_t>(d));
        e[k] = 1.0;
        for (const Vec& b : basis) {
            const cx c = inner(b, e);
            for (int i = 0; i < d; ++i) e[i] -= c * b[i];
        }
        const double ne = norm2(e);
        if (ne > 1e-6) {
            for (cx& z : e) z /= ne;
            return e;
        }
    }
    throw std::runtime_error("orthogonal_completion: span is already full");
}

UpbVerdict finish_verdict(const ProductSet& set, bool extendible,
                          const std::vector<int>* assignment,
                          const std::array<std::vector<Vec>, 3>* basis) {
    UpbVerdict v;
    const auto orth = verify_mutual_orthogonality(set, 1e-10);
    v.is_orthogonal = orth.orthogonal;
    v.complement_dim = v.is_orthogonal ? set.dims.total() - set.size() : 0;
    v.is_unextendible = !extendible;
    if (extendible && assignment) {
        v.witness_assignment = *assignment;
        if (basis) {
            std::array<Vec, 3> ext;
            const int ld[3] = {set.dims.d1, set.dims.d2, set.dims.d3};
            for (int p = 0; p < 3; ++p) ext[p] = orthogonal_completion((*basis)[p], ld[p]);
            v.witness_extension = ext;
        }
    }
    return v;
}

}  // namespace

UpbVerdict verify_unextendible(const ProductSet& set) {
    if (set.members.empty()) {
        // The empty set is extended by any product vector.
        UpbVerdict v;
        v.is_orthogonal = true;
        v.complement_dim = set.dims.total();
        v.is_unextendible = false;
        v.witness_assignment = std::vector<int>{};
        std::array<std::vector<Vec>, 3> empty_basis;
        v.witness_extension = std::array<Vec, 3>{
            orthogonal_completion(empty_basis[0], set.dims.d1),
            orthogonal_completion(empty_basis[1], set.dims.d2),
            orthogonal_completion(empty_basis[2], set.dims.d3)};
        return v;
    }
    PartitionSearch ps(set);
    const bool extendible = ps.search(0);
    return finish_verdict(set, extendible, &ps.assignment, &ps.basis);
}

UpbVerdict verify_unextendible_exhaustive(const ProductSet& set) {
    const int n = set.size();
    const int ld[3] = {set.dims.d1, set.dims.d2, set.dims.d3};
    std::array<std::vector<Vec>, 3> locals_of;
    for (int p = 0; p < 3; ++p)
        for (const auto& m : set.members) locals_of[p].push_back(normalized(m.factor[p]));

    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    std::vector<int> assign(n);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n; ++i) {
            assign[i] = static_cast<int>(c % 3);
            c /= 3;
        }
        bool ok = true;
        std::array<std::vector<Vec>, 3> spans;
        for (int p = 0; p < 3 && ok; ++p) {
            std::vector<Vec> vs;
            for (int i = 0; i < n; ++i)
                if (assign[i] == p) vs.push_back(locals_of[p][i]);
            spans[p] = orthonormal_span(vs, 1e-9);
            if (static_cast<int>(spans[p].size()) >= ld[p]) ok = false;
        }
        if (ok) return finish_verdict(set, true, &assign, &spans);
    }
    return finish_verdict(set, false, nullptr, nullptr);
}

Operator complement_state(const ProductSet& set) {
    const auto orth = verify_mutual_orthogonality(set, 1e-10);
    if (!orth.orthogonal)
        throw std::invalid_argument("complement_state: set is not mutually orthogonal");
    const int dim = set.dims.total();
    const int k = dim - set.size();
    if (k <= 0) throw std::invalid_argument("complement_state: set is complete, zero complement");
    ComplexMatrix m = ComplexMatrix::identity(dim);
    for (const auto& mem : set.members) m = m - outer(normalized(mem.assembled.amp));
    return {set.dims, (1.0 / k) * m};
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

ProductSet shifts_upb() {
    const PartyDims d(2, 2, 2);
    const std::array<std::array<Vec, 3>, 4> f{{
        {ket("0", 2), ket("1", 2), ket("+", 2)},
        {ket("1", 2), ket("+", 2), ket("0", 2)},
        {ket("+", 2), ket("0", 2), ket("1", 2)},
        {ket("-", 2), ket("-", 2), ket("-", 2)},
    }};
    return make_product_set(d, f);
}

std::vector<StateVector> shifts_completion_a_bc() {
    const PartyDims d(2, 2, 2);
    // Two-qubit BC states a = |1,+>, b = |+,0>, c = |0,1>, d = |-,->.
    const auto pair2 = [](std::string_view x, std::string_view y) {
        const Vec vx = ket(x, 2), vy = ket(y, 2);
        Vec r(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i * 2 + j] = vx[i] * vy[j];
        return r;
    };
    const Vec a = pair2("1", "+"), b = pair2("+", "0"), c = pair2("0", "1"), e = pair2("-", "-");
    const Vec ap = orth_in_2d_span(a, b), bp = orth_in_2d_span(b, a);
    const Vec cp = orth_in_2d_span(c, e), ep = orth_in_2d_span(e, c);

    const auto assemble = [&](std::string_view head, const Vec& tail) {
        const Vec h = ket(head, 2);
        StateVector s{d, Vec(8)};
        for (int p = 0; p < 2; ++p)
            for (int k = 0; k < 4; ++k) s.amp[p * 4 + k] = h[p] * tail[k];
        return s;
    };
    return {assemble("0", ap), assemble("1", bp), assemble("+", cp), assemble("-", ep)};
}

Operator rho_su() { return complement_state(shifts_upb()); }

namespace {

// The six twisted blocks share one shape: a fixed basis ket on one party and
// eta/xi sweeps on the other two. `pattern[l]` lists the three factor names
// with placeholders E (eta_i) and X (xi_j).
struct BlockPattern {
    const char* slot[3];
};

ProductSet twisted_opb(int d, std::span<const BlockPattern> blocks, std::span<const int> b0_keys,
                       bool with_phi_block, int ij_count) {
    std::vector<std::array<Vec, 3>> factors;
    for (int k : b0_keys) {
        const std::string key(1, static_cast<char>('0' + k));
        factors.push_back({ket(key, d), ket(key, d), ket(key, d)});
    }
    if (with_phi_block) {
        for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m)
                for (int p = 0; p < 2; ++p)
                    factors.push_back({ket(l ? "phi1" : "phi0", d), ket(m ? "phi1" : "phi0", d),
                                       ket(p ? "phi1" : "phi0", d)});
    }
    for (const auto& blk : blocks) {
        for (int i = 0; i < ij_count; ++i)
            for (int j = 0; j < ij_count; ++j) {
                std::array<Vec, 3> f;
                for (int s = 0; s < 3; ++s) {
                    const std::string_view name = blk.slot[s];
                    if (name == "E")
                        f[s] = ket(std::string("eta") + static_cast<char>('0' + i), d);
                    else if (name == "X")
                        f[s] = ket(std::string("xi") + static_cast<char>('0' + j), d);
                    else
                        f[s] = ket(name, d);
                }
                factors.push_back(std::move(f));
            }
    }
    return make_product_set(PartyDims(d, d, d), factors);
}

constexpr BlockPattern kBlocks3[6] = {
    {{"0", "E", "X"}}, {{"E", "2", "X"}}, {{"2", "X", "E"}},
    {{"E", "X", "0"}}, {{"X", "0", "E"}}, {{"X", "E", "2"}},
};

constexpr BlockPattern kBlocks4[6] = {
    {{"0", "E", "X"}}, {{"E", "3", "X"}}, {{"X", "0", "E"}},
    {{"X", "E", "3"}}, {{"3", "X", "E"}}, {{"E", "X", "0"}},
};

ProductSet drop_psi00_add_s(const ProductSet& full, int d, int b0_count, int ij_count) {
    // Keep block members with (i,j) != (0,0) (and (l,m,p) != (0,0,0) for the
    // phi block), drop the diagonal |k,k,k> states, append |S>.
    std::vector<std::array<Vec, 3>> factors;
    const int phi_count = (d == 4) ? 8 : 0;
    const int per_block = ij_count * ij_count;
    const int n = full.size();
    for (int idx = b0_count + phi_count; idx < n; ++idx) {
        const int within = (idx - b0_count - phi_count) % per_block;
        if (within == 0) continue;  // (i,j) == (0,0)
        factors.push_back(full.members[idx].factor);
    }
    if (phi_count > 0)
        for (int idx = b0_count; idx < b0_count + phi_count; ++idx) {
            if (idx == b0_count) continue;  // (l,m,p) == (0,0,0)
            factors.push_back(full.members[idx].factor);
        }
    factors.push_back({ket("S", d), ket("S", d), ket("S", d)});
    return make_product_set(PartyDims(d, d, d), factors);
}

}  // namespace

ProductSet topb3() {
    const int b0[] = {0, 1, 2};
    return twisted_opb(3, kBlocks3, b0, false, 2);
}

ProductSet upb3() { return drop_psi00_add_s(topb3(), 3, 3, 2); }

Operator rho3_8() { return complement_state(upb3()); }

std::vector<StateVector> biseparable_quad3() {
    const PartyDims d(3, 3, 3);
    const auto psi00 = [&](int l) {
        const auto& blk = kBlocks3[l - 1];
        std::array<Vec, 3> f;
        for (int s = 0; s < 3; ++s) {
            const std::string_view name = blk.slot[s];
            f[s] = (name == "E") ? ket("eta0", 3) : (name == "X") ? ket("xi0", 3)
                                                                  : ket(name, 3);
        }
        return tensor3(f[0], f[1], f[2], d);
    };
    const auto kkk = [&](int k) {
        const std::string key(1, static_cast<char>('0' + k));
        return tensor3(ket(key, 3), ket(key, 3), ket(key, 3), d);
    };
    const auto sub = [&](StateVector x, const StateVector& y, double scale_x) {
        for (std::size_t i = 0; i < x.amp.size(); ++i) x.amp[i] = scale_x * x.amp[i] - y.amp[i];
        return x;
    };
    return {sub(psi00(2), psi00(4), 1.0), sub(psi00(5), psi00(6), 1.0),
            sub(kkk(0), psi00(1), 4.0), sub(kkk(2), psi00(3), 4.0)};
}

ProductSet topb4() {
    const int b0[] = {0, 3};
    return twisted_opb(4, kBlocks4, b0, true, 3);
}

ProductSet upb4() { return drop_psi00_add_s(topb4(), 4, 2, 3); }

Operator rho4_8() { return complement_state(upb4()); }

}  // namespace tristate
