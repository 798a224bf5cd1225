#include "tristate/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "tristate/eig.hpp"

namespace tristate {

PartyDims::PartyDims(int a, int b, int c) : d1(a), d2(b), d3(c) {
    if (a < 2 || b < 2 || c < 2)
        throw std::invalid_argument("PartyDims: local dimensions must be >= 2");
}

Party singleton_of(Cut cut) { return static_cast<Party>(static_cast<int>(cut)); }

std::string_view cut_name(Cut cut) {
    switch (cut) {
        case Cut::A_BC: return "A|BC";
        case Cut::B_CA: return "B|CA";
        case Cut::C_AB: return "C|AB";
    }
    return "?";
}

Vec ket(std::string_view name, int d) {
    const auto bad = [&] {
        return std::invalid_argument("ket: unknown state \"" + std::string(name) +
                                     "\" for local dimension " + std::to_string(d));
    };
    Vec v(static_cast<std::size_t>(d));
    if (name.size() == 1 && name[0] >= '0' && name[0] <= '9') {
        const int k = name[0] - '0';
        if (k >= d) throw bad();
        v[k] = 1.0;
        return v;
    }
    if (name == "+" || name == "-") {
        if (d != 2) throw bad();
        const double s = 1.0 / std::sqrt(2.0);
        v[0] = s;
        v[1] = (name == "+") ? s : -s;
        return v;
    }
    if (name == "S") {
        for (auto& z : v) z = 1.0;
        return v;
    }
    if (d == 3) {
        if (name == "eta0") { v = {1, 1, 0}; return v; }
        if (name == "eta1") { v = {1, -1, 0}; return v; }
        if (name == "xi0") { v = {0, 1, 1}; return v; }
        if (name == "xi1") { v = {0, 1, -1}; return v; }
    }
    if (d == 4) {
        // eta span {0,1,2}, xi span {1,2,3}; integer orthogonal completions.
        if (name == "eta0") { v = {1, 1, 1, 0}; return v; }
        if (name == "eta1") { v = {1, -1, 0, 0}; return v; }
        if (name == "eta2") { v = {1, 1, -2, 0}; return v; }
        if (name == "xi0") { v = {0, 1, 1, 1}; return v; }
        if (name == "xi1") { v = {0, 1, -1, 0}; return v; }
        if (name == "xi2") { v = {0, 1, 1, -2}; return v; }
        if (name == "phi0") { v = {0, 1, 1, 0}; return v; }
        if (name == "phi1") { v = {0, 1, -1, 0}; return v; }
    }
    throw bad();
}

Vec normalized(std::span<const cx> v) {
    const double n = norm2(v);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    Vec r(v.begin(), v.end());
    for (cx& z : r) z /= n;
    return r;
}

StateVector tensor3(std::span<const cx> a, std::span<const cx> b, std::span<const cx> c,
                    PartyDims dims) {
    if (static_cast<int>(a.size()) != dims.d1 || static_cast<int>(b.size()) != dims.d2 ||
        static_cast<int>(c.size()) != dims.d3)
        throw std::invalid_argument("tensor3: factor length does not match party dimension");
    StateVector s{dims, Vec(static_cast<std::size_t>(dims.total()))};
    for (int p = 0; p < dims.d1; ++p)
        for (int q = 0; q < dims.d2; ++q)
            for (int r = 0; r < dims.d3; ++r)
                s.amp[dims.index(p, q, r)] = a[p] * b[q] * c[r];
    return s;
}

Operator identity_operator(PartyDims dims) {
    return {dims, ComplexMatrix::identity(dims.total())};
}

Operator projector(const StateVector& v) {
    const Vec n = normalized(v.amp);
    return {v.dims, outer(n)};
}

Operator partial_transpose(const Operator& o, Party party) {
    const PartyDims& d = o.dims;
    Operator r{d, ComplexMatrix(d.total())};
    const int which = static_cast<int>(party);
    for (int p = 0; p < d.d1; ++p)
        for (int q = 0; q < d.d2; ++q)
            for (int s = 0; s < d.d3; ++s)
                for (int p2 = 0; p2 < d.d1; ++p2)
                    for (int q2 = 0; q2 < d.d2; ++q2)
                        for (int s2 = 0; s2 < d.d3; ++s2) {
                            int row, col;
                            if (which == 0) {
                                row = d.index(p2, q, s);
                                col = d.index(p, q2, s2);
                            } else if (which == 1) {
                                row = d.index(p, q2, s);
                                col = d.index(p2, q, s2);
                            } else {
                                row = d.index(p, q, s2);
                                col = d.index(p2, q2, s);
                            }
                            r.mat.at(row, col) = o.mat.at(d.index(p, q, s), d.index(p2, q2, s2));
                        }
    return r;
}

Operator permute_parties(const Operator& o, const std::array<int, 3>& to) {
    bool seen[3] = {false, false, false};
    for (int p = 0; p < 3; ++p) {
        if (to[p] < 0 || to[p] > 2) throw std::invalid_argument("permute_parties: bad slot");
        seen[to[p]] = true;
    }
    if (!(seen[0] && seen[1] && seen[2]))
        throw std::invalid_argument("permute_parties: not a permutation");

    const PartyDims& od = o.dims;
    int nd[3];
    const int old_dim[3] = {od.d1, od.d2, od.d3};
    for (int p = 0; p < 3; ++p) nd[to[p]] = old_dim[p];
    const PartyDims dims(nd[0], nd[1], nd[2]);

    Operator r{dims, ComplexMatrix(dims.total())};
    // New multi-index n pulls the old one via o_p = n_{to[p]}.
    for (int n0 = 0; n0 < dims.d1; ++n0)
        for (int n1 = 0; n1 < dims.d2; ++n1)
            for (int n2 = 0; n2 < dims.d3; ++n2)
                for (int m0 = 0; m0 < dims.d1; ++m0)
                    for (int m1 = 0; m1 < dims.d2; ++m1)
                        for (int m2 = 0; m2 < dims.d3; ++m2) {
                            const int nn[3] = {n0, n1, n2};
                            const int mm[3] = {m0, m1, m2};
                            const int orow = od.index(nn[to[0]], nn[to[1]], nn[to[2]]);
                            const int ocol = od.index(mm[to[0]], mm[to[1]], mm[to[2]]);
                            r.mat.at(dims.index(n0, n1, n2), dims.index(m0, m1, m2)) =
                                o.mat.at(orow, ocol);
                        }
    return r;
}

namespace {

// Flattened bipartite index of |p,q,r> across a cut, singleton party first;
// the pair keeps the order written in the cut's name (BC, CA, AB).
int flat_index(PartyDims d, Cut cut, int p, int q, int r) {
    switch (cut) {
        case Cut::A_BC: return p * (d.d2 * d.d3) + (q * d.d3 + r);
        case Cut::B_CA: return q * (d.d3 * d.d1) + (r * d.d1 + p);
        case Cut::C_AB: return r * (d.d1 * d.d2) + (p * d.d2 + q);
    }
    return 0;
}

}  // namespace

BipartiteView flatten_cut(const Operator& o, Cut cut) {
    const PartyDims& d = o.dims;
    BipartiteView v;
    switch (cut) {
        case Cut::A_BC: v.d_single = d.d1; break;
        case Cut::B_CA: v.d_single = d.d2; break;
        case Cut::C_AB: v.d_single = d.d3; break;
    }
    v.d_pair = d.total() / v.d_single;
    v.mat = ComplexMatrix(d.total());
    for (int p = 0; p < d.d1; ++p)
        for (int q = 0; q < d.d2; ++q)
            for (int r = 0; r < d.d3; ++r)
                for (int p2 = 0; p2 < d.d1; ++p2)
                    for (int q2 = 0; q2 < d.d2; ++q2)
                        for (int r2 = 0; r2 < d.d3; ++r2)
                            v.mat.at(flat_index(d, cut, p, q, r), flat_index(d, cut, p2, q2, r2)) =
                                o.mat.at(d.index(p, q, r), d.index(p2, q2, r2));
    return v;
}

Operator unflatten_cut(const BipartiteView& view, Cut cut, PartyDims dims) {
    if (view.mat.n != dims.total())
        throw std::invalid_argument("unflatten_cut: dimension mismatch");
    Operator o{dims, ComplexMatrix(dims.total())};
    for (int p = 0; p < dims.d1; ++p)
        for (int q = 0; q < dims.d2; ++q)
            for (int r = 0; r < dims.d3; ++r)
                for (int p2 = 0; p2 < dims.d1; ++p2)
                    for (int q2 = 0; q2 < dims.d2; ++q2)
                        for (int r2 = 0; r2 < dims.d3; ++r2)
                            o.mat.at(dims.index(p, q, r), dims.index(p2, q2, r2)) =
                                view.mat.at(flat_index(dims, cut, p, q, r),
                                            flat_index(dims, cut, p2, q2, r2));
    return o;
}

int schmidt_rank(const StateVector& v, Cut cut, double tol) {
    const PartyDims& d = v.dims;
    int ds;
    switch (cut) {
        case Cut::A_BC: ds = d.d1; break;
        case Cut::B_CA: ds = d.d2; break;
        default: ds = d.d3; break;
    }
    const int dp = d.total() / ds;
    // Coefficient matrix M (ds x dp); Schmidt coefficients^2 = eigenvalues of M M^dag.
    std::vector<Vec> rows(ds, Vec(dp));
    for (int p = 0; p < d.d1; ++p)
        for (int q = 0; q < d.d2; ++q)
            for (int r = 0; r < d.d3; ++r) {
                const int f = flat_index(d, cut, p, q, r);
                rows[f / dp][f % dp] = v.amp[d.index(p, q, r)];
            }
    ComplexMatrix g(ds);
    for (int i = 0; i < ds; ++i)
        for (int j = 0; j < ds; ++j) g.at(i, j) = inner(rows[j], rows[i]);
    return rank_tol(g, tol);
}

}  // namespace tristate
