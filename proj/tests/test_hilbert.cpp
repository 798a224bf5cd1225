#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tristate/eig.hpp"
#include "tristate/family.hpp"
#include "tristate/hilbert.hpp"

using namespace tristate;

namespace {

Operator random_operator(PartyDims d, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(d.total());
    for (cx& z : m.a) z = cx(g(rng), g(rng));
    return {d, hermitized(m)};
}

}  // namespace

TEST_CASE("named kets") {
    const Vec plus = ket("+", 2);
    CHECK(plus[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(plus[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    const Vec eta1 = ket("eta1", 3);
    CHECK(eta1 == Vec{cx(1), cx(-1), cx(0)});

    const Vec xi0 = ket("xi0", 4);
    CHECK(xi0 == Vec{cx(0), cx(1), cx(1), cx(1)});

    CHECK_THROWS_AS(ket("nope", 2), std::invalid_argument);
    CHECK_THROWS_AS(ket("3", 3), std::invalid_argument);
    CHECK_THROWS_AS(ket("phi0", 3), std::invalid_argument);
}

TEST_CASE("tensor3 indexing, A slowest") {
    const PartyDims d2(2, 2, 2);
    const StateVector v000 = tensor3(ket("0", 2), ket("0", 2), ket("0", 2), d2);
    for (int i = 0; i < 8; ++i) CHECK(v000.amp[i] == (i == 0 ? cx(1) : cx(0)));

    // |0,1,+> lands on indices 2 and 3 with weight 1/sqrt2
    const StateVector s1 = tensor3(ket("0", 2), ket("1", 2), ket("+", 2), d2);
    const double w = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 8; ++i) {
        if (i == 2 || i == 3)
            CHECK(s1.amp[i].real() == doctest::Approx(w));
        else
            CHECK(std::abs(s1.amp[i]) <= 1e-15);
    }

    const PartyDims d3(3, 3, 3);
    const StateVector v222 = tensor3(ket("2", 3), ket("2", 3), ket("2", 3), d3);
    for (int i = 0; i < 27; ++i) CHECK(v222.amp[i] == (i == 26 ? cx(1) : cx(0)));

    CHECK_THROWS_AS(tensor3(ket("0", 2), ket("0", 3), ket("0", 2), d2), std::invalid_argument);
}

TEST_CASE("partial transpose basics") {
    const PartyDims d(2, 2, 2);
    const Operator id{d, (1.0 / 8.0) * ComplexMatrix::identity(8)};
    for (int p = 0; p < 3; ++p)
        CHECK(max_abs_diff(partial_transpose(id, static_cast<Party>(p)).mat, id.mat) == 0.0);

    std::mt19937 rng(2718);
    const Operator o = random_operator(d, rng);
    for (int p = 0; p < 3; ++p) {
        const Party party = static_cast<Party>(p);
        const Operator twice = partial_transpose(partial_transpose(o, party), party);
        CHECK(max_abs_diff(twice.mat, o.mat) == 0.0);  // involution
        // trace and Hermiticity preserved
        const Operator pt = partial_transpose(o, party);
        CHECK(std::abs(trace(pt.mat) - trace(o.mat)) <= 1e-14);
        CHECK(hermiticity_defect(pt.mat) <= 1e-14);
    }

    // commutation across distinct parties, and TA.TB.TC = full transpose
    const Operator ab = partial_transpose(partial_transpose(o, Party::A), Party::B);
    const Operator ba = partial_transpose(partial_transpose(o, Party::B), Party::A);
    CHECK(max_abs_diff(ab.mat, ba.mat) == 0.0);
    const Operator abc = partial_transpose(ab, Party::C);
    CHECK(max_abs_diff(abc.mat, transposed(o.mat)) == 0.0);
}

TEST_CASE("partial transpose on asymmetric dims") {
    std::mt19937 rng(11);
    const PartyDims d(2, 3, 2);
    const Operator o = random_operator(d, rng);
    const Operator tb = partial_transpose(o, Party::B);
    // spot-check the index rule: row (p,q,r), col (p',q',r') swaps q and q'
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 3; ++q)
            for (int r = 0; r < 2; ++r)
                for (int q2 = 0; q2 < 3; ++q2)
                    CHECK(tb.mat.at(d.index(p, q, r), d.index(p, q2, r)) ==
                          o.mat.at(d.index(p, q2, r), d.index(p, q, r)));
}

TEST_CASE("permute_parties") {
    std::mt19937 rng(5);
    const Operator o = random_operator(PartyDims(2, 2, 2), rng);

    const Operator same = permute_parties(o, {0, 1, 2});
    CHECK(max_abs_diff(same.mat, o.mat) == 0.0);

    const Operator fwd = permute_parties(o, kRoleShiftForward);
    const Spectrum s0 = eig_hermitian(o.mat);
    const Spectrum s1 = eig_hermitian(fwd.mat);
    for (int i = 0; i < 8; ++i)
        CHECK(s0.values[i] == doctest::Approx(s1.values[i]).epsilon(1e-12));

    // forward then backward is the identity relabeling
    const Operator round = permute_parties(fwd, kRoleShiftBackward);
    CHECK(max_abs_diff(round.mat, o.mat) == 0.0);

    CHECK_THROWS_AS(permute_parties(o, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cyclic permutation maps the Shifts projector sum onto itself") {
    // The Shifts construction is cyclic: S1 -> S2 -> S3 under A->B->C->A,
    // and S4 is symmetric, so the summed projector is invariant.
    const PartyDims d(2, 2, 2);
    const auto t3 = [&](const char* a, const char* b, const char* c) {
        return tensor3(ket(a, 2), ket(b, 2), ket(c, 2), d);
    };
    const StateVector s[4] = {t3("0", "1", "+"), t3("1", "+", "0"), t3("+", "0", "1"),
                              t3("-", "-", "-")};
    ComplexMatrix sum(8);
    for (const auto& v : s) sum = sum + outer(normalized(v.amp));
    const Operator op{d, sum};
    const Operator cycled = permute_parties(op, kRoleShiftForward);
    CHECK(max_abs_diff(cycled.mat, op.mat) <= 1e-14);
}

TEST_CASE("sigma permuted copies keep the spectrum") {
    const Operator s = sigma_b(0.37);
    const Operator bca = permute_parties(s, kRoleShiftForward);
    const Spectrum sp0 = eig_hermitian(s.mat);
    const Spectrum sp1 = eig_hermitian(bca.mat);
    for (int i = 0; i < 8; ++i)
        CHECK(sp0.values[i] == doctest::Approx(sp1.values[i]).epsilon(1e-12));
}

TEST_CASE("flatten and unflatten are inverse") {
    std::mt19937 rng(23);
    for (PartyDims d : {PartyDims(2, 2, 2), PartyDims(3, 3, 3), PartyDims(2, 3, 4)}) {
        const Operator o = random_operator(d, rng);
        for (Cut cut : {Cut::A_BC, Cut::B_CA, Cut::C_AB}) {
            const BipartiteView v = flatten_cut(o, cut);
            CHECK(v.d_single * v.d_pair == d.total());
            const Operator back = unflatten_cut(v, cut, d);
            CHECK(max_abs_diff(back.mat, o.mat) == 0.0);
        }
    }
    // singleton party first: (2,2,2) across A|BC is a 2x4 view
    const BipartiteView v = flatten_cut(random_operator(PartyDims(2, 2, 2), rng), Cut::A_BC);
    CHECK(v.d_single == 2);
    CHECK(v.d_pair == 4);
    const BipartiteView w = flatten_cut(random_operator(PartyDims(3, 3, 3), rng), Cut::C_AB);
    CHECK(w.d_single == 3);
    CHECK(w.d_pair == 9);
}

TEST_CASE("partial transpose on the singleton commutes with the flattened view") {
    std::mt19937 rng(77);
    const PartyDims d(2, 3, 2);
    const Operator o = random_operator(d, rng);
    for (Cut cut : {Cut::A_BC, Cut::B_CA, Cut::C_AB}) {
        const Party p = singleton_of(cut);
        const BipartiteView before = flatten_cut(partial_transpose(o, p), cut);
        // transpose the first tensor factor of the flattened matrix directly
        const BipartiteView v = flatten_cut(o, cut);
        ComplexMatrix t(v.mat.n);
        for (int s = 0; s < v.d_single; ++s)
            for (int q = 0; q < v.d_pair; ++q)
                for (int s2 = 0; s2 < v.d_single; ++s2)
                    for (int q2 = 0; q2 < v.d_pair; ++q2)
                        t.at(s2 * v.d_pair + q, s * v.d_pair + q2) =
                            v.mat.at(s * v.d_pair + q, s2 * v.d_pair + q2);
        CHECK(max_abs_diff(before.mat, t) == 0.0);
    }
}

TEST_CASE("schmidt rank") {
    const PartyDims d(2, 2, 2);
    const StateVector prod = tensor3(ket("+", 2), ket("1", 2), ket("-", 2), d);
    for (Cut cut : {Cut::A_BC, Cut::B_CA, Cut::C_AB}) CHECK(schmidt_rank(prod, cut) == 1);

    StateVector ghz{d, Vec(8)};
    ghz.amp[0] = ghz.amp[7] = 1.0 / std::sqrt(2.0);
    for (Cut cut : {Cut::A_BC, Cut::B_CA, Cut::C_AB}) CHECK(schmidt_rank(ghz, cut) == 2);

    // product across A|BC but entangled in BC
    StateVector bc{d, Vec(8)};
    bc.amp[0] = bc.amp[3] = 1.0 / std::sqrt(2.0);  // |0>(|00>+|11>)
    CHECK(schmidt_rank(bc, Cut::A_BC) == 1);
    CHECK(schmidt_rank(bc, Cut::B_CA) == 2);
    CHECK(schmidt_rank(bc, Cut::C_AB) == 2);
}

TEST_CASE("PartyDims validation") {
    CHECK_THROWS_AS(PartyDims(1, 2, 2), std::invalid_argument);
    CHECK(PartyDims(2, 3, 4).total() == 24);
    CHECK(PartyDims(2, 3, 4).index(1, 2, 3) == (1 * 3 + 2) * 4 + 3);
}
