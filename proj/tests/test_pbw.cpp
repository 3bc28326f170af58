#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcanon/pbw.hpp"

using namespace qcanon;

namespace {

std::vector<int> w(std::initializer_list<int> one_based) {
    std::vector<int> v;
    for (int i : one_based) v.push_back(i - 1);
    return v;
}

UMinusElement F(int i_one_based) { return UMinusElement::generator(i_one_based - 1); }

struct Fx {
    DynkinDiagram d;
    UqMinusContext minus;
    UqFullContext full;
    PbwContext pbw;
    explicit Fx(const char* type)
        : d(DynkinDiagram::from_string(type)), minus(d), full(d), pbw(minus, full) {}
};

}  // namespace

TEST_CASE("root vectors for the rank-2 word") {
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    const auto& t = fx.pbw.root_vectors(w121);
    REQUIRE(t.vectors.size() == 3);
    CHECK(fx.minus.equal(t.vectors[0], F(1)));
    CHECK(fx.minus.equal(t.vectors[1], F(2) * F(1) - RatFunc::q() * (F(1) * F(2))));
    CHECK(fx.minus.equal(t.vectors[2], F(2)));
    // the other rank-2 word swaps the roles of 1 and 2
    const auto& t2 = fx.pbw.root_vectors(ReducedWord(fx.d, w({2, 1, 2})));
    CHECK(fx.minus.equal(t2.vectors[1], F(1) * F(2) - RatFunc::q() * (F(2) * F(1))));
}

TEST_CASE("root vectors for the worked A3 word") {
    Fx fx("A3");
    ReducedWord rw(fx.d, w({3, 1, 2, 1, 3, 2}));
    const auto& t = fx.pbw.root_vectors(rw);
    UMinusElement fb4 = F(2) * F(3) - RatFunc::q() * (F(3) * F(2));
    CHECK(fx.minus.equal(t.vectors[3], fb4));
    CHECK(fx.minus.equal(t.vectors[2], fb4 * F(1) - RatFunc::q() * (F(1) * fb4)));
    // simple positions carry the plain generators
    CHECK(fx.minus.equal(t.vectors[0], F(3)));
    CHECK(fx.minus.equal(t.vectors[1], F(1)));
    CHECK(fx.minus.equal(t.vectors[5], F(2)));
}

TEST_CASE("root vectors demand a full word") {
    Fx fx("A2");
    CHECK_THROWS_AS(fx.pbw.root_vectors(ReducedWord(fx.d, w({1, 2}))), std::domain_error);
}

TEST_CASE("nonadjacent swap leaves the root-vector set unchanged") {
    Fx fx("A3");
    ReducedWord a(fx.d, w({1, 3, 2, 1, 3, 2}));
    ReducedWord b = apply_braid_move(a, BraidMove{0, BraidMove::Swap2});
    const auto& ta = fx.pbw.root_vectors(a);
    const auto& tb = fx.pbw.root_vectors(b);
    for (int k = 0; k < a.size(); ++k) {
        // find the position of the same root in the other table
        auto it = std::find(tb.betas.begin(), tb.betas.end(), ta.betas[k]);
        REQUIRE(it != tb.betas.end());
        CHECK(fx.minus.equal(ta.vectors[k], tb.vectors[it - tb.betas.begin()]));
    }
}

TEST_CASE("pbw monomials") {
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    CHECK(fx.pbw.pbw_monomial(LusztigData(w121, {0, 0, 0})).terms() ==
          UMinusElement::one().terms());
    CHECK(fx.minus.equal(fx.pbw.pbw_monomial(LusztigData(w121, {0, 1, 0})),
                         F(2) * F(1) - RatFunc::q() * (F(1) * F(2))));
    CHECK(fx.minus.equal(fx.pbw.pbw_monomial(LusztigData(w121, {1, 0, 1})), F(1) * F(2)));
    // divided powers of simple root vectors match the dedicated helper
    CHECK(fx.minus.equal(fx.pbw.pbw_monomial(LusztigData(w121, {3, 0, 0})),
                         divided_power(0, 3)));
    CHECK_THROWS_AS(LusztigData(w121, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(LusztigData(w121, {1, 0, -1}), std::domain_error);
}

TEST_CASE("pbw expansion coordinates") {
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    // F_2 F_1 = F_{beta_2} + q F_1 F_2
    auto coords = fx.pbw.pbw_expand(F(2) * F(1), w121);
    REQUIRE(coords.size() == 2);
    CHECK(coords.at({0, 1, 0}) == RatFunc(1));
    CHECK(coords.at({1, 0, 1}) == RatFunc::q());
    // data count per weight equals the Kostant count
    CHECK(fx.pbw.data_of_weight(w121, {2, 2}).size() == 3);
    CHECK(fx.pbw.data_of_weight(w121, {1, 1}).size() == 2);
}

TEST_CASE("pbw expansion round-trips on random data") {
    for (auto type : {"A2", "A3"}) {
        Fx fx(type);
        ReducedWord w0 = canonical_w0_word(fx.d);
        std::mt19937 rng(41);
        std::uniform_int_distribution<int> expd(0, 2);
        for (int t = 0; t < 6; ++t) {
            std::vector<int> a(w0.size());
            int total = 0;
            for (int& v : a) {
                v = expd(rng);
                total += v;
            }
            if (total == 0 || total > 4) continue;
            LusztigData d(w0, a);
            if (height(d.weight()) > fx.minus.height_bound()) continue;
            auto coords = fx.pbw.pbw_expand(fx.pbw.pbw_monomial(d), w0);
            REQUIRE(coords.size() == 1);
            CHECK(coords.begin()->first == a);
            CHECK(coords.begin()->second == RatFunc(1));
        }
    }
}

TEST_CASE("pbw monomials span each weight space") {
    Fx fx("A3");
    ReducedWord w0 = canonical_w0_word(fx.d);
    for (Coords nu : {Coords{1, 1, 0}, Coords{1, 1, 1}, Coords{2, 1, 1}}) {
        // expansion of every basis word must succeed and reassemble
        for (auto& bw : fx.minus.word_basis(nu).words) {
            UMinusElement x = UMinusElement::term(bw, RatFunc(1));
            auto coords = fx.pbw.pbw_expand(x, w0);
            UMinusElement back;
            for (auto& [a, c] : coords)
                back += fx.pbw.pbw_monomial(LusztigData(w0, a)) * c;
            CHECK(fx.minus.equal(back, x));
        }
    }
}

TEST_CASE("convexity of expansion support") {
    // for j < k the product F_{beta_k} F_{beta_j} only involves data supported
    // on positions j..k
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    const auto& t = fx.pbw.root_vectors(w121);
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
            auto coords = fx.pbw.pbw_expand(t.vectors[k] * t.vectors[j], w121);
            for (auto& [a, c] : coords)
                for (int p = 0; p < 3; ++p)
                    if (p < j || p > k) CHECK(a[p] == 0);
        }
    Fx fx3("A3");
    ReducedWord rw(fx3.d, w({3, 1, 2, 1, 3, 2}));
    const auto& t3 = fx3.pbw.root_vectors(rw);
    for (int j = 0; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
            auto coords = fx3.pbw.pbw_expand(t3.vectors[k] * t3.vectors[j], rw);
            for (auto& [a, c] : coords)
                for (int p = 0; p < 6; ++p)
                    if (p < j || p > k) CHECK(a[p] == 0);
        }
}

TEST_CASE("piecewise-linear bijection formulas") {
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    BraidMove m{0, BraidMove::Braid3};
    CHECK(pl_bijection(m, LusztigData(w121, {2, 0, 1})).a == std::vector<int>{0, 1, 1});
    CHECK(pl_bijection(m, LusztigData(w121, {4, 0, 0})).a == std::vector<int>{0, 0, 4});
    CHECK(pl_bijection(m, LusztigData(w121, {0, 0, 4})).a == std::vector<int>{4, 0, 0});
    // two-term moves just swap
    Fx fx3("A3");
    ReducedWord rw(fx3.d, w({1, 3, 2, 1, 3, 2}));
    auto d2 = pl_bijection(BraidMove{0, BraidMove::Swap2}, LusztigData(rw, {1, 2, 0, 0, 0, 0}));
    CHECK(d2.a == std::vector<int>{2, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(pl_bijection(BraidMove{0, BraidMove::Swap2}, LusztigData(w121, {1, 1, 1})),
                    std::domain_error);
}

TEST_CASE("pl bijection is a weight-preserving involution") {
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    BraidMove m{0, BraidMove::Braid3};
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> expd(0, 4);
    for (int t = 0; t < 30; ++t) {
        std::vector<int> a{expd(rng), expd(rng), expd(rng)};
        LusztigData d(w121, a);
        LusztigData d2 = pl_bijection(m, d);
        CHECK(d2.weight() == d.weight());
        CHECK(pl_bijection(m, d2).a == a);
    }
}

TEST_CASE("transport along Matsumoto paths") {
    Fx fx("A3");
    ReducedWord src(fx.d, w({1, 2, 3, 1, 2, 1}));
    LusztigData d(src, {1, 0, 2, 0, 1, 0});
    CHECK(transport(d, src).a == d.a);
    // path independence: transporting via an intermediate word agrees with
    // transporting directly, for every pair of A3 words
    auto words = all_reduced_words(src);
    std::mt19937 rng(21);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 25; ++t) {
        ReducedWord mid(fx.d, words[pick(rng)]);
        ReducedWord dst(fx.d, words[pick(rng)]);
        LusztigData via = transport(transport(d, mid), dst);
        LusztigData direct = transport(d, dst);
        CHECK(via.a == direct.a);
    }
    // round trip through any word is the identity
    for (auto& letters : words) {
        ReducedWord mid(fx.d, letters);
        CHECK(transport(transport(d, mid), src).a == d.a);
    }
}

TEST_CASE("lattice moves in rank 2") {
    Fx fx("A2");
    ReducedWord w121(fx.d, w({1, 2, 1}));
    BraidMove m{0, BraidMove::Braid3};
    auto rep = fx.pbw.verify_lattice_move(w121, m, {1, 1});
    INFO(rep.detail);
    CHECK(rep.pass());
    auto rep2 = fx.pbw.verify_lattice_move(w121, m, {2, 1});
    INFO(rep2.detail);
    CHECK(rep2.pass());
    auto rep3 = fx.pbw.verify_lattice_move(w121, m, {2, 2});
    INFO(rep3.detail);
    CHECK(rep3.pass());
}

TEST_CASE("lattice moves in A3, including two-term moves") {
    Fx fx("A3");
    ReducedWord rw(fx.d, w({1, 3, 2, 1, 3, 2}));
    auto rep = fx.pbw.verify_lattice_move(rw, BraidMove{0, BraidMove::Swap2}, {1, 1, 1});
    INFO(rep.detail);
    CHECK(rep.pass());
    ReducedWord rw2(fx.d, w({1, 2, 3, 1, 2, 1}));
    auto rep2 = fx.pbw.verify_lattice_move(rw2, BraidMove{3, BraidMove::Braid3}, {1, 1, 1});
    INFO(rep2.detail);
    CHECK(rep2.pass());
    auto rep3 = fx.pbw.verify_lattice_move(rw2, BraidMove{3, BraidMove::Braid3}, {2, 1, 1});
    INFO(rep3.detail);
    CHECK(rep3.pass());
}

TEST_CASE("span of monomials other than a fixed divided power is move-invariant") {
    // across one braid move, for every root beta whose vector the move leaves
    // alone (all of them except the middle window root of a three-term move)
    // and every n, the monomials other than F_beta^{(n)} span the same space;
    // per weight space, only nu = n*beta can differ, so we compare there
    Fx fx("A3");
    auto words = all_reduced_words(ReducedWord(fx.d, w({1, 2, 3, 1, 2, 1})));
    for (auto& letters : words) {
        ReducedWord wa(fx.d, letters);
        auto betas = beta_sequence(wa);
        for (int k = 0; k < wa.size(); ++k) {
            for (auto kind : {BraidMove::Swap2, BraidMove::Braid3}) {
                BraidMove m{k, kind};
                if (!move_legal(fx.d, letters, m)) continue;
                ReducedWord wb = apply_braid_move(wa, m);
                auto betas2 = beta_sequence(wb);
                for (int p = 0; p < wa.size(); ++p) {
                    if (kind == BraidMove::Braid3 && p == k + 1) continue;  // vector changes
                    for (int n = 1; n <= 2; ++n) {
                        Coords nu(fx.d.rank(), 0);
                        for (int c = 0; c < fx.d.rank(); ++c)
                            nu[c] = n * betas[p].coords[c];
                        if (height(nu) > 5) continue;
                        if (fx.minus.kostant(nu) <= 1) continue;  // both sides trivial
                        int p2 = static_cast<int>(
                            std::find(betas2.begin(), betas2.end(), betas[p]) - betas2.begin());
                        auto collect = [&](const ReducedWord& word, int pos) {
                            std::vector<QVector> cols;
                            for (auto& a : fx.pbw.data_of_weight(word, nu)) {
                                if (a[pos] == n &&
                                    std::count(a.begin(), a.end(), 0) ==
                                        static_cast<int>(a.size()) - 1)
                                    continue;  // the excluded pure divided power
                                cols.push_back(fx.minus.phi_vector(
                                    fx.pbw.pbw_monomial(LusztigData(word, a)), nu));
                            }
                            return cols;
                        };
                        auto cols_a = collect(wa, p);
                        auto cols_b = collect(wb, p2);
                        REQUIRE(cols_a.size() == cols_b.size());
                        int ra = rank(QMatrix::from_columns(cols_a));
                        std::vector<QVector> joint = cols_a;
                        joint.insert(joint.end(), cols_b.begin(), cols_b.end());
                        CHECK(rank(QMatrix::from_columns(joint)) == ra);
                    }
                }
            }
        }
    }
}

TEST_CASE("monomials with vanishing first exponent kill eprime") {
    // for a word starting with letter i, PBW monomials with a_1 = 0 lie in
    // the kernel of e'_i
    for (auto type : {"A2", "A3"}) {
        Fx fx(type);
        for (int i = 0; i < fx.d.rank(); ++i) {
            ReducedWord fw = first_letter_word(fx.d, i);
            for (Coords nu : {Coords(fx.d.rank(), 1)}) {
                for (auto& a : fx.pbw.data_of_weight(fw, nu)) {
                    if (a[0] != 0) continue;
                    UMinusElement m = fx.pbw.pbw_monomial(LusztigData(fw, a));
                    CHECK(fx.minus.is_zero(fx.minus.eprime(i, m)));
                }
            }
        }
    }
}
