#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcanon/linalg.hpp"

using namespace qcanon;

namespace {

RatFunc random_entry(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 5), expd(-2, 2), coeffd(-3, 3);
    switch (pick(rng)) {
        case 0: return RatFunc(0);
        case 1: return RatFunc(1);
        case 2: return RatFunc::q(expd(rng));
        default: {
            LaurentPoly p;
            p.add_term(expd(rng), coeffd(rng));
            p.add_term(expd(rng), coeffd(rng));
            return RatFunc(p);
        }
    }
}

}  // namespace

TEST_CASE("solve basic cases") {
    QMatrix id = QMatrix::identity(3);
    QVector b{RatFunc::q(2), RatFunc(5), RatFunc::q(-1)};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    QMatrix m(1, 1);
    m(0, 0) = RatFunc(quantum_integer(2));
    auto y = solve(m, {RatFunc(LaurentPoly::q(2) + LaurentPoly(1))});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == RatFunc::q(1));

    // inconsistent system
    QMatrix z(2, 1);
    z(0, 0) = RatFunc(1);
    z(1, 0) = RatFunc(1);
    CHECK_FALSE(solve(z, {RatFunc(1), RatFunc(2)}).has_value());

    CHECK_THROWS_AS(solve(z, {RatFunc(1)}), std::domain_error);
}

TEST_CASE("rank and kernel") {
    QMatrix zero(3, 3);
    CHECK(rank(zero) == 0);
    CHECK(kernel_basis(zero).size() == 3);

    QMatrix m(2, 2);
    m(0, 0) = RatFunc(1);
    m(0, 1) = RatFunc::q();
    m(1, 0) = RatFunc::q(-1);
    m(1, 1) = RatFunc(1);
    CHECK(rank(m) == 1);
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    QVector r = m.apply(kb[0]);
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());

    QMatrix g(2, 2);
    g(0, 0) = RatFunc(1);
    g(1, 1) = RatFunc::q();
    CHECK(rank(g) == 2);
    CHECK(kernel_basis(g).empty());
}

TEST_CASE("rank-nullity and exact residuals on random matrices") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 25; ++t) {
        int r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = random_entry(rng);
        RowReduction red(m);
        CHECK(red.rank() + static_cast<int>(red.kernel_basis().size()) == c);
        for (auto& k : red.kernel_basis())
            for (auto& e : m.apply(k)) CHECK(e.is_zero());
        // make a consistent rhs and check the exact residual
        QVector x0(c);
        for (int j = 0; j < c; ++j) x0[j] = random_entry(rng);
        QVector b = m.apply(x0);
        auto x = red.solve(b);
        REQUIRE(x.has_value());
        QVector res = m.apply(*x);
        for (int i = 0; i < r; ++i) CHECK(res[i] == b[i]);
    }
}
