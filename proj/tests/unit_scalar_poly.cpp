#include <doctest.h>

#include "test_helpers.hpp"

using namespace rrlab;
using namespace rrlab::testutil;

TEST_CASE("rational scalars stay in lowest terms with positive denominator") {
    Field q = Field::rationals();
    Scalar a = Scalar::of(q, 4, -6);
    CHECK(a.value().get_num() == -2);
    CHECK(a.value().get_den() == 3);
    Scalar b = Scalar::of(q, 1, 3);
    CHECK((a + b).value() == mpq_class(-1, 3));
    CHECK((a * b).value() == mpq_class(-2, 9));
    CHECK(a.inverse().value() == mpq_class(-3, 2));
}

TEST_CASE("prime field values are reduced to [0, p)") {
    Field f = Field::prime(7);
    Scalar a = Scalar::of(f, -3);
    CHECK(a.value() == 4);
    Scalar b = Scalar::of(f, 12);
    CHECK(b.value() == 5);
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 6);
    CHECK((a / b).value() == (Scalar::of(f, 4) * Scalar::of(f, 5).inverse()).value());
    CHECK((b * b.inverse()).is_one());
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
}

TEST_CASE("monomial order examples") {
    MonomialOrder drl = MonomialOrder::degrevlex();
    Monomial x2y({2, 1}), xy2({1, 2}), y3({0, 3}), x2({2, 0});
    CHECK(drl.compare(x2y, xy2) > 0);
    CHECK(drl.compare(x2y, x2y) == 0);
    CHECK(drl.compare(y3, x2) > 0); // degree 3 beats degree 2
    MonomialOrder lex = MonomialOrder::lex();
    CHECK(lex.compare(x2, y3) > 0);
}

TEST_CASE("polynomial arithmetic examples") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    MonomialOrder ord = S->order();
    Polynomial x = pterm(S, {1, 0}), y = pterm(S, {0, 1});
    Polynomial sum = poly_add(poly_add(x, y, ord), poly_sub(x, y, ord), ord);
    CHECK(sum == pterm(S, {1, 0}, 2));
    Polynomial prod = poly_mul(poly_add(x, y, ord), poly_sub(x, y, ord), ord);
    CHECK(prod == psum(S, {{{2, 0}, 1}, {{0, 2}, -1}}));
    CHECK(poly_mul(prod, Polynomial::zero(), ord).is_zero());
}

TEST_CASE("ring axioms hold on random sparse polynomials") {
    std::mt19937_64 rng(42);
    Field q = Field::rationals();
    MonomialOrder ord = MonomialOrder::degrevlex();
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_poly(q, 3, rng), g = random_poly(q, 3, rng), h = random_poly(q, 3, rng);
        CHECK(poly_mul(poly_mul(f, g, ord), h, ord) == poly_mul(f, poly_mul(g, h, ord), ord));
        CHECK(poly_mul(f, poly_add(g, h, ord), ord) ==
              poly_add(poly_mul(f, g, ord), poly_mul(f, h, ord), ord));
        CHECK(poly_mul(f, g, ord) == poly_mul(g, f, ord));
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(7);
    Field q = Field::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(q, 2, rng);
        Polynomial again(f.terms(), MonomialOrder::degrevlex());
        CHECK(f == again);
    }
}

TEST_CASE("rational arithmetic cross-checks the prime field") {
    std::mt19937_64 rng(11);
    Field q = Field::rationals();
    Field fp = Field::prime(32003);
    MonomialOrder ord = MonomialOrder::degrevlex();
    auto to_fp = [&](const Polynomial& f) {
        std::vector<PTerm> ts;
        for (auto& t : f.terms())
            ts.push_back({t.mono, Scalar::of(fp, t.coeff.value().get_num(), t.coeff.value().get_den())});
        return Polynomial(std::move(ts), ord);
    };
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(q, 2, rng), g = random_poly(q, 2, rng);
        CHECK(to_fp(poly_mul(f, g, ord)) == poly_mul(to_fp(f), to_fp(g), ord));
    }
}

TEST_CASE("vector polynomials respect the module order") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord;
    ord.base = S->order();
    ord.shifts = {0, 1};
    VectorPoly v({VTerm{1, Monomial({1, 0}), Scalar::one(S->field())},
                  VTerm{0, Monomial({1, 1}), Scalar::one(S->field())}},
                 ord);
    // shifted degrees: comp 1 term has degree 2, comp 0 term degree 2; the
    // monomial order breaks the tie: x > xy is false, so xy leads
    CHECK(v.is_homogeneous(ord));
    CHECK(v.degree(ord) == 2);
    VectorPoly sum = vp_add(v, vp_neg(v, ord), ord);
    CHECK(sum.is_zero());
}

TEST_CASE("position over term compares components first") {
    ModuleOrder pot;
    pot.base = MonomialOrder::degrevlex();
    pot.top = false;
    Field q = Field::rationals();
    VTerm low{0, Monomial({0, 1}), Scalar::one(q)};
    VTerm high{1, Monomial({3, 0}), Scalar::one(q)};
    CHECK(pot.compare(low, high) > 0); // component 0 dominates regardless of degree
    ModuleOrder top;
    top.base = MonomialOrder::degrevlex();
    CHECK(top.compare(low, high) < 0); // degree wins under term over position
}
