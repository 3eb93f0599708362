#include <doctest.h>

#include "test_helpers.hpp"

using namespace rrlab;
using namespace rrlab::testutil;

namespace {

RingPtr plane() { return GradedRing::make(Field::rationals(), {"x", "y"}); }

} // namespace

TEST_CASE("colon by an element") {
    auto S = plane();
    Submodule free = Submodule::free_module(S, 1, {0});
    Submodule m = Submodule::irrelevant(S);
    Submodule m2 = Submodule::irrelevant_power(S, 2);

    CHECK(colon_elem(m2, pterm(S, {1, 0}), free).equals(m));
    CHECK(colon_elem(m, Polynomial::constant(S->field(), 1, 2, S->order()), free).equals(m));
    Submodule xy = Submodule::ideal(S, {pterm(S, {1, 1})});
    Submodule y = Submodule::ideal(S, {pterm(S, {0, 1})});
    CHECK(colon_elem(xy, pterm(S, {1, 0}), free).equals(y));
    // zero divisor convention: (N : 0) = M
    CHECK(colon_elem(m2, Polynomial::zero(), free).equals(free));
}

TEST_CASE("colon by an ideal") {
    auto S = plane();
    Submodule free = Submodule::free_module(S, 1, {0});
    Submodule m = Submodule::irrelevant(S);
    Submodule m2 = Submodule::irrelevant_power(S, 2);
    Submodule m3 = Submodule::irrelevant_power(S, 3);
    CHECK(colon_ideal(m3, m, free).equals(m2));
    Submodule N = Submodule::ideal(S, {pterm(S, {2, 0}), pterm(S, {0, 2})});
    Submodule c = colon_ideal(N, m, free);
    CHECK(c.contains_all(N));
    CHECK(c.equals(m2)); // the socle contribution xy joins x^2, y^2
    // empty ideal convention
    CHECK(colon_ideal(m2, Submodule::zero(S, 1, {0}), free).equals(free));
}

TEST_CASE("ideal products") {
    auto S = plane();
    Submodule m = Submodule::irrelevant(S);
    Submodule free = Submodule::free_module(S, 1, {0});
    CHECK(mult_ideal(m, free).equals(m));
    Submodule N = Submodule::ideal(S, {pterm(S, {2, 0}), pterm(S, {0, 2})});
    CHECK(mult_ideal(m, N).equals(Submodule::irrelevant_power(S, 3)));
    CHECK(mult_ideal(m, Submodule::zero(S, 1, {0})).is_zero());
}

TEST_CASE("intersections") {
    auto S = plane();
    Submodule x = Submodule::ideal(S, {pterm(S, {1, 0})});
    Submodule y = Submodule::ideal(S, {pterm(S, {0, 1})});
    CHECK(intersect(x, x).equals(x));
    CHECK(intersect(x, y).equals(Submodule::ideal(S, {pterm(S, {1, 1})})));
    Submodule a = Submodule::ideal(S, {pterm(S, {2, 0}), pterm(S, {1, 1})});
    Submodule b = Submodule::ideal(S, {pterm(S, {0, 2}), pterm(S, {1, 1})});
    CHECK(intersect(a, b).equals(Submodule::ideal(S, {pterm(S, {1, 1})})));
}

TEST_CASE("localization safety valve") {
    auto S = plane();
    // unit at m: 1 + x
    std::vector<VectorPoly> unit_gen = {VectorPoly::from_polynomial(
        psum(S, {{{0, 0}, 1}, {{1, 0}, 1}}), 0, ModuleOrder{S->order(), true, {}})};
    Submodule unit(S, 1, {0}, unit_gen, false);
    Submodule free = Submodule::free_module(S, 1, {0});
    CHECK(is_locally_zero(free, unit));
    CHECK_FALSE(is_locally_zero(free, Submodule::irrelevant(S)));

    auto line = GradedRing::make(Field::rationals(), {"x"});
    std::vector<VectorPoly> x2x = {VectorPoly::from_polynomial(
        psum(line, {{{2}, 1}, {{1}, 1}}), 0, ModuleOrder{line->order(), true, {}})};
    Submodule n2(line, 1, {0}, x2x, false);
    CHECK_FALSE(is_locally_zero(Submodule::free_module(line, 1, {0}), n2));
}

TEST_CASE("minimal generators via graded Nakayama") {
    auto S = plane();
    Submodule m = Submodule::irrelevant(S);
    CHECK(min_gens(m).size() == 2);
    Submodule two = Submodule::ideal(S, {pterm(S, {2, 0}), psum(S, {{{2, 0}, 1}, {{0, 2}, 1}})});
    CHECK(min_gens(two).size() == 2);
    CHECK(min_gens(Submodule::irrelevant_power(S, 3)).size() == 4);
    // redundant generator drops out
    Submodule red = Submodule::ideal(S, {pterm(S, {1, 0}), pterm(S, {2, 0})});
    CHECK(min_gens(red).size() == 1);
}

TEST_CASE("finite length dimensions") {
    auto S = plane();
    Submodule free = Submodule::free_module(S, 1, {0});
    Submodule m = Submodule::irrelevant(S);
    CHECK(kdim_quotient(free, m).dim == 1);
    CHECK(kdim_quotient(free, Submodule::irrelevant_power(S, 2)).dim == 3);
    auto space = GradedRing::make(Field::rationals(), {"x", "y", "z"});
    CHECK(kdim_quotient(Submodule::irrelevant_power(space, 2), Submodule::irrelevant_power(space, 3)).dim == 6);
    // refusal with a witness on a positive-dimensional quotient
    Submodule x = Submodule::ideal(S, {pterm(S, {1, 0})});
    CHECK_THROWS_WITH_AS(kdim_quotient(free, x), doctest::Contains("Krull dimension"), algebra_error);
}

TEST_CASE("oracle evaluations match the engine") {
    auto S = plane();
    OracleContext ctx(S, 1, {0}, 8);
    Submodule m = Submodule::irrelevant(S);
    Submodule m2 = Submodule::irrelevant_power(S, 2);
    Submodule m3 = Submodule::irrelevant_power(S, 3);
    Submodule free = Submodule::free_module(S, 1, {0});

    OracleModule om = oracle_span(ctx, m.gens());
    OracleModule om3 = oracle_span(ctx, m3.gens());
    OracleModule ofree = oracle_span(ctx, free.gens());

    std::vector<Polynomial> mgens = {pterm(S, {1, 0}), pterm(S, {0, 1})};
    OracleModule ocolon = oracle_colon_ideal(ctx, om3, mgens, ofree);
    CHECK(oracle_agrees(m2, ocolon, 6));

    // membership x^2 y in m^3
    CHECK(om3.contains(VectorPoly::from_polynomial(pterm(S, {2, 1}), 0, ModuleOrder{S->order(), true, {}})));

    // product m * m = m^2 dimension table
    OracleModule oprod = oracle_power_span(ctx, m.gens(), 1);
    for (int e = 0; e <= 6; ++e) CHECK(oprod.dim(e) == m2.graded_dim(e));

    // the oracle refuses beyond its conclusive range
    CHECK_THROWS_AS((void)ocolon.dim(100), algebra_error);
}

TEST_CASE("colon adjunction identities") {
    auto S = plane();
    Submodule free = Submodule::free_module(S, 1, {0});
    Submodule N = Submodule::ideal(S, {pterm(S, {3, 0}), pterm(S, {0, 3})});
    Polynomial f = pterm(S, {1, 0});
    Polynomial g = psum(S, {{{1, 0}, 1}, {{0, 1}, 2}});
    Submodule cf = colon_elem(N, f, free);
    CHECK(N.contains_all(mult_ideal(Submodule::ideal(S, {f}), cf)));
    CHECK(cf.contains_all(N));
    CHECK(colon_elem(cf, g, free).equals(colon_elem(N, poly_mul(f, g, S->order()), free)));
}

TEST_CASE("quotient ring calculus stays exact") {
    auto S = plane();
    auto R = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {2, 0})});
    Submodule free = Submodule::free_module(R, 1, {0});
    Submodule m = Submodule::irrelevant(R);
    // (m^2 : x) over R contains x because x * x = 0 there
    Submodule c = colon_elem(Submodule::irrelevant_power(R, 2), pterm(R, {1, 0}), free);
    CHECK(c.contains(VectorPoly::from_polynomial(pterm(R, {1, 0}), 0, ModuleOrder{R->order(), true, {}})));
    CHECK(c.equals(m));
    // graded dimensions follow the quotient Hilbert function 1, 2, 2, 2, ...
    CHECK(free.graded_dim(0) == 1);
    CHECK(free.graded_dim(1) == 2);
    CHECK(free.graded_dim(2) == 2);
    CHECK(free.graded_dim(3) == 2);
}
