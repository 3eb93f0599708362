#include <doctest.h>

#include "test_helpers.hpp"

using namespace rrlab;
using namespace rrlab::testutil;

namespace {

struct SelfCheck {
    SelfCheck() { engine_options().self_check = true; }
    ~SelfCheck() { engine_options().self_check = false; }
};

VectorPoly vp(const RingPtr&, const Polynomial& f, const ModuleOrder& ord) {
    return VectorPoly::from_polynomial(f, 0, ord);
}

} // namespace

TEST_CASE("reduced basis of (x^2, xy + y^2)") {
    SelfCheck guard;
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord;
    ord.base = S->order();
    Polynomial f1 = pterm(S, {2, 0});
    Polynomial f2 = psum(S, {{{1, 1}, 1}, {{0, 2}, 1}});
    GroebnerBasis gb = buchberger({vp(S, f1, ord), vp(S, f2, ord)}, ord, 1);
    REQUIRE(gb.elems.size() == 3);
    // the closure adds y^3; confirmed against the degreewise oracle below
    bool found_y3 = false;
    for (auto& e : gb.elems)
        if (e.leading_term().mono == Monomial({0, 3})) found_y3 = true;
    CHECK(found_y3);

    OracleContext ctx(S, 1, {0}, 8);
    OracleModule span = oracle_span(ctx, {vp(S, f1, ord), vp(S, f2, ord)});
    Submodule I = Submodule::ideal(S, {f1, f2});
    CHECK(oracle_agrees(I, span, 8));
}

TEST_CASE("single and duplicate generators") {
    SelfCheck guard;
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord;
    ord.base = S->order();
    Polynomial f = pterm(S, {1, 0});
    GroebnerBasis gb1 = buchberger({vp(S, f, ord)}, ord, 1);
    CHECK(gb1.elems.size() == 1);
    Polynomial g = psum(S, {{{2, 0}, 2}, {{0, 2}, 2}});
    GroebnerBasis gb2 = buchberger({vp(S, g, ord), vp(S, g, ord)}, ord, 1);
    REQUIRE(gb2.elems.size() == 1);
    CHECK(gb2.elems[0].leading_term().coeff.is_one()); // normalized
}

TEST_CASE("normal form examples") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord;
    ord.base = S->order();
    // membership
    GroebnerBasis gb1 = buchberger({vp(S, pterm(S, {2, 0}), ord)}, ord, 1);
    CHECK(normal_form(vp(S, pterm(S, {2, 1}), ord), gb1).is_zero());
    // already reduced
    GroebnerBasis gb2 =
        buchberger({vp(S, pterm(S, {2, 0}), ord), vp(S, pterm(S, {0, 2}), ord)}, ord, 1);
    VectorPoly v = vp(S, psum(S, {{{1, 0}, 1}, {{0, 1}, 1}}), ord);
    CHECK(normal_form(v, gb2) == v);
    // canonical remainder: x^3 + y^3 against (x^2 - y, y^3) reduces to x*y
    GroebnerBasis gb3 = buchberger(
        {vp(S, psum(S, {{{2, 0}, 1}, {{0, 1}, -1}}), ord), vp(S, pterm(S, {0, 3}), ord)}, ord, 1);
    VectorPoly nf = normal_form(vp(S, psum(S, {{{3, 0}, 1}, {{0, 3}, 1}}), ord), gb3);
    CHECK(nf == vp(S, pterm(S, {1, 1}), ord));
}

TEST_CASE("normal form is idempotent and linear") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y", "z"});
    ModuleOrder ord;
    ord.base = S->order();
    GroebnerBasis gb = buchberger({vp(S, psum(S, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}}), ord),
                                   vp(S, pterm(S, {0, 2, 1}), ord)},
                                  ord, 1);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        VectorPoly a = vp(S, random_poly(S->field(), 3, rng), ord);
        VectorPoly b = vp(S, random_poly(S->field(), 3, rng), ord);
        VectorPoly na = normal_form(a, gb);
        CHECK(normal_form(na, gb) == na);
        VectorPoly nsum = normal_form(vp_add(a, b, ord), gb);
        CHECK(nsum == vp_add(na, normal_form(b, gb), ord));
    }
}

TEST_CASE("syzygies of (x, y) are Koszul") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    auto syz = syzygies_over(S, {VectorPoly::from_polynomial(pterm(S, {1, 0}), 0, ModuleOrder{S->order(), true, {}}),
                                 VectorPoly::from_polynomial(pterm(S, {0, 1}), 0, ModuleOrder{S->order(), true, {}})},
                             1, {0});
    REQUIRE(syz.size() == 1);
    ModuleOrder sord;
    sord.base = S->order();
    sord.shifts = {1, 1};
    VectorPoly koszul({VTerm{0, Monomial({0, 1}), Scalar::one(S->field())},
                       VTerm{1, Monomial({1, 0}), -Scalar::one(S->field())}},
                      sord);
    CHECK((syz[0] == koszul || syz[0] == vp_neg(koszul, sord)));
}

TEST_CASE("a single nonzerodivisor has no syzygies") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord;
    ord.base = S->order();
    auto syz = syzygies_over(S, {vp(S, psum(S, {{{2, 0}, 1}, {{0, 2}, 3}}), ord)}, 1, {0});
    CHECK(syz.empty());
}

TEST_CASE("syzygies of (x^2, xy, y^2) generate the kernel") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord;
    ord.base = S->order();
    std::vector<VectorPoly> gens = {vp(S, pterm(S, {2, 0}), ord), vp(S, pterm(S, {1, 1}), ord),
                                    vp(S, pterm(S, {0, 2}), ord)};
    auto syz = syzygies_over(S, gens, 1, {0});
    REQUIRE(!syz.empty());
    ModuleOrder sord;
    sord.base = S->order();
    sord.shifts = {2, 2, 2};
    // every syzygy must evaluate to zero
    for (auto& s : syz) {
        VectorPoly acc;
        for (auto& t : s.terms()) acc = vp_add(acc, vp_mul_term(gens[t.comp], t.mono, t.coeff, ord), ord);
        CHECK(acc.is_zero());
    }
    // and the syzygy module has the right graded dimensions: the kernel of
    // the multiplication map in each degree, checked against the oracle
    Submodule K(S, 3, {2, 2, 2}, syz);
    OracleContext ctx(S, 1, {0}, 8);
    for (int e = 3; e <= 6; ++e) {
        // dim of degree-e syzygies = 3*dim S_{e-2} - dim (m^2)_e
        int expected = 3 * static_cast<int>(monomials_of_degree(2, e - 2).size()) -
                       static_cast<int>(monomials_of_degree(2, e).size());
        CHECK(K.graded_dim(e) == expected);
    }
}

TEST_CASE("elimination examples") {
    // one equation, one eliminated variable: nothing survives
    auto T1 = GradedRing::make(Field::rationals(), {"t", "x", "y"});
    Polynomial rel = psum(T1, {{{0, 0, 1}, 1}, {{1, 1, 0}, -1}}); // y - x t
    auto elim1 = eliminate({rel}, 1);
    CHECK(elim1.empty());

    // two parametrized lines give the 2x2 minor
    auto T2 = GradedRing::make(Field::rationals(), {"t", "x1", "x2", "y1", "y2"});
    Polynomial r1 = psum(T2, {{{0, 0, 0, 1, 0}, 1}, {{1, 1, 0, 0, 0}, -1}}); // y1 - x1 t
    Polynomial r2 = psum(T2, {{{0, 0, 0, 0, 1}, 1}, {{1, 0, 1, 0, 0}, -1}}); // y2 - x2 t
    auto elim2 = eliminate({r1, r2}, 1);
    REQUIRE(elim2.size() == 1);
    Polynomial minor = psum(T2, {{{0, 0, 1, 1, 0}, 1}, {{0, 1, 0, 0, 1}, -1}}); // x2 y1 - x1 y2
    CHECK((elim2[0] == minor || elim2[0] == poly_neg(minor, T2->order())));

    // 2 x 3 case: the three minors of [[x1 x2 x3], [y1 y2 y3]]
    auto T3 = GradedRing::make(Field::rationals(), {"t", "x1", "x2", "x3", "y1", "y2", "y3"});
    auto var = [&](std::size_t i) { return pterm(T3, [&] {
        std::vector<std::uint32_t> e(7, 0);
        e[i] = 1;
        return e;
    }()); };
    MonomialOrder mo = T3->order();
    std::vector<Polynomial> rels;
    for (int i = 0; i < 3; ++i)
        rels.push_back(poly_sub(var(4 + i), poly_mul(var(0), var(1 + i), mo), mo));
    auto elim3 = eliminate(rels, 1);
    CHECK(elim3.size() == 3);
    ModuleOrder ord;
    ord.base = mo;
    Submodule ideal3 = Submodule::ideal(T3, elim3);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Polynomial m = poly_sub(poly_mul(var(1 + i), var(4 + j), mo),
                                    poly_mul(var(1 + j), var(4 + i), mo), mo);
            CHECK(ideal3.contains(VectorPoly::from_polynomial(m, 0, ord)));
        }
    }
}

TEST_CASE("membership agrees between degrevlex and lex") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    std::vector<Polynomial> gens = {psum(S, {{{2, 0}, 1}, {{0, 2}, -1}}), pterm(S, {1, 2})};
    ModuleOrder drl{MonomialOrder::degrevlex(), true, {}};
    ModuleOrder lex{MonomialOrder::lex(), true, {}};
    std::vector<VectorPoly> vd, vl;
    for (auto& g : gens) {
        vd.push_back(VectorPoly::from_polynomial(g, 0, drl));
        vl.push_back(VectorPoly::from_polynomial(poly_reorder(g, lex.base), 0, lex));
    }
    GroebnerBasis gd = buchberger(vd, drl, 1);
    GroebnerBasis gl = buchberger(vl, lex, 1);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = random_poly(S->field(), 2, rng);
        bool in_d = normal_form(VectorPoly::from_polynomial(f, 0, drl), gd).is_zero();
        bool in_l = normal_form(VectorPoly::from_polynomial(poly_reorder(f, lex.base), 0, lex), gl).is_zero();
        CHECK(in_d == in_l);
    }
}

TEST_CASE("self-check accepts every basis computed over a quotient") {
    SelfCheck guard;
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    auto R = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {2, 0})});
    Submodule m2 = Submodule::irrelevant_power(R, 2);
    CHECK(m2.gb().elems.size() >= 2);
    Submodule c = colon_ideal(m2, Submodule::irrelevant(R), Submodule::free_module(R, 1, {0}));
    CHECK(!c.gens().empty());
}

TEST_CASE("membership agrees with the oracle on random homogeneous inputs") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y"});
    ModuleOrder ord{S->order(), true, {}};
    std::vector<Polynomial> gens = {psum(S, {{{2, 0}, 1}, {{1, 1}, -1}}), pterm(S, {0, 3})};
    Submodule I = Submodule::ideal(S, gens);
    OracleContext ctx(S, 1, {0}, 12);
    OracleModule span = oracle_span(ctx, I.gens());

    std::mt19937_64 rng(17);
    auto random_homogeneous = [&](int degree) {
        std::vector<PTerm> ts;
        for (auto& m : monomials_of_degree(2, static_cast<std::uint32_t>(degree))) {
            long c = static_cast<long>(rng() % 7) - 3;
            if (c != 0) ts.push_back({m, Scalar::of(S->field(), c)});
        }
        return Polynomial(std::move(ts), S->order());
    };

    for (int trial = 0; trial < 30; ++trial) {
        // a guaranteed member: random homogeneous combination of the generators
        int target = 4 + static_cast<int>(rng() % 4);
        Polynomial member;
        for (auto& g : gens) {
            Polynomial cof = random_homogeneous(target - static_cast<int>(g.degree()));
            member = poly_add(member, poly_mul(g, cof, S->order()), S->order());
        }
        if (!member.is_zero()) {
            VectorPoly vm = VectorPoly::from_polynomial(member, 0, ord);
            CHECK(I.contains(vm));
            CHECK(span.contains(vm));
        }
        // an arbitrary homogeneous element: both routes must agree
        Polynomial w = random_homogeneous(2 + static_cast<int>(rng() % 6));
        if (w.is_zero()) continue;
        VectorPoly vw = VectorPoly::from_polynomial(w, 0, ord);
        CHECK(I.contains(vw) == span.contains(vw));
    }
}
