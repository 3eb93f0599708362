#include <doctest.h>

#include "test_helpers.hpp"

using namespace rrlab;
using namespace rrlab::testutil;

namespace {

RingPtr plane() { return GradedRing::make(Field::rationals(), {"x", "y"}); }

FilteredModule filtered_ring(const RingPtr& R, LabConfig cfg = {}) {
    return FilteredModule(Submodule::free_module(R, 1, {0}), cfg);
}

} // namespace

TEST_CASE("powers of the filtration") {
    auto S = plane();
    LabConfig cfg;
    FilteredModule Mf = filtered_ring(S);
    CHECK(Mf.power(2).equals(Submodule::irrelevant_power(S, 2)));
    CHECK(Mf.power(0).equals(Mf.module()));

    Submodule I0 = Submodule::ideal(S, {pterm(S, {3, 0}), pterm(S, {0, 3})});
    FilteredModule MfI(I0, cfg);
    Submodule expected = Submodule::ideal(
        S, {pterm(S, {4, 0}), pterm(S, {3, 1}), pterm(S, {1, 3}), pterm(S, {0, 4})});
    CHECK(MfI.power(1).equals(expected));
}

TEST_CASE("Ratliff-Rush stages of the free module are the powers") {
    auto S = plane();
    FilteredModule Mf = filtered_ring(S);
    CHECK(Mf.ratliff_rush(1).equals(Submodule::irrelevant(S)));
    CHECK(Mf.ratliff_rush(0).equals(Mf.module()));
    CHECK(Mf.rho_report().rho == 0);
    CHECK(Mf.regularity() == 0);
    CHECK(Mf.depth_graded_positive());
}

TEST_CASE("both stage modes agree with the oracle on the quartic module") {
    auto S = plane();
    LabConfig cfg;
    Submodule I = Submodule::ideal(
        S, {pterm(S, {4, 0}), pterm(S, {3, 1}), pterm(S, {1, 3}), pterm(S, {0, 4})});
    FilteredModule Mf(I, cfg);
    CHECK(Mf.depth() == 1);
    CHECK(Mf.regularity() == 1);
    CHECK(Mf.rho_report().rho == 0);
    for (int n = 1; n <= 2; ++n) {
        bool stab = false;
        Submodule chain = Mf.ratliff_rush_chain(n, &stab);
        CHECK(stab);
        CHECK(chain.equals(Mf.ratliff_rush(n)));
    }
    OracleContext ctx(S, 1, {0}, cfg.max_degree);
    auto chain = oracle_rr_chain(ctx, I.gens(), 1, 5);
    CHECK(oracle_agrees(Mf.ratliff_rush(1), chain.closure, 7));
}

TEST_CASE("the mixed-degree ideal over the triple line has rho = 2") {
    auto S = plane();
    auto R = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {3, 0})});
    LabConfig cfg;
    Submodule N = Submodule::ideal(R, {pterm(R, {0, 1}), pterm(R, {2, 0})});
    FilteredModule Mf(N, cfg);
    RRReport rep = Mf.rho_report();
    CHECK(Mf.depth() == 1);
    CHECK(rep.rho == 2);
    CHECK(rep.reg_bound == 2);
    CHECK_FALSE(Mf.depth_graded_positive());
    // the first stage strictly exceeds the first power: x^2 is the witness
    Submodule rr1 = Mf.ratliff_rush(1);
    CHECK(rr1.contains(VectorPoly::from_polynomial(pterm(R, {2, 0}), 0, ModuleOrder{R->order(), true, {}})));
    CHECK_FALSE(Mf.power(1).contains(
        VectorPoly::from_polynomial(pterm(R, {2, 0}), 0, ModuleOrder{R->order(), true, {}})));
    // chain mode agrees
    bool stab = false;
    CHECK(Mf.ratliff_rush_chain(1, &stab).equals(rr1));
}

TEST_CASE("depth zero modules refuse the filtration properties") {
    auto S = plane();
    LabConfig cfg;
    auto R = GradedRing::make(Field::rationals(), {"x"}, {pterm(GradedRing::make(Field::rationals(), {"x"}), {2})});
    FilteredModule Mf = filtered_ring(R, cfg);
    CHECK(Mf.depth() == 0);
    CHECK_THROWS_AS(Mf.rho_report(), algebra_error);
    CHECK_THROWS_AS(Mf.ratliff_rush(1), algebra_error);
}

TEST_CASE("superficial certificates") {
    auto S = plane();
    LabConfig cfg;
    FilteredModule MfS = filtered_ring(S, cfg);
    auto wx = superficial_certificate(MfS, pterm(S, {1, 0}));
    REQUIRE(wx);
    CHECK(wx->annihilator_dim == 0); // torsion free: (0 : x) = 0

    auto R1 = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {2, 0})});
    FilteredModule MfR = filtered_ring(R1, cfg);
    CHECK(superficial_certificate(MfR, pterm(R1, {0, 1}))); // y works
    CHECK_FALSE(superficial_certificate(MfR, pterm(R1, {1, 0}))); // x has a fat annihilator

    auto R2 = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {1, 1})});
    FilteredModule MfR2 = filtered_ring(R2, cfg);
    auto wxy = superficial_certificate(MfR2, psum(R2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    REQUIRE(wxy);
    CHECK(wxy->annihilator_dim == 0);
    CHECK_FALSE(superficial_certificate(MfR2, pterm(R2, {1, 0}))); // x kills y

    SuperficialWitness found = find_superficial(MfR);
    CHECK(superficial_certificate(MfR, found.form));
}

TEST_CASE("superficial search needs a large field") {
    auto small = GradedRing::make(Field::prime(7), {"x", "y"});
    LabConfig cfg;
    FilteredModule Mf(Submodule::free_module(small, 1, {0}), cfg);
    CHECK_THROWS_AS(find_superficial(Mf), algebra_error);
}

TEST_CASE("m-fullness of the irrelevant ideal") {
    auto S = plane();
    LabConfig cfg;
    Submodule m = Submodule::irrelevant(S);
    Submodule free = Submodule::free_module(S, 1, {0});
    auto rep = is_m_full(m, free, nullptr, pterm(S, {1, 0}), cfg);
    CHECK(rep.m_full);
    CHECK(rep.exact);

    // (x^2, y^2) is not m-full: the colon of any linear form is m^2
    Submodule N = Submodule::ideal(S, {pterm(S, {2, 0}), pterm(S, {0, 2})});
    auto neg = is_m_full(N, free, nullptr, std::nullopt, cfg);
    CHECK_FALSE(neg.m_full);
    CHECK_FALSE(neg.exact); // negative answers are heuristic
    REQUIRE(!neg.failures.empty());
    CHECK(neg.failures.front().second.equals(Submodule::irrelevant_power(S, 2)));
}

TEST_CASE("the socle splitting on m and m^2") {
    auto S = plane();
    LabConfig cfg;
    Submodule free = Submodule::free_module(S, 1, {0});
    Submodule m = Submodule::irrelevant(S);

    auto split1 = mfull_split(m, free, pterm(S, {1, 0}), cfg);
    CHECK(split1.socle_dim == 1);
    CHECK(split1.colon_equal);
    CHECK(split1.split_identity);
    CHECK(split1.completion.size() == 1);
    CHECK(split1.well_defined_ok);

    auto split2 = mfull_split(Submodule::irrelevant_power(S, 2), free, pterm(S, {1, 0}), cfg);
    CHECK(split2.socle_dim == 2); // (m^2 : m)/m^2 = m/m^2
    CHECK(split2.split_identity);
    CHECK(split2.completion.size() == 1); // x*x, x*y extend by y^2

    // degenerate: N = M has a zero socle quotient
    auto split3 = mfull_split(free, free, pterm(S, {1, 0}), cfg);
    CHECK(split3.socle_dim == 0);
    CHECK(split3.split_identity);

    // wrong witness is rejected
    CHECK_THROWS_AS(mfull_split(Submodule::ideal(S, {pterm(S, {2, 0}), pterm(S, {0, 2})}), free,
                                pterm(S, {1, 0}), cfg),
                    algebra_error);
}

TEST_CASE("associated graded presentations") {
    auto S = plane();
    LabConfig cfg;
    FilteredModule MfS = filtered_ring(S, cfg);
    const AssocGraded& gs = MfS.graded();
    CHECK(gs.num_gens == 1);
    CHECK(gs.relations.is_zero());

    auto R1 = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {2, 0})});
    FilteredModule MfR = filtered_ring(R1, cfg);
    const AssocGraded& gr = MfR.graded();
    REQUIRE(gr.relations.gens().size() == 1);
    CHECK(gr.relations.gens()[0] ==
          VectorPoly::from_polynomial(pterm(gr.P, {2, 0}), 0, gr.relations.order()));

    Submodule I = Submodule::ideal(S, {pterm(S, {3, 0}), pterm(S, {0, 3})});
    FilteredModule MfI(I, cfg);
    const AssocGraded& gi = MfI.graded();
    CHECK(gi.num_gens == 2);
    CHECK(gi.piece_dim(0) == 2);
    CHECK(gi.piece_dim(1) == 4);
}

TEST_CASE("prime field stages match the rational ones") {
    LabConfig cfg;
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
        auto S = GradedRing::make(f, {"x", "y"});
        auto R = GradedRing::make(f, {"x", "y"},
                                  {Polynomial::term(Monomial({3, 0}), Scalar::one(f), S->order())});
        Submodule N = Submodule::ideal(
            R, {Polynomial::term(Monomial({0, 1}), Scalar::one(f), R->order()),
                Polynomial::term(Monomial({2, 0}), Scalar::one(f), R->order())});
        FilteredModule Mf(N, cfg);
        CHECK(Mf.rho_report().rho == 2);
        CHECK(Mf.regularity() == 2);
    }
}
