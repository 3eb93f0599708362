#include <doctest.h>

#include "test_helpers.hpp"

using namespace rrlab;
using namespace rrlab::testutil;

namespace {

RingPtr plane() { return GradedRing::make(Field::rationals(), {"x", "y"}); }
RingPtr dual_numbers() {
    auto line = GradedRing::make(Field::rationals(), {"x"});
    return GradedRing::make(Field::rationals(), {"x"}, {pterm(line, {2})});
}

} // namespace

TEST_CASE("the Koszul resolution of the irrelevant ideal") {
    auto S = plane();
    Submodule m = Submodule::irrelevant(S);
    Resolution res = resolve_submodule(m, 5);
    REQUIRE(res.complete);
    BettiTable b = betti_table(res);
    CHECK(*b.pd == 1);
    CHECK(b.beta.at({0, 1}) == 2);
    CHECK(b.beta.at({1, 2}) == 1);
}

TEST_CASE("the residue field over the dual numbers resolves periodically") {
    auto R = dual_numbers();
    QuotientModule k = QuotientModule::residue_field(R);
    Resolution res = resolve_quotient(k, 4);
    CHECK_FALSE(res.complete);
    REQUIRE(res.steps.size() == 4);
    for (auto& step : res.steps) {
        REQUIRE(step.cols.size() == 1);
        REQUIRE(step.cols[0].terms().size() == 1);
        CHECK(step.cols[0].leading_term().mono == Monomial(std::vector<std::uint32_t>{1}));
        CHECK(step.cols[0].leading_term().coeff.is_one());
    }
}

TEST_CASE("free modules have length-zero resolutions") {
    auto S = plane();
    Resolution res = resolve_submodule(Submodule::free_module(S, 2, {0, 1}), 3);
    CHECK(res.complete);
    CHECK(res.steps.empty());
}

TEST_CASE("depth computations") {
    auto S = plane();
    CHECK(ring_depth(S) == 2);
    auto space = GradedRing::make(Field::rationals(), {"x", "y", "z"});
    CHECK(ring_depth(space) == 3);
    CHECK(quotient_depth(QuotientModule::residue_field(S)) == 0);
    auto R1 = GradedRing::make(Field::rationals(), {"x", "y"}, {pterm(S, {2, 0})});
    CHECK(ring_depth(R1) == 1);
    CHECK_THROWS_AS(module_depth(Submodule::zero(S, 1, {0})), algebra_error);
}

TEST_CASE("projective dimension verdicts") {
    auto S = plane();
    for (int n = 1; n <= 3; ++n) {
        HdimReport h = projdim(Submodule::irrelevant_power(S, static_cast<std::uint32_t>(n)));
        CHECK(h.verdict == Verdict::finite);
        CHECK(h.value == 1);
    }
    auto R = dual_numbers();
    HdimReport hk = projdim_quotient(QuotientModule::residue_field(R));
    CHECK(hk.verdict == Verdict::infinite);
    QuotientModule self{R, 1, {0}, Submodule::zero(R, 1, {0})};
    HdimReport hr = projdim_quotient(self);
    CHECK(hr.verdict == Verdict::finite);
    CHECK(hr.value == 0);
}

TEST_CASE("Auslander-Buchsbaum consistency") {
    auto S = GradedRing::make(Field::rationals(), {"x", "y", "z"});
    Submodule m = Submodule::irrelevant(S);
    HdimReport h = projdim(m);
    REQUIRE(h.verdict == Verdict::finite);
    CHECK(h.value + module_depth(m) == ring_depth(S));
}

TEST_CASE("verdicts are stable under longer resolutions") {
    auto R = dual_numbers();
    QuotientModule k = QuotientModule::residue_field(R);
    int cutoff = ring_depth(R) + 1;
    Resolution a = resolve_quotient(k, cutoff);
    Resolution b = resolve_quotient(k, cutoff + 3);
    CHECK(a.complete == b.complete);
}

TEST_CASE("regularity from Betti tables") {
    auto S = plane();
    QuotientModule free{S, 1, {0}, Submodule::zero(S, 1, {0})};
    CHECK(regularity_quotient(free) == 0);
    for (std::uint32_t d = 2; d <= 4; ++d) {
        QuotientModule hyp{S, 1, {0}, Submodule::ideal(S, {pterm(S, {d, 0})})};
        CHECK(regularity_quotient(hyp) == static_cast<int>(d) - 1);
    }
}

TEST_CASE("first Betti numbers match the minimal generators") {
    auto S = plane();
    Submodule N = Submodule::ideal(S, {pterm(S, {2, 0}), pterm(S, {1, 1}), pterm(S, {0, 3})});
    Resolution res = resolve_submodule(N, 4);
    BettiTable b = betti_table(res);
    auto mg = min_gens(N);
    std::map<int, int> by_degree;
    for (auto& g : mg) ++by_degree[g.degree(N.order())];
    for (auto& [deg, count] : by_degree) CHECK(b.beta.at({0, deg}) == count);
}

TEST_CASE("gdim evidence across ring types") {
    // free module: exact dimension zero
    auto S = plane();
    HdimReport hf = gdim_evidence(Submodule::free_module(S, 1, {0}), 3);
    CHECK(hf.verdict == Verdict::finite);
    CHECK_FALSE(hf.evidence_only);
    CHECK(hf.value == 0);

    // residue field over the dual numbers: all Ext vanish, biduality holds
    auto R = dual_numbers();
    HdimReport hk = gdim_evidence_quotient(QuotientModule::residue_field(R), 4);
    CHECK(hk.verdict == Verdict::finite);
    CHECK(hk.evidence_only);
    CHECK(hk.all_ext_vanish);
    CHECK(hk.dual_ext_vanish);
    CHECK(hk.biduality);

    // residue field over the fat point: exact infinite via nonvanishing Ext
    auto S2 = plane();
    auto fat = GradedRing::make(Field::rationals(), {"x", "y"},
                                {pterm(S2, {2, 0}), pterm(S2, {1, 1}), pterm(S2, {0, 2})});
    HdimReport hi = gdim_evidence_quotient(QuotientModule::residue_field(fat), 3);
    CHECK(hi.verdict == Verdict::infinite);
    CHECK_FALSE(hi.evidence_only);
}

TEST_CASE("resolutions over the quadric hypersurface certify infinite dimension") {
    auto space = GradedRing::make(Field::rationals(), {"x", "y", "z"});
    auto R = GradedRing::make(Field::rationals(), {"x", "y", "z"},
                              {psum(space, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}})});
    CHECK(R->krull_dim() == 2);
    CHECK(ring_depth(R) == 2);
    HdimReport h = projdim(Submodule::irrelevant(R));
    CHECK(h.verdict == Verdict::infinite);
}
