#include <doctest.h>

#include <sstream>

#include "rrlab/corpus.hpp"
#include "test_helpers.hpp"

using namespace rrlab;

TEST_CASE("parsing a small session") {
    SessionScript s = parse_script("ring S = poly(Q; x, y); module M = ideal(x^3, y^3); rho M;");
    REQUIRE(s.statements.size() == 3);
    auto& ring = std::get<RingDecl>(s.statements[0]);
    CHECK(ring.name == "S");
    CHECK(ring.vars == std::vector<std::string>{"x", "y"});
    auto& mod = std::get<ModuleDecl>(s.statements[1]);
    CHECK(mod.kind == ModuleKind::ideal);
    CHECK(mod.gens.size() == 2);
    CHECK(mod.over == "S");
    auto& cmd = std::get<Command>(s.statements[2]);
    CHECK(cmd.verb == "rho");
    CHECK(cmd.names == std::vector<std::string>{"M"});
}

TEST_CASE("inhomogeneous generators are rejected with their position") {
    std::string text = "ring S = poly(Q; x, y); module M = ideal(x^2 + y);";
    std::size_t pos = text.find("x^2 + y");
    try {
        parse_script(text);
        FAIL("expected a parse error");
    } catch (const parse_error& ex) {
        CHECK(ex.line == 1);
        CHECK(ex.col == static_cast<int>(pos) + 1);
        CHECK(std::string(ex.what()).find("inhomogeneous generator") != std::string::npos);
    }
}

TEST_CASE("quotient rings parse and reject improper ideals") {
    SessionScript s = parse_script("ring R = poly(Q; x, y) / (x^2); rho R;");
    REQUIRE(s.statements.size() == 2);
    CHECK(std::get<RingDecl>(s.statements[0]).defining.size() == 1);
    CHECK_THROWS_AS(parse_script("ring R = poly(Q; x, y) / (1 + 0);"), parse_error);
    CHECK_THROWS_AS(parse_script("ring R = poly(Fp<6>; x, y);"), parse_error);
    CHECK_THROWS_AS(parse_script("ring R = poly(Q; x, y); badcmd R;"), parse_error);
    CHECK_THROWS_AS(parse_script("ring R = poly(Q; x, y); rho Z;"), parse_error);
}

TEST_CASE("pretty-printing reparses to an equal session") {
    std::string text =
        "ring S = poly(Q; x, y);\n"
        "ring R = poly(Fp<32003>; x, y) / (x^2 - y^2, x*y);\n"
        "module M = ideal(x^3, y^3) over S;\n"
        "module K = cyclic(x, y) over R;\n"
        "module C = coker([[x, y], [0, x]]) over R;\n"
        "rho M;\n"
        "rr M 2 --mode chain;\n"
        "mfull M in S --with x + 2*y;\n"
        "resolve K --length 4;\n"
        "regcrit S --nmax 3 --evidence;\n";
    SessionScript a = parse_script(text);
    std::string printed = pretty_print(a);
    SessionScript b = parse_script(printed);
    CHECK(a == b);
    CHECK(pretty_print(b) == printed);
}

TEST_CASE("running a session produces certified records") {
    SessionScript s = parse_script("ring S = poly(Q; x, y); rho S; depth S; reg S;");
    RunConfig cfg;
    cfg.quiet = true;
    std::ostringstream log;
    Runner runner(cfg, log);
    VerificationReport rep = runner.run(s);
    REQUIRE(rep.checks().size() == 3);
    CHECK(rep.all_pass());
    CHECK(rep.checks()[0].id == "rho[S]");
    CHECK(rep.checks()[0].certificate.at("rho") == 0);
    CHECK(rep.checks()[1].certificate.at("depth") == 2);
    CHECK(rep.checks()[2].certificate.at("reg") == 0);
}

TEST_CASE("filtration commands reject quotient presentations") {
    SessionScript s = parse_script("ring S = poly(Q; x, y); module K = cyclic(x, y); rho K;");
    RunConfig cfg;
    cfg.quiet = true;
    std::ostringstream log;
    Runner runner(cfg, log);
    CHECK_THROWS_AS(runner.run(s), algebra_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    std::string text =
        "ring R = poly(Q; x, y) / (x^2);\n"
        "module N = ideal(x*y, y^2);\n"
        "superficial R; rho R; mfull N in R; projdim N; gdim R --bound 3;\n";
    auto run_once = [&] {
        RunConfig cfg;
        cfg.quiet = true;
        cfg.lab.seed = 0;
        std::ostringstream log;
        Runner runner(cfg, log);
        return runner.run(parse_script(text)).to_json(false).dump(2);
    };
    std::string a = run_once();
    std::string b = run_once();
    CHECK(a == b);
}

TEST_CASE("the field override keeps verdicts stable") {
    std::string text = "ring S = poly(Q; x, y); module M = ideal(x^3, y^3); rho M; projdim M;";
    auto run_with = [&](std::optional<Field> f) {
        RunConfig cfg;
        cfg.quiet = true;
        cfg.field_override = f;
        std::ostringstream log;
        Runner runner(cfg, log);
        VerificationReport rep = runner.run(parse_script(text));
        std::vector<std::pair<std::string, bool>> verdicts;
        for (auto& c : rep.checks()) verdicts.emplace_back(c.id, c.pass);
        return verdicts;
    };
    CHECK(run_with(std::nullopt) == run_with(Field::prime(32003)));
}
