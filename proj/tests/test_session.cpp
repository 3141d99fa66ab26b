#include <catch2/catch_amalgamated.hpp>

#include <reeskit/runner.hpp>

using namespace reeskit;

TEST_CASE("session parsing") {
    SessionFile sf = parse_session(
        "field 32003\nring a b\nideal I = a^3, b^3, a*b^2\nideal J = a^3, b^3\n");
    REQUIRE(sf.p == 32003);
    REQUIRE(sf.reg->size() == 2);
    REQUIRE(sf.ideals.size() == 2);
    REQUIRE(sf.ideals.at("I").size() == 3);
    REQUIRE(sf.ideals.at("J").size() == 2);
    auto a = Polynomial::variable(sf.reg, sf.p, 0);
    auto b = Polynomial::variable(sf.reg, sf.p, 1);
    REQUIRE(sf.ideals.at("I")[2] == a * b * b);
}

TEST_CASE("session errors carry positions") {
    REQUIRE_THROWS_AS(parse_session("ring a a\n"), ParseError);
    try {
        parse_session("ring a b\nideal I = a^2, c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 2);
        REQUIRE(std::string(e.what()).find("unknown variable 'c'") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_session("ring a\nideal I = a\nideal I = a^2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_session("ring a\nideal I = a\ny I 5\n"), ParseError);
    REQUIRE_THROWS_AS(parse_session("field 32001\nring a\nideal I = a\n"), ParseError);
    REQUIRE_THROWS_AS(parse_session("ring a\nfoo bar\n"), ParseError);
    REQUIRE_THROWS_AS(parse_session("ideal I = a\n"), ParseError); // ideal before ring
    REQUIRE_THROWS_AS(parse_session(""), ParseError);              // no ring at all
}

TEST_CASE("polynomial literals") {
    auto reg = VarRegistry::make_base({"a", "b"});
    auto a = Polynomial::variable(reg, 32003, 0);
    auto b = Polynomial::variable(reg, 32003, 1);
    REQUIRE(parse_polynomial(reg, 32003, "2*a*b^2 - 3") ==
            a * b * b * Polynomial::constant(reg, 32003, 2) - Polynomial::constant(reg, 32003, 3));
    REQUIRE(parse_polynomial(reg, 32003, "-a + b") == b - a);
    REQUIRE(parse_polynomial(reg, 32003, "0").is_zero());
    REQUIRE(parse_polynomial(reg, 32003, "a^2*a") == a.pow(3));
    REQUIRE_THROWS_AS(parse_polynomial(reg, 32003, "a b"), ParseError); // no implicit product
    REQUIRE_THROWS_AS(parse_polynomial(reg, 32003, "a^"), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial(reg, 32003, ""), ParseError);
}

TEST_CASE("round trip on the canonical form") {
    std::vector<std::string> sessions = {
        "field 32003\nring a b\nideal I = a^3, b^3, a*b^2\nideal J = a^3, b^3\n",
        "field 101\nring x y\nrel x*y\nrel y^2\nideal M = x, y\ny M 2\n",
        "ring u v z t\nideal I = u*v, v*z - u*t, z*t, u*t\n",
    };
    for (const auto& text : sessions) {
        SessionFile s1 = parse_session(text);
        std::string printed = s1.print();
        SessionFile s2 = parse_session(printed);
        REQUIRE(s2.print() == printed);
        REQUIRE(s2.p == s1.p);
        REQUIRE(s2.ideal_order == s1.ideal_order);
        for (const auto& name : s1.ideal_order) {
            const auto& g1 = s1.ideals.at(name);
            const auto& g2 = s2.ideals.at(name);
            REQUIRE(g1.size() == g2.size());
            for (std::size_t i = 0; i < g1.size(); ++i) REQUIRE(g1[i] == g2[i]);
        }
    }
}

TEST_CASE("the Kuhl-family session parses to a presented ring") {
    std::string text =
        "field 32003\n"
        "ring u0 u1 u2 x y\n"
        "# the linear block\n"
        "rel u0*y\n"
        "rel u0*x - u1*y\n"
        "rel u1*x - u2*y\n"
        "rel u2*x\n"
        "# the extra relation\n"
        "rel u0*x^2\n"
        "ideal I = x, y\n";
    SessionFile sf = parse_session(text);
    REQUIRE(sf.rels.size() == 5);
    REQUIRE(sf.reg->size() == 5);
    REQUIRE(sf.ideals.at("I").size() == 2);
}

TEST_CASE("field override reparses the source text") {
    SessionFile sf = parse_session("field 5\nring a\nideal I = 6*a\n");
    auto a5 = Polynomial::variable(sf.reg, 5, 0);
    REQUIRE(sf.ideals.at("I")[0] == a5); // 6 ≡ 1 mod 5
    SessionFile sf7 = reparse_with_field(sf, 7);
    REQUIRE(sf7.ideals.at("I")[0].terms()[0].coeff == 6);
    REQUIRE_THROWS_AS(reparse_with_field(sf, 8), std::invalid_argument);
}

TEST_CASE("reports are deterministic modulo the timing field") {
    std::string text = "field 32003\nring a b\nideal I = a^3, b^3, a*b^2\nideal J = a^3, b^3\n";
    SessionFile sf = parse_session(text);
    RunFlags flags;
    flags.ideal = "I";
    flags.cap = 5;
    Report r1 = run_command("fresh", sf, flags, text);
    Report r2 = run_command("fresh", sf, flags, text);
    Json j1 = r1.to_json(), j2 = r2.to_json();
    j1.erase("timing_ms");
    j2.erase("timing_ms");
    REQUIRE(j1.dump() == j2.dump());
    REQUIRE(r1.input_hash == r2.input_hash);
}

TEST_CASE("runner basics") {
    std::string text = "field 32003\nring a b\nideal I = a^3, b^3, a*b^2\nideal J = a^3, b^3\n";
    SessionFile sf = parse_session(text);

    RunFlags member_flags;
    member_flags.ideal = "I";
    member_flags.poly = "0";
    Report r = run_command("member", sf, member_flags, text);
    REQUIRE(r.payload.at("member").get<bool>() == true);

    RunFlags rt;
    rt.ideal = "I";
    rt.cap = 5;
    REQUIRE(run_command("reltype", sf, rt, text).payload.at("relation_type").get<int>() == 3);

    RunFlags gb;
    gb.ideal = "J";
    gb.order = "lex";
    Report rg = run_command("gb", sf, gb, text);
    REQUIRE(rg.payload.at("basis").size() == 2);

    REQUIRE_THROWS_AS(run_command("nosuch", sf, rt, text), std::invalid_argument);
    RunFlags missing;
    REQUIRE_THROWS_AS(run_command("reltype", sf, missing, text), std::invalid_argument);
}

TEST_CASE("suite checks") {
    std::string text =
        "field 32003\nring a b\nideal I = a^3, b^3, a*b^2\nideal J = a^3, b^3\n"
        "#@ check reltype ideal=I cap=5 expect relation_type=3\n"
        "#@ check rednum J=J I=I expect reduction_number=2\n";
    SuiteResult res = run_suite_file(text, "inline");
    REQUIRE(res.checks == 2);
    REQUIRE(res.failures == 0);

    std::string bad = "ring a\nideal I = a\n#@ check reltype ideal=I expect relation_type=7\n";
    SuiteResult rb = run_suite_file(bad, "inline");
    REQUIRE(rb.checks == 1);
    REQUIRE(rb.failures == 1);
}
