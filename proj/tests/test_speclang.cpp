#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconn/report.hpp"
#include "gconn/speclang.hpp"

using namespace gconn;

TEST_CASE("cyclotomic literals") {
  CHECK(parse_cyclotomic("2") == Cyclotomic(2));
  CHECK(parse_cyclotomic("-2") == Cyclotomic(-2));
  CHECK(parse_cyclotomic("1/2") == Cyclotomic(Rational(1) / 2));
  CHECK(parse_cyclotomic("z3") == Cyclotomic::root_of_unity(3, 1));
  CHECK(parse_cyclotomic("z8^3") == Cyclotomic::root_of_unity(8, 3));
  CHECK(parse_cyclotomic("1/2*z8^3 - 2") ==
        Cyclotomic(Rational(1) / 2) * Cyclotomic::root_of_unity(8, 3) - Cyclotomic(2));
  CHECK(parse_cyclotomic("z3 + z3^2") == Cyclotomic(-1));
  CHECK(parse_cyclotomic(" 3 * z5 ") == Cyclotomic(3) * Cyclotomic::root_of_unity(5, 1));
  CHECK(parse_cyclotomic("2+3") == Cyclotomic(5));

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(parse_cyclotomic(""), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("z"), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("z0"), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("1/2*"), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("2 2"), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("q5"), ParseError);
    try {
      parse_cyclotomic("1 + q");
    } catch (const ParseError& e) {
      CHECK(e.col == 5);
    }
  }
}

TEST_CASE("spec documents") {
  SUBCASE("FG defaults") {
    SpecDocument d = parse_spec_document("[connection]\ngroup = D4\n");
    CHECK(d.spec.base->type == SimpleType{'D', 4});
    CHECK(d.spec.kind == ConnectionKind::GeneralizedFG);
    CHECK(d.spec.a == Cyclotomic(1));
    REQUIRE(d.spec.x.size() == 4);
    CHECK(d.spec.x[0].is_zero());
    CHECK(d.format == "human");
  }
  SUBCASE("full document") {
    SpecDocument d = parse_spec_document(
        "# a comment\n"
        "[connection]\n"
        "group = A3\n"
        "kind = fg\n"
        "a = 2\n"
        "x = z7, 0, z7   # coweight coordinates\n"
        "[options]\n"
        "format = machine\n"
        "orbit_bound = 5000\n"
        "b3_mode = b3\n");
    CHECK(d.spec.x[0] == Cyclotomic::root_of_unity(7, 1));
    CHECK(d.spec.x[1].is_zero());
    CHECK(d.format == "machine");
    CHECK(d.options.orbit_bound == 5000);
    CHECK(!d.options.b3_via_d4);
  }
  SUBCASE("coxeter document builds the formal type") {
    SpecDocument d = parse_spec_document(
        "[connection]\n"
        "group = A2\n"
        "kind = coxeter\n"
        "r = 2\n"
        "coeff_1 = 3\n"
        "coeff_2 = z3\n");
    REQUIRE(d.spec.formal_type.has_value());
    CHECK(d.spec.formal_type->r == 2);
    CHECK(slope(*d.spec.formal_type) == Rational(2) / 3);
  }
  SUBCASE("airy residue") {
    SpecDocument d = parse_spec_document(
        "[connection]\ngroup = A2\nkind = airy\nz = 1, 0\n");
    REQUIRE(d.spec.z.has_value());
    CHECK((*d.spec.z)[0] == Cyclotomic(1));
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(parse_spec_document("[connection]\nkind = fg\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("[connection]\ngroup = H3\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("[connection]\ngroup = A2\nx = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("[connection]\ngroup = A2\nbogus = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("[connection]\ngroup = A2\na = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("[connection]\ngroup = A2\nkind = coxeter\nr = 2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_spec_document("[connection]\ngroup = A2\nz = 1, 0\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("[bogus]\nx = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_document("group = A2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_spec_document("[connection]\ngroup = A2\n[options]\nformat = yaml\n"),
        ParseError);
  }
  SUBCASE("parse errors carry the offending line") {
    try {
      parse_spec_document("[connection]\ngroup = A2\nx = 1, q\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
}

TEST_CASE("reports") {
  SpecDocument d = parse_spec_document("[connection]\ngroup = D4\n");
  Report rep = build_report(d.spec, d.options);

  SUBCASE("human output mentions the key facts") {
    std::string h = render_human(rep);
    CHECK(h.find("G2") != std::string::npos);
    CHECK(h.find("1/6") != std::string::npos);
    CHECK(h.find("rigid: yes") != std::string::npos);
  }
  SUBCASE("machine output is deterministic and round-trips") {
    std::string m1 = render_machine(rep);
    std::string m2 = render_machine(build_report(d.spec, d.options));
    CHECK(m1 == m2);
    ParsedReport p = parse_machine_report(m1);
    CHECK(p.group == "G2");
    CHECK(p.realisation == "PinnedFixedPoint(3)");
    CHECK(p.connected);
    CHECK(p.rigid);
    CHECK(p.slope == Rational(1) / 6);
    CHECK(p.dim_h == 2);
    CHECK(p.theta_order == 6);
  }
  SUBCASE("undetermined verdict round-trips as null group") {
    SpecDocument bad = parse_spec_document("[connection]\ngroup = A1\nx = 1/2\n");
    Report r = build_report(bad.spec, bad.options);
    ParsedReport p = parse_machine_report(render_machine(r));
    CHECK(p.group == "undetermined");
    CHECK(!p.connected);
  }
}
