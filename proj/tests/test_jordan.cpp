#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconn/jordan.hpp"

#include <random>

using namespace gconn;

namespace {

FormalType random_formal_type(RootSystemPtr rs, int r, std::mt19937& rng) {
  std::map<int, CycVector> coords;
  for (int i = 1; i <= r; ++i) {
    size_t d = coxeter_cartan_piece(rs, i).size();
    if (d == 0) continue;
    CycVector cs;
    for (size_t j = 0; j < d; ++j)
      cs.push_back(Cyclotomic(Rational(static_cast<long>(rng() % 9)) - 4));
    coords.emplace(i, std::move(cs));
  }
  // force a nonzero leading coefficient
  auto& lead = coords.at(r);
  if (std::all_of(lead.begin(), lead.end(), [](const Cyclotomic& c) { return c.is_zero(); }))
    lead[0] = Cyclotomic(1);
  return make_formal_type(rs, r, coords);
}

} // namespace

TEST_CASE("to_jordan on omega_{-1}") {
  SUBCASE("A1: single term (-1, 2(e+f))") {
    RootSystemPtr a1 = build_root_system('A', 1);
    FormalType ft = make_formal_type(a1, 1, {{1, {Cyclotomic(1)}}});
    JordanForm jf = to_jordan(ft);
    REQUIRE(jf.terms.size() == 1);
    CHECK(jf.terms[0].first == -1);
    LieElement ef = lie_basis(a1, 0) + lie_basis(a1, 1);
    CHECK(jf.terms[0].second == ef.scaled(Cyclotomic(2)));
    CHECK(is_regular_semisimple(jf.terms[0].second));
    CHECK(jf.b == 2);
    CHECK(jf.theta_order == 2);
  }
  SUBCASE("every type: omega_{-1} maps to h(N+E)") {
    for (SimpleType t : {SimpleType{'A', 2}, SimpleType{'B', 3}, SimpleType{'D', 4},
                         SimpleType{'G', 2}, SimpleType{'F', 4}}) {
      CAPTURE(t.name());
      RootSystemPtr rs = build_root_system(t);
      std::map<int, CycVector> coords{{1, {Cyclotomic(1)}}};
      JordanForm jf = to_jordan(make_formal_type(rs, 1, coords));
      REQUIRE(jf.terms.size() == 1);
      CHECK(jf.terms[0].first == -1);
      LieElement ne = principal_nilpotent_n(rs) + highest_root_e(rs);
      CHECK(jf.terms[0].second == ne.scaled(Cyclotomic(rs->h)));
    }
  }
  SUBCASE("A2 pure depth-2/3 type gives a single (-2, x) term") {
    RootSystemPtr a2 = build_root_system('A', 2);
    JordanForm jf = to_jordan(make_formal_type(a2, 2, {{2, {Cyclotomic(1)}}}));
    REQUIRE(jf.terms.size() == 1);
    CHECK(jf.terms[0].first == -2);
    LieElement ne = principal_nilpotent_n(a2) + highest_root_e(a2);
    CHECK(bracket(jf.terms[0].second, ne).is_zero());
  }
}

TEST_CASE("Jordan term invariants") {
  std::mt19937 rng(29);
  for (SimpleType t : {SimpleType{'A', 1}, SimpleType{'A', 2}, SimpleType{'B', 2},
                       SimpleType{'A', 3}, SimpleType{'G', 2}}) {
    CAPTURE(t.name());
    RootSystemPtr rs = build_root_system(t);
    int r = rs->h + 1; // slope > 1, coprime to h
    for (int trial = 0; trial < 5; ++trial) {
      JordanForm jf = to_jordan(random_formal_type(rs, r, rng));
      CHECK(is_regular_semisimple(jf.terms.front().second));
      int prev = -r - 1;
      for (const auto& [ri, x] : jf.terms) {
        CHECK(ri > prev);
        prev = ri;
        CHECK(ri < 0);
        // -r_i is an exponent mod h
        int s = ((-ri) % rs->h + rs->h) % rs->h;
        CHECK(std::count(rs->exponents.begin(), rs->exponents.end(), s) > 0);
        // x_i is a zeta_h^{r_i} eigenvector of the Coxeter grading operator:
        // every root term has height = r_i (mod h)
        for (const auto& [key, c] : x.terms) {
          (void)c;
          CHECK(((rs->heights[key.first] - ri) % rs->h) == 0);
        }
      }
    }
  }
}

TEST_CASE("from_jordan") {
  RootSystemPtr a1 = build_root_system('A', 1);
  SUBCASE("inverse of the A1 example") {
    LieElement ef = (lie_basis(a1, 0) + lie_basis(a1, 1)).scaled(Cyclotomic(2));
    JordanForm jf{a1, 2, true, {{-1, ef}}, 2};
    FormalType ft = from_jordan(jf);
    CHECK(ft.r == 1);
    CHECK(formal_types_equal(ft, make_formal_type(a1, 1, {{1, {Cyclotomic(1)}}})));
  }
  SUBCASE("rejects a non-regular leading term") {
    JordanForm jf{a1, 2, true, {{-1, lie_basis(a1, 0).scaled(Cyclotomic(2))}}, 2};
    CHECK_THROWS(from_jordan(jf));
  }
  SUBCASE("roundtrip ft -> jordan -> ft is the identity") {
    std::mt19937 rng(31);
    for (SimpleType t : {SimpleType{'A', 1}, SimpleType{'A', 2}, SimpleType{'B', 3},
                         SimpleType{'C', 3}}) {
      CAPTURE(t.name());
      RootSystemPtr rs = build_root_system(t);
      for (int trial = 0; trial < 20; ++trial) {
        FormalType ft = random_formal_type(rs, rs->h + 1, rng);
        FormalType back = from_jordan(to_jordan(ft));
        CHECK(formal_types_equal(back, ft));
        CHECK(equivalent_formal_types(back, ft));
      }
    }
  }
  SUBCASE("roundtrip jordan -> ft -> jordan") {
    RootSystemPtr a2 = build_root_system('A', 2);
    std::mt19937 rng(37);
    FormalType ft = random_formal_type(a2, 4, rng);
    JordanForm jf = to_jordan(ft);
    CHECK(jordan_forms_equal(to_jordan(from_jordan(jf)), jf));
  }
}

TEST_CASE("local differential Galois data") {
  SUBCASE("single leading term of depth 1/h gives dim H = phi(h)") {
    for (SimpleType t : {SimpleType{'A', 1}, SimpleType{'A', 4}, SimpleType{'B', 3},
                         SimpleType{'D', 4}, SimpleType{'G', 2}, SimpleType{'F', 4},
                         SimpleType{'E', 6}}) {
      CAPTURE(t.name());
      RootSystemPtr rs = build_root_system(t);
      JordanForm jf = to_jordan(make_formal_type(rs, 1, {{1, {Cyclotomic(1)}}}));
      LocalGaloisData d = local_galois_group(jf);
      CHECK(d.dim_h == static_cast<int>(euler_phi(rs->h)));
      CHECK(d.theta_order == rs->h);
      CHECK(d.annihilator.size() == static_cast<size_t>(rs->rank) - euler_phi(rs->h));
    }
  }
  SUBCASE("terms spanning all of t' give dim H = rank") {
    std::mt19937 rng(41);
    for (SimpleType t : {SimpleType{'A', 2}, SimpleType{'A', 3}, SimpleType{'B', 3}}) {
      CAPTURE(t.name());
      RootSystemPtr rs = build_root_system(t);
      // depth h+1 with generic coefficients hits every exponent class
      std::map<int, CycVector> coords;
      for (int i = 1; i <= rs->h + 1; ++i) {
        size_t dsz = coxeter_cartan_piece(rs, i).size();
        if (!dsz) continue;
        CycVector cs;
        for (size_t j = 0; j < dsz; ++j)
          cs.push_back(Cyclotomic(Rational(1 + static_cast<long>(rng() % 5))));
        coords.emplace(i, cs);
      }
      LocalGaloisData d = local_galois_group(to_jordan(make_formal_type(rs, rs->h + 1, coords)));
      CHECK(d.dim_h == rs->rank);
      CHECK(d.annihilator.empty());
    }
  }
  SUBCASE("A1 FG case: dim H = 1") {
    RootSystemPtr a1 = build_root_system('A', 1);
    LocalGaloisData d =
        local_galois_group(to_jordan(make_formal_type(a1, 1, {{1, {Cyclotomic(1)}}})));
    CHECK(d.dim_h == 1);
  }
}
