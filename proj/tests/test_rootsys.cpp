#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconn/rootsys.hpp"

#include <map>
#include <numeric>

using namespace gconn;

namespace {

const std::map<std::string, std::vector<int>> kExponents = {
    {"A1", {1}},
    {"A2", {1, 2}},
    {"A3", {1, 2, 3}},
    {"A4", {1, 2, 3, 4}},
    {"B2", {1, 3}},
    {"B3", {1, 3, 5}},
    {"B4", {1, 3, 5, 7}},
    {"C3", {1, 3, 5}},
    {"C4", {1, 3, 5, 7}},
    {"D4", {1, 3, 3, 5}},
    {"D5", {1, 3, 4, 5, 7}},
    {"G2", {1, 5}},
    {"F4", {1, 5, 7, 11}},
    {"E6", {1, 4, 5, 7, 8, 11}},
    {"E7", {1, 5, 7, 9, 11, 13, 17}},
    {"E8", {1, 7, 11, 13, 17, 19, 23, 29}},
};

std::vector<SimpleType> all_test_types() {
  std::vector<SimpleType> out;
  for (const auto& [name, _] : kExponents) out.push_back(*parse_simple_type(name));
  return out;
}

} // namespace

TEST_CASE("type parsing") {
  CHECK(parse_simple_type("D4")->name() == "D4");
  CHECK(parse_simple_type("A17").has_value());
  CHECK(!parse_simple_type("A18").has_value());
  CHECK(!parse_simple_type("B1").has_value());
  CHECK(!parse_simple_type("D3").has_value());
  CHECK(!parse_simple_type("E9").has_value());
  CHECK(!parse_simple_type("F5").has_value());
  CHECK(!parse_simple_type("H3").has_value());
  CHECK(!parse_simple_type("A").has_value());
}

TEST_CASE("root counts, Coxeter numbers, exponents") {
  for (SimpleType t : all_test_types()) {
    CAPTURE(t.name());
    RootSystemPtr rs = build_root_system(t);
    CHECK(static_cast<int>(rs->roots.size()) == t.root_count());
    CHECK(rs->h == t.coxeter_number());
    CHECK(rs->exponents == kExponents.at(t.name()));
    // exponents pair up as m and h - m
    for (int i = 0; i < rs->rank; ++i)
      CHECK(rs->exponents[i] + rs->exponents[rs->rank - 1 - i] == rs->h);
    // negative roots mirror positives
    for (int i = 0; i < rs->npos; ++i) {
      CHECK(rs->negative_of(i) == i + rs->npos);
      CHECK(rs->heights[i + rs->npos] == -rs->heights[i]);
    }
  }
}

TEST_CASE("exponents recomputed from the Coxeter element agree") {
  for (SimpleType t : all_test_types()) {
    CAPTURE(t.name());
    RootSystemPtr rs = build_root_system(t);
    CHECK(exponents_via_coxeter(*rs) == rs->exponents);
    CHECK(weyl_order(*rs, coxeter_element(*rs)) == rs->h);
  }
}

TEST_CASE("symmetrizer lengths") {
  CHECK(build_root_system('B', 3)->dsym == std::vector<int>{2, 2, 1});
  CHECK(build_root_system('C', 3)->dsym == std::vector<int>{1, 1, 2});
  CHECK(build_root_system('G', 2)->dsym == std::vector<int>{1, 3});
  CHECK(build_root_system('F', 4)->dsym == std::vector<int>{2, 2, 1, 1});
  CHECK(build_root_system('A', 3)->dsym == std::vector<int>{1, 1, 1});
}

TEST_CASE("structure constants are antisymmetric and respect root strings") {
  for (SimpleType t : all_test_types()) {
    if (t.rank > 6) continue; // keep the quadratic scan small
    CAPTURE(t.name());
    RootSystemPtr rs = build_root_system(t);
    const int nroots = 2 * rs->npos;
    for (int p = 0; p < nroots; ++p)
      for (int q = 0; q < nroots; ++q) {
        if (p == q || rs->negative_of(p) == q) continue;
        CHECK(rs->n_table[p][q] == -rs->n_table[q][p]);
        int s = rs->sum_index[p][q];
        if (s < 0) {
          CHECK(rs->n_table[p][q] == 0);
          continue;
        }
        CHECK(rs->n_table[p][q] != 0);
        // |N(a,b)| = q+1 where q is the length of the a-string below b
        int steps = 0;
        std::vector<int> down = rs->roots[q];
        for (;;) {
          for (int k = 0; k < rs->rank; ++k) down[k] -= rs->roots[p][k];
          if (rs->root_index(down) < 0) break;
          ++steps;
        }
        CHECK(std::abs(rs->n_table[p][q]) == steps + 1);
        // N(-a,-b) = -N(a,b)
        CHECK(rs->n_table[rs->negative_of(p)][rs->negative_of(q)] == -rs->n_table[p][q]);
      }
  }
}

TEST_CASE("coroots") {
  for (SimpleType t : all_test_types()) {
    CAPTURE(t.name());
    RootSystemPtr rs = build_root_system(t);
    // simple coroots are unit vectors
    for (int i = 0; i < rs->rank; ++i) {
      std::vector<int> e(rs->rank, 0);
      e[i] = 1;
      int idx = rs->root_index(e);
      for (int j = 0; j < rs->rank; ++j) CHECK(rs->coroot_h[idx][j] == (i == j ? 1 : 0));
    }
    // <theta, alpha_i^vee> >= 0 for the highest root
    for (int j = 0; j < rs->rank; ++j)
      CHECK(rs->pairing_with_simple_coroot(rs->highest_root_index, j) >= 0);
  }
  // the highest root of B2 is long; its coroot is (1,1)
  RootSystemPtr b2 = build_root_system('B', 2);
  CHECK(b2->coroot_h[b2->highest_root_index] == std::vector<Integer>{1, 1});
  // E8: highest-root coroot equals the marks (2,3,4,6,5,4,3,2)
  RootSystemPtr e8 = build_root_system('E', 8);
  CHECK(e8->coroot_h[e8->highest_root_index] ==
        std::vector<Integer>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(*build_root_system('A', 1)).size() == 1);
  CHECK(diagram_automorphisms(*build_root_system('A', 2)).size() == 2);
  CHECK(diagram_automorphisms(*build_root_system('A', 3)).size() == 2);
  CHECK(diagram_automorphisms(*build_root_system('D', 4)).size() == 6);
  CHECK(diagram_automorphisms(*build_root_system('D', 5)).size() == 2);
  CHECK(diagram_automorphisms(*build_root_system('E', 6)).size() == 2);
  CHECK(diagram_automorphisms(*build_root_system('E', 7)).size() == 1);
  CHECK(diagram_automorphisms(*build_root_system('B', 3)).size() == 1);
  CHECK(diagram_automorphisms(*build_root_system('G', 2)).size() == 1);
}

TEST_CASE("pinned automorphisms square (or cube) to the identity") {
  struct Case {
    char fam;
    int rank;
    std::vector<int> perm;
    int order;
  };
  std::vector<Case> cases = {
      {'A', 3, {2, 1, 0}, 2},
      {'D', 4, {2, 1, 3, 0}, 3},
      {'D', 5, {0, 1, 2, 4, 3}, 2},
      {'E', 6, {5, 1, 4, 3, 2, 0}, 2},
  };
  for (const auto& c : cases) {
    RootSystemPtr rs = build_root_system(c.fam, c.rank);
    PinnedAutomorphism a = pinned_automorphism(*rs, c.perm);
    CHECK(a.order == c.order);
    const int nroots = 2 * rs->npos;
    for (int idx = 0; idx < nroots; ++idx) {
      int cur = idx, sgn = 1;
      for (int k = 0; k < a.order; ++k) {
        sgn *= a.root_sign[cur];
        cur = a.root_perm[cur];
      }
      CHECK(cur == idx);
      CHECK(sgn == 1);
    }
  }
}

TEST_CASE("folded types carry their parent embedding") {
  struct Case {
    const char* name;
    const char* parent;
    int sigma_order;
  };
  for (auto c : std::vector<Case>{{"B2", "A3", 2},
                                  {"B3", "D4", 2},
                                  {"B4", "D5", 2},
                                  {"C2", "A3", 2},
                                  {"C3", "A5", 2},
                                  {"C4", "A7", 2},
                                  {"F4", "E6", 2},
                                  {"G2", "D4", 3}}) {
    CAPTURE(c.name);
    RootSystemPtr rs = build_root_system(*parse_simple_type(c.name));
    REQUIRE(rs->folding != nullptr);
    CHECK(rs->folding->parent->type.name() == c.parent);
    CHECK(rs->folding->sigma.order == c.sigma_order);
    // basis covers roots and the folded Cartan
    CHECK(rs->folding->basis_in_parent.size() == rs->roots.size() + rs->rank);
  }
  CHECK(build_root_system('A', 4)->folding == nullptr);
  CHECK(build_root_system('E', 7)->folding == nullptr);
}

TEST_CASE("B2 and C2 are the same abstract system with swapped labels") {
  RootSystemPtr b2 = build_root_system('B', 2);
  RootSystemPtr c2 = build_root_system('C', 2);
  CHECK(b2->cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(c2->cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  CHECK(b2->roots.size() == 8);
  CHECK(c2->roots.size() == 8);
}

TEST_CASE("Weyl reflections act correctly on coweights") {
  RootSystemPtr a2 = build_root_system('A', 2);
  WeylElement s0 = simple_reflection(*a2, 0);
  // s_0 fixes the second fundamental coweight and negates pairing with alpha_0
  CycVector x{Cyclotomic(3), Cyclotomic(1)};
  CycVector y = s0.coweight_matrix.apply(x);
  CHECK(y[0] == Cyclotomic(-3));
  CHECK(y[1] == Cyclotomic(4)); // x_1 - C[1][0] x_0 = 1 + 3
  // involutions
  CHECK(weyl_order(*a2, s0) == 2);
  WeylElement s0s0 = weyl_compose(*a2, s0, s0);
  CHECK(s0s0.coweight_matrix == ExactMatrix::identity(2));
}

TEST_CASE("Weyl orbits of generic coweights have order |W|") {
  auto orbit_size = [](char fam, int rank, std::vector<long> coords) {
    RootSystemPtr rs = build_root_system(fam, rank);
    CycVector x;
    for (long c : coords) x.push_back(Cyclotomic(c));
    return weyl_orbit(*rs, x, 100000).size();
  };
  CHECK(orbit_size('A', 2, {1, 2}) == 6);
  CHECK(orbit_size('B', 2, {1, 2}) == 8);
  CHECK(orbit_size('G', 2, {1, 2}) == 12);
  CHECK(orbit_size('A', 3, {1, 2, 3}) == 24);
  CHECK(orbit_size('B', 3, {1, 2, 3}) == 48);
  // non-generic: orbit of a fundamental coweight is smaller
  CHECK(orbit_size('A', 2, {1, 0}) == 3);
  // the bound aborts oversized orbits
  RootSystemPtr b3 = build_root_system('B', 3);
  CycVector gen{Cyclotomic(1), Cyclotomic(2), Cyclotomic(3)};
  CHECK_THROWS(weyl_orbit(*b3, gen, 5));
}

TEST_CASE("weyl_orbit_search finds dominant representatives") {
  RootSystemPtr rs = build_root_system('B', 3);
  CycVector x{Cyclotomic(-1), Cyclotomic(2), Cyclotomic(-3)};
  bool found = weyl_orbit_search(*rs, x, 100000, [&](const CycVector& v) {
    for (const auto& c : v) {
      Rational r = c.rational_value();
      if (r < 0) return false;
    }
    return true;
  });
  CHECK(found);
  bool impossible = weyl_orbit_search(*rs, x, 100000, [&](const CycVector& v) {
    return v[0] == Cyclotomic(100);
  });
  CHECK(!impossible);
}

TEST_CASE("Levi fundamental degrees") {
  RootSystemPtr e8 = build_root_system('E', 8);
  // E7 Levi inside E8
  CHECK(levi_fundamental_degrees(*e8, {0, 1, 2, 3, 4, 5, 6}) ==
        std::vector<int>{2, 6, 8, 10, 12, 14, 18});
  // A1 x A1 (orthogonal simple roots)
  CHECK(levi_fundamental_degrees(*e8, {0, 1}) == std::vector<int>{2, 2});
  CHECK(levi_fundamental_degrees(*e8, {}).empty());
  RootSystemPtr f4 = build_root_system('F', 4);
  // B3 Levi inside F4
  CHECK(levi_fundamental_degrees(*f4, {0, 1, 2}) == std::vector<int>{2, 4, 6});
  // C3 Levi inside F4
  CHECK(levi_fundamental_degrees(*f4, {1, 2, 3}) == std::vector<int>{2, 4, 6});
}

TEST_CASE("coweight/coroot coordinate conversions invert each other") {
  for (SimpleType t : {SimpleType{'A', 3}, SimpleType{'G', 2}, SimpleType{'F', 4}}) {
    RootSystemPtr rs = build_root_system(t);
    std::vector<Rational> cw(rs->rank);
    for (int i = 0; i < rs->rank; ++i) cw[i] = Rational(i + 1) / 3;
    auto hc = rs->coweight_to_coroot_basis(cw);
    CHECK(rs->coroot_basis_to_coweight(hc) == cw);
  }
}
