#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconn/cyclotomic.hpp"
#include "gconn/lattice.hpp"
#include "gconn/matrix.hpp"
#include "gconn/rational.hpp"

using namespace gconn;

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3").value() == Rational(3));
  CHECK(parse_rational("-7/2").value() == Rational(-7) / 2);
  CHECK(parse_rational("+4/6").value() == Rational(2) / 3);
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("2x").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(rational_to_string(Rational(-5) / 3) == "-5/3");
  CHECK(rational_to_string(Rational(4)) == "4");
}

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(105) == 48);

  // Phi_1 = x - 1, Phi_2 = x + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2 (at x^7)
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("roots of unity satisfy their defining relations") {
  Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  Cyclotomic s = z5;
  for (int k = 2; k <= 4; ++k) s += Cyclotomic::root_of_unity(5, k);
  CHECK(s == Cyclotomic(-1));

  // zeta_5 + zeta_5^4 is a root of x^2 + x - 1
  Cyclotomic g = z5 + Cyclotomic::root_of_unity(5, 4);
  CHECK(g * g + g - Cyclotomic::one() == Cyclotomic::zero());

  // order normalization: zeta_6^2 = zeta_3
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(6, 2).order() == 3);
  CHECK(Cyclotomic::root_of_unity(8, 4) == Cyclotomic(-1));
}

TEST_CASE("cross-order arithmetic and normalization") {
  Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic z12 = Cyclotomic::root_of_unity(12, 1);
  CHECK(z4 * z3 == Cyclotomic::root_of_unity(12, 7));
  CHECK((z12 * z12 * z12) == z4);
  // an element of Q(zeta_12) that actually lives in Q(zeta_3):
  // zeta_12^2 = zeta_6 = 1 + zeta_3, and Q(zeta_6) = Q(zeta_3)
  Cyclotomic x = z12 * z12;
  CHECK(x.normalized().order() == 3);
  CHECK(x == Cyclotomic(1) + Cyclotomic::root_of_unity(3, 1));
  // 2*cos(2*pi/12) = zeta_12 + zeta_12^{-1} is a root of x^2 - 3
  Cyclotomic c = z12 + z12.conj();
  CHECK(c * c == Cyclotomic(3));
}

TEST_CASE("inverse and division") {
  Cyclotomic z8 = Cyclotomic::root_of_unity(8, 1);
  Cyclotomic x = Cyclotomic(1) + Rational(2) * z8;
  CHECK(x * x.inverse() == Cyclotomic::one());
  CHECK((x / x) == Cyclotomic::one());
  CHECK_THROWS(Cyclotomic::zero().inverse());
}

TEST_CASE("galois action permutes conjugates") {
  Cyclotomic z7 = Cyclotomic::root_of_unity(7, 1);
  Cyclotomic trace = Cyclotomic::zero();
  for (int k = 1; k <= 6; ++k) trace += z7.galois(k);
  CHECK(trace == Cyclotomic(-1));
  CHECK(z7.galois(3).galois(5) == z7.galois(15));
}

TEST_CASE("comparison gives a total order") {
  Cyclotomic a(Rational(1) / 2);
  Cyclotomic b = Cyclotomic::root_of_unity(3, 1);
  CHECK(Cyclotomic::compare(a, a) == 0);
  CHECK(Cyclotomic::compare(a, b) == -Cyclotomic::compare(b, a));
  CHECK((a < b || b < a));
  // equal elements written in different orders compare equal
  CHECK(Cyclotomic::compare(Cyclotomic::root_of_unity(6, 2).lifted_to(12),
                            Cyclotomic::root_of_unity(3, 1)) == 0);
}

TEST_CASE("to_string literal forms") {
  CHECK(Cyclotomic(Rational(-2)).to_string() == "-2");
  Cyclotomic z8 = Cyclotomic::root_of_unity(8, 1);
  Cyclotomic x = Rational(1) / 2 * (z8 * z8 * z8) - Cyclotomic(2);
  CHECK(x.to_string() == "1/2*z8^3 - 2");
}

static ExactMatrix from_longs(std::vector<std::vector<long>> rows) {
  ExactMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j) m.at(i, j) = Cyclotomic(rows[i][j]);
  return m;
}

TEST_CASE("rank, kernel, solve, inverse") {
  ExactMatrix a = from_longs({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(a.rank() == 2);
  auto ker = a.kernel_basis();
  REQUIRE(ker.size() == 1);
  // kernel of this classic singular matrix is spanned by (1, -2, 1)
  Cyclotomic t = ker[0][0];
  CHECK(ker[0][1] == Cyclotomic(-2) * t);
  CHECK(ker[0][2] == t);

  CycVector b{Cyclotomic(6), Cyclotomic(15), Cyclotomic(24)};
  auto sol = a.solve(b);
  REQUIRE(sol.has_value());
  CycVector ax = a.apply(*sol);
  CHECK(ax == b);
  CHECK(!a.solve({Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)}).has_value());

  ExactMatrix inv = from_longs({{2, 1}, {1, 1}}).inverse();
  CHECK(inv == from_longs({{1, -1}, {-1, 2}}));
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  // companion of x^3 - 2x^2 + 7x - 5
  ExactMatrix c = from_longs({{0, 0, 5}, {1, 0, -7}, {0, 1, 2}});
  CycPoly p = c.characteristic_polynomial();
  REQUIRE(p.size() == 4);
  CHECK(p[0] == Cyclotomic(-5));
  CHECK(p[1] == Cyclotomic(7));
  CHECK(p[2] == Cyclotomic(-2));
  CHECK(p[3] == Cyclotomic(1));
}

TEST_CASE("integer eigenvalues") {
  ExactMatrix m = from_longs({{2, 1, 0}, {0, -3, 1}, {0, 0, 5}});
  auto ev = m.integer_eigenvalues();
  CHECK(ev == std::vector<long>{-3, 2, 5});
  // eigenvalues that are not integers are not reported
  ExactMatrix r = from_longs({{0, -1}, {1, 0}});
  CHECK(r.integer_eigenvalues().empty());
}

TEST_CASE("minimal polynomial detects repeated blocks") {
  ExactMatrix d = from_longs({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CycPoly mp = minimal_polynomial(d);
  CHECK(poly_deg(mp) == 2);
  CHECK(poly_eval_matrix(mp, d).is_zero());
  ExactMatrix n = from_longs({{0, 1}, {0, 0}});
  CHECK(poly_deg(minimal_polynomial(n)) == 2);
  CHECK(poly_deg(minimal_polynomial(ExactMatrix::identity(4))) == 1);
}

TEST_CASE("polynomial helpers") {
  CycPoly a{Cyclotomic(-1), Cyclotomic(0), Cyclotomic(1)}; // x^2 - 1
  CycPoly b{Cyclotomic(1), Cyclotomic(1)};                 // x + 1
  auto [q, r] = poly_divmod(a, b);
  CHECK(poly_deg(r) == -1);
  CHECK(q == CycPoly{Cyclotomic(-1), Cyclotomic(1)});
  CHECK(poly_gcd(a, b) == poly_monic(b));
  // squarefree part of (x-1)^2 (x+2) is (x-1)(x+2)
  CycPoly sq = poly_mul(poly_mul(b, b), CycPoly{Cyclotomic(-2), Cyclotomic(1)});
  CycPoly sf = poly_squarefree_part(sq);
  CHECK(poly_deg(sf) == 2);
  CHECK(poly_eval(sf, Cyclotomic(-1)).is_zero());
  CHECK(poly_eval(sf, Cyclotomic(2)).is_zero());
}

TEST_CASE("integer kernel is saturated") {
  IntMatrix a{{4, 6}};
  auto k = integer_kernel(a, 2);
  REQUIRE(k.size() == 1);
  // saturated: (3, -2), not a multiple of it
  Integer g = integer_gcd({k[0][0], k[0][1]});
  CHECK(g == 1);
  CHECK(k[0][0] * 4 + k[0][1] * 6 == 0);

  IntMatrix b{{1, 2, 3}, {2, 4, 6}};
  auto kb = integer_kernel(b, 3);
  CHECK(kb.size() == 2);
  for (const auto& v : kb) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);

  IntMatrix c{{1, 0}, {0, 1}};
  CHECK(integer_kernel(c, 2).empty());
}
