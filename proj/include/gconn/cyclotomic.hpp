#pragma once

#include "gconn/rational.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gconn {

// Largest conductor we ever work in. Orders in practice stay <= 60 (lcm of a
// Coxeter number with a user-supplied literal order); the guard catches
// accidental blowup in lcm chains.
constexpr unsigned kMaxCyclotomicOrder = 600;

// Dense monic cyclotomic polynomial Phi_m, ascending coefficients.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}, reduced
// mod Phi_m. Rationals are stored with order 1.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : order_(1), c_(1, r) {}
  explicit Cyclotomic(long n) : order_(1), c_(1, Rational(n)) {}
  // coeffs given in the power basis of Q(zeta_m); reduced mod Phi_m.
  Cyclotomic(unsigned m, std::vector<Rational> coeffs);

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }
  // zeta_m^k, stored with order m/gcd(m,k).
  static Cyclotomic root_of_unity(unsigned m, long k);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  // An element is rational iff all non-constant power-basis coordinates
  // vanish (1 is a basis vector in every order).
  bool is_rational() const;
  Rational rational_value() const; // pre: is_rational()
  // Constant power-basis coordinate; equals the element iff is_rational().
  Rational rational_coordinate() const { return c_[0]; }

  // Re-express in Q(zeta_M); m must divide M.
  Cyclotomic lifted_to(unsigned M) const;
  // Canonical form: smallest order m' | m whose field contains the element.
  Cyclotomic normalized() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic inverse() const; // pre: nonzero
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // Total order on canonical forms (order, then lex on coordinates).
  static int compare(const Cyclotomic& a, const Cyclotomic& b);
  bool operator<(const Cyclotomic& o) const { return compare(*this, o) < 0; }

  // Galois action zeta -> zeta^k, k coprime to order.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }

  // Literal syntax, e.g. "3", "-1/2*z8^3 + z8", "z3^2-z3".
  std::string to_string() const;

 private:
  void collapse_rational();
  unsigned order_;
  std::vector<Rational> c_;
};

Cyclotomic operator*(const Rational& r, const Cyclotomic& x);

unsigned euler_phi(unsigned m);
unsigned lcm_order(unsigned a, unsigned b);

} // namespace gconn
