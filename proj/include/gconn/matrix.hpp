#pragma once

#include "gconn/cyclotomic.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gconn {

using CycVector = std::vector<Cyclotomic>;
// Dense polynomial over the cyclotomic field, ascending coefficients.
using CycPoly = std::vector<Cyclotomic>;

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static ExactMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Cyclotomic& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  CycVector apply(const CycVector& v) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Cyclotomic& c) const;
  ExactMatrix shifted(const Cyclotomic& c) const; // this + c*I
  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  size_t rank() const;
  // Basis of the right kernel, reduced echelon shape, deterministic; each
  // basis vector is normalized so its pivot coordinate is 1.
  std::vector<CycVector> kernel_basis() const;
  // One solution of this * x = b, if consistent.
  std::optional<CycVector> solve(const CycVector& b) const;
  ExactMatrix inverse() const; // pre: square, invertible

  // Monic characteristic polynomial det(xI - this), via exact Hessenberg
  // reduction; O(n^3) field operations.
  CycPoly characteristic_polynomial() const;

  // All integers k with det(this - k) == 0. Uses the Schur bound
  // sum |lambda|^2 <= sum |entry|^2 to bound the scan range.
  std::vector<long> integer_eigenvalues() const;

 private:
  size_t rows_, cols_;
  std::vector<Cyclotomic> a_;
};

// ---- polynomial helpers over the cyclotomic field ----

CycPoly poly_trim(CycPoly p);
long poly_deg(const CycPoly& p); // -1 for zero polynomial
CycPoly poly_mul(const CycPoly& a, const CycPoly& b);
CycPoly poly_add(const CycPoly& a, const CycPoly& b);
// Division with remainder, b nonzero.
std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& a, const CycPoly& b);
CycPoly poly_derivative(const CycPoly& p);
CycPoly poly_monic(CycPoly p);
CycPoly poly_gcd(CycPoly a, CycPoly b);
// Product of distinct irreducible factors: p / gcd(p, p').
CycPoly poly_squarefree_part(const CycPoly& p);
Cyclotomic poly_eval(const CycPoly& p, const Cyclotomic& x);
ExactMatrix poly_eval_matrix(const CycPoly& p, const ExactMatrix& m);
CycPoly poly_lcm(const CycPoly& a, const CycPoly& b);

// Minimal polynomial, exact: lcm of the minimal polynomials of all unit
// Krylov seeds (verified annihilator by construction).
CycPoly minimal_polynomial(const ExactMatrix& m);

} // namespace gconn
