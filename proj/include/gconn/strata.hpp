#pragma once

#include "gconn/liealg.hpp"

#include <map>
#include <vector>

namespace gconn {

// Basis of the Iwahori graded piece of degree m + i/h (0 <= i < h):
// t^m * (root spaces of height i), t^{m+1} * (root spaces of height i - h),
// and t^m * Cartan when i = 0.
std::vector<LieElement> iwahori_piece(RootSystemPtr base, int m, int i);

// Opposite convention: heights -i at t^m and h - i at t^{m+1}.
std::vector<LieElement> opposite_iwahori_piece(RootSystemPtr base, int m, int i);

// Basis of the degree -i/h piece of the Cartan c = Z(N + t^{-1}E) of the
// loop algebra, i > 0. Writing i = m*h + s with 0 < s <= h, each basis
// vector X + Y of t'_{-s} (X the negative-height part, Y the positive-height
// part) maps to t^{-m} (X + t^{-1} Y). Empty unless s is congruent to an
// exponent mod h.
std::vector<LieElement> coxeter_cartan_piece(RootSystemPtr base, int i);

// One generator omega_{-s} per exponent s (two for a doubled exponent),
// omega_{-s} spanning the degree -s/h piece; omega_{-1} = N + t^{-1} E.
struct CoxeterOmegaBasis {
  std::map<int, std::vector<LieElement>> omega; // keyed by s
};
CoxeterOmegaBasis omega_basis(RootSystemPtr base);

// A point of the moduli space A(C, r/h): a polar part
// sum_i coeffs[i] with coeffs[i] in the degree -i/h piece of c,
// coeffs[r] != 0, gcd(r, h) = 1.
struct FormalType {
  RootSystemPtr base;
  int r = 0;
  std::map<int, LieElement> coeffs; // only nonzero entries are stored
};

// Builds a FormalType from coordinates w.r.t. the coxeter_cartan_piece
// bases; throws if gcd(r,h) != 1 or the depth-r coefficient vanishes.
FormalType make_formal_type(RootSystemPtr base, int r,
                            const std::map<int, CycVector>& coords);

// Structural check of the FormalType invariants; throws on violation.
void validate_formal_type(const FormalType& ft);

Rational slope(const FormalType& ft);

struct Stratum {
  Rational depth;   // i/h with gcd(i, h) = 1
  LieElement beta0; // homogeneous element of the graded piece of degree -depth
};

// Semistability of the stratum: true iff beta0 is non-nilpotent, which at
// the barycentre point is equivalent to regular semisimplicity.
bool is_fundamental(const Stratum& st);

// zeta_h^k acting on the degree -i/h piece by zeta_h^{k*i}.
FormalType mu_h_action(const FormalType& ft, int k);

// Lexicographically least element of the mu_h orbit; constant on orbits.
FormalType canonical_orbit_representative(const FormalType& ft);

bool formal_types_equal(const FormalType& a, const FormalType& b);

// True iff b = mu_h_action(a, k) for some k.
bool equivalent_formal_types(const FormalType& a, const FormalType& b);

} // namespace gconn
