#pragma once

#include "gconn/rootsys.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gconn {

// Element of g or of the polynomial loop algebra g[t, t^-1]: sparse map from
// (Chevalley basis index, power of t) to an exact scalar. Basis indices as in
// chevalley_basis_bracket: roots at their root index, H_i at 2*npos + i.
struct LieElement {
  RootSystemPtr base;
  std::map<std::pair<int, int>, Cyclotomic> terms;

  bool is_zero() const { return terms.empty(); }
  bool has_t_dependence() const;
  void add_term(int idx, int tpow, const Cyclotomic& c);
  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement scaled(const Cyclotomic& c) const;
  LieElement t_shifted(int k) const; // multiply by t^k
  bool operator==(const LieElement& o) const;
};

inline int chevalley_dim(const RootSystemData& rs) { return 2 * rs.npos + rs.rank; }

LieElement lie_zero(RootSystemPtr base);
LieElement lie_basis(RootSystemPtr base, int idx, int tpow = 0);
// H in the simple-coroot basis: sum c_j H_j.
LieElement cartan_element(RootSystemPtr base, const std::vector<Rational>& coroot_coords);
// X in fundamental-coweight coordinates (alpha_i(X) = coords[i]).
LieElement cartan_from_coweight(RootSystemPtr base, const CycVector& coords);
// N = sum of negative simple root vectors; E = highest root vector.
LieElement principal_nilpotent_n(RootSystemPtr base);
LieElement highest_root_e(RootSystemPtr base);

LieElement bracket(const LieElement& x, const LieElement& y);

// ad(x) on the Chevalley basis of g; requires no t-dependence.
ExactMatrix ad_matrix(const LieElement& x);

size_t centraliser_dim(const LieElement& x);

// (semisimple, nilpotent) parts; exact, via the squarefree part of the
// minimal polynomial of ad(x) and a Newton iteration, pulled back through ad
// with the Killing form.
std::pair<LieElement, LieElement> jordan_decomposition(const LieElement& x);

bool is_nilpotent(const LieElement& x);
bool is_regular_semisimple(const LieElement& x);

// Basis indices of g_i for the Coxeter Z/h grading: Cartan for i = 0, root
// spaces of height = i (mod h) otherwise.
std::vector<int> coxeter_graded_piece(const RootSystemData& rs, int i);

enum class Dichotomy { Nilpotent, RegularSemisimple };
// v homogeneous of degree i with gcd(i, h) = 1: regular semisimple iff v has
// a nonzero coefficient on every root of height = i (mod h).
Dichotomy kostant_dichotomy_test(const RootSystemData& rs, int i, const LieElement& v);

// Kostant's Cartan t' = Z(N+E) with its Z/h grading; pieces[i] spans t'_i,
// dim = #{exponents = i mod h}; t'_0 is empty.
struct GradedCartanBasis {
  std::map<int, std::vector<LieElement>> pieces;
};
const GradedCartanBasis& kostant_cartan(const RootSystemData& rs);

// Y in the span of `subspace` with [Y, a] = target, if the system is
// consistent.
std::optional<LieElement> solve_bracket(const LieElement& a, const LieElement& target,
                                        const std::vector<LieElement>& subspace);

LieElement pinned_automorphism_action(const RootSystemData& rs, const PinnedAutomorphism& sigma,
                                      const LieElement& x);

// Basis of the sigma-fixed subspace of t in fundamental-coweight
// coordinates: indicator vectors of the sigma-orbits on simple roots.
std::vector<std::vector<Rational>> fixed_cartan_subspace(const RootSystemData& rs,
                                                         const std::vector<int>& simple_perm);

std::string lie_to_string(const LieElement& x);

} // namespace gconn
