#pragma once

#include "gconn/matrix.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gconn {

struct SimpleType {
  char family = 'A'; // 'A'..'G'
  int rank = 1;
  bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
  bool operator<(const SimpleType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  int coxeter_number() const;
  int dimension() const; // dim of the corresponding simple Lie algebra
  int root_count() const { return dimension() - rank; }
};

// Parse "D4", "A13", ... with family/rank validation (A>=1, B>=2, C>=2,
// D>=4, E in {6,7,8}, F=4, G=2).
std::optional<SimpleType> parse_simple_type(const std::string& token);

struct RootSystemData;
using RootSystemPtr = std::shared_ptr<const RootSystemData>;

// Simple-index permutation preserving the Cartan matrix, extended to a
// signed permutation of the Chevalley basis (pinned automorphism).
struct PinnedAutomorphism {
  std::vector<int> simple_perm;  // image of each simple index
  int order = 1;
  std::vector<int> root_perm;    // image root index per root index
  std::vector<int> root_sign;    // +-1 per root index
};

// Weyl group element: permutation of roots plus its matrix on t in
// fundamental-coweight coordinates.
struct WeylElement {
  std::vector<int> root_perm;
  ExactMatrix coweight_matrix;
};

struct FoldingInfo {
  RootSystemPtr parent;                 // simply-laced parent
  PinnedAutomorphism sigma;             // automorphism folded by
  std::vector<std::vector<int>> simple_orbits; // folded simple idx -> parent simple indices
  // Chevalley basis of the folded algebra inside the parent:
  // per folded basis index, sparse (parent basis index, integer coeff).
  std::vector<std::vector<std::pair<int, Integer>>> basis_in_parent;
};

struct RootSystemData {
  SimpleType type;
  int rank = 0;
  int h = 0;                        // Coxeter number
  std::vector<std::vector<int>> cartan; // C[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> dsym;            // d_i with d_j C[i][j] = d_i C[j][i]

  // Roots in simple-root coordinates; positive roots first (by height then
  // lex), then negatives in matching order: index of -alpha_k = npos + k.
  std::vector<std::vector<int>> roots;
  std::vector<int> heights;
  int npos = 0;
  int highest_root_index = 0;

  std::vector<int> exponents;       // ascending, from the height partition

  // Chevalley structure constants: n_table[p][q] = N_{p,q} for root indices
  // with root(p)+root(q) a root; 0 otherwise. sum_index[p][q] = index of the
  // sum or -1.
  std::vector<std::vector<int>> n_table;
  std::vector<std::vector<int>> sum_index;
  // Coroot of each root in the simple-coroot basis (integers).
  std::vector<std::vector<Integer>> coroot_h;

  std::shared_ptr<FoldingInfo> folding; // null for simply-laced types

  std::map<std::vector<int>, int> root_lookup;

  // ---- helpers ----
  int root_index(const std::vector<int>& coords) const; // -1 if absent
  int negative_of(int idx) const { return idx < npos ? idx + npos : idx - npos; }
  bool is_positive(int idx) const { return idx < npos; }
  // <root(idx), alpha_j^vee>
  int pairing_with_simple_coroot(int idx, int j) const;
  // alpha(H) for H given in the simple-coroot basis
  Rational root_on_cartan(int idx, const std::vector<Rational>& hcoords) const;
  // convert coweight coordinates (alpha_i(X)) to simple-coroot coordinates
  std::vector<Rational> coweight_to_coroot_basis(const std::vector<Rational>& cw) const;
  std::vector<Rational> coroot_basis_to_coweight(const std::vector<Rational>& hc) const;
};

// Cached constructor for all supported types.
RootSystemPtr build_root_system(SimpleType t);
inline RootSystemPtr build_root_system(char family, int rank) {
  return build_root_system(SimpleType{family, rank});
}

// Bourbaki Cartan matrix.
std::vector<std::vector<int>> cartan_matrix(SimpleType t);

// Bracket of two Chevalley basis elements, as a sparse integer combination.
// Basis indices: root vectors at their root index, H_i at 2*npos + i.
std::map<int, Integer> chevalley_basis_bracket(const RootSystemData& rs, int a, int b);

// All simple-index permutations preserving the Cartan matrix (includes the
// identity). For D4 this has 6 elements.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystemData& rs);

// Signed-permutation extension of a diagram automorphism.
PinnedAutomorphism pinned_automorphism(const RootSystemData& rs, const std::vector<int>& simple_perm);

// Simple reflection s_i and the Coxeter element s_1 ... s_rank.
WeylElement simple_reflection(const RootSystemData& rs, int i);
WeylElement weyl_compose(const RootSystemData& rs, const WeylElement& a, const WeylElement& b);
const WeylElement& coxeter_element(const RootSystemData& rs);
int weyl_order(const RootSystemData& rs, const WeylElement& w);

// Exponents recomputed as eigenvalue exponents of the Coxeter element
// (independent of the height-partition route).
std::vector<int> exponents_via_coxeter(const RootSystemData& rs);

// Fundamental degrees of the Levi subsystem spanned by the simple roots in
// `subset` (degrees of its Weyl group, ascending; rank-many entries with
// degree 1 entries for torus factors omitted -- returns degrees of each
// irreducible component concatenated and sorted).
std::vector<int> levi_fundamental_degrees(const RootSystemData& rs, const std::vector<int>& subset);

// Orbit of a coweight-coordinate vector under the Weyl group (BFS over
// simple reflections). Throws if the orbit exceeds `bound`.
std::vector<std::vector<Cyclotomic>> weyl_orbit(const RootSystemData& rs,
                                                const std::vector<Cyclotomic>& x,
                                                size_t bound);

// Whether some Weyl image of x satisfies `predicate`.
bool weyl_orbit_search(const RootSystemData& rs, const std::vector<Cyclotomic>& x, size_t bound,
                       const std::function<bool(const std::vector<Cyclotomic>&)>& predicate);

} // namespace gconn
