#include "gconn/strata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gconn {

namespace {

int root_height(const RootSystemData& rs, int idx) { return rs.heights[idx]; }

std::vector<LieElement> height_vectors(RootSystemPtr base, int height, int tpow) {
  std::vector<LieElement> out;
  const RootSystemData& rs = *base;
  for (int idx = 0; idx < 2 * rs.npos; ++idx)
    if (root_height(rs, idx) == height) out.push_back(lie_basis(base, idx, tpow));
  return out;
}

} // namespace

std::vector<LieElement> iwahori_piece(RootSystemPtr base, int m, int i) {
  const RootSystemData& rs = *base;
  if (i < 0 || i >= rs.h) throw std::invalid_argument("iwahori_piece: need 0 <= i < h");
  std::vector<LieElement> out;
  if (i == 0) {
    for (int j = 0; j < rs.rank; ++j)
      out.push_back(lie_basis(base, 2 * rs.npos + j, m));
    return out;
  }
  out = height_vectors(base, i, m);
  for (auto& v : height_vectors(base, i - rs.h, m + 1)) out.push_back(std::move(v));
  return out;
}

std::vector<LieElement> opposite_iwahori_piece(RootSystemPtr base, int m, int i) {
  const RootSystemData& rs = *base;
  if (i < 0 || i >= rs.h) throw std::invalid_argument("opposite_iwahori_piece: need 0 <= i < h");
  std::vector<LieElement> out;
  if (i == 0) {
    for (int j = 0; j < rs.rank; ++j)
      out.push_back(lie_basis(base, 2 * rs.npos + j, m));
    return out;
  }
  out = height_vectors(base, -i, m);
  for (auto& v : height_vectors(base, rs.h - i, m + 1)) out.push_back(std::move(v));
  return out;
}

std::vector<LieElement> coxeter_cartan_piece(RootSystemPtr base, int i) {
  const RootSystemData& rs = *base;
  if (i <= 0) throw std::invalid_argument("coxeter_cartan_piece: need i > 0");
  int s = i % rs.h;
  if (s == 0) return {}; // t'_0 = 0
  int m = i / rs.h;
  std::vector<LieElement> out;
  const GradedCartanBasis& tp = kostant_cartan(rs);
  auto it = tp.pieces.find(rs.h - s); // t'_{-s}: heights h - s and -s
  if (it == tp.pieces.end()) return {};
  for (const LieElement& v : it->second) {
    LieElement w = lie_zero(base);
    for (const auto& [key, c] : v.terms) {
      int ht = root_height(rs, key.first);
      w.add_term(key.first, ht > 0 ? -m - 1 : -m, c);
    }
    out.push_back(std::move(w));
  }
  return out;
}

CoxeterOmegaBasis omega_basis(RootSystemPtr base) {
  CoxeterOmegaBasis b;
  for (int s : base->exponents)
    if (!b.omega.count(s)) b.omega.emplace(s, coxeter_cartan_piece(base, s));
  return b;
}

FormalType make_formal_type(RootSystemPtr base, int r,
                            const std::map<int, CycVector>& coords) {
  if (r <= 0 || std::gcd(r, base->h) != 1)
    throw std::invalid_argument("make_formal_type: r must be positive and coprime to h");
  FormalType ft;
  ft.base = base;
  ft.r = r;
  for (const auto& [i, cs] : coords) {
    if (i <= 0 || i > r) throw std::invalid_argument("make_formal_type: index out of range");
    std::vector<LieElement> piece = coxeter_cartan_piece(base, i);
    if (cs.size() != piece.size())
      throw std::invalid_argument("make_formal_type: coordinate count mismatch at depth " +
                                  std::to_string(i));
    LieElement v = lie_zero(base);
    for (size_t j = 0; j < cs.size(); ++j) v = v + piece[j].scaled(cs[j]);
    if (!v.is_zero()) ft.coeffs.emplace(i, std::move(v));
  }
  if (!ft.coeffs.count(r))
    throw std::invalid_argument("make_formal_type: leading coefficient must be nonzero");
  return ft;
}

void validate_formal_type(const FormalType& ft) {
  const RootSystemData& rs = *ft.base;
  if (ft.r <= 0 || std::gcd(ft.r, rs.h) != 1)
    throw std::runtime_error("formal type: r not coprime to h");
  if (!ft.coeffs.count(ft.r) || ft.coeffs.at(ft.r).is_zero())
    throw std::runtime_error("formal type: leading coefficient vanishes");
  for (const auto& [i, v] : ft.coeffs) {
    if (i <= 0 || i > ft.r) throw std::runtime_error("formal type: index out of range");
    int s = i % rs.h, m = i / rs.h;
    for (const auto& [key, c] : v.terms) {
      (void)c;
      if (key.first >= 2 * rs.npos)
        throw std::runtime_error("formal type: Cartan term in a nonzero-degree piece");
      int ht = root_height(rs, key.first);
      bool ok = (ht == -s && key.second == -m) || (ht == rs.h - s && key.second == -m - 1);
      if (!ok) throw std::runtime_error("formal type: term outside the stated graded piece");
    }
  }
}

Rational slope(const FormalType& ft) { return Rational(ft.r) / ft.base->h; }

bool is_fundamental(const Stratum& st) {
  // Collapse t-powers: within one homogeneous piece each basis index occurs
  // once, and t -> 1 identifies the piece with a Z/h-graded piece of g.
  LieElement flat = lie_zero(st.beta0.base);
  for (const auto& [key, c] : st.beta0.terms) flat.add_term(key.first, 0, c);
  return !is_nilpotent(flat);
}

FormalType mu_h_action(const FormalType& ft, int k) {
  const int h = ft.base->h;
  k = ((k % h) + h) % h;
  if (k == 0) return ft;
  FormalType out;
  out.base = ft.base;
  out.r = ft.r;
  for (const auto& [i, v] : ft.coeffs)
    out.coeffs.emplace(i, v.scaled(Cyclotomic::root_of_unity(h, static_cast<long>(k) * i)));
  return out;
}

bool formal_types_equal(const FormalType& a, const FormalType& b) {
  if (a.base->type != b.base->type || a.r != b.r) return false;
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (const auto& [i, v] : a.coeffs) {
    auto it = b.coeffs.find(i);
    if (it == b.coeffs.end() || !(v == it->second)) return false;
  }
  return true;
}

namespace {

// Total order on formal types with identical support, comparing the flat
// coefficient streams term by term.
bool formal_type_less(const FormalType& a, const FormalType& b) {
  auto ia = a.coeffs.begin(), ib = b.coeffs.begin();
  for (; ia != a.coeffs.end() && ib != b.coeffs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    auto ta = ia->second.terms.begin(), tb = ib->second.terms.begin();
    for (; ta != ia->second.terms.end() && tb != ib->second.terms.end(); ++ta, ++tb) {
      if (ta->first != tb->first) return ta->first < tb->first;
      int c = Cyclotomic::compare(ta->second, tb->second);
      if (c != 0) return c < 0;
    }
    if (ta != ia->second.terms.end()) return false;
    if (tb != ib->second.terms.end()) return true;
  }
  return ib != b.coeffs.end();
}

} // namespace

FormalType canonical_orbit_representative(const FormalType& ft) {
  FormalType best = ft;
  for (int k = 1; k < ft.base->h; ++k) {
    FormalType cand = mu_h_action(ft, k);
    if (formal_type_less(cand, best)) best = std::move(cand);
  }
  return best;
}

bool equivalent_formal_types(const FormalType& a, const FormalType& b) {
  if (a.base->type != b.base->type || a.r != b.r) return false;
  for (int k = 0; k < a.base->h; ++k)
    if (formal_types_equal(mu_h_action(a, k), b)) return true;
  return false;
}

} // namespace gconn
