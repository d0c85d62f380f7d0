#include "gconn/liealg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gconn {

bool LieElement::has_t_dependence() const {
  for (const auto& [key, c] : terms)
    if (key.second != 0) return true;
  return false;
}

void LieElement::add_term(int idx, int tpow, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(idx, tpow);
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LieElement LieElement::operator+(const LieElement& o) const {
  if (base != o.base) throw std::runtime_error("mismatched base systems");
  LieElement r = *this;
  for (const auto& [key, c] : o.terms) r.add_term(key.first, key.second, c);
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  return *this + o.scaled(Cyclotomic(-1));
}

LieElement LieElement::scaled(const Cyclotomic& c) const {
  LieElement r;
  r.base = base;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms) {
    Cyclotomic p = v * c;
    if (!p.is_zero()) r.terms.emplace(key, std::move(p));
  }
  return r;
}

LieElement LieElement::t_shifted(int k) const {
  LieElement r;
  r.base = base;
  for (const auto& [key, v] : terms) r.terms.emplace(std::make_pair(key.first, key.second + k), v);
  return r;
}

bool LieElement::operator==(const LieElement& o) const {
  return base == o.base && terms == o.terms;
}

LieElement lie_zero(RootSystemPtr base) {
  LieElement r;
  r.base = std::move(base);
  return r;
}

LieElement lie_basis(RootSystemPtr base, int idx, int tpow) {
  LieElement r;
  r.base = std::move(base);
  r.terms.emplace(std::make_pair(idx, tpow), Cyclotomic(1));
  return r;
}

LieElement cartan_element(RootSystemPtr base, const std::vector<Rational>& coroot_coords) {
  LieElement r;
  r.base = base;
  const int nroots = 2 * base->npos;
  for (int j = 0; j < base->rank; ++j)
    r.add_term(nroots + j, 0, Cyclotomic(coroot_coords[j]));
  return r;
}

LieElement cartan_from_coweight(RootSystemPtr base, const CycVector& coords) {
  // solve C * b = coords for the simple-coroot coordinates b
  const int n = base->rank;
  ExactMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = Cyclotomic(static_cast<long>(base->cartan[i][j]));
  auto sol = c.solve(coords);
  if (!sol) throw std::runtime_error("coweight conversion failed");
  LieElement r;
  r.base = base;
  const int nroots = 2 * base->npos;
  for (int j = 0; j < n; ++j) r.add_term(nroots + j, 0, (*sol)[j]);
  return r;
}

LieElement principal_nilpotent_n(RootSystemPtr base) {
  LieElement r;
  r.base = base;
  for (int i = 0; i < base->rank; ++i) {
    std::vector<int> e(base->rank, 0);
    e[i] = -1;
    r.add_term(base->root_index(e), 0, Cyclotomic(1));
  }
  return r;
}

LieElement highest_root_e(RootSystemPtr base) {
  return lie_basis(base, base->highest_root_index);
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.base != y.base) throw std::runtime_error("mismatched base systems");
  LieElement r;
  r.base = x.base;
  const RootSystemData& rs = *x.base;
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) {
      auto br = chevalley_basis_bracket(rs, ka.first, kb.first);
      if (br.empty()) continue;
      Cyclotomic prod = ca * cb;
      int tpow = ka.second + kb.second;
      for (const auto& [idx, n] : br) r.add_term(idx, tpow, Cyclotomic(Rational(n)) * prod);
    }
  return r;
}

ExactMatrix ad_matrix(const LieElement& x) {
  if (x.has_t_dependence()) throw std::runtime_error("ad_matrix requires a plain g element");
  const RootSystemData& rs = *x.base;
  const int dim = chevalley_dim(rs);
  ExactMatrix m(dim, dim);
  for (const auto& [key, c] : x.terms) {
    for (int j = 0; j < dim; ++j) {
      auto br = chevalley_basis_bracket(rs, key.first, j);
      for (const auto& [idx, n] : br) m.at(idx, j) += Cyclotomic(Rational(n)) * c;
    }
  }
  return m;
}

size_t centraliser_dim(const LieElement& x) {
  const int dim = chevalley_dim(*x.base);
  return static_cast<size_t>(dim) - ad_matrix(x).rank();
}

namespace {

LieElement from_vector(RootSystemPtr base, const CycVector& v, int tpow = 0) {
  LieElement r;
  r.base = std::move(base);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.terms.emplace(std::make_pair(static_cast<int>(i), tpow), v[i]);
  return r;
}

// Solve ad(z) = S for z, using the Killing form: kappa(z, e_j) =
// trace(S . ad(e_j)) determines z through the (invertible) Gram matrix.
LieElement pullback_through_ad(RootSystemPtr base, const ExactMatrix& s) {
  const RootSystemData& rs = *base;
  const int dim = chevalley_dim(rs);
  std::vector<ExactMatrix> adb(dim);
  for (int j = 0; j < dim; ++j) adb[j] = ad_matrix(lie_basis(base, j));
  ExactMatrix gram(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = j; k < dim; ++k) {
      Cyclotomic tr = Cyclotomic::zero();
      for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) {
          const Cyclotomic& a = adb[j].at(p, q);
          if (a.is_zero()) continue;
          const Cyclotomic& b = adb[k].at(q, p);
          if (b.is_zero()) continue;
          tr += a * b;
        }
      gram.at(j, k) = tr;
      gram.at(k, j) = tr;
    }
  CycVector rhs(dim);
  for (int j = 0; j < dim; ++j) {
    Cyclotomic tr = Cyclotomic::zero();
    for (int p = 0; p < dim; ++p)
      for (int q = 0; q < dim; ++q) {
        const Cyclotomic& a = s.at(p, q);
        if (a.is_zero()) continue;
        const Cyclotomic& b = adb[j].at(q, p);
        if (b.is_zero()) continue;
        tr += a * b;
      }
    rhs[j] = tr;
  }
  auto sol = gram.solve(rhs);
  if (!sol) throw std::runtime_error("Killing-form pullback failed");
  LieElement z = from_vector(base, *sol);
  if (!(ad_matrix(z) == s)) throw std::runtime_error("pullback does not realise the derivation");
  return z;
}

} // namespace

std::pair<LieElement, LieElement> jordan_decomposition(const LieElement& x) {
  RootSystemPtr base = x.base;
  if (x.is_zero()) return {lie_zero(base), lie_zero(base)};
  ExactMatrix a = ad_matrix(x);
  CycPoly mp = minimal_polynomial(a);
  CycPoly g = poly_squarefree_part(mp);
  // nilpotent fast path: minimal polynomial a power of x
  bool pure_power = true;
  for (long i = 0; i < poly_deg(mp); ++i)
    if (!mp[i].is_zero()) pure_power = false;
  if (pure_power) return {lie_zero(base), x};
  CycPoly gp = poly_derivative(g);
  ExactMatrix s = a;
  for (int iter = 0;; ++iter) {
    ExactMatrix gs = poly_eval_matrix(g, s);
    if (gs.is_zero()) break;
    if (iter > 64) throw std::runtime_error("Jordan Newton iteration failed to converge");
    ExactMatrix gps = poly_eval_matrix(gp, s);
    s = s - gps.inverse() * gs;
  }
  LieElement xs = pullback_through_ad(base, s);
  LieElement xn = x - xs;
  return {xs, xn};
}

bool is_nilpotent(const LieElement& x) {
  if (x.is_zero()) return true;
  ExactMatrix a = ad_matrix(x);
  CycPoly chi = a.characteristic_polynomial();
  for (long i = 0; i < poly_deg(chi); ++i)
    if (!chi[i].is_zero()) return false;
  return true;
}

bool is_regular_semisimple(const LieElement& x) {
  ExactMatrix a = ad_matrix(x);
  std::vector<CycVector> ker = a.kernel_basis();
  if (ker.size() != static_cast<size_t>(x.base->rank)) return false;
  // With dim ker(ad x) minimal, x is regular semisimple iff the kernel
  // meets the image trivially: then the generalized null space of ad(x)
  // equals the kernel, so it is a Cartan subalgebra containing x. That is
  // equivalent to the kernel-augmented matrix having full row rank.
  const size_t n = a.rows();
  ExactMatrix aug(n, n + ker.size());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    for (size_t k = 0; k < ker.size(); ++k) aug.at(i, n + k) = ker[k][i];
  }
  return aug.rank() == n;
}

std::vector<int> coxeter_graded_piece(const RootSystemData& rs, int i) {
  int ii = i % rs.h;
  if (ii < 0) ii += rs.h;
  std::vector<int> out;
  const int nroots = 2 * rs.npos;
  if (ii == 0) {
    for (int j = 0; j < rs.rank; ++j) out.push_back(nroots + j);
    return out;
  }
  for (int idx = 0; idx < nroots; ++idx) {
    int ht = rs.heights[idx] % rs.h;
    if (ht < 0) ht += rs.h;
    if (ht == ii) out.push_back(idx);
  }
  return out;
}

Dichotomy kostant_dichotomy_test(const RootSystemData& rs, int i, const LieElement& v) {
  int ii = i % rs.h;
  if (ii < 0) ii += rs.h;
  if (std::gcd(ii, rs.h) != 1) throw std::runtime_error("degree not coprime to h");
  std::vector<int> piece = coxeter_graded_piece(rs, ii);
  std::vector<bool> allowed(chevalley_dim(rs), false);
  for (int idx : piece) allowed[idx] = true;
  for (const auto& [key, c] : v.terms) {
    if (key.second != 0) throw std::runtime_error("dichotomy test expects a plain g element");
    if (!allowed[key.first]) throw std::runtime_error("element not homogeneous of the given degree");
  }
  for (int idx : piece)
    if (!v.terms.count({idx, 0})) return Dichotomy::Nilpotent;
  return Dichotomy::RegularSemisimple;
}

const GradedCartanBasis& kostant_cartan(const RootSystemData& rs) {
  static std::map<SimpleType, GradedCartanBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.type);
  if (it != cache.end()) return it->second;

  RootSystemPtr base = build_root_system(rs.type);
  LieElement ne = principal_nilpotent_n(base) + highest_root_e(base);
  GradedCartanBasis out;
  // ad(N+E) maps the height class j to class j-1 (mod h); the kernel is
  // computed block by block.
  std::vector<std::vector<int>> classes(rs.h);
  for (int j = 0; j < rs.h; ++j) classes[j] = coxeter_graded_piece(rs, j);
  int total = 0;
  for (int j = 0; j < rs.h; ++j) {
    const auto& src = classes[j];
    const auto& dst = classes[(j + rs.h - 1) % rs.h];
    std::map<int, int> dst_pos;
    for (size_t p = 0; p < dst.size(); ++p) dst_pos[dst[p]] = static_cast<int>(p);
    ExactMatrix m(dst.size(), src.size());
    for (size_t c = 0; c < src.size(); ++c) {
      for (const auto& [key, coeff] : ne.terms) {
        auto br = chevalley_basis_bracket(rs, key.first, src[c]);
        for (const auto& [idx, n] : br) {
          auto pos = dst_pos.find(idx);
          if (pos == dst_pos.end()) throw std::runtime_error("grading violated by ad(N+E)");
          m.at(pos->second, c) += Cyclotomic(Rational(n)) * coeff;
        }
      }
    }
    auto ker = m.kernel_basis();
    if (j == 0 && !ker.empty()) throw std::runtime_error("t'_0 should vanish");
    std::vector<LieElement> vecs;
    for (const auto& kv : ker) {
      LieElement v;
      v.base = base;
      for (size_t c = 0; c < src.size(); ++c)
        if (!kv[c].is_zero()) v.terms.emplace(std::make_pair(src[c], 0), kv[c]);
      // normalise: first coefficient in root-index order is 1
      const Cyclotomic lead = v.terms.begin()->second;
      v = v.scaled(lead.inverse());
      vecs.push_back(std::move(v));
      ++total;
    }
    if (!vecs.empty()) out.pieces[j] = std::move(vecs);
  }
  if (total != rs.rank) throw std::runtime_error("dim t' != rank");
  // graded dimensions match exponent multiplicities
  for (int m = 1; m < rs.h; ++m) {
    size_t want = std::count(rs.exponents.begin(), rs.exponents.end(), m);
    size_t got = out.pieces.count(m) ? out.pieces.at(m).size() : 0;
    if (want != got) throw std::runtime_error("t' graded dimension mismatch");
  }
  return cache.emplace(rs.type, std::move(out)).first->second;
}

std::optional<LieElement> solve_bracket(const LieElement& a, const LieElement& target,
                                        const std::vector<LieElement>& subspace) {
  RootSystemPtr base = a.base;
  if (target.is_zero()) return lie_zero(base);
  if (subspace.empty()) return std::nullopt;
  // collect the (basis idx, t pow) support of all bracket images
  std::vector<LieElement> images;
  images.reserve(subspace.size());
  std::map<std::pair<int, int>, int> rowpos;
  for (const auto& v : subspace) images.push_back(bracket(v, a));
  for (const auto& img : images)
    for (const auto& [key, c] : img.terms) rowpos.emplace(key, 0);
  for (const auto& [key, c] : target.terms) rowpos.emplace(key, 0);
  int nrows = 0;
  for (auto& [key, pos] : rowpos) pos = nrows++;
  ExactMatrix m(nrows, subspace.size());
  for (size_t c = 0; c < images.size(); ++c)
    for (const auto& [key, coeff] : images[c].terms) m.at(rowpos.at(key), c) = coeff;
  CycVector rhs(nrows);
  for (const auto& [key, coeff] : target.terms) rhs[rowpos.at(key)] = coeff;
  auto sol = m.solve(rhs);
  if (!sol) return std::nullopt;
  LieElement y = lie_zero(base);
  for (size_t c = 0; c < subspace.size(); ++c)
    if (!(*sol)[c].is_zero()) y = y + subspace[c].scaled((*sol)[c]);
  return y;
}

LieElement pinned_automorphism_action(const RootSystemData& rs, const PinnedAutomorphism& sigma,
                                      const LieElement& x) {
  LieElement r;
  r.base = x.base;
  const int nroots = 2 * rs.npos;
  for (const auto& [key, c] : x.terms) {
    if (key.first < nroots) {
      Cyclotomic v = Rational(sigma.root_sign[key.first]) * c;
      r.add_term(sigma.root_perm[key.first], key.second, v);
    } else {
      r.add_term(nroots + sigma.simple_perm[key.first - nroots], key.second, c);
    }
  }
  return r;
}

std::vector<std::vector<Rational>> fixed_cartan_subspace(const RootSystemData& rs,
                                                         const std::vector<int>& simple_perm) {
  std::vector<std::vector<Rational>> out;
  std::vector<bool> seen(rs.rank, false);
  for (int i = 0; i < rs.rank; ++i) {
    if (seen[i]) continue;
    std::vector<Rational> v(rs.rank, Rational(0));
    int j = i;
    do {
      v[j] = 1;
      seen[j] = true;
      j = simple_perm[j];
    } while (j != i);
    out.push_back(std::move(v));
  }
  return out;
}

std::string lie_to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  const RootSystemData& rs = *x.base;
  const int nroots = 2 * rs.npos;
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (cs != "1") os << "(" << cs << ")*";
    if (key.first < nroots) {
      os << "X[";
      const auto& coords = rs.roots[key.first];
      for (int j = 0; j < rs.rank; ++j) os << (j ? "," : "") << coords[j];
      os << "]";
    } else {
      os << "H" << (key.first - nroots + 1);
    }
    if (key.second != 0) os << "*t^" << key.second;
  }
  return os.str();
}

} // namespace gconn
