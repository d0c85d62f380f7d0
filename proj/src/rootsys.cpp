#include "gconn/rootsys.hpp"

#include "gconn/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gconn {

int SimpleType::coxeter_number() const {
  switch (family) {
    case 'A': return rank + 1;
    case 'B':
    case 'C': return 2 * rank;
    case 'D': return 2 * rank - 2;
    case 'E': return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
  }
  throw std::runtime_error("bad family");
}

int SimpleType::dimension() const {
  switch (family) {
    case 'A': return rank * (rank + 2);
    case 'B':
    case 'C': return rank * (2 * rank + 1);
    case 'D': return rank * (2 * rank - 1);
    case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  throw std::runtime_error("bad family");
}

std::optional<SimpleType> parse_simple_type(const std::string& token) {
  if (token.size() < 2) return std::nullopt;
  char fam = token[0];
  int rank = 0;
  for (size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
    rank = rank * 10 + (token[i] - '0');
    if (rank > 100) return std::nullopt;
  }
  SimpleType t{fam, rank};
  bool ok = false;
  switch (fam) {
    case 'A': ok = rank >= 1 && rank <= 17; break;
    case 'B': ok = rank >= 2 && rank <= 9; break;
    case 'C': ok = rank >= 2 && rank <= 9; break;
    case 'D': ok = rank >= 4 && rank <= 10; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) return std::nullopt;
  return t;
}

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) {
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2; // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2; // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      break;
    case 'F':
      edge(0, 1);
      edge(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3; // alpha_1 short
      break;
    default:
      throw std::runtime_error("bad family");
  }
  return c;
}

int RootSystemData::root_index(const std::vector<int>& coords) const {
  auto it = root_lookup.find(coords);
  return it == root_lookup.end() ? -1 : it->second;
}

int RootSystemData::pairing_with_simple_coroot(int idx, int j) const {
  int s = 0;
  for (int k = 0; k < rank; ++k) s += roots[idx][k] * cartan[k][j];
  return s;
}

Rational RootSystemData::root_on_cartan(int idx, const std::vector<Rational>& hcoords) const {
  Rational s(0);
  for (int j = 0; j < rank; ++j) {
    int p = pairing_with_simple_coroot(idx, j);
    if (p != 0) s += Rational(p) * hcoords[j];
  }
  return s;
}

std::vector<Rational> RootSystemData::coweight_to_coroot_basis(const std::vector<Rational>& cw) const {
  ExactMatrix c(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c.at(i, j) = Cyclotomic(Rational(cartan[i][j]));
  CycVector rhs(rank);
  for (int i = 0; i < rank; ++i) rhs[i] = Cyclotomic(cw[i]);
  auto sol = c.solve(rhs);
  if (!sol) throw std::runtime_error("coweight conversion failed");
  std::vector<Rational> out(rank);
  for (int i = 0; i < rank; ++i) out[i] = (*sol)[i].rational_value();
  return out;
}

std::vector<Rational> RootSystemData::coroot_basis_to_coweight(const std::vector<Rational>& hc) const {
  std::vector<Rational> out(rank, Rational(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out[i] += Rational(cartan[i][j]) * hc[j];
  return out;
}

namespace {

int height_of(const std::vector<int>& c) {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

std::vector<std::vector<int>> enumerate_positive_roots(const std::vector<std::vector<int>>& cartan,
                                                       int rank) {
  std::vector<std::vector<int>> pos;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    pos.push_back(e);
    seen.insert(e);
  }
  for (size_t head = 0; head < pos.size(); ++head) {
    std::vector<int> beta = pos[head];
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += beta[j] * cartan[j][i];
      int q = 0;
      std::vector<int> down = beta;
      for (;;) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++q;
      }
      if (q - pairing >= 1) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) pos.push_back(up);
      }
    }
  }
  std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return pos;
}

std::vector<int> symmetrizer(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  std::vector<bool> done(n, false);
  done[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || done[j]) continue;
      // want d_j * C[i][j] == d_i * C[j][i]
      d[j] = d[i] * Rational(c[j][i]) / Rational(c[i][j]);
      done[j] = true;
      stack.push_back(j);
    }
  }
  Integer l = 1;
  for (auto& x : d) l = boost::multiprecision::lcm(l, den(x));
  std::vector<Integer> di(n);
  for (int i = 0; i < n; ++i) di[i] = num(d[i] * Rational(l));
  Integer g = integer_gcd(di);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(di[i] / g);
  return out;
}

// Fill negatives, heights, h, exponents, symmetrizer, coroots, lookup.
void finish_root_data(RootSystemData& rs, std::vector<std::vector<int>> positives) {
  const int n = rs.rank;
  rs.roots = std::move(positives);
  rs.npos = static_cast<int>(rs.roots.size());
  for (int i = 0; i < rs.npos; ++i) {
    std::vector<int> neg(n);
    for (int j = 0; j < n; ++j) neg[j] = -rs.roots[i][j];
    rs.roots.push_back(std::move(neg));
  }
  rs.heights.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) rs.heights[i] = height_of(rs.roots[i]);
  rs.highest_root_index = rs.npos - 1;
  rs.h = rs.heights[rs.highest_root_index] + 1;
  if (static_cast<int>(rs.roots.size()) != rs.type.root_count())
    throw std::runtime_error("root count mismatch for " + rs.type.name());
  if (rs.h != rs.type.coxeter_number() || rs.h * n != static_cast<int>(rs.roots.size()))
    throw std::runtime_error("Coxeter number mismatch for " + rs.type.name());
  rs.root_lookup.clear();
  for (size_t i = 0; i < rs.roots.size(); ++i) rs.root_lookup[rs.roots[i]] = static_cast<int>(i);
  // exponents = conjugate partition of positive-root height counts
  std::vector<int> nk(rs.h + 1, 0);
  for (int i = 0; i < rs.npos; ++i) nk[rs.heights[i]]++;
  rs.exponents.clear();
  for (int j = 1; j <= rs.npos; ++j) {
    int cnt = 0;
    for (int k = 1; k <= rs.h; ++k)
      if (nk[k] >= j) ++cnt;
    if (cnt == 0) break;
    rs.exponents.push_back(cnt);
  }
  std::sort(rs.exponents.begin(), rs.exponents.end());
  if (static_cast<int>(rs.exponents.size()) != n) throw std::runtime_error("exponent count bad");
  rs.dsym = symmetrizer(rs.cartan);
  rs.coroot_h.assign(rs.roots.size(), {});
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    Rational norm(0);
    for (int j = 0; j < n; ++j) {
      if (rs.roots[i][j] == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (rs.roots[i][k] == 0 || rs.cartan[j][k] == 0) continue;
        norm += Rational(rs.roots[i][j]) * Rational(rs.roots[i][k]) * Rational(rs.dsym[k]) *
                Rational(rs.cartan[j][k]);
      }
    }
    Rational dalpha = norm / 2;
    std::vector<Integer> cr(n);
    for (int j = 0; j < n; ++j) {
      Rational cj = Rational(rs.roots[i][j]) * Rational(rs.dsym[j]) / dalpha;
      if (!is_integer(cj)) throw std::runtime_error("coroot not integral");
      cr[j] = num(cj);
    }
    rs.coroot_h[i] = std::move(cr);
  }
}

// Sparse element of an algebra in the Chevalley basis:
// basis index -> integer coefficient. Root vectors are indexed by root
// index; H_i sits at 2*npos + i.
using Sparse = std::map<int, Integer>;

Sparse basis_bracket(const RootSystemData& rs, int a, int b) {
  const int nroots = 2 * rs.npos;
  Sparse out;
  if (a >= nroots && b >= nroots) return out;
  if (a >= nroots || b >= nroots) {
    bool flip = a < nroots; // [X, H] = -[H, X]
    int hi = (a >= nroots ? a : b) - nroots;
    int ri = a >= nroots ? b : a;
    int pairing = rs.pairing_with_simple_coroot(ri, hi);
    if (pairing != 0) out[ri] = flip ? -pairing : pairing;
    return out;
  }
  if (rs.negative_of(a) == b) {
    int pos_idx = rs.is_positive(a) ? a : b;
    int sgn = rs.is_positive(a) ? 1 : -1;
    for (int j = 0; j < rs.rank; ++j) {
      Integer cj = rs.coroot_h[pos_idx][j] * sgn;
      if (cj != 0) out[nroots + j] = cj;
    }
    return out;
  }
  int s = rs.sum_index[a][b];
  if (s >= 0 && rs.n_table[a][b] != 0) out[s] = rs.n_table[a][b];
  return out;
}

Sparse sparse_bracket(const RootSystemData& rs, const Sparse& x, const Sparse& y) {
  Sparse out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Sparse t = basis_bracket(rs, a, b);
      for (const auto& [k, v] : t) {
        Integer add = ca * cb * v;
        if (add == 0) continue;
        auto [it, fresh] = out.emplace(k, add);
        if (!fresh) {
          it->second += add;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  return out;
}

std::shared_ptr<RootSystemData> build_simply_laced(SimpleType t) {
  auto rs = std::make_shared<RootSystemData>();
  rs->type = t;
  rs->rank = t.rank;
  rs->cartan = cartan_matrix(t);
  finish_root_data(*rs, enumerate_positive_roots(rs->cartan, t.rank));
  const int nroots = 2 * rs->npos;
  std::vector<std::vector<int>> b(t.rank, std::vector<int>(t.rank, 0));
  for (int i = 0; i < t.rank; ++i) {
    b[i][i] = 1;
    for (int j = i + 1; j < t.rank; ++j)
      if (rs->cartan[i][j] != 0) b[i][j] = 1;
  }
  auto eps = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int e = 0;
    for (int i = 0; i < t.rank; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < t.rank; ++j)
        if (y[j] != 0 && b[i][j] != 0) e += x[i] * y[j];
    }
    return (e % 2 == 0) ? 1 : -1;
  };
  rs->n_table.assign(nroots, std::vector<int>(nroots, 0));
  rs->sum_index.assign(nroots, std::vector<int>(nroots, -1));
  std::vector<int> sum(t.rank);
  for (int p = 0; p < nroots; ++p)
    for (int q = 0; q < nroots; ++q) {
      if (q == p || rs->negative_of(p) == q) continue;
      for (int k = 0; k < t.rank; ++k) sum[k] = rs->roots[p][k] + rs->roots[q][k];
      int s = rs->root_index(sum);
      if (s < 0) continue;
      rs->sum_index[p][q] = s;
      int sp = rs->is_positive(p) ? 1 : -1;
      int sq = rs->is_positive(q) ? 1 : -1;
      int ss = rs->is_positive(s) ? 1 : -1;
      rs->n_table[p][q] = eps(rs->roots[p], rs->roots[q]) * sp * sq * ss;
    }
  return rs;
}

std::shared_ptr<RootSystemData> build_folded(SimpleType target, SimpleType parent_type,
                                             const std::vector<int>& sigma_perm) {
  RootSystemPtr parent = build_root_system(parent_type);
  PinnedAutomorphism sig = pinned_automorphism(*parent, sigma_perm);
  const int pn = parent->rank;
  // simple orbits, ordered by least element
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(pn, false);
  for (int i = 0; i < pn; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    do {
      orb.push_back(j);
      seen[j] = true;
      j = sigma_perm[j];
    } while (j != i);
    orbits.push_back(std::move(orb));
  }
  const int fr = static_cast<int>(orbits.size());
  if (fr != target.rank) throw std::runtime_error("folded rank mismatch");
  // preliminary folded Cartan and relabeling to Bourbaki
  std::vector<std::vector<int>> cbar(fr, std::vector<int>(fr, 0));
  for (int k = 0; k < fr; ++k)
    for (int l = 0; l < fr; ++l)
      for (int j : orbits[l]) cbar[k][l] += parent->cartan[orbits[k][0]][j];
  auto ctarget = cartan_matrix(target);
  std::vector<int> pi(fr, -1); // orbit k -> target simple pi[k]
  std::vector<bool> used(fr, false);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == fr) return true;
    for (int cand = 0; cand < fr; ++cand) {
      if (used[cand]) continue;
      bool ok = ctarget[cand][cand] == cbar[k][k];
      for (int i = 0; i < k && ok; ++i) {
        if (ctarget[pi[i]][cand] != cbar[i][k] || ctarget[cand][pi[i]] != cbar[k][i]) ok = false;
      }
      if (!ok) continue;
      pi[k] = cand;
      used[cand] = true;
      if (place(k + 1)) return true;
      used[cand] = false;
      pi[k] = -1;
    }
    return false;
  };
  if (!place(0)) throw std::runtime_error("folded Cartan does not match target type");
  std::vector<std::vector<int>> orbit_of(fr); // target simple index -> parent orbit
  for (int k = 0; k < fr; ++k) orbit_of[pi[k]] = orbits[k];

  auto rs = std::make_shared<RootSystemData>();
  rs->type = target;
  rs->rank = fr;
  rs->cartan = ctarget;
  finish_root_data(*rs, enumerate_positive_roots(ctarget, fr));
  const int nroots_f = 2 * rs->npos;
  const int parent_nroots = 2 * parent->npos;

  // group parent roots by folded coordinates
  std::vector<std::vector<int>> group(nroots_f);
  for (int pr = 0; pr < parent_nroots; ++pr) {
    std::vector<int> fc(fr, 0);
    for (int k = 0; k < fr; ++k)
      for (int j : orbit_of[k]) fc[k] += parent->roots[pr][j];
    int fi = rs->root_index(fc);
    if (fi < 0) throw std::runtime_error("parent root does not restrict to folded root");
    group[fi].push_back(pr);
  }
  auto finfo = std::make_shared<FoldingInfo>();
  finfo->parent = parent;
  finfo->sigma = sig;
  finfo->simple_orbits = orbit_of;
  finfo->basis_in_parent.resize(nroots_f + fr);
  for (int fi = 0; fi < nroots_f; ++fi) {
    if (group[fi].empty()) throw std::runtime_error("empty folded root fiber");
    int rep = *std::min_element(group[fi].begin(), group[fi].end());
    Sparse comb;
    int cur = rep;
    Integer sgn = 1;
    for (size_t k = 0; k < group[fi].size(); ++k) {
      comb[cur] += sgn;
      Integer nsgn = sgn * sig.root_sign[cur];
      cur = sig.root_perm[cur];
      sgn = nsgn;
    }
    if (cur != rep || sgn != 1) throw std::runtime_error("folded orbit sign inconsistency");
    if (comb.size() != group[fi].size()) throw std::runtime_error("folded orbit not free");
    std::vector<std::pair<int, Integer>> v(comb.begin(), comb.end());
    finfo->basis_in_parent[fi] = std::move(v);
  }
  for (int k = 0; k < fr; ++k) {
    std::vector<std::pair<int, Integer>> v;
    for (int j : orbit_of[k]) v.emplace_back(parent_nroots + j, Integer(1));
    finfo->basis_in_parent[nroots_f + k] = std::move(v);
  }
  auto as_sparse = [&](int fidx) {
    Sparse s;
    for (auto& [i, c] : finfo->basis_in_parent[fidx]) s[i] = c;
    return s;
  };
  // structure constants from parent brackets
  rs->n_table.assign(nroots_f, std::vector<int>(nroots_f, 0));
  rs->sum_index.assign(nroots_f, std::vector<int>(nroots_f, -1));
  std::vector<int> sum(fr);
  for (int p = 0; p < nroots_f; ++p) {
    Sparse xp = as_sparse(p);
    for (int q = 0; q < nroots_f; ++q) {
      if (q == p) continue;
      Sparse br = sparse_bracket(*parent, xp, as_sparse(q));
      if (rs->negative_of(p) == q) {
        // must land in the sigma-fixed parent Cartan and match the folded coroot
        std::vector<Integer> hpar(pn, Integer(0));
        for (auto& [k, v] : br) {
          if (k < parent_nroots) throw std::runtime_error("folded coroot bracket leak");
          hpar[k - parent_nroots] = v;
        }
        int pos_idx = rs->is_positive(p) ? p : q;
        int want_sign = rs->is_positive(p) ? 1 : -1;
        for (int k = 0; k < fr; ++k) {
          Integer c0 = hpar[orbit_of[k][0]];
          for (int j : orbit_of[k])
            if (hpar[j] != c0) throw std::runtime_error("folded coroot not orbit-constant");
          if (c0 != want_sign * rs->coroot_h[pos_idx][k])
            throw std::runtime_error("folded coroot mismatch vs Cartan data");
        }
        continue;
      }
      for (int k = 0; k < fr; ++k) sum[k] = rs->roots[p][k] + rs->roots[q][k];
      int s = rs->root_index(sum);
      if (s < 0) {
        if (!br.empty()) throw std::runtime_error("folded bracket outside root system");
        continue;
      }
      if (br.empty()) continue;
      Sparse xs = as_sparse(s);
      // br must be an integer multiple of xs
      auto it0 = xs.begin();
      auto itb = br.find(it0->first);
      if (itb == br.end()) throw std::runtime_error("folded bracket support mismatch");
      if (itb->second % it0->second != 0) throw std::runtime_error("folded N not integral");
      Integer nval = itb->second / it0->second;
      Sparse check;
      for (auto& [k, v] : xs) check[k] = v * nval;
      if (check != br) throw std::runtime_error("folded bracket not proportional to basis");
      rs->sum_index[p][q] = s;
      rs->n_table[p][q] = static_cast<int>(nval);
    }
  }
  rs->folding = finfo;
  return rs;
}

} // namespace

std::map<int, Integer> chevalley_basis_bracket(const RootSystemData& rs, int a, int b) {
  return basis_bracket(rs, a, b);
}

PinnedAutomorphism pinned_automorphism(const RootSystemData& rs, const std::vector<int>& perm) {
  const int n = rs.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j])
        throw std::runtime_error("not a diagram automorphism");
  PinnedAutomorphism a;
  a.simple_perm = perm;
  {
    std::vector<int> p = perm, id(n);
    std::iota(id.begin(), id.end(), 0);
    a.order = 1;
    while (p != id) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = perm[p[i]];
      p = std::move(q);
      ++a.order;
    }
  }
  const int nroots = 2 * rs.npos;
  a.root_perm.assign(nroots, -1);
  a.root_sign.assign(nroots, 0);
  for (int idx = 0; idx < nroots; ++idx) {
    std::vector<int> img(n, 0);
    for (int i = 0; i < n; ++i) img[perm[i]] = rs.roots[idx][i];
    a.root_perm[idx] = rs.root_index(img);
    if (a.root_perm[idx] < 0) throw std::runtime_error("automorphism image not a root");
  }
  // signs by increasing |height|; simples get +1
  std::vector<int> order_idx(nroots);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int x, int y) {
    int hx = std::abs(rs.heights[x]), hy = std::abs(rs.heights[y]);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  for (int idx : order_idx) {
    int ht = rs.heights[idx];
    if (std::abs(ht) == 1) {
      a.root_sign[idx] = 1;
      continue;
    }
    bool positive = ht > 0;
    int found_i = -1, beta_idx = -1, simple_idx = -1;
    for (int i = 0; i < n && found_i < 0; ++i) {
      std::vector<int> bc = rs.roots[idx];
      bc[i] += positive ? -1 : 1;
      int bi = rs.root_index(bc);
      if (bi < 0) continue;
      found_i = i;
      beta_idx = bi;
      // simple root index: positive simple i is at position of e_i among roots
      std::vector<int> sc(n, 0);
      sc[i] = positive ? 1 : -1;
      simple_idx = rs.root_index(sc);
    }
    if (found_i < 0) throw std::runtime_error("root decomposition failed");
    int nold = rs.n_table[simple_idx][beta_idx];
    int nnew = rs.n_table[a.root_perm[simple_idx]][a.root_perm[beta_idx]];
    if (nold == 0 || nnew == 0 || std::abs(nold) != std::abs(nnew))
      throw std::runtime_error("automorphism sign propagation failed");
    a.root_sign[idx] = a.root_sign[simple_idx] * a.root_sign[beta_idx] * (nnew / nold);
  }
  return a;
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystemData& rs) {
  const int n = rs.rank;
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(img);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        if (rs.cartan[img[i]][cand] != rs.cartan[i][k] || rs.cartan[cand][img[i]] != rs.cartan[k][i])
          ok = false;
      if (!ok) continue;
      img[k] = cand;
      used[cand] = true;
      rec(k + 1);
      used[cand] = false;
      img[k] = -1;
    }
  };
  rec(0);
  return out;
}

RootSystemPtr build_root_system(SimpleType t) {
  static std::map<SimpleType, RootSystemPtr> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  // internal bound checks (parents may exceed the user-facing rank limits)
  auto check = [&](bool ok) {
    if (!ok) throw std::runtime_error("unsupported type " + t.name());
  };
  std::shared_ptr<RootSystemData> rs;
  switch (t.family) {
    case 'A':
      check(t.rank >= 1 && t.rank <= 17);
      rs = build_simply_laced(t);
      break;
    case 'D':
      check(t.rank >= 4 && t.rank <= 10);
      rs = build_simply_laced(t);
      break;
    case 'E':
      check(t.rank >= 6 && t.rank <= 8);
      rs = build_simply_laced(t);
      break;
    case 'B': {
      check(t.rank >= 2 && t.rank <= 9);
      if (t.rank == 2) {
        std::vector<int> flip{2, 1, 0};
        rs = build_folded(t, SimpleType{'A', 3}, flip);
      } else {
        int pn = t.rank + 1;
        std::vector<int> perm(pn);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[pn - 2], perm[pn - 1]);
        rs = build_folded(t, SimpleType{'D', pn}, perm);
      }
      break;
    }
    case 'C': {
      check(t.rank >= 2 && t.rank <= 9);
      int pn = 2 * t.rank - 1;
      std::vector<int> perm(pn);
      for (int i = 0; i < pn; ++i) perm[i] = pn - 1 - i;
      rs = build_folded(t, SimpleType{'A', pn}, perm);
      break;
    }
    case 'F': {
      check(t.rank == 4);
      std::vector<int> perm{5, 1, 4, 3, 2, 0};
      rs = build_folded(t, SimpleType{'E', 6}, perm);
      break;
    }
    case 'G': {
      check(t.rank == 2);
      std::vector<int> perm{2, 1, 3, 0};
      rs = build_folded(t, SimpleType{'D', 4}, perm);
      break;
    }
    default:
      check(false);
  }
  cache[t] = rs;
  return rs;
}

WeylElement simple_reflection(const RootSystemData& rs, int i) {
  WeylElement w;
  const int nroots = 2 * rs.npos;
  w.root_perm.resize(nroots);
  for (int idx = 0; idx < nroots; ++idx) {
    int pairing = rs.pairing_with_simple_coroot(idx, i);
    std::vector<int> img = rs.roots[idx];
    img[i] -= pairing;
    w.root_perm[idx] = rs.root_index(img);
    if (w.root_perm[idx] < 0) throw std::runtime_error("reflection image not a root");
  }
  w.coweight_matrix = ExactMatrix::identity(rs.rank);
  for (int j = 0; j < rs.rank; ++j)
    w.coweight_matrix.at(j, i) -= Cyclotomic(static_cast<long>(rs.cartan[j][i]));
  return w;
}

WeylElement weyl_compose(const RootSystemData& rs, const WeylElement& a, const WeylElement& b) {
  (void)rs;
  WeylElement w;
  w.root_perm.resize(a.root_perm.size());
  for (size_t i = 0; i < w.root_perm.size(); ++i) w.root_perm[i] = a.root_perm[b.root_perm[i]];
  w.coweight_matrix = a.coweight_matrix * b.coweight_matrix;
  return w;
}

const WeylElement& coxeter_element(const RootSystemData& rs) {
  static std::map<SimpleType, WeylElement> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.type);
  if (it != cache.end()) return it->second;
  WeylElement w = simple_reflection(rs, 0);
  for (int i = 1; i < rs.rank; ++i) w = weyl_compose(rs, w, simple_reflection(rs, i));
  return cache.emplace(rs.type, std::move(w)).first->second;
}

int weyl_order(const RootSystemData& rs, const WeylElement& w) {
  std::vector<int> id(w.root_perm.size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> p = w.root_perm;
  int order = 1;
  while (p != id) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = w.root_perm[p[i]];
    p = std::move(q);
    ++order;
    if (order > 1000000) throw std::runtime_error("weyl_order runaway");
  }
  (void)rs;
  return order;
}

std::vector<int> exponents_via_coxeter(const RootSystemData& rs) {
  const WeylElement& w = coxeter_element(rs);
  std::vector<int> out;
  for (int m = 1; m < rs.h; ++m) {
    ExactMatrix a = w.coweight_matrix.shifted(-Cyclotomic::root_of_unity(rs.h, m));
    size_t mult = a.kernel_basis().size();
    for (size_t k = 0; k < mult; ++k) out.push_back(m);
  }
  if (static_cast<int>(out.size()) != rs.rank)
    throw std::runtime_error("Coxeter eigenvalue multiplicities do not sum to rank");
  return out;
}

std::vector<int> levi_fundamental_degrees(const RootSystemData& rs, const std::vector<int>& subset) {
  std::vector<bool> in(rs.rank, false);
  for (int i : subset) {
    if (i < 0 || i >= rs.rank) throw std::runtime_error("levi subset index out of range");
    in[i] = true;
  }
  // connected components within the subset
  std::vector<int> comp(rs.rank, -1);
  int ncomp = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (!in[i] || comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < rs.rank; ++j)
        if (in[j] && comp[j] < 0 && rs.cartan[x][j] != 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<int> degrees;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int i = 0; i < rs.rank; ++i)
      if (comp[i] == c) members.push_back(i);
    // positive roots supported on this component
    std::map<int, int> height_count;
    int maxht = 0;
    for (int idx = 0; idx < rs.npos; ++idx) {
      bool ok = true;
      for (int j = 0; j < rs.rank && ok; ++j)
        if (rs.roots[idx][j] != 0 && (comp[j] != c)) ok = false;
      if (!ok) continue;
      int ht = rs.heights[idx];
      height_count[ht]++;
      maxht = std::max(maxht, ht);
    }
    for (size_t j = 1;; ++j) {
      int cnt = 0;
      for (int k = 1; k <= maxht; ++k)
        if (height_count[k] >= static_cast<int>(j)) ++cnt;
      if (cnt == 0) break;
      degrees.push_back(cnt + 1);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

namespace {

struct CycVecLess {
  bool operator()(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int c = Cyclotomic::compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

template <typename Visit>
void orbit_bfs(const RootSystemData& rs, const std::vector<Cyclotomic>& x, size_t bound,
               Visit visit) {
  std::set<std::vector<Cyclotomic>, CycVecLess> seen;
  std::vector<std::vector<Cyclotomic>> queue{x};
  seen.insert(x);
  if (visit(x)) return;
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<Cyclotomic> cur = queue[head];
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<Cyclotomic> img = cur;
      // s_i: X_j -= C[j][i] * X_i
      for (int j = 0; j < rs.rank; ++j) {
        if (rs.cartan[j][i] == 0) continue;
        img[j] -= Cyclotomic(static_cast<long>(rs.cartan[j][i])) * cur[i];
      }
      if (seen.insert(img).second) {
        if (seen.size() > bound) throw std::runtime_error("weyl orbit exceeds bound");
        if (visit(img)) return;
        queue.push_back(std::move(img));
      }
    }
  }
}

} // namespace

std::vector<std::vector<Cyclotomic>> weyl_orbit(const RootSystemData& rs,
                                                const std::vector<Cyclotomic>& x, size_t bound) {
  std::vector<std::vector<Cyclotomic>> out;
  orbit_bfs(rs, x, bound, [&](const std::vector<Cyclotomic>& v) {
    out.push_back(v);
    return false;
  });
  return out;
}

bool weyl_orbit_search(const RootSystemData& rs, const std::vector<Cyclotomic>& x, size_t bound,
                       const std::function<bool(const std::vector<Cyclotomic>&)>& predicate) {
  bool found = false;
  orbit_bfs(rs, x, bound, [&](const std::vector<Cyclotomic>& v) {
    if (predicate(v)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

} // namespace gconn
