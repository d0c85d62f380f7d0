#include "gconn/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gconn {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
  return m;
}

CycVector ExactMatrix::apply(const CycVector& v) const {
  if (v.size() != cols_) throw std::runtime_error("apply: dimension mismatch");
  CycVector out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Cyclotomic s;
    for (size_t j = 0; j < cols_; ++j) {
      const Cyclotomic& m = at(i, j);
      if (m.is_zero() || v[j].is_zero()) continue;
      s += m * v[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::runtime_error("matmul: dimension mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Cyclotomic& m = at(i, k);
      if (m.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += m * o.at(k, j);
      }
    }
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("matsub: dimension mismatch");
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& c) const {
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * c;
  return r;
}

ExactMatrix ExactMatrix::shifted(const Cyclotomic& c) const {
  ExactMatrix r = *this;
  for (size_t i = 0; i < rows_; ++i) r.at(i, i) += c;
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

struct Rref {
  std::vector<CycVector> rows;
  std::vector<size_t> pivots;
};

Rref rref_of(const ExactMatrix& m) {
  Rref r;
  r.rows.assign(m.rows(), CycVector(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.rows[i][j] = m.at(i, j);
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && r.rows[p][col].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(r.rows[p], r.rows[row]);
    Cyclotomic inv = r.rows[row][col].inverse();
    for (size_t j = col; j < m.cols(); ++j)
      if (!r.rows[row][j].is_zero()) r.rows[row][j] *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || r.rows[i][col].is_zero()) continue;
      Cyclotomic f = r.rows[i][col];
      for (size_t j = col; j < m.cols(); ++j) {
        if (r.rows[row][j].is_zero()) continue;
        r.rows[i][j] -= f * r.rows[row][j];
      }
    }
    r.pivots.push_back(col);
    ++row;
  }
  return r;
}

} // namespace

size_t ExactMatrix::rank() const { return rref_of(*this).pivots.size(); }

std::vector<CycVector> ExactMatrix::kernel_basis() const {
  Rref r = rref_of(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<CycVector> basis;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    CycVector v(cols_);
    v[free_col] = Cyclotomic::one();
    for (size_t i = 0; i < r.pivots.size(); ++i) {
      if (r.pivots[i] < free_col && !r.rows[i][free_col].is_zero())
        v[r.pivots[i]] = -r.rows[i][free_col];
    }
    basis.push_back(std::move(v));
  }
  // rank + nullity self-check
  if (r.pivots.size() + basis.size() != cols_)
    throw std::runtime_error("kernel_basis: rank-nullity violation");
  return basis;
}

std::optional<CycVector> ExactMatrix::solve(const CycVector& b) const {
  if (b.size() != rows_) throw std::runtime_error("solve: dimension mismatch");
  ExactMatrix aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  Rref r = rref_of(aug);
  CycVector x(cols_);
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == cols_) return std::nullopt; // pivot in augmented column
    x[r.pivots[i]] = r.rows[i][cols_];
  }
  return x;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::runtime_error("inverse: not square");
  ExactMatrix aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Cyclotomic::one();
  }
  Rref r = rref_of(aug);
  if (r.pivots.size() < rows_ || r.pivots[rows_ - 1] != rows_ - 1)
    throw std::runtime_error("inverse: singular matrix");
  ExactMatrix inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.rows[i][cols_ + j];
  return inv;
}

CycPoly ExactMatrix::characteristic_polynomial() const {
  if (rows_ != cols_) throw std::runtime_error("charpoly: not square");
  const size_t n = rows_;
  if (n == 0) return {Cyclotomic::one()};
  // Exact Hessenberg reduction by similarity.
  ExactMatrix h = *this;
  for (size_t col = 0; col + 2 < n; ++col) {
    size_t piv = col + 1;
    while (piv < n && h.at(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col + 1));
    }
    Cyclotomic inv = h.at(col + 1, col).inverse();
    for (size_t i = col + 2; i < n; ++i) {
      if (h.at(i, col).is_zero()) continue;
      Cyclotomic f = h.at(i, col) * inv;
      for (size_t j = 0; j < n; ++j) {
        if (h.at(col + 1, j).is_zero()) continue;
        h.at(i, j) -= f * h.at(col + 1, j);
      }
      // inverse column operation preserves similarity
      for (size_t i2 = 0; i2 < n; ++i2) {
        if (h.at(i2, i).is_zero()) continue;
        h.at(i2, col + 1) += f * h.at(i2, i);
      }
    }
  }
  // Hessenberg leading-principal-minor recurrence for det(xI - H).
  std::vector<CycPoly> p(n + 1);
  p[0] = {Cyclotomic::one()};
  for (size_t k = 1; k <= n; ++k) {
    // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k-1} h[i][k-1] * prod(subdiag) * p_i
    CycPoly term = poly_mul({-h.at(k - 1, k - 1), Cyclotomic::one()}, p[k - 1]);
    Cyclotomic prod = Cyclotomic::one();
    for (size_t i = k - 1; i-- > 0;) {
      prod *= h.at(i + 1, i);
      if (prod.is_zero()) break;
      if (h.at(i, k - 1).is_zero()) continue;
      Cyclotomic c = h.at(i, k - 1) * prod;
      CycPoly sub = p[i];
      for (auto& x : sub) x *= c;
      // term -= sub
      for (size_t j = 0; j < sub.size(); ++j) term[j] -= sub[j];
    }
    p[k] = std::move(term);
  }
  return p[n];
}

std::vector<long> ExactMatrix::integer_eigenvalues() const {
  // Schur: sum |lambda_i|^2 <= Frobenius^2; |entry| <= sum |coeff_j|.
  Rational frob2(0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      Rational b(0);
      for (const auto& c : at(i, j).coeffs()) b += c < 0 ? Rational(-c) : c;
      frob2 += b * b;
    }
  Integer bound2 = num(frob2) / den(frob2) + 1;
  Integer k = boost::multiprecision::sqrt(bound2) + 1;
  if (k > 2000000) throw std::runtime_error("integer_eigenvalues: entry bound too large");
  long kmax = static_cast<long>(k);
  CycPoly chi = characteristic_polynomial();
  std::vector<long> out;
  for (long v = -kmax; v <= kmax; ++v) {
    if (poly_eval(chi, Cyclotomic(v)).is_zero()) out.push_back(v);
  }
  return out;
}

// ---- polynomials ----

CycPoly poly_trim(CycPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

long poly_deg(const CycPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<long>(i);
  return -1;
}

CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
  if (a.empty() || b.empty()) return {};
  CycPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

CycPoly poly_add(const CycPoly& a, const CycPoly& b) {
  CycPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& a, const CycPoly& b) {
  long db = poly_deg(b);
  if (db < 0) throw std::runtime_error("poly_divmod: division by zero");
  CycPoly rem = a;
  long da = poly_deg(rem);
  if (da < db) return {{}, poly_trim(std::move(rem))};
  CycPoly q(da - db + 1);
  Cyclotomic lead_inv = b[db].inverse();
  for (long i = da; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Cyclotomic f = rem[i] * lead_inv;
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) {
      if (b[j].is_zero()) continue;
      rem[i - db + j] -= f * b[j];
    }
  }
  return {poly_trim(std::move(q)), poly_trim(std::move(rem))};
}

CycPoly poly_derivative(const CycPoly& p) {
  if (p.size() <= 1) return {};
  CycPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Cyclotomic(static_cast<long>(i)) * p[i];
  return poly_trim(std::move(d));
}

CycPoly poly_monic(CycPoly p) {
  long d = poly_deg(p);
  if (d < 0) return p;
  Cyclotomic inv = p[d].inverse();
  p.resize(d + 1);
  for (auto& x : p) x *= inv;
  return p;
}

CycPoly poly_gcd(CycPoly a, CycPoly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (poly_deg(b) >= 0) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

CycPoly poly_squarefree_part(const CycPoly& p) {
  CycPoly g = poly_gcd(p, poly_derivative(p));
  auto [q, r] = poly_divmod(p, g);
  if (poly_deg(r) >= 0) throw std::runtime_error("squarefree_part: inexact division");
  return poly_monic(std::move(q));
}

Cyclotomic poly_eval(const CycPoly& p, const Cyclotomic& x) {
  Cyclotomic acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

ExactMatrix poly_eval_matrix(const CycPoly& p, const ExactMatrix& m) {
  const size_t n = m.rows();
  ExactMatrix acc(n, n);
  for (size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    for (size_t d = 0; d < n; ++d) acc.at(d, d) += p[i];
  }
  return acc;
}

CycPoly poly_lcm(const CycPoly& a, const CycPoly& b) {
  if (poly_deg(a) < 0) return b;
  if (poly_deg(b) < 0) return a;
  CycPoly g = poly_gcd(a, b);
  auto [q, r] = poly_divmod(a, g);
  if (poly_deg(r) >= 0) throw std::runtime_error("poly_lcm: inexact division");
  return poly_monic(poly_mul(q, b));
}

namespace {

// Minimal polynomial of the Krylov sequence of v: first linear dependency
// among v, Mv, M^2 v, ...
CycPoly krylov_min_poly(const ExactMatrix& m, CycVector v) {
  const size_t n = m.rows();
  // Columns of the growing Krylov matrix in reduced form, with the
  // combination coefficients tracked.
  std::vector<CycVector> basis;      // reduced vectors
  std::vector<size_t> basis_pivot;   // pivot index per reduced vector
  std::vector<CycPoly> combos;       // polynomial giving each reduced vector
  CycPoly cur{Cyclotomic::one()};    // x^k for current iterate
  for (size_t k = 0; k <= n; ++k) {
    CycVector w = v;
    CycPoly combo = cur;
    // reduce against existing basis
    for (size_t b = 0; b < basis.size(); ++b) {
      const Cyclotomic& c = w[basis_pivot[b]];
      if (c.is_zero()) continue;
      Cyclotomic f = c;
      for (size_t j = 0; j < n; ++j) {
        if (basis[b][j].is_zero()) continue;
        w[j] -= f * basis[b][j];
      }
      CycPoly scaled = combos[b];
      for (auto& x : scaled) x *= f;
      for (size_t j = 0; j < scaled.size(); ++j) {
        if (j >= combo.size()) combo.resize(j + 1);
        combo[j] -= scaled[j];
      }
    }
    size_t piv = 0;
    while (piv < n && w[piv].is_zero()) ++piv;
    if (piv == n) return poly_monic(poly_trim(std::move(combo)));
    Cyclotomic inv = w[piv].inverse();
    for (auto& x : w) x *= x.is_zero() ? Cyclotomic::one() : inv;
    // note: multiplying zero by inv is fine; do it simply:
    for (auto& x : combo) x *= inv;
    basis.push_back(std::move(w));
    basis_pivot.push_back(piv);
    combos.push_back(std::move(combo));
    v = m.apply(v);
    cur.insert(cur.begin(), Cyclotomic());
  }
  throw std::runtime_error("krylov_min_poly: no dependency found (impossible)");
}

} // namespace

CycPoly minimal_polynomial(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::runtime_error("minimal_polynomial: not square");
  const size_t n = m.rows();
  CycPoly p{Cyclotomic::one()};
  for (size_t i = 0; i < n; ++i) {
    CycVector e(n);
    e[i] = Cyclotomic::one();
    // Skip seeds already annihilated by the current candidate.
    // (Cheap check: evaluate p(M) e_i via iterated applications.)
    CycVector acc(n);
    CycVector it = e;
    for (size_t j = 0; j < p.size(); ++j) {
      if (!p[j].is_zero())
        for (size_t t = 0; t < n; ++t)
          if (!it[t].is_zero()) acc[t] += p[j] * it[t];
      if (j + 1 < p.size()) it = m.apply(it);
    }
    bool annihilated = true;
    for (const auto& x : acc)
      if (!x.is_zero()) {
        annihilated = false;
        break;
      }
    if (annihilated) continue;
    p = poly_lcm(p, krylov_min_poly(m, e));
  }
  return p;
}

} // namespace gconn
