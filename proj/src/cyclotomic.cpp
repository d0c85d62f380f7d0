#include "gconn/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gconn {

unsigned euler_phi(unsigned m) {
  unsigned result = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_order(unsigned a, unsigned b) {
  unsigned g = std::gcd(a, b);
  unsigned long long l = static_cast<unsigned long long>(a / g) * b;
  if (l > kMaxCyclotomicOrder)
    throw std::runtime_error("cyclotomic order overflow: lcm(" + std::to_string(a) + "," +
                             std::to_string(b) + ") exceeds supported bound");
  return static_cast<unsigned>(l);
}

namespace {

// Quotient of integer polynomials, exact division assumed (b monic).
std::vector<Integer> int_poly_div(std::vector<Integer> a, const std::vector<Integer>& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Integer(0)};
  std::vector<Integer> q(a.size() - db, Integer(0));
  for (size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, std::vector<Integer>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m == 0 || m > kMaxCyclotomicOrder) throw std::runtime_error("unsupported cyclotomic order");
  // x^m - 1 divided by all Phi_d, d | m, d < m.
  std::vector<Integer> poly(m + 1, Integer(0));
  poly[0] = -1;
  poly[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    poly = int_poly_div(std::move(poly), cyclotomic_polynomial(d));
  }
  auto [pos, inserted] = cache.emplace(m, std::move(poly));
  (void)inserted;
  return pos->second;
}

namespace {

// Reduce rational polynomial mod Phi_m, return exactly phi(m) coeffs.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> a, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const size_t d = phi.size() - 1;
  for (size_t i = a.size(); i-- > d;) {
    Rational c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (size_t j = 0; j < d; ++j) a[i - d + j] -= c * Rational(phi[j]);
  }
  a.resize(d, Rational(0));
  return a;
}

// Solve sum_j x_j * basis_j = target over Q; returns empty optional if
// inconsistent. Small dense Gaussian elimination.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> cols,
                                                    std::vector<Rational> rhs) {
  const size_t n = cols.size();
  const size_t rows = rhs.size();
  // Augmented matrix rows x (n+1).
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  for (size_t i = 0; i < rows; ++i) a[i][n] = rhs[i];
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (a[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

} // namespace

Cyclotomic::Cyclotomic(unsigned m, std::vector<Rational> coeffs) : order_(m) {
  if (m == 0 || m > kMaxCyclotomicOrder) throw std::runtime_error("unsupported cyclotomic order");
  c_ = reduce_mod_phi(std::move(coeffs), m);
  collapse_rational();
}

void Cyclotomic::collapse_rational() {
  if (order_ == 1) return;
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return;
  Rational v = c_[0];
  order_ = 1;
  c_.assign(1, v);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long k) {
  if (m == 0) throw std::runtime_error("root_of_unity: order must be positive");
  long kk = k % static_cast<long>(m);
  if (kk < 0) kk += m;
  unsigned g = std::gcd(static_cast<unsigned>(kk), m);
  if (kk == 0) return one();
  unsigned mm = m / g;
  unsigned long long e = static_cast<unsigned long long>(kk) / g;
  std::vector<Rational> coeffs(e + 1, Rational(0));
  coeffs[e] = 1;
  return Cyclotomic(mm, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::runtime_error("rational_value on irrational cyclotomic");
  return c_[0];
}

Cyclotomic Cyclotomic::lifted_to(unsigned M) const {
  if (M == order_) return *this;
  if (M % order_ != 0) throw std::runtime_error("lifted_to: order does not divide target");
  unsigned step = M / order_;
  std::vector<Rational> big((c_.size() - 1) * step + 1, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) big[j * step] = c_[j];
  // Deliberately no rational collapse: callers rely on coeffs() having the
  // full phi(M) length after a lift.
  Cyclotomic r;
  r.order_ = M;
  r.c_ = reduce_mod_phi(std::move(big), M);
  return r;
}

Cyclotomic Cyclotomic::normalized() const {
  if (order_ == 1) return *this;
  for (unsigned d = 1; d < order_; ++d) {
    if (order_ % d != 0) continue;
    unsigned pd = euler_phi(d);
    // Lift power basis of Q(zeta_d) into Q(zeta_order_).
    std::vector<std::vector<Rational>> cols;
    cols.reserve(pd);
    for (unsigned j = 0; j < pd; ++j) {
      std::vector<Rational> v(j + 1, Rational(0));
      v[j] = 1;
      cols.push_back(Cyclotomic(d, std::move(v)).lifted_to(order_).coeffs());
    }
    auto sol = solve_rational(std::move(cols), c_);
    if (sol) return Cyclotomic(d, std::move(*sol));
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  unsigned M = lcm_order(order_, o.order_);
  Cyclotomic a = lifted_to(M), b = o.lifted_to(M);
  for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
  a.collapse_rational();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ == 1 && o.order_ == 1) return Cyclotomic(c_[0] * o.c_[0]);
  if (order_ == 1) {
    if (c_[0] == 0) return zero();
    Cyclotomic r = o;
    for (auto& x : r.c_) x *= c_[0];
    r.collapse_rational();
    return r;
  }
  if (o.order_ == 1) return o * *this;
  unsigned M = lcm_order(order_, o.order_);
  Cyclotomic a = lifted_to(M), b = o.lifted_to(M);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic(M, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::runtime_error("inverse of zero cyclotomic");
  if (order_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid: u * this + v * Phi = gcd (a unit, Phi irreducible).
  const auto& phi_int = cyclotomic_polynomial(order_);
  std::vector<Rational> r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
  std::vector<Rational> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
  auto deg = [](const std::vector<Rational>& p) { return static_cast<long>(p.size()) - 1; };
  while (deg(r1) > 0) {
    // r0 = q * r1 + r2
    std::vector<Rational> q(deg(r0) - deg(r1) + 1, Rational(0));
    std::vector<Rational> rem = r0;
    for (long i = deg(rem); i >= deg(r1); --i) {
      Rational f = rem[i] / r1.back();
      if (f == 0) continue;
      q[i - deg(r1)] = f;
      for (size_t j = 0; j < r1.size(); ++j) rem[i - deg(r1) + j] -= f * r1[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) rem.push_back(Rational(0));
    // u2 = u0 - q*u1
    std::vector<Rational> u2(std::max(u0.size(), q.size() + u1.size() - 1), Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    if (r1.empty()) r1.push_back(Rational(0));
  }
  if (r1.size() == 1 && r1[0] == 0)
    throw std::runtime_error("inverse: element not invertible (unexpected)");
  Rational g = r1[0];
  for (auto& x : u1) x /= g;
  return Cyclotomic(order_, std::move(u1));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  unsigned M = lcm_order(order_, o.order_);
  return lifted_to(M).coeffs() == o.lifted_to(M).coeffs();
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a.normalized(), y = b.normalized();
  if (x.order_ != y.order_) return x.order_ < y.order_ ? -1 : 1;
  for (size_t j = 0; j < x.c_.size(); ++j) {
    if (x.c_[j] != y.c_[j]) return x.c_[j] < y.c_[j] ? -1 : 1;
  }
  return 0;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (order_ == 1) return *this;
  long kk = k % static_cast<long>(order_);
  if (kk < 0) kk += order_;
  if (std::gcd(static_cast<unsigned>(kk), order_) != 1)
    throw std::runtime_error("galois: exponent not coprime to order");
  std::vector<Rational> big(static_cast<size_t>(kk) * (c_.size() - 1) + 1, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) big[j * kk] += c_[j];
  return Cyclotomic(order_, std::move(big));
}

std::string Cyclotomic::to_string() const {
  Cyclotomic n = normalized();
  if (n.order_ == 1) return rational_to_string(n.c_[0]);
  std::string out;
  bool first = true;
  for (size_t j = n.c_.size(); j-- > 0;) {
    const Rational& q = n.c_[j];
    if (q == 0) continue;
    Rational mag = q < 0 ? Rational(-q) : q;
    if (first) {
      if (q < 0) out += "-";
      first = false;
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (j == 0) {
      out += rational_to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += rational_to_string(mag);
      out += "*";
    }
    out += "z" + std::to_string(n.order_);
    if (j > 1) out += "^" + std::to_string(j);
  }
  if (first) return "0";
  return out;
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& x) { return Cyclotomic(r) * x; }

} // namespace gconn
