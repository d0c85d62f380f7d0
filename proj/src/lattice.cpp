#include "gconn/lattice.hpp"

#include <stdexcept>

namespace gconn {

Integer integer_gcd(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

IntMatrix integer_kernel(const IntMatrix& a, size_t ncols) {
  const size_t m = a.size();
  for (const auto& row : a)
    if (row.size() != ncols) throw std::runtime_error("integer_kernel: ragged matrix");
  // Work on a copy; track unimodular column operations in u (ncols x ncols).
  IntMatrix w = a;
  IntMatrix u(ncols, std::vector<Integer>(ncols, Integer(0)));
  for (size_t j = 0; j < ncols; ++j) u[j][j] = 1;

  auto col_swap = [&](size_t c1, size_t c2) {
    for (size_t i = 0; i < m; ++i) std::swap(w[i][c1], w[i][c2]);
    for (size_t i = 0; i < ncols; ++i) std::swap(u[i][c1], u[i][c2]);
  };
  auto col_addmul = [&](size_t dst, size_t src, const Integer& f) {
    for (size_t i = 0; i < m; ++i) w[i][dst] += f * w[i][src];
    for (size_t i = 0; i < ncols; ++i) u[i][dst] += f * u[i][src];
  };
  auto col_neg = [&](size_t c) {
    for (size_t i = 0; i < m; ++i) w[i][c] = -w[i][c];
    for (size_t i = 0; i < ncols; ++i) u[i][c] = -u[i][c];
  };

  size_t lead = 0;
  for (size_t row = 0; row < m && lead < ncols; ++row) {
    // Euclidean reduction across active columns in this row.
    for (;;) {
      size_t best = ncols;
      for (size_t c = lead; c < ncols; ++c) {
        if (w[row][c] == 0) continue;
        if (best == ncols || boost::multiprecision::abs(w[row][c]) <
                                 boost::multiprecision::abs(w[row][best]))
          best = c;
      }
      if (best == ncols) break; // row is zero on active columns
      if (best != lead) col_swap(lead, best);
      if (w[row][lead] < 0) col_neg(lead);
      bool cleared = true;
      for (size_t c = lead + 1; c < ncols; ++c) {
        if (w[row][c] == 0) continue;
        Integer q = w[row][c] / w[row][lead];
        // floor-style reduction
        Integer r = w[row][c] - q * w[row][lead];
        if (r < 0) q -= 1;
        col_addmul(c, lead, -q);
        if (w[row][c] != 0) cleared = false;
      }
      if (cleared) {
        ++lead;
        break;
      }
    }
  }
  // Columns >= lead are zero on all rows: kernel basis.
  IntMatrix kernel;
  for (size_t c = lead; c < ncols; ++c) {
    std::vector<Integer> v(ncols);
    for (size_t i = 0; i < ncols; ++i) v[i] = u[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

} // namespace gconn
