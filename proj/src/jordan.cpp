#include "gconn/jordan.hpp"

#include <numeric>
#include <stdexcept>

namespace gconn {

namespace {

// Strip t-powers: the grading operator u^{h*k + ht(alpha)} sends each
// homogeneous coefficient to a single u-power times its t-free shadow.
LieElement t_free(const LieElement& v) {
  LieElement out = lie_zero(v.base);
  for (const auto& [key, c] : v.terms) out.add_term(key.first, 0, c);
  return out;
}

LieElement principal_rho_check(RootSystemPtr base) {
  return cartan_from_coweight(base, CycVector(base->rank, Cyclotomic(1)));
}

} // namespace

JordanForm to_jordan(const FormalType& ft) {
  validate_formal_type(ft);
  const RootSystemData& rs = *ft.base;
  JordanForm jf;
  jf.base = ft.base;
  jf.b = rs.h;
  jf.adjoint_normalisation = true;
  jf.theta_order = rs.h;
  for (auto it = ft.coeffs.rbegin(); it != ft.coeffs.rend(); ++it) {
    const int i = it->first;
    // Every homogeneous term of the coefficient must sit in u-degree -i.
    for (const auto& [key, c] : it->second.terms) {
      (void)c;
      if (rs.h * key.second + rs.heights[key.first] != -i)
        throw std::runtime_error("to_jordan: coefficient not homogeneous of its depth");
    }
    LieElement x = t_free(it->second).scaled(Cyclotomic(rs.h));
    LieElement ne = principal_nilpotent_n(ft.base) + highest_root_e(ft.base);
    if (!bracket(x, ne).is_zero())
      throw std::runtime_error("to_jordan: coefficient shadow leaves t'");
    jf.terms.emplace_back(-i, std::move(x));
  }
  if (!is_regular_semisimple(jf.terms.front().second))
    throw std::runtime_error("to_jordan: leading term not regular semisimple");
  // The rho_check residue produced by the gauge is removable: [Y, x_1] =
  // rho_check must be solvable. Verified, not assumed.
  std::vector<LieElement> full;
  for (int j = 0; j < chevalley_dim(rs); ++j) full.push_back(lie_basis(ft.base, j));
  if (!solve_bracket(jf.terms.front().second, principal_rho_check(ft.base), full))
    throw std::runtime_error("to_jordan: residue correction step failed");
  return jf;
}

FormalType from_jordan(const JordanForm& jf) {
  const RootSystemData& rs = *jf.base;
  if (jf.terms.empty()) throw std::invalid_argument("from_jordan: no terms");
  if (!is_regular_semisimple(jf.terms.front().second))
    throw std::invalid_argument("from_jordan: leading x_1 not regular semisimple");
  FormalType ft;
  ft.base = jf.base;
  ft.r = -jf.terms.front().first;
  for (const auto& [ri, x] : jf.terms) {
    if (ri >= 0) throw std::invalid_argument("from_jordan: r_i must be negative");
    const int i = -ri;
    const int m = i / rs.h;
    LieElement v = lie_zero(jf.base);
    for (const auto& [key, c] : x.terms) {
      if (key.second != 0) throw std::invalid_argument("from_jordan: x_i has t-dependence");
      if (key.first >= 2 * rs.npos)
        throw std::invalid_argument("from_jordan: x_i has a Cartan component");
      int tp = rs.heights[key.first] > 0 ? -m - 1 : -m;
      v.add_term(key.first, tp, c * Cyclotomic(Rational(1) / rs.h));
    }
    if (!v.is_zero()) ft.coeffs.emplace(i, std::move(v));
  }
  validate_formal_type(ft);
  return ft;
}

bool jordan_forms_equal(const JordanForm& a, const JordanForm& b) {
  if (a.base->type != b.base->type || a.terms.size() != b.terms.size()) return false;
  for (size_t k = 0; k < a.terms.size(); ++k)
    if (a.terms[k].first != b.terms[k].first || !(a.terms[k].second == b.terms[k].second))
      return false;
  return true;
}

std::vector<CycVector> jordan_term_coordinates(const JordanForm& jf) {
  const RootSystemData& rs = *jf.base;
  const GradedCartanBasis& tp = kostant_cartan(rs);
  std::vector<CycVector> out;
  for (const auto& [ri, x] : jf.terms) {
    int s = ((ri % rs.h) + rs.h) % rs.h;
    auto pit = tp.pieces.find(s);
    if (pit == tp.pieces.end())
      throw std::runtime_error("jordan_term_coordinates: term outside t'");
    const std::vector<LieElement>& piece = pit->second;
    std::vector<int> support;
    for (const LieElement& bvec : piece)
      for (const auto& [key, c] : bvec.terms) {
        (void)c;
        if (std::find(support.begin(), support.end(), key.first) == support.end())
          support.push_back(key.first);
      }
    ExactMatrix sys(support.size(), piece.size());
    CycVector rhs(support.size());
    for (size_t row = 0; row < support.size(); ++row) {
      for (size_t col = 0; col < piece.size(); ++col) {
        auto it = piece[col].terms.find({support[row], 0});
        if (it != piece[col].terms.end()) sys.at(row, col) = it->second;
      }
      auto it = x.terms.find({support[row], 0});
      if (it != x.terms.end()) rhs[row] = it->second;
    }
    auto coords = sys.solve(rhs);
    if (!coords) throw std::runtime_error("jordan_term_coordinates: x_i not in t'_s");
    out.push_back(std::move(*coords));
  }
  return out;
}

LocalGaloisData local_galois_group(const JordanForm& jf) {
  const RootSystemData& rs = *jf.base;
  const GradedCartanBasis& tp = kostant_cartan(rs);
  const ExactMatrix& mw = coxeter_element(rs).coweight_matrix;
  std::vector<CycVector> term_coords = jordan_term_coordinates(jf);

  // Transport each x_i from t' into t: the canonical basis of t'_s maps to
  // an order-matched basis of the zeta_h^{r_i} eigenspace of the Coxeter
  // element on coweight coordinates. Eigenline scaling does not change the
  // annihilator lattice.
  std::vector<CycVector> images; // coweight coordinates of the x_i in t
  for (size_t term = 0; term < jf.terms.size(); ++term) {
    const int ri = jf.terms[term].first;
    int s = ((ri % rs.h) + rs.h) % rs.h;
    const std::vector<LieElement>& piece = tp.pieces.at(s);
    const CycVector& coords = term_coords[term];

    // Eigenspace of the Coxeter element for eigenvalue zeta_h^{r_i}.
    ExactMatrix shifted = mw;
    Cyclotomic ev = Cyclotomic::root_of_unity(rs.h, ri);
    for (int j = 0; j < rs.rank; ++j) shifted.at(j, j) = shifted.at(j, j) - ev;
    std::vector<CycVector> eig = shifted.kernel_basis();
    if (eig.size() != piece.size())
      throw std::runtime_error("local_galois_group: eigenspace dimension mismatch");

    CycVector img(rs.rank);
    for (size_t col = 0; col < eig.size(); ++col)
      for (int j = 0; j < rs.rank; ++j) img[j] = img[j] + coords[col] * eig[col][j];
    images.push_back(std::move(img));
  }

  // Annihilator lattice {lambda in Z^rank : sum_j lambda_j img[j] = 0},
  // one rational row per cyclotomic power-basis component of each image.
  unsigned big = 1;
  for (const auto& img : images)
    for (const auto& c : img) big = std::lcm(big, c.order());
  size_t width = euler_phi(big);
  ExactMatrix con(images.size() * width, rs.rank);
  for (size_t i = 0; i < images.size(); ++i)
    for (int j = 0; j < rs.rank; ++j) {
      std::vector<Rational> comps = images[i][j].lifted_to(big).coeffs();
      comps.resize(width, Rational(0));
      for (size_t p = 0; p < width; ++p)
        con.at(i * width + p, j) = Cyclotomic(comps[p]);
    }
  std::vector<CycVector> ann = con.kernel_basis();

  LocalGaloisData out;
  out.theta_order = jf.theta_order;
  out.dim_h = rs.rank - static_cast<int>(ann.size());
  for (const auto& v : ann) {
    std::vector<Rational> row;
    for (const auto& c : v) row.push_back(c.rational_value());
    out.annihilator.push_back(std::move(row));
  }
  return out;
}

} // namespace gconn
