#pragma once

#include "gconn/strata.hpp"

namespace gconn {

// Jordan-canonical presentation of a formal connection of slope r/h:
// d + (sum_i x_i u^{r_i}) du/u on the degree-h cover t = u^h, twisted by
// theta = rho_check(zeta_h). Each x_i lies in t' and is an eigenvector of
// the Coxeter element with eigenvalue zeta_h^{r_i}.
struct JordanForm {
  RootSystemPtr base;
  int b = 0;                       // cover order for theta^b = 1; h here
  bool adjoint_normalisation = true; // b = h holds on the adjoint form
  std::vector<std::pair<int, LieElement>> terms; // (r_i, x_i), r_1 = -r < ... < 0
  int theta_order = 0;             // order of rho_check(zeta_h) as an operator
};

JordanForm to_jordan(const FormalType& ft);
FormalType from_jordan(const JordanForm& jf);

bool jordan_forms_equal(const JordanForm& a, const JordanForm& b);

// Local differential Galois data: G_loc = H x| <theta> with H the smallest
// subtorus of T whose Lie algebra contains the x_i.
struct LocalGaloisData {
  int dim_h = 0;
  int theta_order = 0;
  // Basis of the annihilator lattice {lambda in X*(T) : d lambda(x_i) = 0},
  // in root-lattice coordinates; dim_h = rank - size.
  std::vector<std::vector<Rational>> annihilator;
};

LocalGaloisData local_galois_group(const JordanForm& jf);

// Coordinates of each x_i in the canonical basis of its graded piece of t'.
std::vector<CycVector> jordan_term_coordinates(const JordanForm& jf);

} // namespace gconn
