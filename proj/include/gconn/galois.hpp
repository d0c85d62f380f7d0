#pragma once

#include "gconn/classify.hpp"
#include "gconn/jordan.hpp"

#include <optional>
#include <string>

namespace gconn {

enum class ConnectionKind { GeneralizedFG, Airy, CoxeterFormal };

// A connection specification:
//   GeneralizedFG: d + a(N + X + Et) dt/t on G_m, slope 1/h at infinity
//   Airy:          d + a(N + X + tE) dt (+ Z dt/t) on A^1, slope 1 + 1/h
//   CoxeterFormal: a formal connection with the given polar part and
//                  residue X in t, slope r/h
struct ConnectionSpec {
  RootSystemPtr base;
  ConnectionKind kind = ConnectionKind::GeneralizedFG;
  Cyclotomic a = Cyclotomic(1);
  CycVector x; // fundamental-coweight coordinates of X (alpha_i(X) = x[i])
  std::optional<CycVector> z;           // Airy residue, same basis
  int r = 1;                            // CoxeterFormal slope numerator
  std::optional<FormalType> formal_type; // CoxeterFormal payload
};

struct GaloisVerdict {
  std::optional<SubgroupType> group; // empty when undetermined
  bool connected_monodromy = false;
  Rational slope;
  bool rigid = false;
  std::optional<LocalGaloisData> local;
  std::vector<std::string> notes;
};

struct GaloisOptions {
  size_t orbit_bound = 2'000'000;
  // B3 conjugacy test: inside W(D4) against the triality-fixed Cartan
  // (default) or inside W(B3) against the folded image of that Cartan.
  bool b3_via_d4 = true;
};

// Semisimple part of A(0), the residue defining the monodromy
// rho(1) = exp(2 pi i A(0)).
LieElement monodromy_semisimple_part(const ConnectionSpec& spec);

// True iff the subgroup of C generated by the coordinate values alpha_i(Ys)
// meets Q only inside Z (the criterion for connected monodromy on the
// adjoint form, where X*(T) is the root lattice).
bool connectedness_check(RootSystemPtr base, const CycVector& ys);

// True iff the Weyl orbit of x meets the sigma-fixed Cartan subspace.
// Throws on orbit-bound overflow.
bool w_conjugate_into_fixed(RootSystemPtr base, const CycVector& x,
                            const std::vector<int>& simple_perm, size_t orbit_bound);

// dim Z_g(rho(1)) = sum over integers k of dim ker(ad A(0) - k).
size_t monodromy_centraliser_dim(const ConnectionSpec& spec);

GaloisVerdict galois_group_fg(const ConnectionSpec& spec, const GaloisOptions& opt = {});
GaloisVerdict galois_group_airy(const ConnectionSpec& spec, const GaloisOptions& opt = {});

// dim Z_G(rho(1)) == r * rank
bool rigidity_check(const ConnectionSpec& spec);

// rho(1) regular, i.e. the centraliser dimension equals the rank.
bool fg_monodromy_regularity(const ConnectionSpec& spec);

GaloisVerdict analyze(const ConnectionSpec& spec, const GaloisOptions& opt = {});

} // namespace gconn
