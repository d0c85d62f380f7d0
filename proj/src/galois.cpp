#include "gconn/galois.hpp"

#include "gconn/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gconn {

namespace {

// Residue A(0) of the connection.
LieElement residue_term(const ConnectionSpec& spec) {
  switch (spec.kind) {
    case ConnectionKind::GeneralizedFG:
      return (principal_nilpotent_n(spec.base) + cartan_from_coweight(spec.base, spec.x))
          .scaled(spec.a);
    case ConnectionKind::Airy:
      return spec.z ? cartan_from_coweight(spec.base, *spec.z) : lie_zero(spec.base);
    case ConnectionKind::CoxeterFormal: {
      // A(0) = t^0 part of the polar coefficients plus the torus residue
      LieElement r = spec.x.empty() ? lie_zero(spec.base)
                                    : cartan_from_coweight(spec.base, spec.x);
      if (spec.formal_type)
        for (const auto& [i, v] : spec.formal_type->coeffs)
          for (const auto& [key, c] : v.terms)
            if (key.second == 0) r.add_term(key.first, 0, c);
      return r;
    }
  }
  throw std::logic_error("residue_term: bad kind");
}

CycVector scaled_coords(const CycVector& v, const Cyclotomic& a) {
  CycVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c * a);
  return out;
}

// Coordinates driving the connectedness test: the semisimple part of the
// residue is W-conjugate to these torus coordinates.
CycVector connectedness_coords(const ConnectionSpec& spec) {
  switch (spec.kind) {
    case ConnectionKind::GeneralizedFG:
      return scaled_coords(spec.x, spec.a); // (N + X)_s is conjugate to X
    case ConnectionKind::Airy:
      return spec.z ? *spec.z : CycVector(spec.base->rank, Cyclotomic(0));
    case ConnectionKind::CoxeterFormal:
      return spec.x.empty() ? CycVector(spec.base->rank, Cyclotomic(0)) : spec.x;
  }
  throw std::logic_error("connectedness_coords: bad kind");
}

FormalType fg_formal_type(const ConnectionSpec& spec, int r) {
  return make_formal_type(spec.base, r, {{r, {spec.a}}});
}

} // namespace

LieElement monodromy_semisimple_part(const ConnectionSpec& spec) {
  if (spec.kind == ConnectionKind::Airy && !spec.z)
    throw std::invalid_argument("monodromy_semisimple_part: Airy spec without residue");
  return jordan_decomposition(residue_term(spec)).first;
}

bool connectedness_check(RootSystemPtr base, const CycVector& ys) {
  const int n = base->rank;
  if (static_cast<int>(ys.size()) != n)
    throw std::invalid_argument("connectedness_check: coordinate count mismatch");
  unsigned big = 1;
  for (const auto& c : ys) big = std::lcm(big, c.order());
  size_t width = euler_phi(big);

  // Split each generator into rational part q_j and irrational components.
  // An integer combination of the generators is rational iff it kills every
  // irrational component; those combinations form a saturated lattice.
  std::vector<Rational> q(n);
  std::vector<std::vector<Rational>> irr(width > 1 ? width - 1 : 0,
                                         std::vector<Rational>(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> comps = ys[j].lifted_to(big).coeffs();
    comps.resize(width, Rational(0));
    q[j] = comps[0];
    for (size_t p = 1; p < width; ++p) irr[p - 1][j] = comps[p];
  }

  IntMatrix rows;
  for (const auto& row : irr) {
    Integer den = 1;
    for (const auto& v : row) den = den / gcd(den, denominator(v)) * denominator(v);
    std::vector<Integer> irow;
    for (const auto& v : row) irow.push_back(numerator(v) * (den / denominator(v)));
    rows.push_back(std::move(irow));
  }
  IntMatrix kernel = integer_kernel(rows, n);

  // The rational intersection is generated by the kernel images; it lies in
  // Z iff every generator value is an integer.
  for (const auto& gen : kernel) {
    Rational val(0);
    for (int j = 0; j < n; ++j) val += Rational(gen[j]) * q[j];
    if (denominator(val) != 1) return false;
  }
  return true;
}

bool w_conjugate_into_fixed(RootSystemPtr base, const CycVector& x,
                            const std::vector<int>& simple_perm, size_t orbit_bound) {
  auto in_fixed = [&](const CycVector& y) {
    for (size_t i = 0; i < simple_perm.size(); ++i)
      if (!(y[i] - y[simple_perm[i]]).is_zero()) return false;
    return true;
  };
  return weyl_orbit_search(*base, x, orbit_bound, in_fixed);
}

size_t monodromy_centraliser_dim(const ConnectionSpec& spec) {
  ExactMatrix m = ad_matrix(residue_term(spec));
  std::vector<long> evs = m.integer_eigenvalues();
  size_t dim = 0;
  for (long k : evs) {
    ExactMatrix shifted = m;
    for (size_t j = 0; j < m.rows(); ++j)
      shifted.at(j, j) = shifted.at(j, j) - Cyclotomic(k);
    dim += m.rows() - shifted.rank();
  }
  return dim;
}

bool rigidity_check(const ConnectionSpec& spec) {
  const RootSystemData& rs = *spec.base;
  if (spec.kind == ConnectionKind::Airy) return true; // (h+1) rank = dim g
  int r = spec.kind == ConnectionKind::GeneralizedFG ? 1 : spec.r;
  return monodromy_centraliser_dim(spec) == static_cast<size_t>(r) * rs.rank;
}

bool fg_monodromy_regularity(const ConnectionSpec& spec) {
  if (spec.kind != ConnectionKind::GeneralizedFG)
    throw std::invalid_argument("fg_monodromy_regularity: not an FG spec");
  return monodromy_centraliser_dim(spec) == static_cast<size_t>(spec.base->rank);
}

namespace {

// The sigma-test decision tree on the residue torus coordinates.
void decide_group(const ConnectionSpec& spec, const GaloisOptions& opt, GaloisVerdict& v) {
  RootSystemPtr base = spec.base;
  const SimpleType g = base->type;
  const CycVector x =
      spec.x.empty() ? CycVector(base->rank, Cyclotomic(0)) : spec.x;
  std::vector<SubgroupType> table = table1_lookup(g);
  if (table.size() == 1) {
    v.group = table[0];
    v.notes.push_back("no proper maximal-degree subgroup; group is " + g.name());
    return;
  }

  try {
    if (g.family == 'D' && g.rank == 4) {
      // order-3 fixed-point test (G2) first, then the order-2 tests (B3)
      for (const auto& perm : diagram_automorphisms(*base)) {
        if (pinned_automorphism(*base, perm).order != 3) continue;
        if (w_conjugate_into_fixed(base, x, perm, opt.orbit_bound)) {
          v.group = SubgroupType{{'G', 2}, Realisation::PinnedFixedPoint, 3};
          v.notes.push_back("conjugate into the triality-fixed Cartan");
          return;
        }
      }
      for (const auto& perm : diagram_automorphisms(*base)) {
        if (pinned_automorphism(*base, perm).order != 2) continue;
        if (w_conjugate_into_fixed(base, x, perm, opt.orbit_bound)) {
          v.group = SubgroupType{{'B', 3}, Realisation::PinnedFixedPoint, 2};
          v.notes.push_back("conjugate into an involution-fixed Cartan");
          return;
        }
      }
      v.group = SubgroupType{g, Realisation::Self, 1};
      v.notes.push_back("no fixed-Cartan conjugacy; group is D4");
      return;
    }

    if (g.family == 'B' && g.rank == 3) {
      bool inside;
      if (opt.b3_via_d4) {
        // lift (b1, b2, b3) to the involution-fixed Cartan of D4 and run the
        // triality test there
        RootSystemPtr d4 = build_root_system('D', 4);
        CycVector lifted = {x[0], x[1], x[2], x[2]};
        inside = w_conjugate_into_fixed(d4, lifted, {2, 1, 3, 0}, opt.orbit_bound);
        v.notes.push_back("B3 test run in the Weyl group of D4");
      } else {
        // folded image of the triality-fixed Cartan: b1 = b3
        auto pred = [](const CycVector& y) { return (y[0] - y[2]).is_zero(); };
        inside = weyl_orbit_search(*base, x, opt.orbit_bound, pred);
        v.notes.push_back("B3 test run in the Weyl group of B3");
      }
      if (inside) {
        v.group = SubgroupType{{'G', 2}, Realisation::ViaD4, 1};
        v.notes.push_back("conjugate into the G2 Cartan");
      } else {
        v.group = SubgroupType{g, Realisation::Self, 1};
        v.notes.push_back("not conjugate into the G2 Cartan");
      }
      return;
    }

    // single nontrivial pinned automorphism class: A_{2n-1}, D_n (n >= 5), E6
    const SubgroupType sub = table[1];
    for (const auto& perm : diagram_automorphisms(*base)) {
      if (pinned_automorphism(*base, perm).order != sub.sigma_order) continue;
      if (w_conjugate_into_fixed(base, x, perm, opt.orbit_bound)) {
        v.group = sub;
        v.notes.push_back("conjugate into the fixed Cartan of the order-" +
                          std::to_string(sub.sigma_order) + " automorphism");
      } else {
        v.group = SubgroupType{g, Realisation::Self, 1};
        v.notes.push_back("not conjugate into the fixed Cartan");
      }
      return;
    }
    throw std::logic_error("decide_group: expected automorphism not found");
  } catch (const std::runtime_error& e) {
    v.group.reset();
    v.notes.push_back(std::string("undetermined: ") + e.what());
  }
}

} // namespace

GaloisVerdict galois_group_fg(const ConnectionSpec& spec, const GaloisOptions& opt) {
  if (spec.kind != ConnectionKind::GeneralizedFG)
    throw std::invalid_argument("galois_group_fg: not an FG spec");
  if (spec.a.is_zero()) throw std::invalid_argument("galois_group_fg: a must be nonzero");
  const RootSystemData& rs = *spec.base;
  GaloisVerdict v;
  v.slope = Rational(1) / rs.h;
  v.rigid = rigidity_check(spec);
  v.local = local_galois_group(to_jordan(fg_formal_type(spec, 1)));
  v.connected_monodromy = connectedness_check(spec.base, connectedness_coords(spec));
  if (!v.connected_monodromy) {
    v.notes.push_back("monodromy connectedness hypothesis fails; no group claim");
    return v;
  }
  decide_group(spec, opt, v);
  return v;
}

GaloisVerdict galois_group_airy(const ConnectionSpec& spec, const GaloisOptions& opt) {
  if (spec.kind != ConnectionKind::Airy)
    throw std::invalid_argument("galois_group_airy: not an Airy spec");
  bool z_zero = !spec.z || std::all_of(spec.z->begin(), spec.z->end(),
                                       [](const Cyclotomic& c) { return c.is_zero(); });
  if (!z_zero)
    throw std::invalid_argument("galois_group_airy: verdict requires zero residue");
  ConnectionSpec fg = spec;
  fg.kind = ConnectionKind::GeneralizedFG;
  fg.z.reset();
  GaloisVerdict v = galois_group_fg(fg, opt);
  const RootSystemData& rs = *spec.base;
  v.slope = Rational(rs.h + 1) / rs.h;
  v.rigid = true;
  v.local = local_galois_group(to_jordan(fg_formal_type(spec, rs.h + 1)));
  v.notes.push_back("group verdict delegated to the associated FG connection");
  return v;
}

GaloisVerdict analyze(const ConnectionSpec& spec, const GaloisOptions& opt) {
  switch (spec.kind) {
    case ConnectionKind::GeneralizedFG:
      return galois_group_fg(spec, opt);
    case ConnectionKind::Airy:
      return galois_group_airy(spec, opt);
    case ConnectionKind::CoxeterFormal: {
      if (!spec.formal_type)
        throw std::invalid_argument("analyze: CoxeterFormal spec needs a formal type");
      const RootSystemData& rs = *spec.base;
      GaloisVerdict v;
      v.slope = slope(*spec.formal_type);
      v.rigid = rigidity_check(spec);
      v.local = local_galois_group(to_jordan(*spec.formal_type));
      v.connected_monodromy = connectedness_check(spec.base, connectedness_coords(spec));
      if (!v.connected_monodromy) {
        v.notes.push_back("monodromy connectedness hypothesis fails; no group claim");
        return v;
      }
      std::vector<SubgroupType> table = table1_lookup(rs.type);
      if (table.size() == 1) {
        v.group = table[0];
        v.notes.push_back("unique maximal-degree subgroup");
      } else if (spec.formal_type->r == 1) {
        // slope 1/h with regular-semisimple leading term: the FG tree applies
        decide_group(spec, opt, v);
      } else {
        v.notes.push_back(
            "group lies in the maximal-degree classification; finer verdict "
            "needs slope-1/h data");
      }
      return v;
    }
  }
  throw std::logic_error("analyze: bad kind");
}

} // namespace gconn
