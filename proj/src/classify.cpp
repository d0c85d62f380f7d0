#include "gconn/classify.hpp"

#include <stdexcept>

namespace gconn {

std::vector<SubgroupType> table1_lookup(SimpleType g) {
  auto self = SubgroupType{g, Realisation::Self, 1};
  auto pinned = [](char f, int r, int ord) {
    return SubgroupType{SimpleType{f, r}, Realisation::PinnedFixedPoint, ord};
  };
  switch (g.family) {
    case 'A':
      if (g.rank >= 3 && g.rank % 2 == 1)
        return {self, pinned('C', (g.rank + 1) / 2, 2)};
      return {self};
    case 'B':
      if (g.rank == 3) return {self, SubgroupType{SimpleType{'G', 2}, Realisation::ViaD4, 1}};
      return {self};
    case 'C':
      return {self};
    case 'D':
      if (g.rank == 4) return {self, pinned('B', 3, 2), pinned('G', 2, 3)};
      return {self, pinned('B', g.rank - 1, 2)};
    case 'E':
      if (g.rank == 6) return {self, pinned('F', 4, 2)};
      return {self};
    case 'F':
    case 'G':
      return {self};
    default:
      throw std::invalid_argument("table1_lookup: unsupported type");
  }
}

std::pair<int, RepKind> minimal_faithful_rep_dim(SimpleType t) {
  switch (t.family) {
    case 'A': return {t.rank + 1, RepKind::Neither};
    case 'B': return {2 * t.rank + 1, RepKind::Orthogonal};
    case 'C': return {2 * t.rank, RepKind::Symplectic};
    case 'D': return {2 * t.rank, RepKind::Orthogonal};
    case 'G': return {7, RepKind::Orthogonal};
    case 'F': return {26, RepKind::Orthogonal};
    case 'E':
      if (t.rank == 6) return {27, RepKind::Neither};
      if (t.rank == 7) return {56, RepKind::Symplectic};
      return {248, RepKind::Orthogonal};
    default: throw std::invalid_argument("minimal_faithful_rep_dim: unsupported type");
  }
}

std::string elimination_rule_name(EliminationRule r) {
  switch (r) {
    case EliminationRule::Accepted: return "accepted";
    case EliminationRule::CoxeterNumberMismatch: return "coxeter-number-mismatch";
    case EliminationRule::RankExceeds: return "rank-exceeds";
    case EliminationRule::DimensionExceeds: return "dimension-exceeds";
    case EliminationRule::NoFaithfulRepOfRequiredDim: return "no-faithful-rep-of-required-dim";
    case EliminationRule::NoOrthogonalEmbedding: return "no-orthogonal-embedding";
  }
  return "?";
}

namespace {

// Canonical candidate labels: one per isomorphism class (no B2, D2, D3,
// B1, C1 aliases). Large classical ranks are kept so rank-based rejections
// leave a trace.
std::vector<SimpleType> candidate_pool() {
  std::vector<SimpleType> pool;
  for (int n = 1; n <= 29; ++n) pool.push_back({'A', n});
  for (int n = 3; n <= 15; ++n) pool.push_back({'B', n});
  for (int n = 2; n <= 15; ++n) pool.push_back({'C', n});
  for (int n = 4; n <= 16; ++n) pool.push_back({'D', n});
  pool.push_back({'E', 6});
  pool.push_back({'E', 7});
  pool.push_back({'E', 8});
  pool.push_back({'F', 4});
  pool.push_back({'G', 2});
  return pool;
}

SimpleType canonical_label(SimpleType t) {
  if ((t.family == 'B' || t.family == 'C') && t.rank == 1) return {'A', 1};
  if (t.family == 'B' && t.rank == 2) return {'C', 2};
  if (t.family == 'D' && t.rank == 3) return {'A', 3};
  return t;
}

// Realisation of an accepted proper subgroup, per the classification.
SubgroupType realise(SimpleType g, SimpleType k) {
  if (g.family == 'B' && g.rank == 3 && k == SimpleType{'G', 2})
    return {k, Realisation::ViaD4, 1};
  if (g.family == 'D' && g.rank == 4 && k == SimpleType{'G', 2})
    return {k, Realisation::PinnedFixedPoint, 3};
  return {k, Realisation::PinnedFixedPoint, 2};
}

} // namespace

std::pair<std::vector<SubgroupType>, std::vector<EliminationTrace>>
derive_maximal_degree_subgroups(SimpleType g) {
  SimpleType gc = canonical_label(g);
  std::vector<SubgroupType> accepted{{g, Realisation::Self, 1}};
  std::vector<EliminationTrace> traces;
  const int h = gc.coxeter_number();
  const int gdim = gc.dimension();
  const auto [grep, gkind] = minimal_faithful_rep_dim(gc);

  for (SimpleType k : candidate_pool()) {
    if (k == gc) continue; // the subgroup K = G is recorded up front
    EliminationTrace tr;
    tr.candidate = k;
    if (k.coxeter_number() != h) {
      tr.rule = EliminationRule::CoxeterNumberMismatch;
    } else if (k.rank > gc.rank) {
      tr.rule = EliminationRule::RankExceeds;
    } else if (k.dimension() >= gdim) {
      // equal dimension forces K = G, contradicting K != G
      tr.rule = EliminationRule::DimensionExceeds;
    } else if (minimal_faithful_rep_dim(k).first > grep) {
      tr.rule = EliminationRule::NoFaithfulRepOfRequiredDim;
    } else if (gkind == RepKind::Orthogonal &&
               minimal_faithful_rep_dim(k).second == RepKind::Symplectic) {
      tr.rule = EliminationRule::NoOrthogonalEmbedding;
    } else {
      tr.accepted = true;
      tr.rule = EliminationRule::Accepted;
      accepted.push_back(realise(g, k));
    }
    traces.push_back(tr);
  }
  return {accepted, traces};
}

IrreducibilityCertificate irreducibility_certificate(SimpleType g) {
  RootSystemPtr rs = build_root_system(g);
  IrreducibilityCertificate cert;
  cert.type = g;
  cert.h = rs->h;
  const int n = rs->rank;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) subset.push_back(j);
    std::vector<int> degs = levi_fundamental_degrees(*rs, subset);
    int m = degs.empty() ? 1 : degs.back();
    if (m > cert.max_proper_degree) cert.max_proper_degree = m;
    ++cert.subsets_checked;
  }
  cert.holds = cert.max_proper_degree < cert.h;
  return cert;
}

} // namespace gconn
