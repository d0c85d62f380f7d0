#pragma once

#include "gconn/rootsys.hpp"

#include <string>
#include <vector>

namespace gconn {

// How a maximal-degree reductive subgroup K of G is realised.
enum class Realisation {
  Self,             // K = G
  PinnedFixedPoint, // K = (G^sigma)^0 for a pinned automorphism sigma
  ViaD4             // G2 inside B3, realised through the common D4 picture
};

struct SubgroupType {
  SimpleType type;
  Realisation realisation = Realisation::Self;
  int sigma_order = 1; // order of sigma for PinnedFixedPoint
  bool operator==(const SubgroupType& o) const {
    return type == o.type && realisation == o.realisation && sigma_order == o.sigma_order;
  }
};

// The authoritative classification of reductive subgroups of maximal degree.
std::vector<SubgroupType> table1_lookup(SimpleType g);

enum class EliminationRule {
  Accepted,
  CoxeterNumberMismatch,
  RankExceeds,
  DimensionExceeds,
  NoFaithfulRepOfRequiredDim,
  NoOrthogonalEmbedding,
};

struct EliminationTrace {
  SimpleType candidate;
  bool accepted = false;
  EliminationRule rule = EliminationRule::Accepted;
};

std::string elimination_rule_name(EliminationRule r);

// Independent rule-driven re-derivation of table1_lookup: enumerate simple
// types with the same Coxeter number and filter by dimension and
// representation-theoretic embedding obstructions.
std::pair<std::vector<SubgroupType>, std::vector<EliminationTrace>>
derive_maximal_degree_subgroups(SimpleType g);

enum class RepKind { Orthogonal, Symplectic, Neither };

// Dimension and invariant-form kind of the minimal faithful representation.
std::pair<int, RepKind> minimal_faithful_rep_dim(SimpleType t);

// For every proper subset J of the simple roots, the maximal fundamental
// degree of the Levi subsystem on J; certifies max < h throughout.
struct IrreducibilityCertificate {
  SimpleType type;
  int h = 0;
  int max_proper_degree = 0; // maximum over all proper J
  bool holds = false;        // max_proper_degree < h
  size_t subsets_checked = 0;
};

IrreducibilityCertificate irreducibility_certificate(SimpleType g);

} // namespace gconn
