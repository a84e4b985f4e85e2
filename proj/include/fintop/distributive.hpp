#pragma once

#include <optional>
#include <string>

#include "fintop/cocomplete.hpp"

namespace fintop {

/// mu(A): the least limit points of alpha-filters containing the open A.
/// Throws not_open.
PointSet mu(const AlgebraStructure& alg, const PointSet& open);

/// Same formula on an arbitrary space, collecting least limit points of the
/// filters that have one. Diagnostic only; the distributivity decision uses
/// mu on algebras.
PointSet mu_least_limits(const FinSpace& x, Alpha alpha, const PointSet& open);

/// First open A (canonical order) whose mu(A) is not open.
std::optional<PointSet> disconnectedness_witness(const AlgebraStructure& alg);
inline bool is_disconnected(const AlgebraStructure& alg) { return !disconnectedness_witness(alg).has_value(); }

/// extensive, monotone, union_bound, meet_absorption; under
/// disconnectedness also idempotent and meet_preserving (skipped otherwise).
LawReport mu_laws_report(const AlgebraStructure& alg);

/// t . l = m . Tt on TX, i.e. t is a T-homomorphism into the free algebra.
bool is_homomorphism_into_free(const AlgebraStructure& alg, const ContinuousMap& t);

/// On a disconnected algebra: t(p) generated by the meet of {A : p in mu(A)},
/// verified to be an alpha-filter valued continuous homomorphism with
/// l . t = 1 and t^-1(A#) = mu(A). Empty when not disconnected.
std::optional<ContinuousMap> splitting_by_formula(const AlgebraStructure& alg);

struct DistributivityVerdict {
  FinSpace space;
  Alpha alpha = Alpha::zero;
  bool algebra = false;
  bool by_adjoint_search = false;
  bool by_characterization = false;
  bool by_formula = false;
  bool by_split_epi = false;
  std::optional<ContinuousMap> splitting;
  /// Offending open when the algebra is not disconnected.
  std::optional<PointSet> witness_open;
  std::string reason;

  bool distributive() const { return by_characterization; }
};

/// Runs the four independent decision procedures and throws
/// theorem_violation if they disagree:
///  (a) search for a continuous left adjoint of l,
///  (b) sober, core-compact, stable and disconnected,
///  (c) the explicit splitting formula,
///  (d) search for a homomorphic section of l.
DistributivityVerdict decide_distributive(const FinSpace& x, Alpha alpha);

}  // namespace fintop
