#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "fintop/filters.hpp"

namespace fintop {

/// U is T-below V: every alpha-filter containing U has a limit point in V.
/// Throws not_open.
bool t_below(const FilterSpace& tx, const PointSet& u, const PointSet& v);
bool t_below(const FinSpace& x, Alpha alpha, const PointSet& u, const PointSet& v);

/// A space together with its (unique) T-algebra structure l : TX -> X,
/// sending each alpha-filter to its least limit point.
struct AlgebraStructure {
  FilterSpace tx;
  ContinuousMap l;

  const FinSpace& space() const { return tx.base(); }
  Alpha alpha() const { return tx.alpha(); }
};

/// Which of the three algebra conditions failed, with a witness:
/// 1 = not T0 (points), 2 = a filter without least limit point (filter),
/// 3 = no T-below interpolant (point, open).
struct AlgebraFailure {
  int condition = 0;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> points;
  std::optional<Filter> filter;
  std::optional<std::pair<std::size_t, PointSet>> point_open;
};

using AlgebraResult = std::variant<AlgebraStructure, AlgebraFailure>;

AlgebraResult algebra_structure(const FinSpace& x, Alpha alpha);
AlgebraResult algebra_structure(const FilterSpace& tx);

/// Throws not_algebra with the failure reason.
AlgebraStructure require_algebra(const FinSpace& x, Alpha alpha);

struct PredicateResult {
  bool holds = true;
  std::string witness;
};

/// For every p and open U containing p there is an open V containing p with
/// V T-below U. Witness: the pair (p, U).
PredicateResult is_core_compact(const FilterSpace& tx);
PredicateResult is_core_compact(const FinSpace& x, Alpha alpha);

/// Binary and nullary closure of T-below under intersections. Witness: a
/// non-convergent filter, or the tuple (V1, U1, V2, U2).
PredicateResult is_stable(const FilterSpace& tx);
PredicateResult is_stable(const FinSpace& x, Alpha alpha);

struct IrreducibilityReport {
  bool stable = false;
  bool all_limit_sets_irreducible = false;
  bool agrees() const { return stable == all_limit_sets_irreducible; }
  std::string witness;
};

/// On a T-core-compact space: stable iff every limit set is irreducible.
/// Throws precondition_failed when not core-compact.
IrreducibilityReport stable_iff_irreducible(const FinSpace& x, Alpha alpha);

/// f . l_X = l_Y . Tf on TX.
bool check_hom(const ContinuousMap& f, const AlgebraStructure& dom, const AlgebraStructure& cod);
/// Builds both structures; throws not_algebra.
bool check_hom(const ContinuousMap& f, Alpha alpha);

}  // namespace fintop
