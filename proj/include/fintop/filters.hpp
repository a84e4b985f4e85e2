#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fintop/spaces.hpp"

namespace fintop {

/// Selects the submonad of filters unreachable by alpha. Ordered
/// zero < one < omega < Omega, matching F_Omega -> F_omega -> F_1 -> F_0.
enum class Alpha { zero = 0, one = 1, omega = 2, Omega = 3 };

inline constexpr std::array<Alpha, 4> kAllAlphas{Alpha::zero, Alpha::one, Alpha::omega, Alpha::Omega};

std::string_view to_string(Alpha a);
/// Accepts "0", "1", "omega", "Omega".
Alpha parse_alpha(std::string_view s);

/// A filter on the open-set lattice. On a finite lattice every filter is
/// principal, so it is stored by its generator: U belongs to the filter iff
/// gen is contained in U. The improper filter has gen = {}.
struct Filter {
  PointSet gen;

  bool contains(const PointSet& open) const { return gen.subset_of(open); }
  /// Order on filters: reverse inclusion of filters, i.e. inclusion of
  /// generators.
  bool leq(const Filter& other) const { return gen.subset_of(other.gen); }
  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Validates that `members` is a filter of opens (non-empty, up-closed in
/// the open lattice, closed under binary meets) and returns it as a
/// principal filter. Throws invalid_input otherwise.
Filter filter_from_family(const FinSpace& x, const std::vector<PointSet>& members);

/// Whether the principal filter generated by the open `gen` is unreachable
/// by alpha. The omega test looks at binary unions (plus the empty family);
/// the Omega test looks at the union of all opens not in the filter.
bool is_alpha_generator(const FinSpace& x, const PointSet& gen, Alpha alpha);

/// All alpha-filters, in canonical generator order.
std::vector<Filter> all_filters(const FinSpace& x, Alpha alpha);

/// The alpha-filter space TX: points are alpha-filters, topology generated
/// by the sets A# = {f : A in f}.
class FilterSpace {
 public:
  FilterSpace(FinSpace base, Alpha alpha, std::vector<Filter> filters, FinSpace space);

  const FinSpace& base() const { return base_; }
  Alpha alpha() const { return alpha_; }
  /// TX as an ordinary space; point i is filters()[i].
  const FinSpace& space() const { return space_; }
  const std::vector<Filter>& filters() const { return filters_; }
  const Filter& filter(std::size_t i) const { return filters_[i]; }
  std::size_t size() const { return filters_.size(); }

  std::optional<std::size_t> index_of(const PointSet& gen) const;
  /// Throws alpha_not_preserved when gen is not a point of TX.
  std::size_t require_index(const PointSet& gen) const;

  /// A# as a set of points of TX.
  PointSet sharp(const PointSet& open) const;

 private:
  FinSpace base_;
  Alpha alpha_;
  std::vector<Filter> filters_;
  FinSpace space_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index_;
};

/// Builds TX. Asserts A# n B# = (A n B)# and X# = TX while constructing.
FilterSpace filter_space(const FinSpace& x, Alpha alpha);

/// Generator of Tf(up G): the least open of the codomain containing f(G).
PointSet lift_generator(const ContinuousMap& f, const PointSet& gen);
/// Tf : TX -> TY, certified through Tf^-1(B#) = (f^-1 B)#.
ContinuousMap lift_map(const ContinuousMap& f, const FilterSpace& tx, const FilterSpace& ty);

/// y_X : X -> TX, p |-> neighbourhood filter of p.
ContinuousMap unit(const FilterSpace& tx);

/// Generator of m_X(up W) for an open W of TX: A is in the result iff
/// W is contained in A#.
PointSet mult_generator(const FilterSpace& tx, const PointSet& w);
/// m_X : TTX -> TX, where ttx is the filter space over tx.space().
ContinuousMap mult(const FilterSpace& tx, const FilterSpace& ttx);

struct Limits {
  PointSet limit_set;
  /// A least element of limit_set (lowest index in its class), if any.
  std::optional<std::size_t> least;
  /// All least elements; a single point on T0 spaces.
  PointSet least_class;
};

Limits limits(const FinSpace& x, const Filter& f);

struct LawCheck {
  std::string law;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_passed() const;
  const LawCheck* find(std::string_view law) const;
};

/// Unit laws, associativity (over TTTX, skipped with a reason when TTX is
/// too large to enumerate its opens), the submonad closure of y and m, and
/// naturality of y and m against the supplied maps X -> Y.
LawReport check_monad_laws(const FinSpace& x, Alpha alpha, std::span<const ContinuousMap> maps = {});

/// T y_X <= y_TX pointwise.
bool check_kz(const FinSpace& x, Alpha alpha);

}  // namespace fintop
