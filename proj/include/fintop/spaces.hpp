#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/point_set.hpp"

namespace fintop {

/// Reflexive, transitive relation on {0..n-1}, stored as principal down-sets.
class Preorder {
 public:
  Preorder() = default;

  /// Discrete order on n elements.
  static Preorder discrete(std::size_t n);

  /// Reflexive-transitive closure of the given pairs (lo, hi) meaning lo <= hi.
  static Preorder from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  /// down[i] = {j : j <= i}. Throws invalid_input unless reflexive and transitive.
  static Preorder from_down_sets(std::vector<PointSet> down);

  std::size_t size() const { return down_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return down_[j].contains(i); }
  bool equivalent(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }
  const PointSet& down(std::size_t i) const { return down_[i]; }
  PointSet up(std::size_t i) const;
  bool is_partial_order() const;

  /// Pairs (lo, hi) with lo < hi and nothing strictly between; only
  /// meaningful on partial orders.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  std::vector<PointSet> down_;
};

/// A finite topological space. The topology is determined by the minimal open
/// neighbourhood of each point; the full open family is enumerated on demand
/// and kept in canonical order (cardinality, then mask value).
///
/// Order convention throughout: x <= y iff every neighbourhood of y contains
/// x, i.e. x lies in min_nbhd(y). Opens are exactly the down-sets.
class FinSpace {
 public:
  FinSpace();

  /// Validates an explicit open family: contains the empty and full set and
  /// is closed under pairwise union and intersection.
  static FinSpace build(std::vector<std::string> labels, std::vector<PointSet> opens);

  /// Topology whose minimal neighbourhoods are given; used for derived
  /// spaces whose open family may be too large to list.
  static FinSpace from_min_nbhds(std::vector<std::string> labels, std::vector<PointSet> min_nbhd);

  std::size_t size() const;
  PointSet points() const { return PointSet::first(size()); }
  const std::vector<std::string>& labels() const;
  const std::string& label(std::size_t i) const;
  const PointSet& min_nbhd(std::size_t i) const;

  bool leq(std::size_t i, std::size_t j) const { return min_nbhd(j).contains(i); }
  bool is_open(const PointSet& s) const;
  /// Smallest open set containing s (down-closure).
  PointSet open_hull(const PointSet& s) const;
  /// Closure of s (up-closure).
  PointSet closure(const PointSet& s) const;

  /// All opens in canonical order. Throws cap_exceeded when there are more
  /// than kMaxOpens of them.
  const std::vector<PointSet>& opens() const;
  std::optional<std::size_t> open_index(const PointSet& s) const;

  static constexpr std::size_t kMaxOpens = std::size_t{1} << 21;

  /// Same point count and topology; labels are not compared.
  bool same_topology(const FinSpace& other) const;

  std::string format(const PointSet& s) const;

  struct Impl;

 private:
  explicit FinSpace(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Default labels a, b, c, ... (then p26, p27, ...).
std::vector<std::string> default_labels(std::size_t n);

/// Builds a space from label names and opens given as label lists.
FinSpace build_space(const std::vector<std::string>& labels,
                     const std::vector<std::vector<std::string>>& opens);

/// Opens are the down-sets of p.
FinSpace alexandrov(const Preorder& p, std::vector<std::string> labels = {});

/// The order x <= y iff min_nbhd(x) is contained in min_nbhd(y). With
/// conventional = true the specialisation order (its dual) is returned.
Preorder specialization_order(const FinSpace& x, bool conventional = false);

/// All down-sets of the preorder encoded by the given principal down-sets,
/// in canonical order. Throws cap_exceeded past `limit`.
std::vector<PointSet> enumerate_down_sets(const std::vector<PointSet>& down, std::size_t limit);

struct SeparationReport {
  bool is_t0 = true;
  bool is_sober = true;
  /// Two topologically indistinguishable points when not T0.
  std::optional<std::pair<std::size_t, std::size_t>> indistinguishable;
  /// An irreducible closed set without a unique generic point.
  std::optional<PointSet> bad_irreducible;
};

SeparationReport separation_flags(const FinSpace& x);

/// Irreducible: non-empty, and any two opens meeting it have an
/// intersection meeting it.
bool is_irreducible(const FinSpace& x, const PointSet& s);

class ContinuousMap {
 public:
  /// Throws not_continuous with witness (B, f^-1(B)) for the first basic
  /// open B of cod, in canonical order, whose preimage is not open.
  static ContinuousMap check(FinSpace dom, FinSpace cod, std::vector<std::size_t> table);
  static ContinuousMap identity(const FinSpace& x);
  static ContinuousMap constant(const FinSpace& dom, const FinSpace& cod, std::size_t value);

  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }
  std::size_t operator()(std::size_t p) const { return table_[p]; }
  const std::vector<std::size_t>& table() const { return table_; }

  PointSet image(const PointSet& s) const;
  PointSet preimage(const PointSet& s) const;

  friend bool operator==(const ContinuousMap& a, const ContinuousMap& b) { return a.table_ == b.table_; }

 private:
  ContinuousMap(FinSpace dom, FinSpace cod, std::vector<std::size_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}
  FinSpace dom_;
  FinSpace cod_;
  std::vector<std::size_t> table_;
};

/// Accepts a point-to-point table given by labels.
ContinuousMap check_continuous(const std::vector<std::string>& table, const FinSpace& dom, const FinSpace& cod);

/// g . f
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// Pointwise comparison in the codomain order.
bool map_leq(const ContinuousMap& f, const ContinuousMap& g);
/// f(x) ~ g(x) for all x.
bool map_equivalent(const ContinuousMap& f, const ContinuousMap& g);

/// f -| g : 1 <= g.f and f.g <= 1.
bool is_adjoint_pair(const ContinuousMap& f, const ContinuousMap& g);

bool is_homeomorphism(const ContinuousMap& f);

/// Continuous (= monotone) maps dom -> cod in lexicographic table order; the
/// callback returns false to stop.
void for_each_continuous_map(const FinSpace& dom, const FinSpace& cod,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit);
std::vector<ContinuousMap> all_continuous_maps(const FinSpace& dom, const FinSpace& cod);

/// Bijection dom -> cod preserving and reflecting the order, found by
/// backtracking.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FinSpace& a, const FinSpace& b);

/// Lexicographically least sorted open family over all relabellings.
std::vector<PointSet> canonical_form(const FinSpace& x);

inline constexpr std::size_t kDefaultEnumerationCap = 5;

/// T0 topologies on n labelled points, in a deterministic order, optionally
/// one representative per homeomorphism class.
std::vector<FinSpace> enumerate_t0_spaces(std::size_t n, bool up_to_iso = false,
                                          std::size_t cap = kDefaultEnumerationCap);

/// DOT digraph of the order (edge lo -> hi per covering pair of the
/// T0 quotient order). With conventional = true edges follow the
/// specialisation order instead.
std::string order_to_dot(const FinSpace& x, bool conventional = false, const std::string& name = "order");

}  // namespace fintop
