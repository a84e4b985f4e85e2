#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/filters.hpp"

namespace fintop {

/// A finite lattice given by its order; meet and join tables are computed
/// and stored.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// leq[i][j] means element i <= element j. Throws invalid_input unless
  /// the relation is a partial order with all binary meets and joins and a
  /// top and bottom.
  static FiniteLattice from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

  /// Reflexive-transitive closure of the pairs (lo, hi).
  static FiniteLattice from_pairs(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  /// Join of a family; bottom for the empty family.
  std::size_t join_all(const std::vector<std::size_t>& xs) const;
  std::size_t meet_all(const std::vector<std::size_t>& xs) const;

  /// (x, y, z) with x meet (y join z) != (x meet y) join (x meet z).
  std::optional<std::array<std::size_t, 3>> distributivity_witness() const;

  /// g != bottom and g <= a join b implies g <= a or g <= b.
  bool is_join_prime(std::size_t g) const;

  /// Whether the principal filter up g is an alpha-filter.
  bool is_alpha_generator(std::size_t g, Alpha alpha) const;

  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

  std::string to_dot(const std::string& name = "lattice") const;

 private:
  std::vector<std::string> labels_;
  std::vector<bool> leq_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// A finite lattice satisfying the frame law. In the finite case that is
/// binary distributivity.
class FiniteFrame : public FiniteLattice {
 public:
  FiniteFrame() = default;

  /// Throws not_a_frame with indices (x, y, z) of a violated distributive law.
  static FiniteFrame validate(FiniteLattice lattice);

 private:
  explicit FiniteFrame(FiniteLattice l) : FiniteLattice(std::move(l)) {}
};

/// Order isomorphism between two lattices, found by backtracking.
std::optional<std::vector<std::size_t>> find_lattice_iso(const FiniteLattice& a, const FiniteLattice& b);

/// A monotone map between finite lattices.
struct LatticeMap {
  FiniteLattice dom;
  FiniteLattice cod;
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t i) const { return table[i]; }
};

/// Throws invalid_input unless the table is a monotone map dom -> cod.
LatticeMap lattice_map(FiniteLattice dom, FiniteLattice cod, std::vector<std::size_t> table);

/// Top and binary meets.
bool preserves_finite_meets(const LatticeMap& f);

/// Suprema of families of size < alpha: nothing for 0, bottom for 1, finite
/// joins for omega, and for Omega all joins, which on a finite lattice are
/// the finite ones.
bool preserves_alpha_sups(const LatticeMap& f, Alpha alpha);

/// Largest alpha such that f preserves finite meets and alpha-suprema;
/// empty when finite meets are not preserved.
std::optional<Alpha> alpha_class(const LatticeMap& f);

/// A map in the morphism class for a fixed alpha.
struct LatticeMorphism : LatticeMap {
  Alpha alpha = Alpha::zero;
};

/// Throws invalid_input unless the map lies in the class for alpha.
LatticeMorphism lattice_morphism(FiniteLattice dom, FiniteLattice cod, std::vector<std::size_t> table, Alpha alpha);

/// All morphisms dom -> cod of the class for alpha, in lexicographic table
/// order.
std::vector<std::vector<std::size_t>> all_lattice_morphisms(const FiniteLattice& dom, const FiniteLattice& cod,
                                                            Alpha alpha);

}  // namespace fintop
