#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fintop/category.hpp"
#include "fintop/distributive.hpp"
#include "fintop/lattice.hpp"

namespace fintop {

/// The lattice of opens ordered by inclusion. Element i is x.opens()[i].
FiniteFrame opens_frame(const FinSpace& x);

/// The space of alpha-filters of a frame: points are the principal filters
/// up g with g an alpha-generator, topology generated by the sets
/// x# = {up g : g <= x}.
struct FrameFilterSpace {
  FinSpace space;
  /// generators[i] is the lattice element generating point i.
  std::vector<std::size_t> generators;

  /// x# as a set of points.
  PointSet sharp(const FiniteLattice& l, std::size_t x) const;
};

FrameFilterSpace alpha_filter_space(const FiniteFrame& l, Alpha alpha);

struct EtaReport {
  bool separates_points = false;
  bool injective = false;
  bool preserves_meets = false;
  bool surjective = false;
  bool order_embedding = false;
  bool iso() const { return injective && surjective && order_embedding; }
  std::string witness;
};

/// eta : L -> O(F_alpha L), x |-> x#, checked literally.
EtaReport eta_check(const FiniteFrame& l, Alpha alpha);

struct RoundTripVerdict {
  Alpha alpha = Alpha::zero;
  bool distributive = false;
  /// p |-> y(p) into the alpha-filter space of the open frame is a homeomorphism.
  bool unit_homeomorphism = false;
  /// X is a retract of F_alpha(OX) through algebra homomorphisms.
  bool split_subobject = false;
  /// The verdict expected for this alpha holds: for omega and Omega the unit
  /// is a homeomorphism exactly when X is distributive; for 0 and 1 every
  /// distributive X is a split subobject.
  bool consistent = false;
  std::string detail;
};

RoundTripVerdict round_trip_space(const FinSpace& x, Alpha alpha);

/// Objects: the universe; arrows X -> Y: continuous maps X -> TY;
/// composition r o s = m . Tr . s; identities are units.
struct KleisliCategory {
  FinCategory category;
  std::vector<FilterSpace> filter_spaces;
  /// tables[i]: the map underlying arrow i, into filter indices of T(cod).
  std::vector<std::vector<std::size_t>> tables;
};

KleisliCategory kleisli_category(const std::vector<FinSpace>& universe, Alpha alpha);

struct FunctorReport {
  bool morphisms_in_class = true;
  bool functorial = true;
  bool preserves_identities = true;
  bool faithful = true;
  bool full = true;
  /// (|hom_Kl(X, Y)|, |hom(OY, OX)|) per ordered pair of objects.
  std::vector<std::pair<std::size_t, std::size_t>> hom_sizes;
  std::string detail;
  bool fully_faithful() const {
    return morphisms_in_class && functorial && preserves_identities && faithful && full;
  }
};

/// K sends X to OX and r : X -> TY to OY -> OX, B |-> r^-1(B#).
/// Fullness is checked against every morphism of the alpha class.
FunctorReport comparison_functor(const std::vector<FinSpace>& universe, Alpha alpha);

struct SplitTransferReport {
  bool fact1 = false;
  bool fact2 = false;
  bool fact2_skipped = false;
  bool fact3 = false;
  bool fact3_skipped = false;
  std::string detail;
};

/// For s : M -> L and r : L -> M with r . s = 1: (1) suprema of M are
/// r(Sup s(x_i)); (2) when r and s preserve finite meets and L is a frame,
/// M satisfies the frame law; (3) when in addition s preserves
/// alpha-suprema and the alpha-filters of L separate points, those of M do.
/// Throws not_a_split_pair.
SplitTransferReport split_transfer_check(const LatticeMap& s, const LatticeMap& r, Alpha alpha);

}  // namespace fintop
