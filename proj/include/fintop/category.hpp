#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

struct Arrow {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::string name;
};

/// A finite category stored as an explicit composition table.
class FinCategory {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  FinCategory() = default;

  /// compose(g, f) = g . f for every pair with cod f = dom g. Composites
  /// with identities may be left as npos and are filled in. Throws
  /// invalid_category when a composite is missing or has the wrong type, or
  /// when the identity or associativity laws fail.
  static FinCategory build(std::vector<std::string> objects, std::vector<Arrow> arrows,
                           std::vector<std::size_t> identities, std::vector<std::vector<std::size_t>> compose);

  std::size_t object_count() const { return objects_.size(); }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const Arrow& arrow(std::size_t i) const { return arrows_[i]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t identity(std::size_t object) const { return identities_[object]; }
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  /// g . f; throws invalid_category when not composable.
  std::size_t compose(std::size_t g, std::size_t f) const;

  /// Arrows a -> b in index order.
  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const { return hom_[a * objects_.size() + b]; }

  bool is_idempotent(std::size_t e) const;
  std::vector<std::size_t> idempotents() const;

  /// A pair f : a -> b, g : b -> a of mutually inverse arrows.
  std::optional<std::pair<std::size_t, std::size_t>> find_iso(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> compose_;
  std::vector<std::vector<std::size_t>> hom_;
};

struct Functor {
  std::vector<std::size_t> on_objects;
  std::vector<std::size_t> on_arrows;
};

/// Preserves types, identities and composition.
bool is_functor(const FinCategory& c, const FinCategory& d, const Functor& f);
/// Bijective on every hom-set.
bool is_fully_faithful(const FinCategory& c, const FinCategory& d, const Functor& f);
/// Every object of d is isomorphic to an image object.
bool is_essentially_surjective(const FinCategory& c, const FinCategory& d, const Functor& f);
inline bool is_equivalence(const FinCategory& c, const FinCategory& d, const Functor& f) {
  return is_functor(c, d, f) && is_fully_faithful(c, d, f) && is_essentially_surjective(c, d, f);
}

/// The idempotent-splitting completion of c.
struct Karoubi {
  FinCategory category;
  /// objects[i] = (base object, idempotent on it)
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  /// underlying arrow of c for each arrow of the envelope
  std::vector<std::size_t> base_arrow;
  /// A |-> (A, 1_A), verified fully faithful.
  Functor embedding;
};

Karoubi karoubi_envelope(const FinCategory& c);

struct Splitting {
  std::size_t object = 0;
  /// r : A -> object, s : object -> A with s . r = e and r . s = 1.
  std::size_t r = 0;
  std::size_t s = 0;
};

/// Exhaustive search over every object. When several splittings exist their
/// middle objects are checked to be isomorphic (theorem_violation
/// otherwise). Throws not_idempotent.
std::optional<Splitting> split_idempotent(const FinCategory& c, std::size_t e);

/// First idempotent without a splitting, if any.
std::optional<std::size_t> unsplit_idempotent(const FinCategory& c);

}  // namespace fintop
