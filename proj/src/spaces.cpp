#include "fintop/spaces.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fintop {

// ---------------------------------------------------------------- Preorder

Preorder Preorder::discrete(std::size_t n) {
  std::vector<PointSet> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i] = PointSet::singleton(i);
  Preorder p;
  p.down_ = std::move(down);
  return p;
}

Preorder Preorder::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (n > kMaxPoints) throw Error(ErrorCode::cap_exceeded, "preorder larger than " + std::to_string(kMaxPoints));
  std::vector<PointSet> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i] = PointSet::singleton(i);
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::invalid_input, "pair refers to a missing element");
    down[hi].insert(lo);
  }
  // Warshall on bitsets.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (down[i].contains(k)) down[i] |= down[k];
  Preorder p;
  p.down_ = std::move(down);
  return p;
}

Preorder Preorder::from_down_sets(std::vector<PointSet> down) {
  const std::size_t n = down.size();
  if (n > kMaxPoints) throw Error(ErrorCode::cap_exceeded, "preorder larger than " + std::to_string(kMaxPoints));
  const PointSet all = PointSet::first(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!down[i].subset_of(all)) throw Error(ErrorCode::invalid_input, "relation refers to a missing element");
    if (!down[i].contains(i)) throw Error(ErrorCode::invalid_input, "relation is not reflexive");
    for (auto j : down[i])
      if (!down[j].subset_of(down[i])) throw Error(ErrorCode::invalid_input, "relation is not transitive");
  }
  Preorder p;
  p.down_ = std::move(down);
  return p;
}

PointSet Preorder::up(std::size_t i) const {
  PointSet s;
  for (std::size_t j = 0; j < size(); ++j)
    if (leq(i, j)) s.insert(j);
  return s;
}

bool Preorder::is_partial_order() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j : down_[i])
      if (j != i && leq(i, j)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Preorder::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  auto lt = [&](std::size_t a, std::size_t b) { return leq(a, b) && !leq(b, a); };
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (!lt(lo, hi)) continue;
      bool covering = true;
      for (std::size_t z = 0; z < n && covering; ++z)
        if (lt(lo, z) && lt(z, hi)) covering = false;
      if (covering) out.emplace_back(lo, hi);
    }
  return out;
}

// ---------------------------------------------------------------- FinSpace

struct FinSpace::Impl {
  std::vector<std::string> labels;
  std::vector<PointSet> min_nbhd;
  mutable std::once_flag opens_once;
  mutable std::vector<PointSet> opens;
  mutable std::unordered_map<PointSet, std::size_t, PointSetHash> open_index;
};

namespace {

std::shared_ptr<FinSpace::Impl> make_impl(std::vector<std::string> labels, std::vector<PointSet> min_nbhd) {
  auto impl = std::make_shared<FinSpace::Impl>();
  impl->labels = std::move(labels);
  impl->min_nbhd = std::move(min_nbhd);
  return impl;
}

void check_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::invalid_input, "duplicate point label");
}

}  // namespace

FinSpace::FinSpace() : impl_(make_impl({}, {})) {}

FinSpace::FinSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  return out;
}

FinSpace FinSpace::build(std::vector<std::string> labels, std::vector<PointSet> opens) {
  const std::size_t n = labels.size();
  if (n > kMaxPoints) throw Error(ErrorCode::cap_exceeded, "space larger than " + std::to_string(kMaxPoints));
  check_labels(labels);
  const PointSet all = PointSet::first(n);
  for (const auto& u : opens)
    if (!u.subset_of(all)) throw Error(ErrorCode::invalid_input, "open set refers to a missing point");

  std::sort(opens.begin(), opens.end(), canonical_less);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  for (std::size_t i = 0; i < opens.size(); ++i) index.emplace(opens[i], i);

  auto fmt = [&](const PointSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto p : s) {
      if (!first) out += ",";
      out += labels[p];
      first = false;
    }
    return out + "}";
  };

  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j)
      if (!index.count(opens[i] | opens[j]))
        throw Error(ErrorCode::not_closed_under_union, fmt(opens[i]) + " and " + fmt(opens[j]), {opens[i], opens[j]});
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j)
      if (!index.count(opens[i] & opens[j]))
        throw Error(ErrorCode::not_closed_under_intersection, fmt(opens[i]) + " and " + fmt(opens[j]),
                    {opens[i], opens[j]});
  if (!index.count(PointSet{}))
    throw Error(ErrorCode::missing_empty_or_full, "empty set is not listed", {PointSet{}, PointSet{}});
  if (!index.count(all)) throw Error(ErrorCode::missing_empty_or_full, "full set is not listed", {all, all});

  std::vector<PointSet> min_nbhd(n, all);
  for (const auto& u : opens)
    for (auto p : u) min_nbhd[p] &= u;

  auto impl = make_impl(std::move(labels), std::move(min_nbhd));
  // The family is already complete; seed the lazy cache with it.
  std::call_once(impl->opens_once, [&] {
    impl->opens = std::move(opens);
    impl->open_index = std::move(index);
  });
  return FinSpace(std::move(impl));
}

FinSpace FinSpace::from_min_nbhds(std::vector<std::string> labels, std::vector<PointSet> min_nbhd) {
  if (labels.size() != min_nbhd.size()) throw Error(ErrorCode::shape_mismatch, "label count differs from point count");
  if (labels.size() > kMaxPoints)
    throw Error(ErrorCode::cap_exceeded, "space larger than " + std::to_string(kMaxPoints));
  check_labels(labels);
  // Validates reflexivity and transitivity of the induced order.
  (void)Preorder::from_down_sets(min_nbhd);
  return FinSpace(make_impl(std::move(labels), std::move(min_nbhd)));
}

std::size_t FinSpace::size() const { return impl_->min_nbhd.size(); }
const std::vector<std::string>& FinSpace::labels() const { return impl_->labels; }
const std::string& FinSpace::label(std::size_t i) const { return impl_->labels[i]; }
const PointSet& FinSpace::min_nbhd(std::size_t i) const { return impl_->min_nbhd[i]; }

bool FinSpace::is_open(const PointSet& s) const {
  if (!s.subset_of(points())) return false;
  for (auto p : s)
    if (!min_nbhd(p).subset_of(s)) return false;
  return true;
}

PointSet FinSpace::open_hull(const PointSet& s) const {
  PointSet out;
  for (auto p : s) out |= min_nbhd(p);
  return out;
}

PointSet FinSpace::closure(const PointSet& s) const {
  PointSet out;
  for (std::size_t q = 0; q < size(); ++q)
    if (min_nbhd(q).intersects(s)) out.insert(q);
  return out;
}

const std::vector<PointSet>& FinSpace::opens() const {
  std::call_once(impl_->opens_once, [this] {
    auto opens = enumerate_down_sets(impl_->min_nbhd, kMaxOpens);
    std::unordered_map<PointSet, std::size_t, PointSetHash> index;
    for (std::size_t i = 0; i < opens.size(); ++i) index.emplace(opens[i], i);
    impl_->opens = std::move(opens);
    impl_->open_index = std::move(index);
  });
  return impl_->opens;
}

std::optional<std::size_t> FinSpace::open_index(const PointSet& s) const {
  opens();
  auto it = impl_->open_index.find(s);
  if (it == impl_->open_index.end()) return std::nullopt;
  return it->second;
}

bool FinSpace::same_topology(const FinSpace& other) const {
  return impl_ == other.impl_ || impl_->min_nbhd == other.impl_->min_nbhd;
}

std::string FinSpace::format(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for (auto p : s) {
    if (!first) out += ",";
    out += p < size() ? label(p) : "#" + std::to_string(p);
    first = false;
  }
  return out + "}";
}

FinSpace build_space(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& opens) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<PointSet> sets;
  sets.reserve(opens.size());
  for (const auto& open : opens) {
    PointSet s;
    for (const auto& name : open) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::invalid_input, "unknown point '" + name + "' in open set");
      s.insert(it->second);
    }
    sets.push_back(s);
  }
  return FinSpace::build(labels, std::move(sets));
}

FinSpace alexandrov(const Preorder& p, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(p.size());
  if (labels.size() != p.size()) throw Error(ErrorCode::shape_mismatch, "label count differs from preorder size");
  std::vector<PointSet> min_nbhd(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) min_nbhd[i] = p.down(i);
  return FinSpace::from_min_nbhds(std::move(labels), std::move(min_nbhd));
}

Preorder specialization_order(const FinSpace& x, bool conventional) {
  const std::size_t n = x.size();
  std::vector<PointSet> down(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // j <= i iff min_nbhd(j) is contained in min_nbhd(i).
      const bool le = x.min_nbhd(j).subset_of(x.min_nbhd(i));
      if (conventional ? x.min_nbhd(i).subset_of(x.min_nbhd(j)) : le) down[i].insert(j);
    }
  return Preorder::from_down_sets(std::move(down));
}

std::vector<PointSet> enumerate_down_sets(const std::vector<PointSet>& down, std::size_t limit) {
  const std::size_t n = down.size();
  // Group equivalent elements; classes are visited in a linear extension
  // (strictly smaller classes have strictly smaller down-sets).
  std::vector<PointSet> classes;
  std::vector<PointSet> class_down;
  PointSet seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen.contains(i)) continue;
    PointSet cls;
    for (auto j : down[i])
      if (down[j].contains(i)) cls.insert(j);
    seen |= cls;
    classes.push_back(cls);
    class_down.push_back(down[i]);
  }
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return class_down[a].count() < class_down[b].count(); });

  std::vector<PointSet> out;
  struct Frame {
    std::size_t depth;
    PointSet current;
  };
  std::vector<Frame> stack{{0, PointSet{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == order.size()) {
      out.push_back(f.current);
      if (out.size() > limit)
        throw Error(ErrorCode::cap_exceeded, "more than " + std::to_string(limit) + " open sets");
      continue;
    }
    const std::size_t c = order[f.depth];
    stack.push_back({f.depth + 1, f.current});
    if ((class_down[c] - classes[c]).subset_of(f.current)) stack.push_back({f.depth + 1, f.current | classes[c]});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_irreducible(const FinSpace& x, const PointSet& s) {
  if (s.empty()) return false;
  // Basic opens suffice: an open meeting s at c contains min_nbhd(c).
  for (auto c1 : s)
    for (auto c2 : s)
      if (!(x.min_nbhd(c1) & x.min_nbhd(c2)).intersects(s)) return false;
  return true;
}

SeparationReport separation_flags(const FinSpace& x) {
  SeparationReport r;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n && r.is_t0; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x.min_nbhd(i) == x.min_nbhd(j)) {
        r.is_t0 = false;
        r.indistinguishable = std::make_pair(i, j);
        break;
      }
  const PointSet all = x.points();
  for (const auto& u : x.opens()) {
    const PointSet closed = all - u;
    if (!is_irreducible(x, closed)) continue;
    std::size_t generic = 0;
    for (std::size_t p = 0; p < n; ++p)
      if (x.closure(PointSet::singleton(p)) == closed) ++generic;
    if (generic != 1) {
      r.is_sober = false;
      r.bad_irreducible = closed;
      break;
    }
  }
  return r;
}

// ------------------------------------------------------------ ContinuousMap

ContinuousMap ContinuousMap::check(FinSpace dom, FinSpace cod, std::vector<std::size_t> table) {
  if (table.size() != dom.size()) throw Error(ErrorCode::shape_mismatch, "map table is not total on the domain");
  for (auto v : table)
    if (v >= cod.size()) throw Error(ErrorCode::shape_mismatch, "map value outside the codomain");
  ContinuousMap f(std::move(dom), std::move(cod), std::move(table));
  std::vector<PointSet> basis;
  for (std::size_t y = 0; y < f.cod_.size(); ++y) basis.push_back(f.cod_.min_nbhd(y));
  std::sort(basis.begin(), basis.end(), canonical_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  for (const auto& b : basis) {
    const PointSet pre = f.preimage(b);
    if (!f.dom_.is_open(pre))
      throw Error(ErrorCode::not_continuous,
                  "preimage of open " + f.cod_.format(b) + " is " + f.dom_.format(pre) + ", which is not open",
                  {b, pre});
  }
  return f;
}

ContinuousMap ContinuousMap::identity(const FinSpace& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), 0);
  return ContinuousMap(x, x, std::move(t));
}

ContinuousMap ContinuousMap::constant(const FinSpace& dom, const FinSpace& cod, std::size_t value) {
  if (value >= cod.size()) throw Error(ErrorCode::shape_mismatch, "constant outside the codomain");
  return ContinuousMap(dom, cod, std::vector<std::size_t>(dom.size(), value));
}

PointSet ContinuousMap::image(const PointSet& s) const {
  PointSet out;
  for (auto p : s) out.insert(table_[p]);
  return out;
}

PointSet ContinuousMap::preimage(const PointSet& s) const {
  PointSet out;
  for (std::size_t p = 0; p < table_.size(); ++p)
    if (s.contains(table_[p])) out.insert(p);
  return out;
}

ContinuousMap check_continuous(const std::vector<std::string>& table, const FinSpace& dom, const FinSpace& cod) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cod.size(); ++i) index.emplace(cod.label(i), i);
  std::vector<std::size_t> t;
  for (const auto& name : table) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorCode::invalid_input, "unknown codomain point '" + name + "'");
    t.push_back(it->second);
  }
  return ContinuousMap::check(dom, cod, std::move(t));
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!f.cod().same_topology(g.dom())) throw Error(ErrorCode::shape_mismatch, "composite of non-composable maps");
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t p = 0; p < t.size(); ++p) t[p] = g(f(p));
  return ContinuousMap::check(f.dom(), g.cod(), std::move(t));
}

namespace {
void require_parallel(const ContinuousMap& f, const ContinuousMap& g) {
  if (!f.dom().same_topology(g.dom()) || !f.cod().same_topology(g.cod()))
    throw Error(ErrorCode::shape_mismatch, "maps do not share domain and codomain");
}
}  // namespace

bool map_leq(const ContinuousMap& f, const ContinuousMap& g) {
  require_parallel(f, g);
  for (std::size_t p = 0; p < f.dom().size(); ++p)
    if (!f.cod().leq(f(p), g(p))) return false;
  return true;
}

bool map_equivalent(const ContinuousMap& f, const ContinuousMap& g) { return map_leq(f, g) && map_leq(g, f); }

bool is_adjoint_pair(const ContinuousMap& f, const ContinuousMap& g) {
  if (!f.cod().same_topology(g.dom()) || !g.cod().same_topology(f.dom()))
    throw Error(ErrorCode::shape_mismatch, "maps are not of opposite types");
  const FinSpace& x = f.dom();
  const FinSpace& y = f.cod();
  for (std::size_t p = 0; p < x.size(); ++p)
    if (!x.leq(p, g(f(p)))) return false;
  for (std::size_t q = 0; q < y.size(); ++q)
    if (!y.leq(f(g(q)), q)) return false;
  return true;
}

bool is_homeomorphism(const ContinuousMap& f) {
  const std::size_t n = f.dom().size();
  if (n != f.cod().size()) return false;
  if (f.image(f.dom().points()) != f.cod().points()) return false;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (f.cod().leq(f(p), f(q)) && !f.dom().leq(p, q)) return false;
  return true;
}

void for_each_continuous_map(const FinSpace& dom, const FinSpace& cod,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = dom.size(), m = cod.size();
  if (n == 0) {
    visit({});
    return;
  }
  if (m == 0) return;
  std::vector<std::size_t> table(n, 0);
  // Earlier points related to point i, split by direction.
  std::vector<std::vector<std::size_t>> below(n), above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (dom.leq(j, i)) below[i].push_back(j);
      if (dom.leq(i, j)) above[i].push_back(j);
    }
  auto fits = [&](std::size_t i, std::size_t v) {
    for (auto j : below[i])
      if (!cod.leq(table[j], v)) return false;
    for (auto j : above[i])
      if (!cod.leq(v, table[j])) return false;
    return true;
  };
  std::size_t i = 0;
  std::vector<std::size_t> next(n, 0);
  while (true) {
    bool placed = false;
    while (next[i] < m) {
      const std::size_t v = next[i]++;
      if (fits(i, v)) {
        table[i] = v;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (i + 1 == n) {
        if (!visit(table)) return;
      } else {
        ++i;
        next[i] = 0;
      }
    } else {
      if (i == 0) return;
      --i;
    }
  }
}

std::vector<ContinuousMap> all_continuous_maps(const FinSpace& dom, const FinSpace& cod) {
  std::vector<ContinuousMap> out;
  for_each_continuous_map(dom, cod, [&](const std::vector<std::size_t>& t) {
    out.push_back(ContinuousMap::check(dom, cod, t));
    return true;
  });
  return out;
}

std::optional<std::vector<std::size_t>> find_homeomorphism(const FinSpace& a, const FinSpace& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<std::size_t> image(n);
  PointSet used;
  auto consistent = [&](std::size_t i, std::size_t v) {
    if (a.min_nbhd(i).count() != b.min_nbhd(v).count()) return false;
    if (a.leq(i, i) != b.leq(v, v)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (a.leq(j, i) != b.leq(image[j], v)) return false;
      if (a.leq(i, j) != b.leq(v, image[j])) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used.contains(v) || !consistent(i, v)) continue;
      image[i] = v;
      used.insert(v);
      if (place(i + 1)) return true;
      used.erase(v);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

std::vector<PointSet> canonical_form(const FinSpace& x) {
  const std::size_t n = x.size();
  if (n > 8) throw Error(ErrorCode::cap_exceeded, "canonical form limited to 8 points");
  const auto& opens = x.opens();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointSet> best;
  auto lex_less = [](const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
  };
  do {
    std::vector<PointSet> relabelled;
    relabelled.reserve(opens.size());
    for (const auto& u : opens) {
      PointSet v;
      for (auto p : u) v.insert(perm[p]);
      relabelled.push_back(v);
    }
    std::sort(relabelled.begin(), relabelled.end(), canonical_less);
    if (best.empty() || lex_less(relabelled, best)) best = std::move(relabelled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// All partial orders on {0..n-1}, each produced once: point k is attached to
// the order on {0..k-1} by choosing a down-set D (strictly below k) and a
// disjoint up-set U (strictly above k) with D already below U.
void extend_posets(std::size_t n, std::vector<PointSet>& down, std::vector<std::vector<PointSet>>& out) {
  const std::size_t k = down.size();
  if (k == n) {
    out.push_back(down);
    return;
  }
  std::vector<PointSet> down_sets = k == 0 ? std::vector<PointSet>{PointSet{}} : enumerate_down_sets(down, 1 << 20);
  std::vector<PointSet> up(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (down[j].contains(i)) up[i].insert(j);
  std::vector<PointSet> up_sets = k == 0 ? std::vector<PointSet>{PointSet{}} : enumerate_down_sets(up, 1 << 20);
  for (const auto& d : down_sets)
    for (const auto& u : up_sets) {
      if (d.intersects(u)) continue;
      bool ok = true;
      for (auto lo : d) {
        if (!u.subset_of(up[lo])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<PointSet> next = down;
      PointSet self = d;
      self.insert(k);
      next.push_back(self);
      for (auto hi : u) next[hi] |= self;
      extend_posets(n, next, out);
    }
}

}  // namespace

std::vector<FinSpace> enumerate_t0_spaces(std::size_t n, bool up_to_iso, std::size_t cap) {
  if (n > cap) throw Error(ErrorCode::cap_exceeded, "enumeration of " + std::to_string(n) + " points exceeds cap " +
                                                        std::to_string(cap));
  if (n > 8) throw Error(ErrorCode::cap_exceeded, "enumeration limited to 8 points");
  std::vector<std::vector<PointSet>> posets;
  std::vector<PointSet> start;
  extend_posets(n, start, posets);
  std::vector<FinSpace> out;
  std::vector<std::vector<PointSet>> seen_forms;
  const auto labels = default_labels(n);
  for (auto& down : posets) {
    FinSpace x = FinSpace::from_min_nbhds(labels, std::move(down));
    if (up_to_iso) {
      auto form = canonical_form(x);
      if (std::find(seen_forms.begin(), seen_forms.end(), form) != seen_forms.end()) continue;
      seen_forms.push_back(std::move(form));
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string order_to_dot(const FinSpace& x, bool conventional, const std::string& name) {
  const Preorder p = specialization_order(x, conventional);
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < x.size(); ++i) os << "  \"" << x.label(i) << "\";\n";
  for (auto [lo, hi] : p.covering_pairs()) os << "  \"" << x.label(lo) << "\" -> \"" << x.label(hi) << "\";\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (p.equivalent(i, j)) os << "  \"" << x.label(i) << "\" -> \"" << x.label(j) << "\" [dir=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace fintop
