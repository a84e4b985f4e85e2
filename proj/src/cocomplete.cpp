#include "fintop/cocomplete.hpp"

#include <vector>

namespace fintop {

namespace {

void require_open(const FinSpace& x, const PointSet& s) {
  if (!x.is_open(s)) throw Error(ErrorCode::not_open, x.format(s) + " is not open", {s});
}

/// The T-below relation tabulated over all opens of the base space.
class BelowTable {
 public:
  explicit BelowTable(const FilterSpace& tx) : tx_(tx), opens_(tx.base().opens()) {
    const FinSpace& x = tx.base();
    limit_sets_.reserve(tx.size());
    for (const auto& f : tx.filters()) limit_sets_.push_back(limits(x, f).limit_set);
    const std::size_t n = opens_.size();
    below_.assign(n * n, false);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> inside;
      for (std::size_t i = 0; i < tx.size(); ++i)
        if (tx.filter(i).contains(opens_[v])) inside.push_back(i);
      for (std::size_t u = 0; u < n; ++u) {
        bool ok = true;
        for (auto i : inside)
          if (!limit_sets_[i].intersects(opens_[u])) {
            ok = false;
            break;
          }
        below_[v * n + u] = ok;
      }
    }
  }

  const std::vector<PointSet>& opens() const { return opens_; }
  bool below(std::size_t v, std::size_t u) const { return below_[v * opens_.size() + u]; }
  std::size_t index(const PointSet& s) const { return *tx_.base().open_index(s); }
  const PointSet& limit_set(std::size_t filter) const { return limit_sets_[filter]; }

 private:
  const FilterSpace& tx_;
  const std::vector<PointSet>& opens_;
  std::vector<PointSet> limit_sets_;
  std::vector<bool> below_;
};

std::optional<std::pair<std::size_t, PointSet>> core_compact_failure(const FinSpace& x, const BelowTable& table) {
  const auto& opens = table.opens();
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t u = 0; u < opens.size(); ++u) {
      if (!opens[u].contains(p)) continue;
      bool found = false;
      for (std::size_t v = 0; v < opens.size() && !found; ++v)
        found = opens[v].contains(p) && table.below(v, u);
      if (!found) return std::make_pair(p, opens[u]);
    }
  return std::nullopt;
}

PredicateResult core_compact_with(const FinSpace& x, const BelowTable& table) {
  if (auto w = core_compact_failure(x, table)) return {false, "point " + x.label(w->first) + ", open " + x.format(w->second)};
  return {};
}

}  // namespace

bool t_below(const FilterSpace& tx, const PointSet& u, const PointSet& v) {
  const FinSpace& x = tx.base();
  require_open(x, u);
  require_open(x, v);
  for (const auto& f : tx.filters()) {
    if (!f.contains(u)) continue;
    if (!limits(x, f).limit_set.intersects(v)) return false;
  }
  return true;
}

bool t_below(const FinSpace& x, Alpha alpha, const PointSet& u, const PointSet& v) {
  return t_below(filter_space(x, alpha), u, v);
}

AlgebraResult algebra_structure(const FilterSpace& tx) {
  const FinSpace& x = tx.base();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x.min_nbhd(i) == x.min_nbhd(j)) {
        AlgebraFailure fail{1, "not T0: " + x.label(i) + " and " + x.label(j) + " are indistinguishable"};
        fail.points = std::make_pair(i, j);
        return fail;
      }
  std::vector<std::size_t> table(tx.size());
  for (std::size_t k = 0; k < tx.size(); ++k) {
    const auto lim = limits(x, tx.filter(k));
    if (!lim.least) {
      AlgebraFailure fail{2, "filter " + tx.space().label(k) + " has no smallest limit point"};
      fail.filter = tx.filter(k);
      return fail;
    }
    table[k] = *lim.least;
  }
  const BelowTable below(tx);
  if (auto w = core_compact_failure(x, below)) {
    AlgebraFailure fail{3, "no T-below interpolant at point " + x.label(w->first) + ", open " + x.format(w->second)};
    fail.point_open = w;
    return fail;
  }
  try {
    return AlgebraStructure{tx, ContinuousMap::check(tx.space(), x, std::move(table))};
  } catch (const Error& e) {
    throw Error(ErrorCode::theorem_violation,
                std::string("least-limit map of an algebra candidate is not continuous: ") + e.what());
  }
}

AlgebraResult algebra_structure(const FinSpace& x, Alpha alpha) { return algebra_structure(filter_space(x, alpha)); }

AlgebraStructure require_algebra(const FinSpace& x, Alpha alpha) {
  auto result = algebra_structure(x, alpha);
  if (auto* fail = std::get_if<AlgebraFailure>(&result))
    throw Error(ErrorCode::not_algebra, "condition " + std::to_string(fail->condition) + ": " + fail->reason);
  return std::get<AlgebraStructure>(std::move(result));
}

PredicateResult is_core_compact(const FilterSpace& tx) { return core_compact_with(tx.base(), BelowTable(tx)); }

PredicateResult is_core_compact(const FinSpace& x, Alpha alpha) { return is_core_compact(filter_space(x, alpha)); }

PredicateResult is_stable(const FilterSpace& tx) {
  const FinSpace& x = tx.base();
  const BelowTable table(tx);
  for (std::size_t k = 0; k < tx.size(); ++k)
    if (table.limit_set(k).empty()) return {false, "filter " + tx.space().label(k) + " does not converge"};
  const auto& opens = table.opens();
  std::vector<std::pair<std::size_t, std::size_t>> related;
  for (std::size_t v = 0; v < opens.size(); ++v)
    for (std::size_t u = 0; u < opens.size(); ++u)
      if (table.below(v, u)) related.emplace_back(v, u);
  for (auto [v1, u1] : related)
    for (auto [v2, u2] : related) {
      const std::size_t v = table.index(opens[v1] & opens[v2]);
      const std::size_t u = table.index(opens[u1] & opens[u2]);
      if (!table.below(v, u))
        return {false, "V1=" + x.format(opens[v1]) + " U1=" + x.format(opens[u1]) + " V2=" + x.format(opens[v2]) +
                           " U2=" + x.format(opens[u2])};
    }
  return {};
}

PredicateResult is_stable(const FinSpace& x, Alpha alpha) { return is_stable(filter_space(x, alpha)); }

IrreducibilityReport stable_iff_irreducible(const FinSpace& x, Alpha alpha) {
  const FilterSpace tx = filter_space(x, alpha);
  const auto cc = is_core_compact(tx);
  if (!cc.holds) throw Error(ErrorCode::precondition_failed, "space is not T-core-compact at " + cc.witness);
  IrreducibilityReport r;
  const auto st = is_stable(tx);
  r.stable = st.holds;
  r.all_limit_sets_irreducible = true;
  for (std::size_t k = 0; k < tx.size(); ++k) {
    const PointSet lim = limits(x, tx.filter(k)).limit_set;
    if (!is_irreducible(x, lim)) {
      r.all_limit_sets_irreducible = false;
      r.witness = "limit set " + x.format(lim) + " of " + tx.space().label(k) + " is not irreducible";
      break;
    }
  }
  if (!st.holds && r.witness.empty()) r.witness = st.witness;
  return r;
}

bool check_hom(const ContinuousMap& f, const AlgebraStructure& dom, const AlgebraStructure& cod) {
  const ContinuousMap tf = lift_map(f, dom.tx, cod.tx);
  for (std::size_t k = 0; k < dom.tx.size(); ++k)
    if (f(dom.l(k)) != cod.l(tf(k))) return false;
  return true;
}

bool check_hom(const ContinuousMap& f, Alpha alpha) {
  return check_hom(f, require_algebra(f.dom(), alpha), require_algebra(f.cod(), alpha));
}

}  // namespace fintop
