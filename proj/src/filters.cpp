#include "fintop/filters.hpp"

#include <algorithm>

namespace fintop {

std::string_view to_string(Alpha a) {
  switch (a) {
    case Alpha::zero: return "0";
    case Alpha::one: return "1";
    case Alpha::omega: return "omega";
    case Alpha::Omega: return "Omega";
  }
  return "?";
}

Alpha parse_alpha(std::string_view s) {
  if (s == "0") return Alpha::zero;
  if (s == "1") return Alpha::one;
  if (s == "omega" || s == "w") return Alpha::omega;
  if (s == "Omega" || s == "W") return Alpha::Omega;
  throw Error(ErrorCode::invalid_input, "unknown alpha '" + std::string(s) + "' (expected 0, 1, omega or Omega)");
}

Filter filter_from_family(const FinSpace& x, const std::vector<PointSet>& members) {
  if (members.empty()) throw Error(ErrorCode::invalid_input, "a filter is non-empty");
  std::vector<PointSet> sorted = members;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto member = [&](const PointSet& s) { return std::binary_search(sorted.begin(), sorted.end(), s, canonical_less); };
  PointSet meet = x.points();
  for (const auto& u : sorted) {
    if (!x.is_open(u)) throw Error(ErrorCode::not_open, x.format(u) + " is not open", {u});
    meet &= u;
  }
  for (const auto& u : sorted)
    for (const auto& v : sorted)
      if (!member(u & v))
        throw Error(ErrorCode::invalid_input, "family not closed under meets at " + x.format(u) + ", " + x.format(v),
                    {u, v});
  for (const auto& u : sorted)
    for (const auto& v : x.opens())
      if (u.subset_of(v) && !member(v))
        throw Error(ErrorCode::invalid_input, "family not up-closed: " + x.format(v) + " is missing", {u, v});
  // Principality: the family is exactly the opens above its meet.
  Filter f{meet};
  for (const auto& v : x.opens())
    if (f.contains(v) != member(v))
      throw Error(ErrorCode::invalid_input, "family is not the principal filter of its meet");
  return f;
}

bool is_alpha_generator(const FinSpace& x, const PointSet& gen, Alpha alpha) {
  if (!x.is_open(gen)) throw Error(ErrorCode::not_open, x.format(gen) + " is not open", {gen});
  switch (alpha) {
    case Alpha::zero: return true;
    case Alpha::one: return !gen.empty();
    case Alpha::omega: {
      if (gen.empty()) return false;
      std::vector<PointSet> outside;
      for (const auto& a : x.opens())
        if (!gen.subset_of(a)) outside.push_back(a);
      for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i; j < outside.size(); ++j)
          if (gen.subset_of(outside[i] | outside[j])) return false;
      return true;
    }
    case Alpha::Omega: {
      if (gen.empty()) return false;
      PointSet outside;
      for (const auto& a : x.opens())
        if (!gen.subset_of(a)) outside |= a;
      return !gen.subset_of(outside);
    }
  }
  return false;
}

std::vector<Filter> all_filters(const FinSpace& x, Alpha alpha) {
  std::vector<Filter> out;
  for (const auto& g : x.opens())
    if (is_alpha_generator(x, g, alpha)) out.push_back(Filter{g});
  return out;
}

// ------------------------------------------------------------- FilterSpace

FilterSpace::FilterSpace(FinSpace base, Alpha alpha, std::vector<Filter> filters, FinSpace space)
    : base_(std::move(base)), alpha_(alpha), filters_(std::move(filters)), space_(std::move(space)) {
  for (std::size_t i = 0; i < filters_.size(); ++i) index_.emplace(filters_[i].gen, i);
}

std::optional<std::size_t> FilterSpace::index_of(const PointSet& gen) const {
  auto it = index_.find(gen);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FilterSpace::require_index(const PointSet& gen) const {
  auto idx = index_of(gen);
  if (!idx)
    throw Error(ErrorCode::alpha_not_preserved,
                "filter generated by " + base_.format(gen) + " is not an alpha-filter for alpha=" +
                    std::string(to_string(alpha_)),
                {gen});
  return *idx;
}

PointSet FilterSpace::sharp(const PointSet& open) const {
  PointSet s;
  for (std::size_t i = 0; i < filters_.size(); ++i)
    if (filters_[i].contains(open)) s.insert(i);
  return s;
}

FilterSpace filter_space(const FinSpace& x, Alpha alpha) {
  auto filters = all_filters(x, alpha);
  if (filters.size() > kMaxPoints)
    throw Error(ErrorCode::cap_exceeded, "filter space has " + std::to_string(filters.size()) + " points (limit " +
                                             std::to_string(kMaxPoints) + ")");
  std::vector<std::string> labels;
  std::vector<PointSet> min_nbhd(filters.size());
  for (std::size_t i = 0; i < filters.size(); ++i) {
    labels.push_back("↑" + x.format(filters[i].gen));
    for (std::size_t j = 0; j < filters.size(); ++j)
      if (filters[j].gen.subset_of(filters[i].gen)) min_nbhd[i].insert(j);
  }
  FinSpace space = FinSpace::from_min_nbhds(std::move(labels), std::move(min_nbhd));
  FilterSpace tx(x, alpha, std::move(filters), std::move(space));

  const auto& opens = x.opens();
  std::vector<PointSet> sharps;
  sharps.reserve(opens.size());
  for (const auto& a : opens) sharps.push_back(tx.sharp(a));
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (!tx.space().is_open(sharps[i]))
      throw Error(ErrorCode::theorem_violation, "A# is not open in the generated topology", {opens[i]});
    for (std::size_t j = i; j < opens.size(); ++j)
      if ((sharps[i] & sharps[j]) != tx.sharp(opens[i] & opens[j]))
        throw Error(ErrorCode::theorem_violation, "A# n B# differs from (A n B)#", {opens[i], opens[j]});
  }
  if (tx.sharp(x.points()) != tx.space().points())
    throw Error(ErrorCode::theorem_violation, "X# is not the whole filter space");
  return tx;
}

// ---------------------------------------------------- functor, unit, mult

PointSet lift_generator(const ContinuousMap& f, const PointSet& gen) { return f.cod().open_hull(f.image(gen)); }

ContinuousMap lift_map(const ContinuousMap& f, const FilterSpace& tx, const FilterSpace& ty) {
  if (!f.dom().same_topology(tx.base()) || !f.cod().same_topology(ty.base()) || tx.alpha() != ty.alpha())
    throw Error(ErrorCode::shape_mismatch, "filter spaces do not match the map");
  std::vector<std::size_t> table(tx.size());
  for (std::size_t i = 0; i < tx.size(); ++i) table[i] = ty.require_index(lift_generator(f, tx.filter(i).gen));
  // Subbasic certificate: Tf^-1(B#) = (f^-1 B)#.
  for (const auto& b : f.cod().opens()) {
    const PointSet target = ty.sharp(b);
    PointSet pre;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (target.contains(table[i])) pre.insert(i);
    if (pre != tx.sharp(f.preimage(b)))
      throw Error(ErrorCode::theorem_violation, "Tf^-1(B#) differs from (f^-1 B)# at B = " + f.cod().format(b), {b});
  }
  return ContinuousMap::check(tx.space(), ty.space(), std::move(table));
}

ContinuousMap unit(const FilterSpace& tx) {
  const FinSpace& x = tx.base();
  std::vector<std::size_t> table(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) table[p] = tx.require_index(x.min_nbhd(p));
  return ContinuousMap::check(x, tx.space(), std::move(table));
}

PointSet mult_generator(const FilterSpace& tx, const PointSet& w) {
  PointSet gen = tx.base().points();
  for (const auto& a : tx.base().opens())
    if (w.subset_of(tx.sharp(a))) gen &= a;
  return gen;
}

ContinuousMap mult(const FilterSpace& tx, const FilterSpace& ttx) {
  if (!ttx.base().same_topology(tx.space()) || tx.alpha() != ttx.alpha())
    throw Error(ErrorCode::shape_mismatch, "second filter space is not built over the first");
  std::vector<std::size_t> table(ttx.size());
  for (std::size_t k = 0; k < ttx.size(); ++k) table[k] = tx.require_index(mult_generator(tx, ttx.filter(k).gen));
  return ContinuousMap::check(ttx.space(), tx.space(), std::move(table));
}

Limits limits(const FinSpace& x, const Filter& f) {
  Limits out;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (f.gen.subset_of(x.min_nbhd(p))) out.limit_set.insert(p);
  for (auto q : out.limit_set) {
    bool least = true;
    for (auto r : out.limit_set)
      if (!x.leq(q, r)) {
        least = false;
        break;
      }
    if (least) {
      out.least_class.insert(q);
      if (!out.least) out.least = q;
    }
  }
  return out;
}

// ------------------------------------------------------------ law checks

bool LawReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed || c.skipped; });
}

const LawCheck* LawReport::find(std::string_view law) const {
  for (const auto& c : checks)
    if (c.law == law) return &c;
  return nullptr;
}

namespace {

LawCheck compare_maps(std::string law, const ContinuousMap& lhs, const ContinuousMap& rhs) {
  LawCheck c{std::move(law)};
  for (std::size_t p = 0; p < lhs.dom().size(); ++p)
    if (lhs(p) != rhs(p)) {
      c.passed = false;
      c.detail = "at " + lhs.dom().label(p) + ": " + lhs.cod().label(lhs(p)) + " vs " + rhs.cod().label(rhs(p));
      return c;
    }
  return c;
}

template <typename F>
LawCheck guarded(std::string law, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    LawCheck c{std::move(law)};
    if (e.code() == ErrorCode::cap_exceeded) {
      c.skipped = true;
    } else {
      c.passed = false;
    }
    c.detail = e.what();
    return c;
  }
}

}  // namespace

LawReport check_monad_laws(const FinSpace& x, Alpha alpha, std::span<const ContinuousMap> maps) {
  LawReport report;
  const FilterSpace tx = filter_space(x, alpha);
  report.checks.push_back(guarded("unit_alpha_filters", [&] {
    (void)unit(tx);
    return LawCheck{"unit_alpha_filters"};
  }));

  std::optional<FilterSpace> ttx;
  try {
    ttx.emplace(filter_space(tx.space(), alpha));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    for (const char* law : {"mult_alpha_filters", "unit_left", "unit_right", "associativity", "naturality_unit",
                            "naturality_mult"})
      report.checks.push_back(LawCheck{law, true, true, e.what()});
    return report;
  }

  report.checks.push_back(guarded("mult_alpha_filters", [&] {
    (void)mult(tx, *ttx);
    return LawCheck{"mult_alpha_filters"};
  }));
  if (!report.checks.back().passed) return report;
  const ContinuousMap m = mult(tx, *ttx);
  const ContinuousMap id_tx = ContinuousMap::identity(tx.space());

  report.checks.push_back(guarded("unit_left", [&] { return compare_maps("unit_left", compose(m, unit(*ttx)), id_tx); }));
  report.checks.push_back(guarded("unit_right", [&] {
    return compare_maps("unit_right", compose(m, lift_map(unit(tx), tx, *ttx)), id_tx);
  }));

  report.checks.push_back(guarded("associativity", [&] {
    LawCheck c{"associativity"};
    const FinSpace& ttx_space = ttx->space();
    std::size_t checked = 0;
    for (const auto& w3 : ttx_space.opens()) {
      if (!is_alpha_generator(ttx_space, w3, alpha)) continue;
      ++checked;
      // m . Tm
      const PointSet lifted = tx.space().open_hull(m.image(w3));
      const PointSet lhs = mult_generator(tx, lifted);
      // m . m_T
      const PointSet inner = mult_generator(*ttx, w3);
      const PointSet rhs = mult_generator(tx, inner);
      if (lhs != rhs) {
        c.passed = false;
        c.detail = "at " + ttx_space.format(w3) + ": " + x.format(lhs) + " vs " + x.format(rhs);
        return c;
      }
    }
    c.detail = std::to_string(checked) + " points of TTTX";
    return c;
  }));

  LawCheck nat_unit{"naturality_unit"};
  LawCheck nat_mult{"naturality_mult"};
  for (const auto& f : maps) {
    if (!nat_unit.passed && !nat_mult.passed) break;
    if (!f.dom().same_topology(x)) throw Error(ErrorCode::shape_mismatch, "naturality map does not start at X");
    try {
      const FilterSpace ty = filter_space(f.cod(), alpha);
      const ContinuousMap tf = lift_map(f, tx, ty);
      if (nat_unit.passed) {
        auto c = compare_maps("naturality_unit", compose(tf, unit(tx)), compose(unit(ty), f));
        if (!c.passed) nat_unit = c;
      }
      if (nat_mult.passed) {
        const FilterSpace tty = filter_space(ty.space(), alpha);
        const ContinuousMap ttf = lift_map(tf, *ttx, tty);
        auto c = compare_maps("naturality_mult", compose(tf, m), compose(mult(ty, tty), ttf));
        if (!c.passed) nat_mult = c;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded) throw;
      nat_mult.detail = "some codomains skipped: " + std::string(e.what());
    }
  }
  if (nat_unit.passed) nat_unit.detail = std::to_string(maps.size()) + " maps";
  if (nat_mult.passed && nat_mult.detail.empty()) nat_mult.detail = std::to_string(maps.size()) + " maps";
  report.checks.push_back(nat_unit);
  report.checks.push_back(nat_mult);
  return report;
}

bool check_kz(const FinSpace& x, Alpha alpha) {
  const FilterSpace tx = filter_space(x, alpha);
  const FilterSpace ttx = filter_space(tx.space(), alpha);
  return map_leq(lift_map(unit(tx), tx, ttx), unit(ttx));
}

}  // namespace fintop
