#include "fintop/distributive.hpp"

#include <vector>

namespace fintop {

PointSet mu(const AlgebraStructure& alg, const PointSet& open) {
  const FinSpace& x = alg.space();
  if (!x.is_open(open)) throw Error(ErrorCode::not_open, x.format(open) + " is not open", {open});
  PointSet out;
  for (std::size_t k = 0; k < alg.tx.size(); ++k)
    if (alg.tx.filter(k).contains(open)) out.insert(alg.l(k));
  return out;
}

PointSet mu_least_limits(const FinSpace& x, Alpha alpha, const PointSet& open) {
  if (!x.is_open(open)) throw Error(ErrorCode::not_open, x.format(open) + " is not open", {open});
  PointSet out;
  for (const auto& f : all_filters(x, alpha)) {
    if (!f.contains(open)) continue;
    out |= limits(x, f).least_class;
  }
  return out;
}

std::optional<PointSet> disconnectedness_witness(const AlgebraStructure& alg) {
  const FinSpace& x = alg.space();
  for (const auto& a : x.opens())
    if (!x.is_open(mu(alg, a))) return a;
  return std::nullopt;
}

LawReport mu_laws_report(const AlgebraStructure& alg) {
  const FinSpace& x = alg.space();
  const auto& opens = x.opens();
  std::vector<PointSet> mus;
  mus.reserve(opens.size());
  for (const auto& a : opens) mus.push_back(mu(alg, a));
  auto mu_of = [&](const PointSet& a) { return mus[*x.open_index(a)]; };
  auto fail = [&](LawCheck& c, const std::string& where) {
    c.passed = false;
    c.detail = where;
  };

  LawReport report;
  LawCheck extensive{"extensive"};
  for (std::size_t i = 0; i < opens.size() && extensive.passed; ++i)
    if (!opens[i].subset_of(mus[i])) fail(extensive, "A=" + x.format(opens[i]));
  report.checks.push_back(extensive);

  LawCheck monotone{"monotone"};
  for (std::size_t i = 0; i < opens.size() && monotone.passed; ++i)
    for (std::size_t j = 0; j < opens.size() && monotone.passed; ++j)
      if (opens[i].subset_of(opens[j]) && !mus[i].subset_of(mus[j]))
        fail(monotone, "A=" + x.format(opens[i]) + " B=" + x.format(opens[j]));
  report.checks.push_back(monotone);

  LawCheck union_bound{"union_bound"};
  switch (alg.alpha()) {
    case Alpha::zero: union_bound.detail = "no families of size < 0"; break;
    case Alpha::one:
      if (!mu_of(PointSet{}).empty()) fail(union_bound, "empty family: mu({}) = " + x.format(mu_of(PointSet{})));
      else union_bound.detail = "empty family";
      break;
    case Alpha::omega:
    case Alpha::Omega:
      // Every family of opens in a finite space is finite; by induction the
      // empty family and pairs cover all of them.
      if (!mu_of(PointSet{}).empty()) {
        fail(union_bound, "empty family: mu({}) = " + x.format(mu_of(PointSet{})));
        break;
      }
      for (std::size_t i = 0; i < opens.size() && union_bound.passed; ++i)
        for (std::size_t j = i + 1; j < opens.size() && union_bound.passed; ++j)
          if (!mu_of(opens[i] | opens[j]).subset_of(mus[i] | mus[j]))
            fail(union_bound, "A=" + x.format(opens[i]) + " B=" + x.format(opens[j]));
      if (union_bound.passed) union_bound.detail = "empty family and pairs";
      break;
  }
  report.checks.push_back(union_bound);

  LawCheck absorption{"meet_absorption"};
  for (std::size_t i = 0; i < opens.size() && absorption.passed; ++i)
    for (std::size_t j = 0; j < opens.size() && absorption.passed; ++j)
      if (!(opens[i] & mus[j]).subset_of(mu_of(opens[i] & opens[j])))
        fail(absorption, "A=" + x.format(opens[i]) + " B=" + x.format(opens[j]));
  report.checks.push_back(absorption);

  LawCheck idempotent{"idempotent"};
  LawCheck meet_preserving{"meet_preserving"};
  if (auto w = disconnectedness_witness(alg)) {
    idempotent.skipped = meet_preserving.skipped = true;
    idempotent.detail = meet_preserving.detail = "not disconnected: mu(" + x.format(*w) + ") is not open";
  } else {
    for (std::size_t i = 0; i < opens.size() && idempotent.passed; ++i)
      if (!mu_of(mus[i]).subset_of(mus[i])) fail(idempotent, "A=" + x.format(opens[i]));
    for (std::size_t i = 0; i < opens.size() && meet_preserving.passed; ++i)
      for (std::size_t j = 0; j < opens.size() && meet_preserving.passed; ++j)
        if (mu_of(opens[i] & opens[j]) != (mus[i] & mus[j]))
          fail(meet_preserving, "A=" + x.format(opens[i]) + " B=" + x.format(opens[j]));
  }
  report.checks.push_back(idempotent);
  report.checks.push_back(meet_preserving);
  return report;
}

bool is_homomorphism_into_free(const AlgebraStructure& alg, const ContinuousMap& t) {
  const FilterSpace& tx = alg.tx;
  for (std::size_t k = 0; k < tx.size(); ++k) {
    const PointSet lifted = tx.space().open_hull(t.image(tx.filter(k).gen));
    const PointSet rhs = mult_generator(tx, lifted);
    if (tx.filter(t(alg.l(k))).gen != rhs) return false;
  }
  return true;
}

std::optional<ContinuousMap> splitting_by_formula(const AlgebraStructure& alg) {
  if (disconnectedness_witness(alg)) return std::nullopt;
  const FinSpace& x = alg.space();
  const FilterSpace& tx = alg.tx;
  const auto& opens = x.opens();
  std::vector<PointSet> mus;
  for (const auto& a : opens) mus.push_back(mu(alg, a));

  std::vector<std::size_t> table(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    std::vector<PointSet> family;
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (mus[i].contains(p)) family.push_back(opens[i]);
    try {
      table[p] = tx.require_index(filter_from_family(x, family).gen);
    } catch (const Error& e) {
      throw Error(ErrorCode::theorem_violation, "t(" + x.label(p) + ") is not an alpha-filter: " + e.what());
    }
  }
  ContinuousMap t = ContinuousMap::check(x, tx.space(), std::move(table));
  for (std::size_t i = 0; i < opens.size(); ++i)
    if (t.preimage(tx.sharp(opens[i])) != mus[i])
      throw Error(ErrorCode::theorem_violation, "t^-1(A#) differs from mu(A) at A = " + x.format(opens[i]), {opens[i]});
  for (std::size_t p = 0; p < x.size(); ++p)
    if (alg.l(t(p)) != p) throw Error(ErrorCode::theorem_violation, "l(t(" + x.label(p) + ")) differs from the point");
  if (!is_homomorphism_into_free(alg, t))
    throw Error(ErrorCode::theorem_violation, "the splitting t is not a T-homomorphism");
  return t;
}

DistributivityVerdict decide_distributive(const FinSpace& x, Alpha alpha) {
  DistributivityVerdict v;
  v.space = x;
  v.alpha = alpha;

  const FilterSpace tx = filter_space(x, alpha);
  const auto sep = separation_flags(x);
  const auto cc = is_core_compact(tx);
  const auto st = is_stable(tx);
  const bool prefix = sep.is_sober && cc.holds && st.holds;

  auto result = algebra_structure(tx);
  if (auto* fail = std::get_if<AlgebraFailure>(&result)) {
    if (prefix)
      throw Error(ErrorCode::theorem_violation,
                  "sober, core-compact and stable but not an algebra: " + fail->reason + " (alpha=" +
                      std::string(to_string(alpha)) + ")");
    v.reason = "not an algebra: condition " + std::to_string(fail->condition) + ": " + fail->reason;
    return v;
  }
  const auto& alg = std::get<AlgebraStructure>(result);
  v.algebra = true;
  if (!prefix)
    throw Error(ErrorCode::theorem_violation, "algebra that is not sober, core-compact and stable: " +
                                                  (sep.is_sober ? (cc.holds ? st.witness : cc.witness)
                                                                : std::string("not sober")));

  v.witness_open = disconnectedness_witness(alg);
  v.by_characterization = !v.witness_open.has_value();
  if (v.witness_open) v.reason = "mu(" + x.format(*v.witness_open) + ") is not open";

  std::optional<ContinuousMap> adjoint;
  for_each_continuous_map(x, tx.space(), [&](const std::vector<std::size_t>& table) {
    ContinuousMap t = ContinuousMap::check(x, tx.space(), table);
    if (is_adjoint_pair(t, alg.l)) {
      adjoint = std::move(t);
      return false;
    }
    return true;
  });
  v.by_adjoint_search = adjoint.has_value();

  auto formula = splitting_by_formula(alg);
  v.by_formula = formula.has_value();

  std::optional<ContinuousMap> section;
  for_each_continuous_map(x, tx.space(), [&](const std::vector<std::size_t>& table) {
    for (std::size_t p = 0; p < table.size(); ++p)
      if (alg.l(table[p]) != p) return true;
    ContinuousMap t = ContinuousMap::check(x, tx.space(), table);
    if (is_homomorphism_into_free(alg, t)) {
      section = std::move(t);
      return false;
    }
    return true;
  });
  v.by_split_epi = section.has_value();

  const bool agree = v.by_adjoint_search == v.by_characterization && v.by_characterization == v.by_formula &&
                     v.by_formula == v.by_split_epi;
  if (!agree) {
    throw Error(ErrorCode::theorem_violation,
                "distributivity procedures disagree on alpha=" + std::string(to_string(alpha)) +
                    ": adjoint_search=" + std::to_string(v.by_adjoint_search) +
                    " characterization=" + std::to_string(v.by_characterization) +
                    " formula=" + std::to_string(v.by_formula) + " split_epi=" + std::to_string(v.by_split_epi) +
                    (v.witness_open ? " witness " + x.format(*v.witness_open) : std::string()));
  }
  if (formula) {
    // On a T0 space the left adjoint is unique, so all three maps coincide.
    if (!(*formula == *adjoint) || !(*formula == *section))
      throw Error(ErrorCode::theorem_violation, "the splittings found by the procedures differ");
    v.splitting = std::move(formula);
  }
  return v;
}

}  // namespace fintop
