#include "fintop/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fintop {

namespace {

/// A pair x != y with no alpha-generator below exactly one of them.
std::optional<std::pair<std::size_t, std::size_t>> unseparated_pair(const FiniteLattice& l, Alpha alpha) {
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = x + 1; y < l.size(); ++y) {
      bool separated = false;
      for (std::size_t g = 0; g < l.size() && !separated; ++g)
        separated = l.is_alpha_generator(g, alpha) && l.leq(g, x) != l.leq(g, y);
      if (!separated) return std::make_pair(x, y);
    }
  return std::nullopt;
}

bool same_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(i, j)) return false;
  return true;
}

}  // namespace

FiniteFrame opens_frame(const FinSpace& x) {
  const auto& opens = x.opens();
  std::vector<std::string> labels;
  for (const auto& u : opens) labels.push_back(x.format(u));
  std::vector<std::vector<bool>> leq(opens.size(), std::vector<bool>(opens.size()));
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = 0; j < opens.size(); ++j) leq[i][j] = opens[i].subset_of(opens[j]);
  return FiniteFrame::validate(FiniteLattice::from_order(std::move(labels), leq));
}

PointSet FrameFilterSpace::sharp(const FiniteLattice& l, std::size_t x) const {
  PointSet out;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (l.leq(generators[i], x)) out.insert(i);
  return out;
}

FrameFilterSpace alpha_filter_space(const FiniteFrame& l, Alpha alpha) {
  FrameFilterSpace f;
  for (std::size_t g = 0; g < l.size(); ++g)
    if (l.is_alpha_generator(g, alpha)) f.generators.push_back(g);
  if (f.generators.size() > kMaxPoints)
    throw Error(ErrorCode::cap_exceeded, "more than " + std::to_string(kMaxPoints) + " alpha-filters");
  std::vector<std::string> labels;
  std::vector<PointSet> nbhd;
  for (auto g : f.generators) {
    labels.push_back("↑" + l.label(g));
    // the smallest basic open containing up g is g#
    nbhd.push_back(f.sharp(l, g));
  }
  f.space = FinSpace::from_min_nbhds(std::move(labels), std::move(nbhd));
  return f;
}

EtaReport eta_check(const FiniteFrame& l, Alpha alpha) {
  EtaReport r;
  const auto f = alpha_filter_space(l, alpha);
  std::vector<PointSet> eta;
  for (std::size_t x = 0; x < l.size(); ++x) eta.push_back(f.sharp(l, x));

  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };
  const auto gap = unseparated_pair(l, alpha);
  r.separates_points = !gap;
  if (gap) note("alpha-filters do not separate " + l.label(gap->first) + " and " + l.label(gap->second));

  r.injective = true;
  for (std::size_t x = 0; x < l.size() && r.injective; ++x)
    for (std::size_t y = x + 1; y < l.size() && r.injective; ++y)
      if (eta[x] == eta[y]) {
        r.injective = false;
        note("eta identifies " + l.label(x) + " and " + l.label(y));
      }

  r.preserves_meets = eta[l.top()] == f.space.points();
  for (std::size_t x = 0; x < l.size() && r.preserves_meets; ++x)
    for (std::size_t y = 0; y < l.size() && r.preserves_meets; ++y)
      if (eta[l.meet(x, y)] != (eta[x] & eta[y])) {
        r.preserves_meets = false;
        note("eta does not preserve the meet of " + l.label(x) + " and " + l.label(y));
      }

  r.order_embedding = true;
  for (std::size_t x = 0; x < l.size() && r.order_embedding; ++x)
    for (std::size_t y = 0; y < l.size() && r.order_embedding; ++y)
      if (l.leq(x, y) != eta[x].subset_of(eta[y])) {
        r.order_embedding = false;
        note("eta does not reflect the order at " + l.label(x) + ", " + l.label(y));
      }

  r.surjective = true;
  for (const auto& u : f.space.opens())
    if (std::find(eta.begin(), eta.end(), u) == eta.end()) {
      r.surjective = false;
      note("open " + f.space.format(u) + " is not of the form x#");
      break;
    }
  return r;
}

RoundTripVerdict round_trip_space(const FinSpace& x, Alpha alpha) {
  RoundTripVerdict v;
  v.alpha = alpha;
  const auto verdict = decide_distributive(x, alpha);
  v.distributive = verdict.distributive();

  const FiniteFrame frame = opens_frame(x);
  const auto f = alpha_filter_space(frame, alpha);
  auto point_of = [&](const PointSet& open) {
    const std::size_t element = *x.open_index(open);
    auto it = std::find(f.generators.begin(), f.generators.end(), element);
    if (it == f.generators.end())
      throw Error(ErrorCode::theorem_violation, x.format(open) + " is not an alpha-generator of the open frame");
    return static_cast<std::size_t>(it - f.generators.begin());
  };

  std::vector<std::size_t> unit_table;
  for (std::size_t p = 0; p < x.size(); ++p) unit_table.push_back(point_of(x.min_nbhd(p)));
  v.unit_homeomorphism = is_homeomorphism(ContinuousMap::check(x, f.space, unit_table));

  if (v.distributive) {
    const auto alg = require_algebra(x, alpha);
    // TX and F_alpha(OX) have the same points, matched by generator
    std::vector<std::size_t> phi_table;
    for (const auto& filter : alg.tx.filters()) phi_table.push_back(point_of(filter.gen));
    const auto phi = ContinuousMap::check(alg.tx.space(), f.space, phi_table);
    if (!is_homeomorphism(phi))
      throw Error(ErrorCode::theorem_violation, "TX and the alpha-filter space of OX differ");
    std::vector<std::size_t> inverse(phi_table.size());
    for (std::size_t k = 0; k < phi_table.size(); ++k) inverse[phi_table[k]] = k;
    const auto phi_inv = ContinuousMap::check(f.space, alg.tx.space(), inverse);

    const auto s = compose(phi, *verdict.splitting);
    const auto r = compose(alg.l, phi_inv);
    const auto free = require_algebra(f.space, alpha);
    const bool retract = compose(r, s) == ContinuousMap::identity(x);
    const bool s_hom = check_hom(s, alg, free);
    const bool r_hom = check_hom(r, free, alg);
    v.split_subobject = retract && s_hom && r_hom;
    if (!v.split_subobject)
      v.detail = std::string("split pair fails:") + (retract ? "" : " r.s != 1") + (s_hom ? "" : " s not a homomorphism") +
                 (r_hom ? "" : " r not a homomorphism");
  } else {
    v.detail = verdict.reason;
  }

  if (alpha == Alpha::omega || alpha == Alpha::Omega) {
    v.consistent = v.distributive == v.unit_homeomorphism && (!v.distributive || v.split_subobject);
  } else {
    v.consistent = !v.distributive || v.split_subobject;
  }
  if (v.detail.empty())
    v.detail = v.unit_homeomorphism ? "unit is a homeomorphism"
                                    : "unit is not a homeomorphism (" + std::to_string(x.size()) + " points, " +
                                          std::to_string(f.generators.size()) + " alpha-filters)";
  return v;
}

KleisliCategory kleisli_category(const std::vector<FinSpace>& universe, Alpha alpha) {
  KleisliCategory k;
  const std::size_t n = universe.size();
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("X" + std::to_string(i));
    k.filter_spaces.push_back(filter_space(universe[i], alpha));
  }

  std::vector<Arrow> arrows;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t count = 0;
      for_each_continuous_map(universe[i], k.filter_spaces[j].space(), [&](const std::vector<std::size_t>& table) {
        index[{i, j, table}] = arrows.size();
        arrows.push_back({i, j, objects[i] + "->" + objects[j] + "#" + std::to_string(count++)});
        k.tables.push_back(table);
        return true;
      });
    }

  std::vector<std::size_t> identities;
  for (std::size_t i = 0; i < n; ++i) identities.push_back(index.at({i, i, unit(k.filter_spaces[i]).table()}));

  const std::size_t m = arrows.size();
  std::vector<std::vector<std::size_t>> compose(m, std::vector<std::size_t>(m, FinCategory::npos));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].cod != arrows[g].dom) continue;
      const FilterSpace& ty = k.filter_spaces[arrows[f].cod];
      const FilterSpace& tz = k.filter_spaces[arrows[g].cod];
      std::vector<std::size_t> table;
      for (auto filter : k.tables[f]) {
        // Tg sends up G to up hull(g(G)); m then flattens it.
        PointSet image;
        for (auto y : ty.filter(filter).gen) image.insert(k.tables[g][y]);
        table.push_back(tz.require_index(mult_generator(tz, tz.space().open_hull(image))));
      }
      compose[g][f] = index.at({arrows[f].dom, arrows[g].cod, table});
    }
  k.category = FinCategory::build(std::move(objects), std::move(arrows), std::move(identities), std::move(compose));
  return k;
}

FunctorReport comparison_functor(const std::vector<FinSpace>& universe, Alpha alpha) {
  FunctorReport report;
  const auto kl = kleisli_category(universe, alpha);
  const auto& c = kl.category;
  std::vector<FiniteFrame> frames;
  for (const auto& x : universe) frames.push_back(opens_frame(x));

  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && report.detail.empty()) report.detail = why;
    flag = false;
  };

  // K(r) : OY -> OX as a table over the opens of Y
  std::vector<std::vector<std::size_t>> image(c.arrow_count());
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const std::size_t xi = c.arrow(a).dom;
    const std::size_t yi = c.arrow(a).cod;
    const FinSpace& x = universe[xi];
    const FilterSpace& ty = kl.filter_spaces[yi];
    const auto r = ContinuousMap::check(x, ty.space(), kl.tables[a]);
    for (const auto& b : universe[yi].opens()) image[a].push_back(*x.open_index(r.preimage(ty.sharp(b))));
    try {
      (void)lattice_morphism(frames[yi], frames[xi], image[a], alpha);
    } catch (const Error& e) {
      fail(report.morphisms_in_class, "K(" + c.arrow(a).name + "): " + e.what());
    }
  }

  for (std::size_t i = 0; i < universe.size(); ++i) {
    std::vector<std::size_t> id(frames[i].size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    if (image[c.identity(i)] != id) fail(report.preserves_identities, "K(1) is not the identity on O" + c.object(i));
  }

  for (std::size_t g = 0; g < c.arrow_count(); ++g)
    for (std::size_t f = 0; f < c.arrow_count(); ++f) {
      if (c.arrow(f).cod != c.arrow(g).dom) continue;
      // contravariant: K(g . f) = K(f) . K(g)
      std::vector<std::size_t> expected;
      for (auto v : image[g]) expected.push_back(image[f][v]);
      if (image[c.compose(g, f)] != expected)
        fail(report.functorial, "K does not preserve " + c.arrow(g).name + " . " + c.arrow(f).name);
    }

  for (std::size_t xi = 0; xi < universe.size(); ++xi)
    for (std::size_t yi = 0; yi < universe.size(); ++yi) {
      std::set<std::vector<std::size_t>> images;
      for (auto a : c.hom(xi, yi)) images.insert(image[a]);
      const auto all = all_lattice_morphisms(frames[yi], frames[xi], alpha);
      report.hom_sizes.emplace_back(c.hom(xi, yi).size(), all.size());
      if (images.size() != c.hom(xi, yi).size())
        fail(report.faithful, "K identifies two arrows " + c.object(xi) + " -> " + c.object(yi));
      for (const auto& m : all)
        if (!images.count(m)) {
          fail(report.full, "a morphism O" + c.object(yi) + " -> O" + c.object(xi) + " is not in the image");
          break;
        }
    }
  return report;
}

SplitTransferReport split_transfer_check(const LatticeMap& s, const LatticeMap& r, Alpha alpha) {
  const FiniteLattice& m = s.dom;
  const FiniteLattice& l = s.cod;
  if (!same_lattice(r.dom, l) || !same_lattice(r.cod, m))
    throw Error(ErrorCode::not_a_split_pair, "s : M -> L and r : L -> M do not match");
  for (std::size_t x = 0; x < m.size(); ++x)
    if (r(s(x)) != x) throw Error(ErrorCode::not_a_split_pair, "r . s differs from 1 at " + m.label(x), {}, {x});

  SplitTransferReport rep;
  rep.fact1 = true;
  if (m.size() > 20) throw Error(ErrorCode::cap_exceeded, "subset enumeration needs |M| <= 20");
  for (std::uint32_t mask = 0; mask < (1U << m.size()) && rep.fact1; ++mask) {
    std::vector<std::size_t> xs, images;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (mask >> i & 1) {
        xs.push_back(i);
        images.push_back(s(i));
      }
    if (r(l.join_all(images)) != m.join_all(xs)) {
      rep.fact1 = false;
      rep.detail = "r(Sup s(x_i)) is not the supremum in M";
    }
  }

  const bool meets = preserves_finite_meets(s) && preserves_finite_meets(r);
  const bool l_frame = !l.distributivity_witness();
  if (!meets || !l_frame) {
    rep.fact2_skipped = rep.fact3_skipped = true;
    if (rep.detail.empty()) rep.detail = !meets ? "r or s does not preserve finite meets" : "L is not a frame";
    return rep;
  }
  rep.fact2 = !m.distributivity_witness();
  if (!rep.fact2 && rep.detail.empty()) rep.detail = "M violates the distributive law";

  if (!preserves_alpha_sups(s, alpha) || unseparated_pair(l, alpha)) {
    rep.fact3_skipped = true;
    if (rep.detail.empty())
      rep.detail = !preserves_alpha_sups(s, alpha) ? "s does not preserve alpha-suprema"
                                                  : "alpha-filters of L do not separate points";
    return rep;
  }
  const auto gap = unseparated_pair(m, alpha);
  rep.fact3 = !gap;
  if (gap && rep.detail.empty())
    rep.detail = "alpha-filters of M do not separate " + m.label(gap->first) + " and " + m.label(gap->second);
  return rep;
}

}  // namespace fintop
