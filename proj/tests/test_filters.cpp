#include "doctest.h"
#include "fintop/filters.hpp"
#include "fixtures.hpp"

using namespace fintop;
using fixtures::pt;
using fixtures::set;

namespace {

std::vector<FinSpace> small_corpus() {
  std::vector<FinSpace> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& x : enumerate_t0_spaces(n)) out.push_back(x);
  out.push_back(fixtures::indiscrete2());
  return out;
}

std::vector<PointSet> gens(const std::vector<Filter>& fs) {
  std::vector<PointSet> out;
  for (const auto& f : fs) out.push_back(f.gen);
  return out;
}

}  // namespace

TEST_CASE("alpha parsing") {
  CHECK(parse_alpha("0") == Alpha::zero);
  CHECK(parse_alpha("1") == Alpha::one);
  CHECK(parse_alpha("omega") == Alpha::omega);
  CHECK(parse_alpha("Omega") == Alpha::Omega);
  CHECK(to_string(Alpha::omega) == "omega");
  CHECK_THROWS_AS((void)parse_alpha("2"), Error);
}

TEST_CASE("all_filters on the Sierpinski space") {
  const auto s = fixtures::sierpinski();
  const PointSet b = set(s, {"b"});
  CHECK(gens(all_filters(s, Alpha::zero)) == std::vector<PointSet>{PointSet{}, b, s.points()});
  CHECK(gens(all_filters(s, Alpha::one)) == std::vector<PointSet>{b, s.points()});
  CHECK(gens(all_filters(s, Alpha::omega)) == std::vector<PointSet>{b, s.points()});
  CHECK(gens(all_filters(s, Alpha::Omega)) == std::vector<PointSet>{b, s.points()});
}

TEST_CASE("omega and Omega filters coincide on finite spaces") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_t0_spaces(n)) CHECK(all_filters(x, Alpha::omega) == all_filters(x, Alpha::Omega));
  CHECK(all_filters(fixtures::indiscrete2(), Alpha::omega) == all_filters(fixtures::indiscrete2(), Alpha::Omega));
}

TEST_CASE("prime generators of the diamond are the principal down-sets") {
  const auto m = fixtures::m3();
  const auto fs = all_filters(m, Alpha::omega);
  CHECK(fs.size() == 5);
  for (const auto& f : fs) {
    bool principal = false;
    for (std::size_t p = 0; p < m.size(); ++p) principal = principal || f.gen == m.min_nbhd(p);
    CHECK(principal);
  }
  CHECK(all_filters(m, Alpha::zero).size() == 10);
}

TEST_CASE("filter_from_family checks principality") {
  const auto s = fixtures::sierpinski();
  const PointSet b = set(s, {"b"});
  CHECK(filter_from_family(s, {b, s.points()}).gen == b);
  CHECK(filter_from_family(s, {s.points()}).gen == s.points());
  CHECK_THROWS_AS((void)filter_from_family(s, {}), Error);
  CHECK_THROWS_AS((void)filter_from_family(s, {b}), Error);  // not up-closed
  const auto d = fixtures::discrete2();
  // {a} and {b} without their meet {}
  CHECK_THROWS_AS((void)filter_from_family(d, {set(d, {"a"}), set(d, {"b"}), d.points()}), Error);
  CHECK_THROWS_AS((void)filter_from_family(s, {set(s, {"a"}), s.points()}), Error);  // {a} not open
}

TEST_CASE("filter_space examples") {
  const auto s = fixtures::sierpinski();
  const auto tx = filter_space(s, Alpha::zero);
  REQUIRE(tx.size() == 3);
  const auto e = *tx.index_of(PointSet{});
  const auto b = *tx.index_of(set(s, {"b"}));
  const auto x = *tx.index_of(s.points());
  CHECK(tx.sharp(PointSet{}) == PointSet::singleton(e));
  CHECK(tx.sharp(set(s, {"b"})) == PointSet::from_indices({e, b}));
  CHECK(tx.sharp(s.points()) == tx.space().points());
  CHECK(tx.space().label(b) == "↑{b}");
  // order of TX is generator inclusion
  CHECK(tx.space().leq(e, b));
  CHECK(tx.space().leq(b, x));
  CHECK_FALSE(tx.space().leq(x, b));

  const auto tw = filter_space(s, Alpha::omega);
  CHECK(find_homeomorphism(tw.space(), s).has_value());

  CHECK(filter_space(fixtures::point(), Alpha::zero).size() == 2);
  CHECK_THROWS_AS((void)tx.require_index(set(s, {"a"})), Error);
}

TEST_CASE("the order of TX is generator inclusion on the corpus") {
  for (const auto& x : small_corpus())
    for (auto alpha : kAllAlphas) {
      const auto tx = filter_space(x, alpha);
      for (std::size_t i = 0; i < tx.size(); ++i)
        for (std::size_t j = 0; j < tx.size(); ++j)
          CHECK(tx.space().leq(i, j) == tx.filter(i).leq(tx.filter(j)));
    }
}

TEST_CASE("lift_map examples") {
  const auto s = fixtures::sierpinski();
  const auto d = fixtures::discrete2();
  const auto ts = filter_space(s, Alpha::zero);
  const auto td = filter_space(d, Alpha::zero);
  CHECK(lift_map(ContinuousMap::identity(s), ts, ts) == ContinuousMap::identity(ts.space()));

  const auto f = check_continuous({"a", "b"}, d, s);
  const auto tf = lift_map(f, td, ts);
  CHECK(ts.filter(tf(*td.index_of(set(d, {"a"})))).gen == s.points());

  const auto cb = ContinuousMap::constant(s, s, pt(s, "b"));
  const auto tcb = lift_map(cb, ts, ts);
  CHECK(ts.filter(tcb(*ts.index_of(s.points()))).gen == set(s, {"b"}));
  CHECK(lift_generator(cb, PointSet{}).empty());
}

TEST_CASE("lift_map is functorial") {
  std::vector<FinSpace> spaces;
  for (std::size_t n = 1; n <= 2; ++n)
    for (auto& x : enumerate_t0_spaces(n)) spaces.push_back(x);
  spaces.push_back(fixtures::v3());
  for (auto alpha : kAllAlphas) {
    std::vector<FilterSpace> ts;
    for (const auto& x : spaces) ts.push_back(filter_space(x, alpha));
    for (std::size_t i = 0; i < spaces.size(); ++i)
      for (std::size_t j = 0; j < spaces.size(); ++j)
        for (std::size_t k = 0; k < spaces.size(); ++k)
          for (const auto& f : all_continuous_maps(spaces[i], spaces[j]))
            for (const auto& g : all_continuous_maps(spaces[j], spaces[k])) {
              const auto lhs = lift_map(compose(g, f), ts[i], ts[k]);
              const auto rhs = compose(lift_map(g, ts[j], ts[k]), lift_map(f, ts[i], ts[j]));
              CHECK(lhs == rhs);
            }
  }
}

TEST_CASE("unit examples") {
  const auto s = fixtures::sierpinski();
  const auto ts = filter_space(s, Alpha::zero);
  const auto y = unit(ts);
  CHECK(ts.filter(y(pt(s, "b"))).gen == set(s, {"b"}));
  CHECK(ts.filter(y(pt(s, "a"))).gen == s.points());

  const auto d = fixtures::discrete2();
  const auto td = filter_space(d, Alpha::omega);
  CHECK(td.filter(unit(td)(pt(d, "a"))).gen == set(d, {"a"}));

  const auto v = fixtures::v3();
  const auto tv = filter_space(v, Alpha::Omega);
  CHECK(tv.filter(unit(tv)(pt(v, "bot"))).gen == set(v, {"bot"}));
}

TEST_CASE("the unit is an order embedding and preserves existing infima") {
  for (const auto& x : small_corpus())
    for (auto alpha : kAllAlphas) {
      const auto tx = filter_space(x, alpha);
      const auto y = unit(tx);
      for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t q = 0; q < x.size(); ++q) CHECK(x.leq(p, q) == tx.space().leq(y(p), y(q)));
    }
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_t0_spaces(n)) {
      const auto tx = filter_space(x, Alpha::zero);
      const auto y = unit(tx);
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        PointSet meet = x.points();
        for (std::size_t p = 0; p < n; ++p)
          if (mask >> p & 1) meet &= x.min_nbhd(p);
        // the infimum exists iff the common lower bounds have a top element
        for (std::size_t c = 0; c < n; ++c)
          if (x.min_nbhd(c) == meet) CHECK(tx.filter(y(c)).gen == meet);
      }
    }
}

TEST_CASE("multiplication examples") {
  const auto s = fixtures::sierpinski();
  const auto ts = filter_space(s, Alpha::zero);
  CHECK(mult_generator(ts, PointSet{}).empty());
  CHECK(mult_generator(ts, ts.space().points()) == s.points());
  const auto tts = filter_space(ts.space(), Alpha::zero);
  const auto m = mult(ts, tts);
  const auto yt = unit(tts);
  for (std::size_t k = 0; k < ts.size(); ++k) CHECK(m(yt(k)) == k);
}

TEST_CASE("limits examples") {
  const auto s = fixtures::sierpinski();
  auto top = limits(s, Filter{s.points()});
  CHECK(top.limit_set == set(s, {"a"}));
  CHECK(top.least == pt(s, "a"));
  auto improper = limits(s, Filter{PointSet{}});
  CHECK(improper.limit_set == s.points());
  CHECK(improper.least == pt(s, "b"));

  const auto v = fixtures::v3();
  auto none = limits(v, Filter{v.points()});
  CHECK(none.limit_set.empty());
  CHECK_FALSE(none.least);

  const auto i = fixtures::indiscrete2();
  auto both = limits(i, Filter{i.points()});
  CHECK(both.least_class == i.points());
  CHECK(both.least == 0);
}

TEST_CASE("monad laws on small examples") {
  const auto s = fixtures::sierpinski();
  const auto maps = all_continuous_maps(s, fixtures::discrete2());
  const auto maps2 = all_continuous_maps(s, s);
  std::vector<ContinuousMap> all = maps;
  all.insert(all.end(), maps2.begin(), maps2.end());
  for (auto alpha : kAllAlphas) {
    const auto r = check_monad_laws(s, alpha, all);
    CHECK(r.all_passed());
    for (const auto& c : r.checks) CHECK_MESSAGE(!c.skipped, c.law);
    CHECK(check_kz(s, alpha));
  }
  CHECK(check_monad_laws(fixtures::indiscrete2(), Alpha::zero).all_passed());
  CHECK(check_kz(fixtures::indiscrete2(), Alpha::zero));
  CHECK(check_kz(fixtures::discrete2(), Alpha::omega));
  REQUIRE(check_monad_laws(s, Alpha::zero).find("associativity") != nullptr);
}

TEST_CASE("monad laws and KZ on the two-point corpus with every map") {
  std::vector<FinSpace> spaces = enumerate_t0_spaces(2);
  spaces.push_back(fixtures::point());
  spaces.push_back(fixtures::indiscrete2());
  for (const auto& x : spaces) {
    std::vector<ContinuousMap> maps;
    for (const auto& y : spaces)
      for (auto& f : all_continuous_maps(x, y)) maps.push_back(f);
    for (auto alpha : kAllAlphas) {
      const auto r = check_monad_laws(x, alpha, maps);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.law << ": " << c.detail);
      CHECK(check_kz(x, alpha));
    }
  }
}
