#include <algorithm>
#include <set>

#include "doctest.h"
#include "fintop/spaces.hpp"
#include "fixtures.hpp"

using namespace fintop;
using fixtures::pt;
using fixtures::set;

namespace {

// Brute force: every family of subsets of n points that contains {} and the
// full set and is closed under union and intersection, counted when T0.
std::size_t brute_force_t0_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(subsets - 1);
  // Optional members: everything except {} and the full set.
  std::vector<std::uint32_t> optional;
  for (std::uint32_t s = 1; s < full; ++s) optional.push_back(s);
  std::size_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << optional.size()); ++pick) {
    std::vector<bool> member(subsets, false);
    member[0] = member[full] = true;
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (pick >> i & 1) member[optional[i]] = true;
    bool closed = true;
    for (std::uint32_t a = 0; a < subsets && closed; ++a)
      for (std::uint32_t b = 0; b < subsets && closed; ++b)
        if (member[a] && member[b] && (!member[a | b] || !member[a & b])) closed = false;
    if (!closed) continue;
    bool t0 = true;
    for (std::size_t p = 0; p < n && t0; ++p)
      for (std::size_t q = p + 1; q < n && t0; ++q) {
        bool separated = false;
        for (std::uint32_t u = 0; u < subsets; ++u)
          if (member[u] && ((u >> p & 1) != (u >> q & 1))) separated = true;
        t0 = separated;
      }
    if (t0) ++count;
  }
  return count;
}

// Independent count of partial orders: all reflexive relations, kept when
// antisymmetric and transitive.
std::size_t brute_force_partial_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::size_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << off.size()); ++pick) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (pick >> k & 1) r[off[k].first][off[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

std::vector<FinSpace> corpus_up_to(std::size_t n) {
  std::vector<FinSpace> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& x : enumerate_t0_spaces(k)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("build_space accepts the Sierpinski and discrete fixtures") {
  const auto s = fixtures::sierpinski();
  CHECK(s.size() == 2);
  REQUIRE(s.opens().size() == 3);
  CHECK(s.opens()[0].empty());
  CHECK(s.opens()[1] == set(s, {"b"}));
  CHECK(s.opens()[2] == s.points());

  const auto d = fixtures::discrete2();
  CHECK(d.opens().size() == 4);
}

TEST_CASE("build_space rejects a family not closed under union with a witness pair") {
  try {
    (void)build_space({"a", "b", "c"}, {{}, {"a"}, {"b"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_closed_under_union);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == PointSet::singleton(0));
    CHECK(e.witness()[1] == PointSet::singleton(1));
  }
}

TEST_CASE("build_space reports intersections and missing bounds") {
  CHECK_THROWS_WITH_AS((void)build_space({"a", "b", "c"}, {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}),
                       doctest::Contains("NotClosedUnderIntersection"), Error);
  CHECK_THROWS_WITH_AS((void)build_space({"a", "b"}, {{}, {"a"}}), doctest::Contains("MissingEmptyOrFull"), Error);
  CHECK_THROWS_WITH_AS((void)build_space({"a", "b"}, {{"a"}, {"a", "b"}}), doctest::Contains("MissingEmptyOrFull"),
                       Error);
  CHECK_THROWS_AS((void)build_space({"a", "b"}, {{}, {"z"}, {"a", "b"}}), Error);
}

TEST_CASE("re-validating a built space is idempotent") {
  for (const auto& x : corpus_up_to(3)) {
    const auto again = FinSpace::build(x.labels(), x.opens());
    CHECK(again.opens() == x.opens());
    CHECK(again.same_topology(x));
  }
}

TEST_CASE("alexandrov on small orders") {
  // 2-chain b <= a gives the Sierpinski space.
  const auto s = alexandrov(Preorder::from_pairs(2, {{1, 0}}), {"a", "b"});
  CHECK(s.opens() == fixtures::sierpinski().opens());
  // antichain gives the discrete space
  CHECK(alexandrov(Preorder::discrete(2), {"a", "b"}).opens() == fixtures::discrete2().opens());
  // V3: {}, {bot}, {bot,s}, {bot,t}, X
  const auto v = fixtures::v3();
  std::vector<PointSet> expected{PointSet{}, set(v, {"bot"}), set(v, {"bot", "s"}), set(v, {"bot", "t"}),
                                 v.points()};
  std::sort(expected.begin(), expected.end(), canonical_less);
  CHECK(v.opens() == expected);
}

TEST_CASE("specialization_order follows the dual convention") {
  const auto s = fixtures::sierpinski();
  const auto p = specialization_order(s);
  CHECK(p.leq(pt(s, "b"), pt(s, "a")));
  CHECK_FALSE(p.leq(pt(s, "a"), pt(s, "b")));
  const auto conventional = specialization_order(s, true);
  CHECK(conventional.leq(pt(s, "a"), pt(s, "b")));

  const auto d = specialization_order(fixtures::discrete2());
  CHECK(d == Preorder::discrete(2));

  const auto i = specialization_order(fixtures::indiscrete2());
  CHECK(i.equivalent(0, 1));
  CHECK_FALSE(i.is_partial_order());
}

TEST_CASE("specialization_order and alexandrov are mutually inverse") {
  for (const auto& x : corpus_up_to(4)) {
    const auto p = specialization_order(x);
    CHECK(alexandrov(p, x.labels()).same_topology(x));
    CHECK(specialization_order(alexandrov(p)) == p);
  }
  // a non-antisymmetric preorder survives the round trip too
  const auto pre = Preorder::from_pairs(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(specialization_order(alexandrov(pre)) == pre);
}

TEST_CASE("separation_flags") {
  auto s = separation_flags(fixtures::sierpinski());
  CHECK(s.is_t0);
  CHECK(s.is_sober);

  auto i = separation_flags(fixtures::indiscrete2());
  CHECK_FALSE(i.is_t0);
  CHECK_FALSE(i.is_sober);
  REQUIRE(i.indistinguishable);
  CHECK(*i.indistinguishable == std::make_pair(std::size_t{0}, std::size_t{1}));
  REQUIRE(i.bad_irreducible);
  CHECK(*i.bad_irreducible == PointSet::first(2));

  auto m = separation_flags(fixtures::m3());
  CHECK(m.is_t0);
  CHECK(m.is_sober);
}

TEST_CASE("irreducible closed sets of the diamond are point closures") {
  const auto m = fixtures::m3();
  for (const auto& u : m.opens()) {
    const PointSet closed = m.points() - u;
    if (!is_irreducible(m, closed)) continue;
    std::size_t generic = 0;
    for (std::size_t p = 0; p < m.size(); ++p)
      if (m.closure(PointSet::singleton(p)) == closed) ++generic;
    CHECK(generic == 1);
  }
}

TEST_CASE("check_continuous") {
  const auto s = fixtures::sierpinski();
  CHECK_NOTHROW((void)check_continuous({"a", "b"}, s, s));
  CHECK_NOTHROW((void)check_continuous({"b", "b"}, fixtures::discrete2(), s));
  try {
    (void)check_continuous({"b", "a"}, s, s);
    FAIL("swap is not continuous");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_continuous);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == set(s, {"b"}));
    CHECK(e.witness()[1] == set(s, {"a"}));
  }
  CHECK_THROWS_AS((void)ContinuousMap::check(s, s, {0}), Error);
}

TEST_CASE("map_leq and is_adjoint_pair on the Sierpinski space") {
  const auto s = fixtures::sierpinski();
  const auto ca = ContinuousMap::constant(s, s, pt(s, "a"));
  const auto cb = ContinuousMap::constant(s, s, pt(s, "b"));
  CHECK(map_leq(cb, ca));
  CHECK(map_leq(ca, ca));
  CHECK_FALSE(map_leq(ca, cb));
  CHECK(is_adjoint_pair(ContinuousMap::identity(s), ContinuousMap::identity(s)));
  CHECK_FALSE(is_adjoint_pair(ca, cb));
  CHECK_THROWS_AS((void)map_leq(ca, ContinuousMap::constant(s, fixtures::discrete2(), 0)), Error);
}

TEST_CASE("adjoints determine each other and left adjoints preserve existing suprema") {
  std::vector<FinSpace> spaces = corpus_up_to(3);
  spaces.push_back(fixtures::indiscrete2());
  std::size_t pairs_found = 0;
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      if (x.size() + y.size() > 5) continue;
      const auto fs = all_continuous_maps(x, y);
      const auto gs = all_continuous_maps(y, x);
      for (const auto& f : fs) {
        std::vector<const ContinuousMap*> rights;
        for (const auto& g : gs)
          if (is_adjoint_pair(f, g)) rights.push_back(&g);
        for (auto* g1 : rights)
          for (auto* g2 : rights) CHECK(map_equivalent(*g1, *g2));
        if (rights.empty()) continue;
        ++pairs_found;
        // Every subset with a supremum in X is sent to a supremum in Y.
        for (std::uint32_t mask = 0; mask < (1U << x.size()); ++mask) {
          std::vector<std::size_t> sub;
          for (std::size_t p = 0; p < x.size(); ++p)
            if (mask >> p & 1) sub.push_back(p);
          auto is_sup = [](const FinSpace& z, const std::vector<std::size_t>& s, std::size_t c) {
            for (auto e : s)
              if (!z.leq(e, c)) return false;
            for (std::size_t u = 0; u < z.size(); ++u) {
              bool upper = true;
              for (auto e : s) upper = upper && z.leq(e, u);
              if (upper && !z.leq(c, u)) return false;
            }
            return true;
          };
          for (std::size_t c = 0; c < x.size(); ++c) {
            if (!is_sup(x, sub, c)) continue;
            std::vector<std::size_t> image;
            for (auto e : sub) image.push_back(f(e));
            CHECK(is_sup(y, image, f(c)));
          }
        }
      }
    }
  CHECK(pairs_found > 0);
}

TEST_CASE("enumerate_t0_spaces matches both brute-force oracles") {
  const std::size_t expected[] = {1, 1, 3, 19, 219};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto spaces = enumerate_t0_spaces(n);
    CHECK(spaces.size() == expected[n]);
    CHECK(brute_force_partial_orders(n) == expected[n]);
    if (n <= 4) CHECK(brute_force_t0_topologies(n) == expected[n]);
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& x : spaces) {
      CHECK(separation_flags(x).is_t0);
      std::vector<std::uint64_t> key;
      for (const auto& u : x.opens()) key.push_back(u.word(0));
      distinct.insert(key);
    }
    CHECK(distinct.size() == spaces.size());
  }
  CHECK_THROWS_AS((void)enumerate_t0_spaces(6), Error);
  CHECK(enumerate_t0_spaces(6, false, 6).size() == 130023);
}

TEST_CASE("enumeration up to homeomorphism") {
  CHECK(enumerate_t0_spaces(3, true).size() == 5);
  CHECK(enumerate_t0_spaces(4, true).size() == 16);
  const auto reps = enumerate_t0_spaces(4, true);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(find_homeomorphism(reps[i], reps[j]));
  // Every labelled space is homeomorphic to one representative.
  for (const auto& x : enumerate_t0_spaces(4)) {
    std::size_t matches = 0;
    for (const auto& r : reps)
      if (find_homeomorphism(x, r)) ++matches;
    CHECK(matches == 1);
  }
  const auto deterministic = enumerate_t0_spaces(3);
  const auto again = enumerate_t0_spaces(3);
  for (std::size_t i = 0; i < deterministic.size(); ++i) CHECK(deterministic[i].opens() == again[i].opens());
}

TEST_CASE("DOT export of the order") {
  const auto dot = order_to_dot(fixtures::sierpinski());
  CHECK(dot.find("\"b\" -> \"a\"") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 1);
}
