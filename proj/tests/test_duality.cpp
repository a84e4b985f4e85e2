#include "doctest.h"
#include "fintop/duality.hpp"
#include "fixtures.hpp"

using namespace fintop;
using fixtures::set;

namespace {

FiniteLattice chain_lattice(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < n) pairs.emplace_back(i, i + 1);
  }
  return FiniteLattice::from_pairs(labels, pairs);
}

FiniteLattice boolean4() {
  return FiniteLattice::from_pairs({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FiniteLattice diamond() {
  return FiniteLattice::from_pairs({"bot", "a", "b", "c", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice pentagon() {
  return FiniteLattice::from_pairs({"bot", "a", "b", "c", "top"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

// Monoid with one object: arrows 1 and e with e.e = e.
FinCategory idempotent_monoid() {
  return FinCategory::build({"A"}, {{0, 0, "1"}, {0, 0, "e"}}, {0}, {{0, 1}, {1, 1}});
}

}  // namespace

TEST_CASE("lattice construction and validation") {
  const auto c = chain_lattice(3);
  CHECK(c.top() == 2);
  CHECK(c.bottom() == 0);
  CHECK(c.join(0, 1) == 1);
  CHECK(c.meet(1, 2) == 1);
  CHECK_THROWS_AS((void)FiniteLattice::from_pairs({"a", "b"}, {}), Error);  // no join
  CHECK_THROWS_AS((void)FiniteLattice::from_pairs({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  // two incomparable upper bounds for a, b
  CHECK_THROWS_AS((void)FiniteLattice::from_pairs({"bot", "a", "b", "c", "d", "top"},
                                                  {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
                  Error);
}

TEST_CASE("frames reject M3 and N5 with a genuine witness") {
  for (const auto& l : {diamond(), pentagon()}) {
    try {
      (void)FiniteFrame::validate(l);
      FAIL("expected NotAFrame");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_a_frame);
      REQUIRE(e.indices().size() == 3);
      const auto x = e.indices()[0], y = e.indices()[1], z = e.indices()[2];
      CHECK(l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)));
    }
  }
  CHECK_NOTHROW((void)FiniteFrame::validate(boolean4()));
}

TEST_CASE("join-primes") {
  const auto b = boolean4();
  CHECK_FALSE(b.is_join_prime(0));
  CHECK(b.is_join_prime(1));
  CHECK(b.is_join_prime(2));
  CHECK_FALSE(b.is_join_prime(3));
  const auto c = chain_lattice(3);
  CHECK(c.is_join_prime(1));
  CHECK(c.is_join_prime(2));
  for (std::size_t g = 0; g < b.size(); ++g) CHECK(b.is_alpha_generator(g, Alpha::omega) == b.is_alpha_generator(g, Alpha::Omega));
}

TEST_CASE("opens_frame examples") {
  const auto s = opens_frame(fixtures::sierpinski());
  CHECK(find_lattice_iso(s, chain_lattice(3)));
  CHECK(s.label(1) == "{b}");
  CHECK(find_lattice_iso(opens_frame(fixtures::discrete2()), boolean4()));
  CHECK(opens_frame(fixtures::m3()).size() == 10);
}

TEST_CASE("alpha_filter_space examples") {
  const auto chain = FiniteFrame::validate(chain_lattice(3));
  const auto fs = alpha_filter_space(chain, Alpha::omega);
  CHECK(fs.generators == std::vector<std::size_t>{1, 2});
  CHECK(find_homeomorphism(fs.space, fixtures::sierpinski()));

  const auto b = FiniteFrame::validate(boolean4());
  const auto fb = alpha_filter_space(b, Alpha::omega);
  CHECK(fb.space.size() == 2);
  CHECK(fb.space.opens().size() == 4);

  for (auto l : {chain, b}) CHECK(alpha_filter_space(l, Alpha::zero).space.size() == l.size());
  CHECK(alpha_filter_space(chain, Alpha::one).space.size() == 2);
}

TEST_CASE("eta_check examples") {
  for (const auto& l : {chain_lattice(3), boolean4(), chain_lattice(1)}) {
    const auto f = FiniteFrame::validate(l);
    CHECK(eta_check(f, Alpha::omega).iso());
    CHECK(eta_check(f, Alpha::Omega).iso());
    auto zero = eta_check(f, Alpha::zero);
    CHECK(zero.injective);
    CHECK(zero.separates_points);
    CHECK(zero.preserves_meets);
  }
  // 3-chain at alpha = 0: three points in a chain have four opens
  auto r = eta_check(FiniteFrame::validate(chain_lattice(3)), Alpha::zero);
  CHECK_FALSE(r.surjective);
  CHECK_FALSE(r.iso());
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("round_trip_space examples") {
  const auto s = fixtures::sierpinski();
  auto r0 = round_trip_space(s, Alpha::zero);
  CHECK(r0.distributive);
  CHECK_FALSE(r0.unit_homeomorphism);
  CHECK(r0.split_subobject);
  CHECK(r0.consistent);

  auto rw = round_trip_space(s, Alpha::omega);
  CHECK(rw.distributive);
  CHECK(rw.unit_homeomorphism);
  CHECK(rw.consistent);

  auto mw = round_trip_space(fixtures::m3(), Alpha::omega);
  CHECK(mw.unit_homeomorphism);
  CHECK(mw.consistent);

  auto m0 = round_trip_space(fixtures::m3(), Alpha::zero);
  CHECK_FALSE(m0.distributive);
  CHECK_FALSE(m0.unit_homeomorphism);
  CHECK(m0.consistent);

  auto i = round_trip_space(fixtures::indiscrete2(), Alpha::omega);
  CHECK_FALSE(i.distributive);
  CHECK_FALSE(i.unit_homeomorphism);
  CHECK(i.consistent);
}

TEST_CASE("category validation") {
  CHECK_NOTHROW((void)idempotent_monoid());
  // e.e = 1 would still be a category (a group); e.e missing is not
  CHECK_THROWS_AS((void)FinCategory::build({"A"}, {{0, 0, "1"}, {0, 0, "e"}}, {0},
                                           {{0, 1}, {1, FinCategory::npos}}),
                  Error);
  // a.a = a, a.b = b, b.a = a, b.b = a: (b.a).b = b but b.(a.b) = a
  CHECK_THROWS_AS((void)FinCategory::build({"A"}, {{0, 0, "1"}, {0, 0, "a"}, {0, 0, "b"}}, {0},
                                           {{0, 1, 2}, {1, 1, 2}, {2, 1, 1}}),
                  Error);
  CHECK_THROWS_AS((void)FinCategory::build({"A"}, {{0, 0, "1"}}, {1}, {{0}}), Error);
}

TEST_CASE("split_idempotent examples") {
  const auto c = idempotent_monoid();
  auto id = split_idempotent(c, 0);
  REQUIRE(id);
  CHECK(id->r == 0);
  CHECK(id->s == 0);
  CHECK_FALSE(split_idempotent(c, 1));
  const auto bad = FinCategory::build({"A"}, {{0, 0, "1"}, {0, 0, "g"}}, {0}, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS((void)split_idempotent(bad, 1), Error);
}

TEST_CASE("karoubi_envelope of the idempotent monoid") {
  const auto c = idempotent_monoid();
  const auto k = karoubi_envelope(c);
  CHECK(k.category.object_count() == 2);
  CHECK(k.category.object(1) == "(A,e)");
  const std::size_t e_in_k = k.embedding.on_arrows[1];
  auto sp = split_idempotent(k.category, e_in_k);
  REQUIRE(sp);
  CHECK(sp->object == 1);
  CHECK_FALSE(unsplit_idempotent(k.category));
  CHECK(is_fully_faithful(c, k.category, k.embedding));
  CHECK_FALSE(is_essentially_surjective(c, k.category, k.embedding));
}

TEST_CASE("karoubi envelope is idempotent and trivial on split categories") {
  const auto k = karoubi_envelope(idempotent_monoid());
  const auto kk = karoubi_envelope(k.category);
  CHECK(is_equivalence(k.category, kk.category, kk.embedding));

  // chain 0 < 1 < 2 as a category: only identities are idempotent
  const auto chain = FinCategory::build({"0", "1", "2"},
                                        {{0, 0, "1_0"}, {1, 1, "1_1"}, {2, 2, "1_2"}, {0, 1, "a"}, {1, 2, "b"}, {0, 2, "ba"}},
                                        {0, 1, 2},
                                        [] {
                                          std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6, FinCategory::npos));
                                          t[4][3] = 5;
                                          return t;
                                        }());
  const auto kc = karoubi_envelope(chain);
  CHECK(is_equivalence(chain, kc.category, kc.embedding));
}

TEST_CASE("kleisli_category examples") {
  const auto s = fixtures::sierpinski();
  const auto k = kleisli_category({s}, Alpha::omega);
  CHECK(k.category.hom(0, 0).size() == 3);
  CHECK(k.tables[k.category.identity(0)] == unit(k.filter_spaces[0]).table());

  const auto k2 = kleisli_category({s, fixtures::discrete2()}, Alpha::zero);
  CHECK(k2.category.object_count() == 2);
  // monotone maps 2-chain -> 3-chain, and D2 -> Boolean square
  CHECK(k2.category.hom(0, 0).size() == 6);
  CHECK(k2.category.hom(1, 1).size() == 16);
}

TEST_CASE("comparison_functor examples") {
  const auto s = fixtures::sierpinski();
  auto r = comparison_functor({s}, Alpha::omega);
  CHECK(r.fully_faithful());
  REQUIRE(r.hom_sizes.size() == 1);
  CHECK(r.hom_sizes[0].first == r.hom_sizes[0].second);

  auto r2 = comparison_functor({s, fixtures::discrete2()}, Alpha::zero);
  CHECK_MESSAGE(r2.fully_faithful(), r2.detail);
  for (auto [a, b] : r2.hom_sizes) CHECK(a == b);

  for (auto alpha : kAllAlphas) {
    auto r3 = comparison_functor({fixtures::point(), s, fixtures::v3()}, alpha);
    CHECK_MESSAGE(r3.fully_faithful(), r3.detail);
  }
}

TEST_CASE("lattice morphism classes") {
  const auto c = chain_lattice(3);
  const auto b = boolean4();
  auto id = lattice_map(c, c, {0, 1, 2});
  CHECK(alpha_class(id) == Alpha::Omega);
  // constant top preserves meets but not the bottom
  auto top = lattice_map(c, c, {2, 2, 2});
  CHECK(alpha_class(top) == Alpha::zero);
  // bot -> bot, a -> 1, b -> 1, top -> 2 into the chain preserves meets? a meet b = bot -> 0
  // but 1 meet 1 = 1, so no
  auto squash = lattice_map(b, c, {0, 1, 1, 2});
  CHECK_FALSE(alpha_class(squash));
  CHECK_THROWS_AS((void)lattice_map(c, c, {2, 1, 0}), Error);
  CHECK_THROWS_AS((void)lattice_morphism(c, c, {2, 2, 2}, Alpha::one), Error);
  // on a chain every monotone map preserves binary meets; fix the top,
  // then also the bottom
  CHECK(all_lattice_morphisms(c, c, Alpha::zero).size() == 6);
  CHECK(all_lattice_morphisms(c, c, Alpha::one).size() == 3);
  CHECK(all_lattice_morphisms(c, c, Alpha::omega).size() == 3);
}

TEST_CASE("split_transfer_check examples") {
  const auto c3 = chain_lattice(3);
  const auto c2 = chain_lattice(2);
  auto trivial = split_transfer_check(lattice_map(c3, c3, {0, 1, 2}), lattice_map(c3, c3, {0, 1, 2}), Alpha::omega);
  CHECK(trivial.fact1);
  CHECK(trivial.fact2);
  CHECK(trivial.fact3);

  auto embed = split_transfer_check(lattice_map(c2, c3, {0, 2}), lattice_map(c3, c2, {0, 0, 1}), Alpha::omega);
  CHECK(embed.fact1);
  CHECK(embed.fact2);
  CHECK_FALSE(embed.fact2_skipped);

  const auto b = boolean4();
  auto skipped = split_transfer_check(lattice_map(c2, b, {0, 3}), lattice_map(b, c2, {0, 1, 1, 1}), Alpha::omega);
  CHECK(skipped.fact1);
  CHECK(skipped.fact2_skipped);

  CHECK_THROWS_AS((void)split_transfer_check(lattice_map(c2, c3, {0, 1}), lattice_map(c3, c2, {0, 0, 1}), Alpha::omega),
                  Error);
}

TEST_CASE("small distributive lattices come back from their prime filter spaces") {
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& p : enumerate_t0_spaces(k, true)) {
      const auto l = opens_frame(p);
      const auto f = alpha_filter_space(l, Alpha::omega);
      CHECK(f.space.size() == k);
      CHECK(find_lattice_iso(l, opens_frame(f.space)));
      CHECK(eta_check(l, Alpha::omega).iso());
    }
}
