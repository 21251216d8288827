#include <doctest.h>

#include "oracles.hpp"
#include "tcx/enumerator.hpp"
#include "tcx/error.hpp"
#include "tcx/perm_group.hpp"

using namespace tcx;

namespace {
  oracle::images to_images(Perm const& p) {
    return {p.images().begin(), p.images().end()};
  }

  std::vector<oracle::images> images_of(PermGroup const& g) {
    std::vector<oracle::images> out;
    for (auto const& x : g.generators()) out.push_back(to_images(x));
    return out;
  }

  Perm cyc(std::size_t n, std::vector<std::vector<point>> c) {
    return Perm::from_cycles(n, c);
  }

  // M11 on 11 points
  PermGroup m11() {
    return PermGroup(11, {cyc(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                          cyc(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
  }
}  // namespace

TEST_CASE("perm basics") {
  Perm a = cyc(4, {{0, 1}});
  Perm b = cyc(4, {{1, 2}});
  // left to right: 0 -a-> 1 -b-> 2
  CHECK((a * b)[0] == 2);
  CHECK((a * b).inverse() == b * a);
  CHECK(Perm(4).is_identity());
  CHECK(element_order(Perm(5)) == 1);
  CHECK(element_order(cyc(7, {{0, 1}, {2, 3, 4}})) == 6);
  CHECK(element_order(cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}})) == 12);
  CHECK_THROWS_AS(Perm(std::vector<point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(cyc(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(cyc(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Perm(3) * Perm(4), DimensionMismatch);
  CHECK_THROWS_AS(PermGroup(3, {Perm(4)}), Error);
}

TEST_CASE("schreier-sims against brute-force closure") {
  std::vector<PermGroup> groups{
      PermGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{1, 2}}), cyc(4, {{2, 3}})}),
      PermGroup(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}})}),
      PermGroup(8, {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cyc(8, {{1, 7}, {2, 6}, {3, 5}})}),
      PermGroup(7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{0, 1}})}),
      PermGroup(9, {cyc(9, {{0, 1, 2}, {3, 4, 5}}), cyc(9, {{0, 3, 6}}), cyc(9, {{7, 8}})}),
      PermGroup(5, {}),
      PermGroup(5, {Perm(5)}),
  };
  for (auto const& g : groups) {
    auto brute = oracle::closure_order(images_of(g), g.degree());
    auto h = build_chain(g);
    CHECK(h.has_chain());
    CHECK(order(h) == brute);
    CHECK(h.chain().order() == brute);
    for (auto const& x : g.generators()) {
      CHECK(h.chain().strip(x).first.is_identity());
    }
    std::size_t listed = 0;
    h.chain().for_each_element([&](Perm const&) {
      ++listed;
      return true;
    });
    CHECK(listed == brute);
  }
}

TEST_CASE("membership matches the element list") {
  PermGroup g(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}, {3, 4}})});
  auto all = oracle::closure(images_of(g), 6);
  auto h = build_chain(g);
  oracle::images x(6);
  std::iota(x.begin(), x.end(), 0);
  std::size_t inside = 0;
  do {
    bool in = contains(h, Perm(std::vector<point>(x.begin(), x.end())));
    CHECK(in == (all.count(x) == 1));
    inside += in;
  } while (std::next_permutation(x.begin(), x.end()));
  CHECK(inside == all.size());
}

TEST_CASE("M11") {
  auto g = build_chain(m11());
  CHECK(order(g) == 7920);
  std::uint64_t seed = 99;
  for (int i = 0; i < 50; ++i) {
    Word w;
    for (int k = 0; k < 12; ++k) {
      seed = seed * 6364136223846793005ULL + 1;
      w.push_back(Letter{static_cast<gen_index>((seed >> 40) & 1), ((seed >> 45) & 1) != 0});
    }
    auto p = word_image(g, w);
    CHECK(contains(g, p));
    CHECK(7920 % element_order(p) == 0);
  }
  CHECK_FALSE(contains(g, cyc(11, {{0, 1}})));
  CHECK_THROWS_AS(contains(g, Perm(12)), DimensionMismatch);
}

TEST_CASE("chain is deterministic") {
  auto a = build_chain(m11());
  auto b = build_chain(m11());
  REQUIRE(a.chain().levels.size() == b.chain().levels.size());
  for (std::size_t i = 0; i < a.chain().levels.size(); ++i) {
    CHECK(a.chain().levels[i].base == b.chain().levels[i].base);
    CHECK(a.chain().levels[i].orbit == b.chain().levels[i].orbit);
  }
  CHECK(a.chain().levels[0].base == 0);
  CHECK_THROWS_AS(m11().chain(), Error);
}

TEST_CASE("word images and parabolics") {
  auto t = enumerate(coxeter_presentation({3, 4, 3}), std::vector<Word>{});
  auto g = permutation_rep(t);
  CHECK(word_image(g, Word()).is_identity());
  // sigma is a conjugate of an involution
  Word sigma = Word::of({1, 2, 3, 2, 1});
  CHECK(element_order(word_image(g, sigma)) == 2);
  CHECK(word_image(g, Word({Letter{0, true}})) == word_image(g, Word::of({0})));
  CHECK_THROWS_AS(word_image(g, Word::of({4})), InvalidWord);

  CHECK(order(parabolic(g, {})) == 1);
  CHECK(order(parabolic(g, {0, 1, 2, 3})) == 1152);
  CHECK(order(parabolic(g, {0, 1, 2})) == 48);
  CHECK(order(parabolic(g, {1, 2, 3})) == 48);
  CHECK(order(parabolic(g, {0, 3})) == 4);
}

TEST_CASE("intersections against brute force") {
  auto t = enumerate(coxeter_presentation({3, 4, 3}), std::vector<Word>{});
  auto g = permutation_rep(t);
  auto a = build_chain(parabolic(g, {0, 1, 2}));
  auto b = build_chain(parabolic(g, {1, 2, 3}));
  auto ea = oracle::closure(images_of(a), g.degree());
  auto eb = oracle::closure(images_of(b), g.degree());
  std::size_t common = 0;
  for (auto const& x : ea) common += eb.count(x);
  CHECK(intersection_order(a, b) == common);
  CHECK(intersection_order(b, a) == common);
  // the intersection property of a Coxeter group
  CHECK(common == 8);
  CHECK(intersection_order(a, a) == order(a));
  auto triv = build_chain(parabolic(g, {}));
  CHECK(intersection_order(triv, a) == 1);
  CHECK_THROWS_AS(intersection_order(a, b, 10), BudgetExceeded);
}

TEST_CASE("orbits") {
  PermGroup g(6, {cyc(6, {{0, 3}}), cyc(6, {{3, 1}, {4, 5}})});
  std::vector<point> start{0};
  auto o = orbit(start, g.generators());
  CHECK(o == std::vector<point>{0, 3, 1});
  std::vector<point> fixed{2};
  CHECK(orbit(fixed, g.generators()) == std::vector<point>{2});
  auto t = enumerate(coxeter_presentation({3, 3}), std::vector<Word>{Word::of({0})});
  auto h = permutation_rep(t);
  std::vector<point> zero{0};
  CHECK(orbit(zero, h.generators()).size() == t.nrows());
}
