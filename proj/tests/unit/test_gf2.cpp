#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tcx/error.hpp"
#include "tcx/gf2.hpp"
#include "tcx/presentation.hpp"

using namespace tcx;

namespace {
  std::string data_text() {
    std::ifstream in(std::string(TCX_TEST_DATA_DIR) + "/o8plus2_generators.txt");
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  Gf2Matrix random_matrix(std::size_t n, std::uint64_t& seed) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        m.set(i, j, (seed >> 41) & 1);
      }
    return m;
  }

  Word random_word(std::uint64_t& seed, std::size_t len, gen_index ngens) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      w.push_back(Letter{static_cast<gen_index>((seed >> 33) % ngens), false});
    }
    return w;
  }

  Gf2Vector ones8() {
    Gf2Vector v(24);
    for (int i = 0; i < 8; ++i) v.set(i);
    return v;
  }

  std::vector<Gf2Matrix> h_generators() {
    auto const& g = builtin_generators();
    return {g[0], g[1], g[2], g[3], tau_matrix(g), g[5]};
  }
}  // namespace

TEST_CASE("vector and matrix arithmetic") {
  auto v = Gf2Vector::of({1, 0, 1, 1});
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "1011");
  CHECK((v + v).is_zero());
  CHECK(Gf2Vector::of({0, 1}) < Gf2Vector::of({1, 0}));
  CHECK_FALSE(Gf2Vector::of({1, 0}) < Gf2Vector::of({0, 1}));
  CHECK_THROWS_AS(v + Gf2Vector(3), DimensionMismatch);

  auto m = Gf2Matrix::from_table({{0, 1}, {1, 1}});
  // (1,0) m = row 0
  CHECK(Gf2Vector::of({1, 0}) * m == Gf2Vector::of({0, 1}));
  CHECK(matrix_order(m) == 3);
  CHECK(pow(m, 3).is_identity());
  CHECK(matrix_order(Gf2Matrix::identity(5)) == 1);
  CHECK(m.rank() == 2);
  CHECK_THROWS_AS(matrix_order(Gf2Matrix::from_table({{1, 1}, {1, 1}})), Error);
  CHECK_THROWS_AS(mul(m, Gf2Matrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(Gf2Matrix::from_table({{1, 0}}), DimensionMismatch);
}

TEST_CASE("associativity probes") {
  std::uint64_t seed = 7;
  for (int i = 0; i < 30; ++i) {
    auto a = random_matrix(24, seed), b = random_matrix(24, seed);
    auto c = random_matrix(24, seed);
    Gf2Vector v(24);
    for (int k = 0; k < 24; ++k) v.set(k, (seed >> k) & 1);
    CHECK((v * a) * b == v * (a * b));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("kron, unit and block") {
  auto x = Gf2Matrix::from_table({{1, 1}, {0, 1}});
  CHECK(kron(Gf2Matrix::identity(1), x) == x);
  auto k = kron(Gf2Matrix::identity(2), x);
  CHECK(k.dim() == 4);
  CHECK(k.get(2, 3));
  CHECK_FALSE(k.get(0, 3));
  auto e = unit(1, 0, 3);
  CHECK(e.get(1, 0));
  CHECK(e.rank() == 1);
  CHECK_THROWS_AS(unit(3, 0, 3), DimensionMismatch);
  auto z = Gf2Matrix(2);
  auto b = block({{x, z}, {z, x}});
  CHECK(b == k);
  CHECK_THROWS_AS(block({{x, z}}), DimensionMismatch);
  auto p = permutation_matrix(Perm::from_cycles(3, {{0, 2}}));
  CHECK(Gf2Vector::of({1, 0, 0}) * p == Gf2Vector::of({0, 0, 1}));
}

TEST_CASE("builtin generators") {
  auto const& g = builtin_generators();
  REQUIRE(g.size() == 6);
  std::string abcdef = "abcdef";
  for (std::size_t i = 0; i < 6; ++i) {
    CAPTURE(abcdef[i]);
    CHECK(g[i].dim() == 24);
    CHECK(mul(g[i], g[i]).is_identity());
    CHECK(matrix_order(g[i]) == 2);
  }
  // row 2 of A, 1-based
  CHECK(g[0].row(1).to_string().substr(0, 8) == "01111100");
  auto A = Gf2Matrix::from_table({{1, 0, 0, 0, 0, 0, 0, 0},
                                  {0, 1, 1, 1, 1, 1, 0, 0},
                                  {1, 0, 1, 0, 0, 0, 0, 1},
                                  {1, 0, 0, 1, 0, 0, 0, 1},
                                  {1, 0, 0, 0, 1, 0, 0, 1},
                                  {1, 0, 0, 0, 0, 1, 0, 1},
                                  {0, 0, 1, 1, 1, 1, 1, 0},
                                  {0, 0, 0, 0, 0, 0, 0, 1}});
  CHECK((A * A).is_identity());
  CHECK(g[0] == kron(Gf2Matrix::identity(3), A));

  // d = (5,6) prod_{i=9}^{16} (i, i+8), 1-based
  std::vector<point> img(24);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[4], img[5]);
  for (int i = 8; i < 16; ++i) std::swap(img[i], img[i + 8]);
  CHECK(g[3] == permutation_matrix(Perm(img)));

  auto F = Gf2Matrix::from_table({{0, 0, 0, 0, 1, 1, 0, 0},
                                  {0, 0, 0, 0, 1, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 1, 1},
                                  {0, 0, 0, 0, 0, 0, 1, 0},
                                  {0, 1, 0, 0, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 0, 0, 0, 0},
                                  {0, 0, 1, 1, 0, 0, 0, 0}});
  auto z = Gf2Matrix(8);
  auto top = Gf2Matrix::identity(8) + unit(1, 0, 8);
  CHECK(g[5] == block({{top, z, z}, {z, z, F}, {z, F, z}}));
}

TEST_CASE("the quadratic form") {
  CHECK_FALSE(phi(Gf2Vector(24)));
  CHECK_FALSE(phi(ones8()));
  Gf2Vector e0(24);
  e0.set(0);
  CHECK(phi(e0));
  CHECK_THROWS_AS(phi(Gf2Vector(8)), DimensionMismatch);
  // agrees with the one-block oracle on every vector of the first block
  for (unsigned v = 0; v < 256; ++v) {
    Gf2Vector x(24);
    for (int i = 0; i < 8; ++i) x.set(i, (v >> i) & 1);
    CHECK(phi(x) == oracle::phi8(v));
  }
  CHECK(oracle::isotropic_count8() == 135);
}

TEST_CASE("generators preserve phi, and so do their products") {
  auto const& g = builtin_generators();
  for (auto const& m : g) CHECK(preserves_phi(m));
  std::uint64_t seed = 3;
  for (int i = 0; i < 100; ++i) {
    auto w = random_word(seed, 1 + i % 15, 6);
    CHECK(preserves_phi(word_matrix(g, w)));
  }
  // e1 -> e1 + e3 does not
  auto t = Gf2Matrix::identity(24) + unit(0, 2, 24);
  CHECK_FALSE(preserves_phi(t));
}

TEST_CASE("relators of the flagship presentation hold") {
  auto p = locally_toroidal_presentation(ToroidalType{2, Shape::double_},
                                         ToroidalType{3, Shape::single});
  auto checks = check_relations(p, builtin_generators());
  CHECK(checks.size() == p.relators().size());
  for (auto const& c : checks) CHECK(c.holds);

  std::vector<Gf2Matrix> ids(6, Gf2Matrix::identity(24));
  for (auto const& c : check_relations(p, ids)) CHECK(c.holds);
  CHECK_THROWS_AS(check_relations(p, std::vector<Gf2Matrix>(5, Gf2Matrix::identity(2))),
                  DimensionMismatch);
}

TEST_CASE("relator probe on commuting involutions") {
  Presentation p;
  p.add_generator("x");
  p.add_generator("y");
  p.add_relator(Word::of({0, 1}).pow(4));
  p.add_relator(Word::of({0, 1}).pow(3));
  auto x = permutation_matrix(Perm::from_cycles(4, {{0, 1}}));
  auto y = permutation_matrix(Perm::from_cycles(4, {{2, 3}}));
  std::vector<Gf2Matrix> m{x, y};
  auto r = check_relations(p, m);
  // x x, y y, (xy)^4, (xy)^3
  REQUIRE(r.size() == 4);
  CHECK(r[2].holds);
  CHECK_FALSE(r[3].holds);
}

TEST_CASE("tau and the isotropic orbit") {
  auto const& g = builtin_generators();
  CHECK(tau_matrix(g) == g[4] * g[3] * g[2] * g[3] * g[4]);
  auto h = h_generators();
  auto o = vector_orbit(ones8(), h);
  CHECK(o.size() == 135);
  CHECK(o.front() == ones8());
  for (auto const& v : o) {
    CHECK_FALSE(phi(v));
    CHECK_FALSE(v.is_zero());
    for (int i = 8; i < 24; ++i) CHECK_FALSE(v[i]);
  }
  CHECK(vector_orbit(Gf2Vector(24), h).size() == 1);
}

TEST_CASE("the action on the 135 points has rank 3") {
  auto h = h_generators();
  auto o = vector_orbit(ones8(), h);
  auto g = build_chain(induced_perm_action(o, h));
  auto const& levels = g.chain().levels;
  REQUIRE(levels.size() > 1);
  std::vector<oracle::images> stab;
  for (auto const& x : levels[1].gens) stab.emplace_back(x.images().begin(), x.images().end());
  CHECK(oracle::count_orbits(stab, 135) == 3);
  CHECK(order(g) == BigInt(348364800));
}

TEST_CASE("the block action on 765 vectors") {
  auto const& g = builtin_generators();
  auto vs = block_vectors(3, 8);
  CHECK(vs.size() == 765);
  auto act = induced_perm_action(vs, g);
  CHECK(order(act) == BigInt(1045094400));

  std::uint64_t seed = 11;
  std::size_t   identities = 0;
  for (int i = 0; i < 1000; ++i) {
    auto w = random_word(seed, 1 + i % 12, 6);
    bool mat_id = word_matrix(g, w).is_identity();
    bool perm_id = word_image(act, w).is_identity();
    CHECK(mat_id == perm_id);
    identities += mat_id;
  }
  CHECK(identities > 0);

  auto first = block_vectors(1, 8);
  CHECK_THROWS_AS(induced_perm_action(first, g), Error);
}

TEST_CASE("generator data parser") {
  auto parsed = parse_generator_data(data_text());
  CHECK(parsed == builtin_generators());
  CHECK(builtin_generator_data() == data_text());

  auto small = parse_generator_data(
      "matrix X 2\n1 1\n0 1\nperm p 3 = (1,2)\n"
      "perm q 4 = prod i in 1..2 (i,i+2)\n"
      "gen x = kron I2 X\ngen y = q\ngen z = blocks 2 [ X 0 ; 0 I2+E(1,2) ]\n");
  REQUIRE(small.size() == 3);
  CHECK(small[0] == kron(Gf2Matrix::identity(2), Gf2Matrix::from_table({{1, 1}, {0, 1}})));
  CHECK(small[1] == permutation_matrix(Perm::from_cycles(4, {{0, 2}, {1, 3}})));
  CHECK(small[2].get(2, 3));

  auto err_at = [](std::string const& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_generator_data(text);
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(err_at("matrix X 2\n1 1\n0 2\n").first == 3);
  CHECK(err_at("matrix X 2\n1 1\n").first != 0);
  CHECK(err_at("perm p 3 = (1,4)\n").first == 1);
  CHECK(err_at("gen g = Y\n") == std::pair<std::size_t, std::size_t>{1, 9});
  CHECK(err_at("matrix X 2\n1 1\n1 1\ngen g = X\n").first == 4);
  CHECK(err_at("frobnicate\n").first == 1);
  CHECK_THROWS_AS(load_generator_data("/nonexistent"), Error);
}

TEST_CASE("a one-bit change in A breaks the relators") {
  auto text = data_text();
  auto pos = text.find("0 1 1 1 1 1 0 0");
  REQUIRE(pos != std::string::npos);
  // row 2 of A becomes 0 1 1 1 1 1 0 1, still invertible
  text[pos + 14] = '1';
  auto g = parse_generator_data(text);
  CHECK(g[0].rank() == 24);
  auto p = locally_toroidal_presentation(ToroidalType{2, Shape::double_},
                                         ToroidalType{3, Shape::single});
  bool all = true;
  for (auto const& c : check_relations(p, g)) all = all && c.holds;
  CHECK_FALSE(all);
}
