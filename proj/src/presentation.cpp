#include "tcx/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tcx/error.hpp"

namespace tcx {

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  gen_index Presentation::add_generator(std::string name, bool involutive) {
    if (find_generator(name)) {
      throw Error("duplicate generator name '" + name + "'");
    }
    auto g = static_cast<gen_index>(_names.size());
    _names.push_back(std::move(name));
    _involutive.push_back(involutive ? 1 : 0);
    if (involutive) {
      _relators.push_back(Word::of({g, g}));
    }
    return g;
  }

  void Presentation::add_relator(Word const& w) {
    validate(w);
    auto r = reduce(w);
    if (!r.empty()) {
      _relators.push_back(std::move(r));
    }
  }

  void Presentation::add_subgroup(std::string name, std::vector<Word> gens) {
    for (auto& w : gens) {
      validate(w);
      w = reduce(w);
    }
    _subgroups[std::move(name)] = std::move(gens);
  }

  bool Presentation::has_subgroup(std::string const& name) const {
    return _subgroups.count(name) != 0 || name == "1" || name == "trivial";
  }

  std::vector<Word> const& Presentation::subgroup(std::string const& name) const {
    static std::vector<Word> const trivial;
    auto it = _subgroups.find(name);
    if (it != _subgroups.end()) {
      return it->second;
    }
    if (name == "1" || name == "trivial") {
      return trivial;
    }
    throw Error("no subgroup named '" + name + "'");
  }

  std::optional<gen_index> Presentation::find_generator(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<gen_index>(it - _names.begin());
  }

  void Presentation::validate(Word const& w) const {
    for (auto const& l : w) {
      if (l.gen >= ngens()) {
        throw InvalidWord("letter x" + std::to_string(l.gen)
                          + " outside an alphabet of "
                          + std::to_string(ngens()) + " generators");
      }
    }
  }

  std::vector<Word> Presentation::extra_relators() const {
    std::vector<Word> out;
    for (auto const& r : _relators) {
      bool is_involution = r.size() == 2 && r[0].gen == r[1].gen
                           && is_involutive(r[0].gen);
      if (!is_involution) {
        out.push_back(r);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ToroidalType
  ////////////////////////////////////////////////////////////////////////

  ToroidalType::ToroidalType(unsigned s_, Shape shape_) : s(s_), shape(shape_) {
    if (s < 2) {
      throw Error("toroidal parameter must be at least 2, found "
                  + std::to_string(s));
    }
  }

  namespace {
    unsigned parse_unsigned(std::string_view text, std::string_view whole) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error("malformed toroidal type '" + std::string(whole) + "'");
      }
      return value;
    }
  }  // namespace

  ToroidalType ToroidalType::parse(std::string_view text) {
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
      unsigned s = parse_unsigned(text.substr(0, colon), text);
      auto shape = text.substr(colon + 1);
      if (shape == "single") {
        return ToroidalType(s, Shape::single);
      } else if (shape == "double") {
        return ToroidalType(s, Shape::double_);
      }
      throw Error("unknown toroidal shape '" + std::string(shape) + "'");
    }
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
      auto inner = text.substr(1, text.size() - 2);
      std::vector<std::string_view> parts;
      if (inner.find(',') == std::string_view::npos) {
        if (inner.size() != 4) {
          throw Error("malformed toroidal type '" + std::string(text) + "'");
        }
        for (std::size_t i = 0; i < 4; ++i) {
          parts.push_back(inner.substr(i, 1));
        }
      } else {
        std::size_t start = 0;
        while (true) {
          auto comma = inner.find(',', start);
          parts.push_back(inner.substr(start, comma - start));
          if (comma == std::string_view::npos) {
            break;
          }
          start = comma + 1;
        }
      }
      if (parts.size() != 4 || parse_unsigned(parts[2], text) != 0
          || parse_unsigned(parts[3], text) != 0) {
        throw Error("malformed toroidal type '" + std::string(text) + "'");
      }
      unsigned s = parse_unsigned(parts[0], text);
      unsigned s2 = parse_unsigned(parts[1], text);
      if (s2 == 0) {
        return ToroidalType(s, Shape::single);
      } else if (s2 == s) {
        return ToroidalType(s, Shape::double_);
      }
      throw Error("toroidal type '" + std::string(text)
                  + "' is neither (s,0,0,0) nor (s,s,0,0)");
    }
    throw Error("malformed toroidal type '" + std::string(text) + "'");
  }

  std::string to_string(ToroidalType const& t) {
    std::string s = std::to_string(t.s);
    std::string second = t.shape == Shape::double_ ? s : "0";
    if (t.s > 9) {
      return "(" + s + "," + second + ",0,0)";
    }
    return "(" + s + second + "00)";
  }

  std::string to_spec(ToroidalType const& t) {
    return std::to_string(t.s)
           + (t.shape == Shape::double_ ? ":double" : ":single");
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator maps
  ////////////////////////////////////////////////////////////////////////

  GeneratorMap GeneratorMap::identity(Presentation const& p) {
    GeneratorMap m;
    for (gen_index g = 0; g < p.ngens(); ++g) {
      m.images.push_back(Word::generator(g));
    }
    m.target_involutive.assign(p.involutive().begin(), p.involutive().end());
    return m;
  }

  Word apply_map(Word const& w, GeneratorMap const& m) {
    Word out;
    for (auto const& l : w) {
      if (l.gen >= m.images.size()) {
        throw InvalidWord("generator x" + std::to_string(l.gen)
                          + " has no image under the map");
      }
      auto const& image = m.images[l.gen];
      out *= l.inverse ? image.inverse() : image;
    }
    return free_reduce(out, m.target_involutive);
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> default_names(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        if (n <= 26) {
          names.emplace_back(1, static_cast<char>('a' + i));
        } else {
          names.push_back("g" + std::to_string(i + 1));
        }
      }
      return names;
    }

    std::vector<std::uint8_t> all_involutive(std::size_t n) {
      return std::vector<std::uint8_t>(n, 1);
    }
  }  // namespace

  Presentation
  coxeter_matrix_presentation(std::vector<std::vector<unsigned>> const& m,
                              std::vector<std::string> names) {
    auto n = m.size();
    if (names.empty()) {
      names = default_names(n);
    }
    if (names.size() != n) {
      throw Error("expected " + std::to_string(n) + " generator names");
    }
    Presentation p;
    for (auto& name : names) {
      p.add_generator(std::move(name), true);
    }
    for (gen_index i = 0; i < n; ++i) {
      if (m[i].size() != n) {
        throw Error("Coxeter matrix must be square");
      }
      for (gen_index j = i + 1; j < n; ++j) {
        if (m[i][j] != m[j][i]) {
          throw Error("Coxeter matrix must be symmetric");
        }
        if (m[i][j] < 2) {
          throw Error("Coxeter label must be at least 2, found "
                      + std::to_string(m[i][j]));
        }
        p.add_relator(Word::of({i, j}).pow(m[i][j]));
      }
    }
    return p;
  }

  Presentation coxeter_presentation(std::vector<unsigned> const& schlafli,
                                    std::vector<std::string>     names) {
    auto n = schlafli.size() + 1;
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
    for (std::size_t i = 0; i < schlafli.size(); ++i) {
      if (schlafli[i] < 2) {
        throw Error("Schlafli label must be at least 2, found "
                    + std::to_string(schlafli[i]));
      }
      m[i][i + 1] = m[i + 1][i] = schlafli[i];
    }
    return coxeter_matrix_presentation(m, std::move(names));
  }

  EndWords end_words(Side side, std::size_t rank) {
    if (rank < 5) {
      throw Error("end words need an alphabet of rank at least 5");
    }
    auto at = [&](gen_index i) {
      return side == Side::left ? i : static_cast<gen_index>(rank - 1 - i);
    };
    auto flags = all_involutive(rank);
    Word a = Word::of({at(0)});
    Word b = Word::of({at(1)}), c = Word::of({at(2)}), d = Word::of({at(3)}),
         e = Word::of({at(4)});
    return EndWords{a, conjugate(d, c * b, flags), conjugate(c, d * e, flags)};
  }

  Word toroidal_relator(ToroidalType const& t, Side side, std::size_t rank) {
    auto [a, sigma, tau] = end_words(side, rank);
    auto flags = all_involutive(rank);
    if (t.shape == Shape::single) {
      return free_reduce(a * sigma * tau * sigma, flags).pow(t.s);
    }
    return free_reduce(a * sigma * tau, flags).pow(2 * t.s);
  }

  Presentation toroidal_presentation(ToroidalType const& t, Side side) {
    if (side == Side::left) {
      auto p = coxeter_presentation({3, 3, 4, 3}, {"a", "b", "c", "d", "e"});
      p.add_relator(toroidal_relator(t, Side::left, 5));
      return p;
    }
    auto p = coxeter_presentation({3, 4, 3, 3}, {"b", "c", "d", "e", "f"});
    p.add_relator(toroidal_relator(t, Side::right, 5));
    return p;
  }

  Presentation
  locally_toroidal_presentation(std::optional<ToroidalType> const& s,
                                std::optional<ToroidalType> const& t) {
    auto p = coxeter_presentation({3, 3, 4, 3, 3});
    if (s) {
      p.add_relator(toroidal_relator(*s, Side::left));
    }
    if (t) {
      p.add_relator(toroidal_relator(*t, Side::right));
    }
    p.add_subgroup("FACET", {Word::of({0}), Word::of({1}), Word::of({2}),
                             Word::of({3}), Word::of({4})});
    p.add_subgroup("VERTEX", {Word::of({1}), Word::of({2}), Word::of({3}),
                              Word::of({4}), Word::of({5})});
    return p;
  }

  Presentation y_presentation(unsigned                 alpha,
                              unsigned                 beta,
                              unsigned                 gamma,
                              std::vector<Word> const& extra) {
    std::vector<unsigned> arms{alpha, beta, gamma};
    std::size_t n = 1 + alpha + beta + gamma;
    std::vector<std::string> names{"a"};
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
    std::size_t next = 1;
    for (std::size_t arm = 0; arm < 3; ++arm) {
      std::size_t prev = 0;
      for (unsigned k = 0; k < arms[arm]; ++k) {
        names.push_back(std::string(1, static_cast<char>('b' + k))
                        + std::to_string(arm + 1));
        m[prev][next] = m[next][prev] = 3;
        prev = next++;
      }
    }
    auto p = coxeter_matrix_presentation(m, std::move(names));
    for (auto const& w : extra) {
      p.add_relator(w);
    }
    return p;
  }

  namespace {
    // Indices in the Y_332 alphabet: a b1 c1 d1 b2 c2 d2 b3 c3.
    constexpr gen_index y_a = 0, y_b1 = 1, y_c1 = 2, y_d1 = 3, y_b2 = 4,
                        y_c2 = 5, y_d2 = 6, y_b3 = 7, y_c3 = 8;
  }  // namespace

  std::vector<Word> fi22_relators() {
    Word s = Word::of({y_a, y_b1, y_c1, y_a, y_b2, y_c2, y_a, y_b3, y_c3}).pow(10);
    Word f12 = Word::of({y_a, y_b1, y_b2, y_b3, y_c1, y_c2, y_d1}).pow(9);
    Word f21 = Word::of({y_a, y_b2, y_b1, y_b3, y_c2, y_c1, y_d2}).pow(9);
    return {s, f12, f21};
  }

  GeneratorMap y332_arm_swap() {
    std::vector<gen_index> image{y_a, y_b2, y_c2, y_d2, y_b1, y_c1, y_d1, y_b3, y_c3};
    GeneratorMap m;
    for (auto g : image) {
      m.images.push_back(Word::generator(g));
    }
    m.target_involutive = all_involutive(image.size());
    return m;
  }

  std::vector<Word> twist_generators() {
    return {Word::of({y_d1, y_d2}), Word::of({y_c1, y_c2}),
            Word::of({y_b1, y_b2}), Word::of({y_a}),
            Word::of({y_b3}),       Word::of({y_c3})};
  }

  GeneratorMap s4_cover_map() {
    GeneratorMap m;
    m.images = {Word::of({0}), Word::of({1}), Word::of({2}), Word(), Word(), Word()};
    m.target_involutive = all_involutive(3);
    return m;
  }

  Presentation parabolic_presentation(Presentation const&           p,
                                      std::vector<gen_index> const& selection) {
    std::vector<std::int64_t> position(p.ngens(), -1);
    Presentation q;
    for (std::size_t i = 0; i < selection.size(); ++i) {
      auto g = selection[i];
      if (g >= p.ngens() || position[g] != -1) {
        throw Error("invalid generator selection");
      }
      position[g] = static_cast<std::int64_t>(i);
      // add_generator pushes g*g for involutive generators itself.
      q.add_generator(p.gen_names()[g], p.is_involutive(g));
    }
    auto remap = [&](Word const& w) -> std::optional<Word> {
      Word out;
      for (auto const& l : w) {
        if (position[l.gen] < 0) {
          return std::nullopt;
        }
        out.push_back(Letter{static_cast<gen_index>(position[l.gen]), l.inverse});
      }
      return out;
    };
    for (auto const& r : p.extra_relators()) {
      if (auto w = remap(r)) {
        q.add_relator(*w);
      }
    }
    for (auto const& [name, gens] : p.subgroups()) {
      std::vector<Word> mapped;
      bool ok = true;
      for (auto const& w : gens) {
        auto m = remap(w);
        if (!m) {
          ok = false;
          break;
        }
        mapped.push_back(*m);
      }
      if (ok) {
        q.add_subgroup(name, std::move(mapped));
      }
    }
    return q;
  }

}  // namespace tcx
