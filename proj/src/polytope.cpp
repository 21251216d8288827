#include "tcx/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "tcx/error.hpp"

namespace tcx {

  namespace {
    std::vector<gen_index> members(std::uint32_t mask, std::size_t r) {
      std::vector<gen_index> out;
      for (gen_index i = 0; i < r; ++i) {
        if (mask >> i & 1u) {
          out.push_back(i);
        }
      }
      return out;
    }

    std::vector<gen_index> range(gen_index lo, gen_index hi) {
      std::vector<gen_index> out(hi - lo);
      std::iota(out.begin(), out.end(), lo);
      return out;
    }

    std::vector<Word> generator_words(std::vector<gen_index> const& gens) {
      std::vector<Word> out;
      for (auto g : gens) {
        out.push_back(Word::generator(g));
      }
      return out;
    }
  }  // namespace

  StringCResult verify_string_c_group(PermGroup const& g, std::size_t budget) {
    auto r = g.ngens();
    if (r > 16) {
      throw Error("verify_string_c_group supports at most 16 generators");
    }
    std::uint32_t          nsets = 1u << r;
    std::vector<PermGroup> par;
    std::vector<BigInt>    ord;
    for (std::uint32_t m = 0; m < nsets; ++m) {
      par.push_back(build_chain(parabolic(g, members(m, r))));
      ord.push_back(par.back().chain().order());
    }
    StringCResult result;
    for (std::uint32_t I = 0; I < nsets; ++I) {
      for (std::uint32_t J = I + 1; J < nsets; ++J) {
        ++result.pairs;
        auto K = I & J;
        // Nested pairs, and pairs where one side already equals G_K, hold
        // because G_K lies in both.
        if (K == I || K == J || ord[I] == ord[K] || ord[J] == ord[K]) {
          continue;
        }
        auto n = intersection_order(par[I], par[J], budget);
        if (n != ord[K]) {
          result.ok = false;
          result.witness = IpWitness{members(I, r), members(J, r), n, ord[K]};
          return result;
        }
      }
    }
    return result;
  }

  ToroidalType classify_toroidal_orders(BigInt const& k1, BigInt const& k2) {
    if (k2 >= 2 && k1 == 2 * k2) {
      return ToroidalType(static_cast<unsigned>(k2), Shape::single);
    }
    if (k1 == k2 && k1 >= 4 && k1 % 2 == 0) {
      return ToroidalType(static_cast<unsigned>(k1 / 2), Shape::double_);
    }
    throw UnrecognizedType("element orders (" + k1.str() + "," + k2.str()
                           + ") fit neither (2s,s) nor (2s,2s)");
  }

  namespace {
    std::pair<Word, Word> type_words(Side side) {
      auto ew = end_words(side, 5);
      Word w1 = ew.a * ew.sigma * ew.tau;
      return {w1, w1 * ew.sigma};
    }
  }  // namespace

  ToroidalType identify_toroidal_type(PermGroup const& g, Side side) {
    if (g.ngens() != 5) {
      throw Error("identify_toroidal_type needs a group on five generators");
    }
    auto [w1, w2] = type_words(side);
    return classify_toroidal_orders(element_order(word_image(g, w1)),
                                    element_order(word_image(g, w2)));
  }

  ToroidalType identify_toroidal_type(CosetTable const& regular, Side side) {
    if (regular.ngens() != 5) {
      throw Error("identify_toroidal_type needs a table on five generators");
    }
    auto [w1, w2] = type_words(side);
    return classify_toroidal_orders(regular_word_order(regular, w1),
                                    regular_word_order(regular, w2));
  }

  PermGroup mix_groups(PermGroup const& a, PermGroup const& b) {
    if (a.ngens() != b.ngens()) {
      throw Error("mix needs the same number of generators on both sides ("
                  + std::to_string(a.ngens()) + " vs " + std::to_string(b.ngens())
                  + ")");
    }
    auto              n = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < a.ngens(); ++i) {
      std::vector<point> images(n);
      for (point x = 0; x < a.degree(); ++x) {
        images[x] = a.generators()[i][x];
      }
      for (point x = 0; x < b.degree(); ++x) {
        images[a.degree() + x] = static_cast<point>(a.degree() + b.generators()[i][x]);
      }
      gens.emplace_back(std::move(images));
    }
    return PermGroup(n, std::move(gens));
  }

  ToroidalType mix_toroidal(ToroidalType const& s, ToroidalType const& t) {
    unsigned l = std::lcm(s.s, t.s);
    bool     sd = s.shape == Shape::double_;
    bool     td = t.shape == Shape::double_;
    bool     dbl = (sd && td) || (sd && !td && 2 * l == std::lcm(2 * s.s, t.s))
               || (td && !sd && 2 * l == std::lcm(2 * t.s, s.s));
    return ToroidalType(l, dbl ? Shape::double_ : Shape::single);
  }

  std::optional<FaithfulAction> faithful_parabolic_action(Presentation const&      p,
                                                          BigInt const&            order,
                                                          EnumerationLimits const& limits) {
    auto r = p.ngens();
    if (r > 16) {
      throw Error("too many generators for a parabolic search");
    }
    struct Candidate {
      std::size_t   index;
      std::uint32_t mask;
      CosetTable    table;
    };
    std::vector<Candidate> candidates;
    for (std::uint32_t m = 0; m + 1 < (1u << r); ++m) {
      try {
        auto t = enumerate(p, generator_words(members(m, r)), limits);
        candidates.push_back({t.nrows(), m, std::move(t)});
      } catch (CosetLimitExceeded const&) {
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](auto const& x, auto const& y) { return x.index < y.index; });
    for (auto const& c : candidates) {
      auto g = build_chain(permutation_rep(c.table));
      if (g.chain().order() == order) {
        return FaithfulAction{std::move(g), members(c.mask, r)};
      }
    }
    return std::nullopt;
  }

  PolytopeReport polytope_stats(Presentation const& p, PolytopeOptions const& opts) {
    PolytopeReport rep;
    auto           r = p.ngens();
    if (r < 2) {
      throw Error("polytope_stats needs rank at least 2");
    }
    rep.rank = r;
    auto facet_gens = range(0, static_cast<gen_index>(r - 1));
    auto vertex_gens = range(1, static_cast<gen_index>(r));
    auto facet_sub = p.has_subgroup("FACET") ? p.subgroup("FACET") : generator_words(facet_gens);
    auto vertex_sub
        = p.has_subgroup("VERTEX") ? p.subgroup("VERTEX") : generator_words(vertex_gens);

    auto vt = enumerate(p, vertex_sub, opts.limits);
    auto ft = enumerate(p, facet_sub, opts.limits);
    rep.v = vt.nrows();
    rep.f = ft.nrows();
    rep.vertex_stats = vt.stats();
    rep.facet_stats = ft.stats();

    EnumerationLimits plim = opts.limits;
    plim.max_cosets = opts.parabolic_limit;
    plim.progress = nullptr;
    auto regular = [&](std::vector<gen_index> const& sel,
                       char const* what) -> std::optional<CosetTable> {
      try {
        return enumerate(parabolic_presentation(p, sel), std::vector<Word>{}, plim);
      } catch (CosetLimitExceeded const&) {
        rep.notes.push_back(std::string("abstract ") + what + " group exceeds "
                            + std::to_string(opts.parabolic_limit)
                            + " elements (possibly infinite)");
        return std::nullopt;
      }
    };
    auto facet_table = regular(facet_gens, "facet");
    auto vertex_table = regular(vertex_gens, "vertex-figure");
    if (facet_table) {
      rep.facet_order = BigInt(facet_table->nrows());
    }
    if (vertex_table) {
      rep.vertex_order = BigInt(vertex_table->nrows());
    }
    if (!facet_table && !vertex_table) {
      throw Error("neither the facet nor the vertex-figure group is finite within limits");
    }
    rep.group_order = vertex_table ? BigInt(rep.v) * *rep.vertex_order
                                   : BigInt(rep.f) * *rep.facet_order;
    if (facet_table && vertex_table) {
      rep.product_law = BigInt(rep.v) * *rep.vertex_order == BigInt(rep.f) * *rep.facet_order;
      if (!*rep.product_law) {
        rep.notes.push_back("v*|vertex| = " + (BigInt(rep.v) * *rep.vertex_order).str()
                            + " differs from f*|facet| = "
                            + (BigInt(rep.f) * *rep.facet_order).str());
      }
    }

    bool toroidal_rank = r == 6;
    auto identify = [&](auto const& source, Side side, std::optional<ToroidalType>& out,
                        char const* what) {
      try {
        out = identify_toroidal_type(source, side);
      } catch (UnrecognizedType const& e) {
        rep.notes.push_back(std::string(what) + " type unrecognized: " + e.what());
      }
    };
    if (toroidal_rank && facet_table) {
      identify(*facet_table, Side::left, rep.facet_type, "facet");
    }
    if (toroidal_rank && vertex_table) {
      identify(*vertex_table, Side::right, rep.vertex_type, "vertex-figure");
    }

    // Faithful coset action: facet and vertex sides first, then the other
    // parabolic subgroups by increasing index.
    std::optional<PermGroup> g;
    BigInt                   best = 0;
    auto                     try_table = [&](CosetTable const& t) {
      if (g || t.nrows() > opts.perm_degree_limit) {
        return;
      }
      auto h = build_chain(permutation_rep(t));
      auto o = h.chain().order();
      best = std::max(best, o);
      if (o == rep.group_order) {
        g = std::move(h);
      }
    };
    if (rep.f <= rep.v) {
      try_table(ft);
      try_table(vt);
    } else {
      try_table(vt);
      try_table(ft);
    }
    if (!g) {
      EnumerationLimits small = opts.limits;
      small.max_cosets = opts.perm_degree_limit;
      small.progress = nullptr;
      std::vector<CosetTable> others;
      auto full = (1u << r) - 1;
      auto facet_mask = full >> 1, vertex_mask = full - 1;
      for (std::uint32_t m = 1; m < full; ++m) {
        if (m == facet_mask || m == vertex_mask) {
          continue;
        }
        try {
          others.push_back(enumerate(p, generator_words(members(m, r)), small));
        } catch (CosetLimitExceeded const&) {
        }
      }
      std::stable_sort(others.begin(), others.end(),
                       [](auto const& x, auto const& y) { return x.nrows() < y.nrows(); });
      for (auto const& t : others) {
        try_table(t);
      }
    }
    if (g) {
      rep.order_certified = true;
    } else {
      if (best > 0) {
        rep.notes.push_back("largest parabolic coset action has order " + best.str());
      }
      if (rep.group_order <= opts.regular_limit) {
        EnumerationLimits reg = opts.limits;
        reg.max_cosets = std::max<std::size_t>(opts.limits.max_cosets,
                                               static_cast<std::size_t>(rep.group_order) + 1);
        reg.progress = nullptr;
        auto t = enumerate(p, std::vector<Word>{}, reg);
        rep.order_certified = BigInt(t.nrows()) == rep.group_order;
        if (!rep.order_certified) {
          rep.notes.push_back("regular enumeration gives order " + std::to_string(t.nrows()));
          rep.group_order = t.nrows();
        } else {
          rep.notes.push_back("order certified by enumeration over the trivial subgroup");
        }
      }
      rep.notes.push_back("no faithful coset action of degree at most "
                          + std::to_string(opts.perm_degree_limit)
                          + "; intersection property not checked");
      return rep;
    }
    if (toroidal_rank && !rep.facet_type && !facet_table) {
      identify(parabolic(*g, facet_gens), Side::left, rep.facet_type, "facet");
    }
    if (toroidal_rank && !rep.vertex_type && !vertex_table) {
      identify(parabolic(*g, vertex_gens), Side::right, rep.vertex_type, "vertex-figure");
    }
    if (opts.verify_ip) {
      try {
        auto res = verify_string_c_group(*g, opts.ip_budget);
        rep.ip_verified = res.ok;
        rep.ip_witness = res.witness;
        if (!res.ok) {
          rep.notes.push_back("intersection property fails");
        }
      } catch (BudgetExceeded const& e) {
        rep.notes.push_back(std::string("intersection property not checked: ") + e.what());
      }
    }
    return rep;
  }

  std::vector<KnownPolytope> const& known_polytopes() {
    static std::vector<KnownPolytope> const rows = [] {
      auto single = [](unsigned s) { return ToroidalType(s, Shape::single); };
      auto dbl = [](unsigned s) { return ToroidalType(s, Shape::double_); };
      BigInt o8 = BigInt(174182400);  // |O8+(2)|
      return std::vector<KnownPolytope>{
          {single(2), single(2), "2^5", "2^5", "[2^15 3^2]", BigInt(294912), 32, 32},
          {single(2), dbl(2), "2^5", "2^7", "[2^18 3^2]", BigInt(2359296), 32, 128},
          {dbl(2), dbl(2), "2^11", "2^11", "[2^24 3^2]", BigInt(150994944), 2048, 2048},
          {single(3), single(3), "2^2.3^2.5.13", "2^2.3^2.5.13", "(3^2 x L4(3)).2^2",
           BigInt(218350080), 2340, 2340},
          {dbl(2), single(3), "2^9.3.5^2.7", "2^3.3^5.5^2.7", "S3 x O8+(2):S3",
           BigInt(6) * o8 * 6, 268800, 340200},
      };
    }();
    return rows;
  }

  std::vector<std::string> compare_with_printed(PolytopeReport const& r,
                                                KnownPolytope const&  row) {
    std::vector<std::string> out;
    if (r.v != row.printed_v_value) {
      out.push_back("v: computed " + std::to_string(r.v) + ", printed " + row.printed_v);
    }
    if (r.f != row.printed_f_value) {
      out.push_back("f: computed " + std::to_string(r.f) + ", printed " + row.printed_f);
    }
    if (row.printed_order && *row.printed_order != r.group_order) {
      out.push_back("order: computed " + r.group_order.str() + ", printed "
                    + row.printed_group + " = " + row.printed_order->str());
    }
    return out;
  }

}  // namespace tcx
