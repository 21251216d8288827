#include "tcx/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "tcx/error.hpp"

namespace tcx {

  Perm::Perm(std::size_t n) : _images(n) {
    std::iota(_images.begin(), _images.end(), point(0));
  }

  Perm::Perm(std::vector<point> images) : _images(std::move(images)) {
    std::vector<std::uint8_t> hit(_images.size(), 0);
    for (auto x : _images) {
      if (x >= _images.size() || hit[x]) {
        throw Error("images do not form a permutation");
      }
      hit[x] = 1;
    }
  }

  Perm Perm::from_cycles(std::size_t n, std::vector<std::vector<point>> const& cycles) {
    std::vector<point> images(n);
    std::iota(images.begin(), images.end(), point(0));
    std::vector<std::uint8_t> used(n, 0);
    for (auto const& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        auto x = cycle[k];
        if (x >= n) {
          throw Error("cycle point " + std::to_string(x) + " out of range");
        }
        if (used[x]) {
          throw Error("point " + std::to_string(x) + " repeated in cycles");
        }
        used[x] = 1;
        images[x] = cycle[(k + 1) % cycle.size()];
      }
    }
    return Perm(std::move(images));
  }

  Perm Perm::operator*(Perm const& q) const {
    if (q.degree() != degree()) {
      throw DimensionMismatch("permutations of different degrees");
    }
    std::vector<point> out(degree());
    for (std::size_t x = 0; x < degree(); ++x) {
      out[x] = q._images[_images[x]];
    }
    Perm r;
    r._images = std::move(out);
    return r;
  }

  Perm Perm::inverse() const {
    std::vector<point> out(degree());
    for (std::size_t x = 0; x < degree(); ++x) {
      out[_images[x]] = static_cast<point>(x);
    }
    Perm r;
    r._images = std::move(out);
    return r;
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != x) {
        return false;
      }
    }
    return true;
  }

  BigInt element_order(Perm const& p) {
    std::vector<std::uint8_t> seen(p.degree(), 0);
    BigInt                    result = 1;
    for (point x = 0; x < p.degree(); ++x) {
      if (seen[x]) {
        continue;
      }
      BigInt len = 0;
      for (point y = x; !seen[y]; y = p[y]) {
        seen[y] = 1;
        ++len;
      }
      result = boost::multiprecision::lcm(result, len);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // StabChain
  ////////////////////////////////////////////////////////////////////////

  BigInt StabChain::order() const {
    BigInt n = 1;
    for (auto const& level : levels) {
      n *= level.orbit.size();
    }
    return n;
  }

  std::pair<Perm, std::size_t> StabChain::strip(Perm const& g, std::size_t from) const {
    Perm h = g;
    for (std::size_t l = from; l < levels.size(); ++l) {
      auto const& level = levels[l];
      auto        idx = level.where[h[level.base]];
      if (idx < 0) {
        return {h, l};
      }
      h = h * level.transversal_inv[idx];
    }
    return {h, levels.size()};
  }

  bool StabChain::contains(Perm const& g) const {
    if (g.degree() != degree) {
      return false;
    }
    auto [h, l] = strip(g);
    return l == levels.size() && h.is_identity();
  }

  namespace {
    bool for_each_rec(StabChain const&                         chain,
                      std::size_t                              l,
                      Perm const&                              suffix,
                      std::function<bool(Perm const&)> const& f) {
      if (l == chain.levels.size()) {
        return f(suffix);
      }
      // Elements are h * u with h in the next stabilizer, u a transversal
      // element at this level.
      for (auto const& u : chain.levels[l].transversal) {
        if (!for_each_rec(chain, l + 1, u * suffix, f)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  void StabChain::for_each_element(std::function<bool(Perm const&)> const& f) const {
    for_each_rec(*this, 0, Perm(degree), f);
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
      : _degree(degree), _generators(std::move(generators)) {
    for (auto const& g : _generators) {
      if (g.degree() != degree) {
        throw DimensionMismatch("generator degree " + std::to_string(g.degree())
                                + " differs from group degree "
                                + std::to_string(degree));
      }
    }
  }

  StabChain const& PermGroup::chain() const {
    if (!_chain) {
      throw Error("permutation group has no stabilizer chain");
    }
    return *_chain;
  }

  namespace {

    using Level = StabChain::Level;

    Level new_level(std::size_t degree, point base) {
      Level level;
      level.base = base;
      level.where.assign(degree, -1);
      level.orbit.push_back(base);
      level.where[base] = 0;
      level.transversal.emplace_back(degree);
      level.transversal_inv.emplace_back(degree);
      return level;
    }

    // Closes the orbit under the level's generators, starting the scan of
    // old points at generator first_new_gen.
    void extend_orbit(Level& level, std::size_t first_new_gen) {
      std::size_t old_size = level.orbit.size();
      for (std::size_t k = 0; k < level.orbit.size(); ++k) {
        std::size_t start = k < old_size ? first_new_gen : 0;
        for (std::size_t s = start; s < level.gens.size(); ++s) {
          auto beta = level.orbit[k];
          auto gamma = level.gens[s][beta];
          if (level.where[gamma] >= 0) {
            continue;
          }
          level.where[gamma] = static_cast<std::int32_t>(level.orbit.size());
          level.orbit.push_back(gamma);
          Perm u = level.transversal[k] * level.gens[s];
          level.transversal_inv.push_back(u.inverse());
          level.transversal.push_back(std::move(u));
        }
      }
    }

    point first_moved(Perm const& g) {
      for (point x = 0; x < g.degree(); ++x) {
        if (g[x] != x) {
          return x;
        }
      }
      return 0;
    }

    // Adds y as a strong generator at levels from..to inclusive, creating
    // a new level when to == levels.size().
    void add_strong(StabChain& chain, Perm const& y, std::size_t from, std::size_t to) {
      if (to == chain.levels.size()) {
        chain.levels.push_back(new_level(chain.degree, first_moved(y)));
      }
      for (std::size_t l = from; l <= to; ++l) {
        chain.levels[l].gens.push_back(y);
        extend_orbit(chain.levels[l], chain.levels[l].gens.size() - 1);
      }
    }

  }  // namespace

  PermGroup build_chain(PermGroup const& g) {
    auto chain = std::make_shared<StabChain>();
    chain->degree = g.degree();
    for (auto const& x : g.generators()) {
      if (x.is_identity()) {
        continue;
      }
      if (chain->contains(x)) {
        continue;
      }
      // x belongs to every level whose earlier base points it fixes.
      std::size_t k = 0;
      while (k < chain->levels.size() && x[chain->levels[k].base] == chain->levels[k].base) {
        ++k;
      }
      add_strong(*chain, x, 0, k);
    }
    // Schreier generators are checked level by level from the bottom. Per
    // level we remember how many (orbit point, generator) pairs are known
    // to sift; pairs are visited generator-major so growth of either list
    // only adds pairs at the end of the visiting order for each generator.
    std::vector<std::vector<std::size_t>> done(chain->levels.size());
    std::size_t                           i = chain->levels.size();
    while (i > 0) {
      std::size_t l = i - 1;
      if (done.size() < chain->levels.size()) {
        done.resize(chain->levels.size());
      }
      auto& level = chain->levels[l];
      bool  restarted = false;
      for (std::size_t s = 0; s < level.gens.size() && !restarted; ++s) {
        if (done[l].size() <= s) {
          done[l].resize(s + 1, 0);
        }
        for (std::size_t k = done[l][s]; k < level.orbit.size(); ++k) {
          auto const& x = level.gens[s];
          auto        beta = level.orbit[k];
          auto        gamma = x[beta];
          Perm h = level.transversal[k] * x * level.transversal_inv[level.where[gamma]];
          done[l][s] = k + 1;
          if (h.is_identity()) {
            continue;
          }
          auto [y, j] = chain->strip(h, l + 1);
          if (j == chain->levels.size() && y.is_identity()) {
            continue;
          }
          add_strong(*chain, y, l + 1, j);
          i = j + 1;
          restarted = true;
          break;
        }
      }
      if (!restarted) {
        --i;
      }
    }
    PermGroup out = g;
    out._chain = std::move(chain);
    return out;
  }

  BigInt order(PermGroup const& g) {
    if (g.has_chain()) {
      return g.chain().order();
    }
    return build_chain(g).chain().order();
  }

  bool contains(PermGroup const& g, Perm const& p) {
    if (p.degree() != g.degree()) {
      throw DimensionMismatch("permutation degree differs from the group's");
    }
    if (g.has_chain()) {
      return g.chain().contains(p);
    }
    return build_chain(g).chain().contains(p);
  }

  Perm word_image(PermGroup const& g, Word const& w) {
    Perm result(g.degree());
    for (auto const& l : w) {
      if (l.gen >= g.ngens()) {
        throw InvalidWord("letter outside the group's generators");
      }
      auto const& x = g.generators()[l.gen];
      result = result * (l.inverse ? x.inverse() : x);
    }
    return result;
  }

  PermGroup parabolic(PermGroup const& g, std::vector<gen_index> const& selection) {
    std::vector<Perm> gens;
    for (auto i : selection) {
      if (i >= g.ngens()) {
        throw Error("generator index " + std::to_string(i) + " out of range");
      }
      gens.push_back(g.generators()[i]);
    }
    return PermGroup(g.degree(), std::move(gens));
  }

  BigInt intersection_order(PermGroup const& a, PermGroup const& b, std::size_t budget) {
    if (a.degree() != b.degree()) {
      throw DimensionMismatch("groups act on different numbers of points");
    }
    PermGroup ca = a.has_chain() ? a : build_chain(a);
    PermGroup cb = b.has_chain() ? b : build_chain(b);
    auto      oa = ca.chain().order();
    auto      ob = cb.chain().order();
    auto const& small = oa <= ob ? ca.chain() : cb.chain();
    auto const& large = oa <= ob ? cb.chain() : ca.chain();
    if (std::min(oa, ob) > budget) {
      throw BudgetExceeded("intersection needs " + std::min(oa, ob).str()
                           + " elements, budget is " + std::to_string(budget));
    }
    BigInt count = 0;
    small.for_each_element([&](Perm const& x) {
      if (large.contains(x)) {
        ++count;
      }
      return true;
    });
    return count;
  }

  std::vector<point> orbit(std::span<point const> points, std::span<Perm const> gens) {
    std::size_t degree = gens.empty() ? 0 : gens[0].degree();
    for (auto x : points) {
      degree = std::max<std::size_t>(degree, x + 1);
    }
    for (auto const& g : gens) {
      if (g.degree() != gens[0].degree()) {
        throw DimensionMismatch("generators of different degrees");
      }
    }
    std::vector<std::uint8_t> seen(degree, 0);
    std::vector<point>        layer, out;
    for (auto x : points) {
      if (!gens.empty() && x >= gens[0].degree()) {
        throw Error("point " + std::to_string(x) + " out of range");
      }
      if (!seen[x]) {
        seen[x] = 1;
        layer.push_back(x);
      }
    }
    std::sort(layer.begin(), layer.end());
    while (!layer.empty()) {
      out.insert(out.end(), layer.begin(), layer.end());
      std::vector<point> next;
      for (auto x : layer) {
        for (auto const& g : gens) {
          auto y = g[x];
          if (!seen[y]) {
            seen[y] = 1;
            next.push_back(y);
          }
        }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

}  // namespace tcx
