#ifndef TCX_PERM_GROUP_HPP_
#define TCX_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcx/word.hpp"

namespace tcx {

  using BigInt = boost::multiprecision::cpp_int;
  using point = std::uint32_t;

  // A bijection of {0, ..., n-1}. Products compose left to right:
  // x^(p*q) = (x^p)^q, so a word's image is the product of its letters'
  // images in word order.
  class Perm {
   public:
    Perm() = default;
    // Identity on n points.
    explicit Perm(std::size_t n);
    // Throws Error unless images is a bijection.
    explicit Perm(std::vector<point> images);

    // Cycles use 0-based points.
    static Perm from_cycles(std::size_t                            n,
                            std::vector<std::vector<point>> const& cycles);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    point operator[](point x) const {
      return _images[x];
    }
    std::span<point const> images() const noexcept {
      return _images;
    }

    Perm operator*(Perm const& q) const;
    Perm inverse() const;
    bool is_identity() const noexcept;

    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    std::vector<point> _images;
  };

  // Least common multiple of the cycle lengths.
  BigInt element_order(Perm const& p);

  // Stabilizer chain: base points b_0, b_1, ... and for each level the
  // generators fixing the earlier base points, the basic orbit, and
  // transversal elements u with b_i^u = beta.
  struct StabChain {
    struct Level {
      point              base = 0;
      std::vector<Perm>  gens;
      std::vector<point> orbit;
      // Index into orbit, or -1, for every point.
      std::vector<std::int32_t> where;
      std::vector<Perm>         transversal;
      std::vector<Perm>         transversal_inv;
    };
    std::size_t        degree = 0;
    std::vector<Level> levels;

    BigInt order() const;
    // Residue of g after sifting and the level where sifting stopped
    // (levels.size() when the residue fixes every base point).
    std::pair<Perm, std::size_t> strip(Perm const& g, std::size_t from = 0) const;
    bool contains(Perm const& g) const;
    // Calls f on every group element, stopping early when f returns false.
    void for_each_element(std::function<bool(Perm const&)> const& f) const;
  };

  // Generators act on points 0..degree-1; generator order is significant
  // (parabolic subgroups select by index).
  class PermGroup {
   public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Perm> generators);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<Perm> const& generators() const noexcept {
      return _generators;
    }
    std::size_t ngens() const noexcept {
      return _generators.size();
    }
    bool has_chain() const noexcept {
      return _chain != nullptr;
    }
    // Throws Error when no chain has been built.
    StabChain const& chain() const;

   private:
    friend PermGroup build_chain(PermGroup const&);

    std::size_t                      _degree = 0;
    std::vector<Perm>                _generators;
    std::shared_ptr<StabChain const> _chain;
  };

  // Deterministic Schreier-Sims. Base points are the smallest points moved
  // by the residue that forces a new level.
  PermGroup build_chain(PermGroup const& g);

  // order() and contains() use the group's chain, building a temporary one
  // when the group has none. contains() throws DimensionMismatch for a
  // permutation of another degree.
  BigInt order(PermGroup const& g);
  bool   contains(PermGroup const& g, Perm const& p);

  Perm word_image(PermGroup const& g, Word const& w);

  // Subgroup generated by the selected generators, in selection order.
  PermGroup parabolic(PermGroup const& g, std::vector<gen_index> const& selection);

  // |a intersect b|, listing the smaller group and sifting each element
  // through the larger group's chain. Throws BudgetExceeded when the smaller
  // order exceeds budget.
  BigInt intersection_order(PermGroup const& a,
                            PermGroup const& b,
                            std::size_t      budget = 1'000'000);

  // Closure of points under gens in breadth-first order; within each layer
  // new points appear in increasing order.
  std::vector<point> orbit(std::span<point const> points, std::span<Perm const> gens);

}  // namespace tcx

#endif  // TCX_PERM_GROUP_HPP_
