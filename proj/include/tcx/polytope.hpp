#ifndef TCX_POLYTOPE_HPP_
#define TCX_POLYTOPE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcx/enumerator.hpp"
#include "tcx/perm_group.hpp"
#include "tcx/presentation.hpp"

namespace tcx {

  // A pair of generator subsets violating G_I & G_J = G_{I & J}.
  struct IpWitness {
    std::vector<gen_index> I;
    std::vector<gen_index> J;
    BigInt                 intersection;  // |G_I & G_J|
    BigInt                 expected;      // |G_{I & J}|
  };

  struct StringCResult {
    bool                     ok = true;
    std::optional<IpWitness> witness;
    std::size_t              pairs = 0;  // subset pairs examined
  };

  // Checks the intersection property over every pair of generator subsets.
  // Throws BudgetExceeded when an intersection needs more than budget
  // elements listed.
  StringCResult verify_string_c_group(PermGroup const& g,
                                      std::size_t      budget = 1'000'000);

  // (k1, k2) = orders of a sigma tau and a sigma tau sigma:
  // k1 = 2 k2 gives (k2, single), k1 = k2 gives (k1 / 2, double).
  // Throws UnrecognizedType otherwise.
  ToroidalType classify_toroidal_orders(BigInt const& k1, BigInt const& k2);

  // g has the five generators of a [3,3,4,3] (Side::left) or [3,4,3,3]
  // (Side::right) quotient, in diagram order.
  ToroidalType identify_toroidal_type(PermGroup const& g, Side side);
  // Same, read off a closed table over the trivial subgroup.
  ToroidalType identify_toroidal_type(CosetTable const& regular, Side side);

  // Generator i acts as a_i on points 0..deg(a)-1 and as b_i on the next
  // deg(b) points.
  PermGroup mix_groups(PermGroup const& a, PermGroup const& b);

  // Parameter of the mix of [3,3,4,3]_s and [3,3,4,3]_t.
  ToroidalType mix_toroidal(ToroidalType const& s, ToroidalType const& t);

  // Action on the cosets of the parabolic subgroups of p, tried in order of
  // increasing index, until one has a stabilizer chain of the given order.
  // Returns the group (with chain) and the selected generators, or nothing
  // when no proper parabolic within limits gives a faithful action.
  struct FaithfulAction {
    PermGroup              group;
    std::vector<gen_index> parabolic;
  };
  std::optional<FaithfulAction> faithful_parabolic_action(Presentation const&      p,
                                                          BigInt const&            order,
                                                          EnumerationLimits const& limits = {});

  struct PolytopeOptions {
    EnumerationLimits limits;
    // Cap for enumerating the abstract facet and vertex-figure groups,
    // either of which may be infinite.
    std::size_t parabolic_limit = std::size_t(1) << 22;
    // The coset action on the smaller of the two sides is built and checked
    // when its degree is at most this.
    std::size_t perm_degree_limit = 4096;
    // Without a faithful small action, groups up to this order are
    // enumerated over the trivial subgroup to certify the order.
    std::size_t regular_limit = std::size_t(1) << 20;
    bool        verify_ip = true;
    std::size_t ip_budget = 1'000'000;
  };

  struct PolytopeReport {
    std::size_t   rank = 0;
    std::uint64_t v = 0;
    std::uint64_t f = 0;
    // Orders of the abstract facet and vertex-figure groups, when finite
    // within the parabolic limit.
    std::optional<BigInt> facet_order;
    std::optional<BigInt> vertex_order;
    BigInt                group_order;
    // v * |vertex| == f * |facet|; unset unless both sides are finite.
    std::optional<bool> product_law;
    // A faithful coset action or the regular enumeration confirms
    // group_order.
    bool order_certified = false;
    std::optional<ToroidalType> facet_type;
    std::optional<ToroidalType> vertex_type;
    bool                        ip_verified = false;
    std::optional<IpWitness>    ip_witness;
    std::vector<std::string>    notes;
    EnumerationStats            vertex_stats;
    EnumerationStats            facet_stats;
  };

  // Vertex and facet counts from enumerations over the VERTEX and FACET
  // subgroups (last and first r-1 generators when p defines none), group
  // order from the product law, and, when a small faithful coset action
  // exists, an order certificate, toroidal types and the intersection
  // property.
  PolytopeReport polytope_stats(Presentation const& p, PolytopeOptions const& opts = {});

  // Rows of the table of known universal {{3,3,4,3}_s,{3,4,3,3}_t}
  // polytopes, with the printed v, f and group as text.
  struct KnownPolytope {
    ToroidalType s;
    ToroidalType t;
    std::string  printed_v;
    std::string  printed_f;
    std::string  printed_group;
    // Printed order when the group entry determines one.
    std::optional<BigInt> printed_order;
    std::uint64_t         printed_v_value;
    std::uint64_t         printed_f_value;
  };
  std::vector<KnownPolytope> const& known_polytopes();

  // Differences between a computed report and a printed row.
  std::vector<std::string> compare_with_printed(PolytopeReport const& r,
                                                KnownPolytope const&  row);

}  // namespace tcx

#endif  // TCX_POLYTOPE_HPP_
