#ifndef TCX_PRESENTATION_HPP_
#define TCX_PRESENTATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcx/word.hpp"

namespace tcx {

  // A finitely presented group together with named subgroup generator lists.
  //
  // Involutive generators carry their relator g*g explicitly in relators();
  // every other relator is stored freely reduced. Once built, a Presentation
  // is treated as an immutable value.
  class Presentation {
   public:
    Presentation() = default;

    gen_index add_generator(std::string name, bool involutive = true);
    // Reduces w and appends it unless it reduces to the empty word.
    void add_relator(Word const& w);
    void add_subgroup(std::string name, std::vector<Word> generators);

    std::size_t ngens() const noexcept {
      return _names.size();
    }
    InvolutionFlags involutive() const noexcept {
      return _involutive;
    }
    bool is_involutive(gen_index g) const {
      return _involutive.at(g) != 0;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::vector<std::string> const& gen_names() const noexcept {
      return _names;
    }
    std::map<std::string, std::vector<Word>> const& subgroups() const noexcept {
      return _subgroups;
    }

    bool has_subgroup(std::string const& name) const;
    // The names "1" and "trivial" resolve to the empty list unless defined.
    std::vector<Word> const& subgroup(std::string const& name) const;

    std::optional<gen_index> find_generator(std::string_view name) const;

    // Throws InvalidWord if w references a generator outside the alphabet.
    void validate(Word const& w) const;

    Word reduce(Word const& w) const {
      return free_reduce(w, involutive());
    }

    // Relators other than the involution relators g*g.
    std::vector<Word> extra_relators() const;

   private:
    std::vector<std::string>                 _names;
    std::vector<std::uint8_t>                _involutive;
    std::vector<Word>                        _relators;
    std::map<std::string, std::vector<Word>> _subgroups;
  };

  // Shape of the invariant sublattice of a toroidal {3,3,4,3} quotient:
  // single is (s,0,0,0), double is (s,s,0,0).
  enum class Shape { single, double_ };

  struct ToroidalType {
    unsigned s = 2;
    Shape    shape = Shape::single;

    ToroidalType() = default;
    ToroidalType(unsigned s_, Shape shape_);

    // "3:single", "2:double", "(3000)", "(2200)" or "(s,s,0,0)".
    static ToroidalType parse(std::string_view text);

    friend bool operator==(ToroidalType const&, ToroidalType const&) = default;
  };

  // "(3000)"-style label; falls back to "(s,0,0,0)" when s > 9.
  std::string to_string(ToroidalType const& t);
  // "3:single" style label.
  std::string to_spec(ToroidalType const& t);

  // left selects the facet end (generator a with sigma, tau built from
  // b, c, d, e); right selects the vertex-figure end, obtained through the
  // alphabet mirror i <-> rank-1-i.
  enum class Side { left, right };

  // Sends each generator to a word over a target alphabet.
  struct GeneratorMap {
    std::vector<Word>         images;
    std::vector<std::uint8_t> target_involutive;

    static GeneratorMap identity(Presentation const& p);
  };

  // Substitutes images letterwise and reduces in the target alphabet.
  Word apply_map(Word const& w, GeneratorMap const& m);

  // Coxeter presentation of a string diagram; generator i is the i-th node.
  Presentation coxeter_presentation(std::vector<unsigned> const& schlafli,
                                    std::vector<std::string> names = {});

  // Coxeter presentation from a symmetric matrix of edge labels (diagonal
  // ignored).
  Presentation
  coxeter_matrix_presentation(std::vector<std::vector<unsigned>> const& m,
                              std::vector<std::string> names = {});

  // The words a, sigma = d^(c b), tau = c^(d e) for one end of a string
  // alphabet of the given rank (rank >= 5), mirrored for Side::right.
  struct EndWords {
    Word a;
    Word sigma;
    Word tau;
  };
  EndWords end_words(Side side, std::size_t rank = 6);

  // (a sigma tau sigma)^s for single shape, (a sigma tau)^(2s) for double.
  Word toroidal_relator(ToroidalType const& t,
                        Side                side,
                        std::size_t         rank = 6);

  // [3,3,4,3]_t on a..e (Side::left) or [3,4,3,3]_t on five generators whose
  // last one plays the role of f (Side::right).
  Presentation toroidal_presentation(ToroidalType const& t,
                                     Side side = Side::left);

  // [3,3,4,3,3] with the facet relator for s and the vertex-figure relator
  // for t, with subgroups FACET = a..e and VERTEX = b..f.
  Presentation
  locally_toroidal_presentation(std::optional<ToroidalType> const& s,
                                std::optional<ToroidalType> const& t);

  // Star-shaped Coxeter presentation on a, b1.., b2.., b3.. with the given
  // extra relators appended. Arm i has letters b, c, d, ... suffixed by i.
  Presentation y_presentation(unsigned                 alpha,
                              unsigned                 beta,
                              unsigned                 gamma,
                              std::vector<Word> const& extra = {});

  // S, f12, f21 over the Y_332 alphabet of y_presentation(3, 3, 2).
  std::vector<Word> fi22_relators();

  // Arm swap b1<->b2, c1<->c2, d1<->d2 on the Y_332 alphabet.
  GeneratorMap y332_arm_swap();

  // d1 d2, c1 c2, b1 b2, a, b3, c3: the swap-fixed generators of a
  // [3,3,4,3,3] subgroup of Y_332.
  std::vector<Word> twist_generators();

  // Homomorphism from the rank-6 alphabet a..f onto the [3,3] presentation
  // of S4: a -> (1,2), b -> (2,3), c -> (3,4), d, e, f -> 1.
  GeneratorMap s4_cover_map();

  // Sub-presentation on the selected generators: keeps exactly the relators
  // whose letters all lie in the selection, reindexed in selection order.
  Presentation parabolic_presentation(Presentation const&           p,
                                      std::vector<gen_index> const& selection);

}  // namespace tcx

#endif  // TCX_PRESENTATION_HPP_
