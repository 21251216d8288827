#ifndef TCX_WORD_HPP_
#define TCX_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tcx {

  using gen_index = std::uint32_t;

  // A generator or its inverse.
  struct Letter {
    gen_index gen = 0;
    bool      inverse = false;

    Letter inverted() const noexcept {
      return Letter{gen, !inverse};
    }

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  // Words are sequences of letters over generators 0..n-1. A Word does not
  // know its alphabet; validity is checked against a Presentation.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    // Word made of the given generators, all with positive exponent.
    static Word of(std::initializer_list<gen_index> gens);
    static Word generator(gen_index g) {
      return Word({Letter{g, false}});
    }

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }

    // Unreduced; callers reduce when they need canonical form.
    Word  operator*(Word const& other) const;
    Word& operator*=(Word const& other);
    Word  inverse() const;
    Word  pow(std::size_t k) const;

    // Largest generator index referenced plus one (0 for the empty word).
    gen_index span_of_generators() const noexcept;

    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  // Involution flags, indexed by generator. Generators beyond the end of the
  // span are treated as non-involutive.
  using InvolutionFlags = std::span<std::uint8_t const>;

  // Cancels x x^-1 pairs and, for involutive x, x x pairs; rewrites x^-1 as
  // x for involutive generators. The result is the unique freely reduced
  // form in the free product of Z's and Z/2's.
  Word free_reduce(Word const& w, InvolutionFlags involutive = {});

  // y^-1 x y, reduced.
  Word conjugate(Word const&    x,
                 Word const&    y,
                 InvolutionFlags involutive = {});

  // Letters rendered with generator names; inverses get a "^-1" suffix.
  std::string to_string(Word const&                     w,
                        std::vector<std::string> const& names = {});

}  // namespace tcx

#endif  // TCX_WORD_HPP_
