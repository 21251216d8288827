#include "tcx/word.hpp"

#include <algorithm>

namespace tcx {

  Word Word::of(std::initializer_list<gen_index> gens) {
    std::vector<Letter> letters;
    letters.reserve(gens.size());
    for (auto g : gens) {
      letters.push_back(Letter{g, false});
    }
    return Word(std::move(letters));
  }

  Word Word::operator*(Word const& other) const {
    Word result(*this);
    result *= other;
    return result;
  }

  Word& Word::operator*=(Word const& other) {
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  Word Word::inverse() const {
    std::vector<Letter> letters;
    letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      letters.push_back(it->inverted());
    }
    return Word(std::move(letters));
  }

  Word Word::pow(std::size_t k) const {
    std::vector<Letter> letters;
    letters.reserve(_letters.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      letters.insert(letters.end(), _letters.begin(), _letters.end());
    }
    return Word(std::move(letters));
  }

  gen_index Word::span_of_generators() const noexcept {
    gen_index m = 0;
    for (auto const& l : _letters) {
      m = std::max(m, l.gen + 1);
    }
    return m;
  }

  Word free_reduce(Word const& w, InvolutionFlags involutive) {
    auto is_inv = [&](gen_index g) {
      return g < involutive.size() && involutive[g];
    };
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter l : w) {
      if (is_inv(l.gen)) {
        l.inverse = false;
      }
      if (!stack.empty() && stack.back().gen == l.gen
          && (stack.back().inverse != l.inverse || is_inv(l.gen))) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  Word conjugate(Word const& x, Word const& y, InvolutionFlags involutive) {
    return free_reduce(y.inverse() * x * y, involutive);
  }

  std::string to_string(Word const& w, std::vector<std::string> const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      auto const& l = w[i];
      if (l.gen < names.size()) {
        out += names[l.gen];
      } else {
        out += 'x' + std::to_string(l.gen);
      }
      if (l.inverse) {
        out += "^-1";
      }
    }
    return out;
  }

}  // namespace tcx
