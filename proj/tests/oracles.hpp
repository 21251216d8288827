// Brute-force reference computations for the test suites. Nothing here
// calls into the library beyond its value types.
#ifndef TCX_TESTS_ORACLES_HPP_
#define TCX_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

  using images = std::vector<std::uint32_t>;

  // x^(p q) = (x^p)^q
  inline images compose(images const& p, images const& q) {
    images r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  // Every element of <gens>, by closure under right multiplication.
  inline std::set<images> closure(std::vector<images> const& gens, std::size_t degree) {
    images id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<images>   seen{id};
    std::deque<images> todo{id};
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto const& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) {
          todo.push_back(y);
        }
      }
    }
    return seen;
  }

  inline std::size_t closure_order(std::vector<images> const& gens, std::size_t degree) {
    return closure(gens, degree).size();
  }

  // Square integer matrices, row vectors acting on the right.
  using imat = std::vector<std::vector<long>>;

  inline imat imul(imat const& a, imat const& b) {
    auto n = a.size();
    imat c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < n; ++j)
            c[i][j] += a[i][k] * b[k][j];
    return c;
  }

  // Reflection representation of a crystallographic Coxeter group from its
  // Cartan matrix: s_i(e_j) = e_j - A_ij e_i. Labels 2, 3, 4, 6 give Cartan
  // pairs (0,0), (-1,-1), (-1,-2), (-1,-3).
  inline std::vector<imat> cartan_reflections(std::vector<std::vector<unsigned>> const& labels) {
    auto n = labels.size();
    std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      A[i][i] = 2;
      for (std::size_t j = i + 1; j < n; ++j) {
        switch (labels[i][j]) {
          case 2: break;
          case 3: A[i][j] = A[j][i] = -1; break;
          case 4: A[i][j] = -1; A[j][i] = -2; break;
          case 6: A[i][j] = -1; A[j][i] = -3; break;
          default: throw std::invalid_argument("non-crystallographic label");
        }
      }
    }
    std::vector<imat> out;
    for (std::size_t i = 0; i < n; ++i) {
      imat s(n, std::vector<long>(n, 0));
      for (std::size_t j = 0; j < n; ++j) {
        s[j][j] = 1;
        s[j][i] -= A[i][j];
      }
      out.push_back(s);
    }
    return out;
  }

  inline std::size_t matrix_closure_order(std::vector<imat> const& gens) {
    auto n = gens.at(0).size();
    imat id(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    std::set<imat>   seen{id};
    std::deque<imat> todo{id};
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto const& g : gens) {
        auto y = imul(x, g);
        if (seen.insert(y).second) {
          todo.push_back(y);
        }
      }
    }
    return seen.size();
  }

  // Order of the Coxeter group of a string diagram, via reflections.
  inline std::size_t string_coxeter_order(std::vector<unsigned> const& schlafli) {
    auto n = schlafli.size() + 1;
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
    for (std::size_t i = 0; i < schlafli.size(); ++i) m[i][i + 1] = m[i + 1][i] = schlafli[i];
    return matrix_closure_order(cartan_reflections(m));
  }

  // x_1 + ... + x_8 + x1 x2 + x3 x4 + x5 x6 + x7 x8 on one 8-block, bits
  // given as an integer with bit i = coordinate i.
  inline bool phi8(unsigned v) {
    unsigned s = __builtin_popcount(v);
    for (int i = 0; i < 8; i += 2) s += ((v >> i) & 1) & ((v >> (i + 1)) & 1);
    return s & 1;
  }

  inline std::size_t isotropic_count8() {
    std::size_t n = 0;
    for (unsigned v = 1; v < 256; ++v) n += !phi8(v);
    return n;
  }

  // Orbits of <gens> on 0..degree-1, by union-find.
  inline std::size_t count_orbits(std::vector<images> const& gens, std::size_t degree) {
    std::vector<std::size_t> up(degree);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](std::size_t x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    std::size_t n = degree;
    for (auto const& g : gens)
      for (std::size_t x = 0; x < degree; ++x) {
        auto a = find(x), b = find(g[x]);
        if (a != b) {
          up[std::max(a, b)] = std::min(a, b);
          --n;
        }
      }
    return n;
  }

}  // namespace oracle

#endif  // TCX_TESTS_ORACLES_HPP_
