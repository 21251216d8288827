#ifndef TCX_GF2_HPP_
#define TCX_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tcx/perm_group.hpp"
#include "tcx/presentation.hpp"

namespace tcx {

  // Vector over GF(2). Coordinates are 0-based.
  class Gf2Vector {
   public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t n) : _bits(n) {}
    explicit Gf2Vector(boost::dynamic_bitset<> bits) : _bits(std::move(bits)) {}
    // From a 0/1 list.
    static Gf2Vector of(std::initializer_list<int> bits);

    std::size_t size() const noexcept {
      return _bits.size();
    }
    bool operator[](std::size_t i) const {
      return _bits[i];
    }
    void set(std::size_t i, bool value = true) {
      _bits[i] = value;
    }
    bool is_zero() const noexcept {
      return _bits.none();
    }
    std::size_t weight() const noexcept {
      return _bits.count();
    }
    boost::dynamic_bitset<> const& bits() const noexcept {
      return _bits;
    }

    Gf2Vector operator+(Gf2Vector const& other) const;

    // "0110..." in coordinate order.
    std::string to_string() const;

    friend bool operator==(Gf2Vector const& a, Gf2Vector const& b) {
      return a._bits == b._bits;
    }
    // Lexicographic in coordinate order, 0 before 1.
    friend bool operator<(Gf2Vector const& a, Gf2Vector const& b);

   private:
    boost::dynamic_bitset<> _bits;
  };

  // Square matrix over GF(2) stored as bit rows. Vectors are rows and act
  // on the right: (v*m)_j = sum_i v_i m_ij.
  class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    // Zero matrix.
    explicit Gf2Matrix(std::size_t n);
    // Throws DimensionMismatch unless every row has rows.size() bits.
    explicit Gf2Matrix(std::vector<Gf2Vector> rows);

    static Gf2Matrix identity(std::size_t n);
    // From a 0/1 table given row by row.
    static Gf2Matrix from_table(std::vector<std::vector<int>> const& table);

    std::size_t dim() const noexcept {
      return _rows.size();
    }
    bool get(std::size_t i, std::size_t j) const {
      return _rows[i][j];
    }
    void set(std::size_t i, std::size_t j, bool value = true) {
      _rows[i].set(j, value);
    }
    Gf2Vector const& row(std::size_t i) const {
      return _rows[i];
    }

    Gf2Matrix operator*(Gf2Matrix const& other) const;
    Gf2Matrix operator+(Gf2Matrix const& other) const;
    bool      is_identity() const noexcept;
    std::size_t rank() const;

    friend bool operator==(Gf2Matrix const& a, Gf2Matrix const& b) {
      return a._rows == b._rows;
    }

   private:
    std::vector<Gf2Vector> _rows;
  };

  Gf2Vector operator*(Gf2Vector const& v, Gf2Matrix const& m);

  Gf2Matrix mul(Gf2Matrix const& a, Gf2Matrix const& b);
  Gf2Matrix pow(Gf2Matrix const& a, std::uint64_t k);
  // Least k >= 1 with a^k = 1. Throws Error for a singular matrix.
  std::uint64_t matrix_order(Gf2Matrix const& a);

  Gf2Matrix kron(Gf2Matrix const& a, Gf2Matrix const& b);
  // E_ij of size n, 0-based.
  Gf2Matrix unit(std::size_t i, std::size_t j, std::size_t n);
  // Block matrix from a square grid of equally sized square blocks.
  Gf2Matrix block(std::vector<std::vector<Gf2Matrix>> const& grid);
  // Matrix with row i equal to e_{p[i]}, so that e_i * m = e_{p[i]}.
  Gf2Matrix permutation_matrix(Perm const& p);

  // Product of the letters' matrices in word order; inverse letters are
  // allowed only for involutive generators of the matrix list (m*m = 1).
  Gf2Matrix word_matrix(std::span<Gf2Matrix const> gens, Word const& w);

  // sum_j x_j + sum_i x_{2i} x_{2i+1} over 24 coordinates (0-based pairs).
  bool phi(Gf2Vector const& v);
  // phi(v*m) = phi(v) on the 24 basis vectors and their 276 pairwise sums.
  bool preserves_phi(Gf2Matrix const& m);

  // Parses the generator data format (see docs/FORMATS.md) and returns the
  // matrices declared with "gen", in declaration order.
  std::vector<Gf2Matrix> parse_generator_data(std::string_view text);
  std::vector<Gf2Matrix> load_generator_data(std::string const& path);

  // The six 24x24 generators a..f, from the data file compiled into the
  // library.
  std::vector<Gf2Matrix> const& builtin_generators();
  std::string_view              builtin_generator_data();

  // tau = c^(d e) evaluated on a..f matrices.
  Gf2Matrix tau_matrix(std::span<Gf2Matrix const> abcdef);

  // Breadth-first orbit; each new layer is sorted lexicographically.
  std::vector<Gf2Vector> vector_orbit(Gf2Vector const&            v,
                                      std::span<Gf2Matrix const> gens);

  // One permutation per matrix on the index set of vectors. Throws Error
  // when the list is not closed under some generator.
  PermGroup induced_perm_action(std::vector<Gf2Vector> const& vectors,
                                std::span<Gf2Matrix const>    gens);

  // Nonzero vectors of dimension blocks*block_size supported inside one
  // coordinate block, block by block, each block in lexicographic order.
  std::vector<Gf2Vector> block_vectors(std::size_t blocks, std::size_t block_size);

  struct RelatorCheck {
    Word relator;
    bool holds;
  };

  // Evaluates every relator of p on one matrix per generator.
  std::vector<RelatorCheck> check_relations(Presentation const&        p,
                                            std::span<Gf2Matrix const> matrices);

}  // namespace tcx

#endif  // TCX_GF2_HPP_
