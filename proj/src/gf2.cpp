#include "tcx/gf2.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tcx/error.hpp"
#include "tcx_generator_data.hpp"

namespace tcx {

  ////////////////////////////////////////////////////////////////////////
  // Vectors and matrices
  ////////////////////////////////////////////////////////////////////////

  Gf2Vector Gf2Vector::of(std::initializer_list<int> bits) {
    Gf2Vector   v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
      v.set(i++, b & 1);
    }
    return v;
  }

  Gf2Vector Gf2Vector::operator+(Gf2Vector const& other) const {
    if (size() != other.size()) {
      throw DimensionMismatch("adding vectors of different lengths");
    }
    return Gf2Vector(_bits ^ other._bits);
  }

  std::string Gf2Vector::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) {
      if (_bits[i]) {
        s[i] = '1';
      }
    }
    return s;
  }

  bool operator<(Gf2Vector const& a, Gf2Vector const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    auto diff = a._bits ^ b._bits;
    auto i = diff.find_first();
    if (i == boost::dynamic_bitset<>::npos) {
      return false;
    }
    return b._bits[i];
  }

  Gf2Matrix::Gf2Matrix(std::size_t n) : _rows(n, Gf2Vector(n)) {}

  Gf2Matrix::Gf2Matrix(std::vector<Gf2Vector> rows) : _rows(std::move(rows)) {
    for (auto const& r : _rows) {
      if (r.size() != _rows.size()) {
        throw DimensionMismatch("matrix rows must have as many entries as there are rows");
      }
    }
  }

  Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  Gf2Matrix Gf2Matrix::from_table(std::vector<std::vector<int>> const& table) {
    std::vector<Gf2Vector> rows;
    for (auto const& r : table) {
      Gf2Vector v(r.size());
      for (std::size_t j = 0; j < r.size(); ++j) {
        v.set(j, r[j] & 1);
      }
      rows.push_back(std::move(v));
    }
    return Gf2Matrix(std::move(rows));
  }

  Gf2Vector operator*(Gf2Vector const& v, Gf2Matrix const& m) {
    if (v.size() != m.dim()) {
      throw DimensionMismatch("vector length " + std::to_string(v.size())
                              + " does not match matrix dimension "
                              + std::to_string(m.dim()));
    }
    boost::dynamic_bitset<> out(m.dim());
    for (auto i = v.bits().find_first(); i != boost::dynamic_bitset<>::npos;
         i = v.bits().find_next(i)) {
      out ^= m.row(i).bits();
    }
    return Gf2Vector(std::move(out));
  }

  Gf2Matrix Gf2Matrix::operator*(Gf2Matrix const& other) const {
    if (dim() != other.dim()) {
      throw DimensionMismatch("multiplying matrices of different dimensions");
    }
    std::vector<Gf2Vector> rows;
    rows.reserve(dim());
    for (auto const& r : _rows) {
      rows.push_back(r * other);
    }
    return Gf2Matrix(std::move(rows));
  }

  Gf2Matrix Gf2Matrix::operator+(Gf2Matrix const& other) const {
    if (dim() != other.dim()) {
      throw DimensionMismatch("adding matrices of different dimensions");
    }
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < dim(); ++i) {
      rows.push_back(_rows[i] + other._rows[i]);
    }
    return Gf2Matrix(std::move(rows));
  }

  bool Gf2Matrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < dim(); ++i) {
      auto const& b = _rows[i].bits();
      if (b.count() != 1 || !b[i]) {
        return false;
      }
    }
    return true;
  }

  std::size_t Gf2Matrix::rank() const {
    std::vector<boost::dynamic_bitset<>> rows;
    for (auto const& r : _rows) {
      rows.push_back(r.bits());
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim() && rank < rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && !rows[pivot][col]) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != rank && rows[i][col]) {
          rows[i] ^= rows[rank];
        }
      }
      ++rank;
    }
    return rank;
  }

  Gf2Matrix mul(Gf2Matrix const& a, Gf2Matrix const& b) {
    return a * b;
  }

  Gf2Matrix pow(Gf2Matrix const& a, std::uint64_t k) {
    Gf2Matrix result = Gf2Matrix::identity(a.dim());
    Gf2Matrix base = a;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  std::uint64_t matrix_order(Gf2Matrix const& a) {
    if (a.rank() != a.dim()) {
      throw Error("matrix_order: matrix is singular");
    }
    Gf2Matrix     x = a;
    std::uint64_t k = 1;
    while (!x.is_identity()) {
      x = x * a;
      ++k;
    }
    return k;
  }

  Gf2Matrix kron(Gf2Matrix const& a, Gf2Matrix const& b) {
    auto      n = a.dim(), m = b.dim();
    Gf2Matrix out(n * m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!a.get(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = 0; l < m; ++l) {
            if (b.get(k, l)) {
              out.set(i * m + k, j * m + l);
            }
          }
        }
      }
    }
    return out;
  }

  Gf2Matrix unit(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= n || j >= n) {
      throw DimensionMismatch("unit matrix position outside dimension "
                              + std::to_string(n));
    }
    Gf2Matrix m(n);
    m.set(i, j);
    return m;
  }

  Gf2Matrix block(std::vector<std::vector<Gf2Matrix>> const& grid) {
    auto k = grid.size();
    if (k == 0) {
      return Gf2Matrix(0);
    }
    auto b = grid[0][0].dim();
    for (auto const& row : grid) {
      if (row.size() != k) {
        throw DimensionMismatch("block grid must be square");
      }
      for (auto const& m : row) {
        if (m.dim() != b) {
          throw DimensionMismatch("blocks must share one dimension");
        }
      }
    }
    Gf2Matrix out(k * b);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < b; ++i) {
          for (std::size_t j = 0; j < b; ++j) {
            if (grid[r][c].get(i, j)) {
              out.set(r * b + i, c * b + j);
            }
          }
        }
      }
    }
    return out;
  }

  Gf2Matrix permutation_matrix(Perm const& p) {
    Gf2Matrix m(p.degree());
    for (point i = 0; i < p.degree(); ++i) {
      m.set(i, p[i]);
    }
    return m;
  }

  Gf2Matrix word_matrix(std::span<Gf2Matrix const> gens, Word const& w) {
    if (gens.empty()) {
      throw Error("word_matrix needs at least one matrix");
    }
    Gf2Matrix result = Gf2Matrix::identity(gens[0].dim());
    for (auto const& l : w) {
      if (l.gen >= gens.size()) {
        throw InvalidWord("letter outside the matrix list");
      }
      auto const& g = gens[l.gen];
      if (l.inverse && !(g * g).is_identity()) {
        throw Error("inverse letter for a matrix that is not an involution");
      }
      result = result * g;
    }
    return result;
  }

  bool phi(Gf2Vector const& v) {
    if (v.size() != 24) {
      throw DimensionMismatch("phi is defined on 24 coordinates");
    }
    bool value = v.weight() & 1;
    for (std::size_t i = 0; i < 24; i += 2) {
      value ^= v[i] && v[i + 1];
    }
    return value;
  }

  bool preserves_phi(Gf2Matrix const& m) {
    if (m.dim() != 24) {
      throw DimensionMismatch("phi is defined on 24 coordinates");
    }
    std::vector<Gf2Vector> basis;
    for (std::size_t i = 0; i < 24; ++i) {
      Gf2Vector e(24);
      e.set(i);
      basis.push_back(e);
    }
    for (std::size_t i = 0; i < 24; ++i) {
      if (phi(basis[i] * m) != phi(basis[i])) {
        return false;
      }
      for (std::size_t j = i + 1; j < 24; ++j) {
        auto v = basis[i] + basis[j];
        if (phi(v * m) != phi(v)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator data
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class DataParser {
     public:
      explicit DataParser(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
          auto end = text.find('\n', start);
          if (end == std::string_view::npos) {
            end = text.size();
          }
          auto line = std::string(text.substr(start, end - start));
          auto hash = line.find('#');
          if (hash != std::string::npos) {
            line.resize(hash);
          }
          _lines.push_back(std::move(line));
          start = end + 1;
        }
      }

      std::vector<Gf2Matrix> run() {
        while (_line < _lines.size()) {
          _text = _lines[_line];
          _pos = 0;
          skip_space();
          if (at_end()) {
            ++_line;
            continue;
          }
          auto kw = ident();
          if (kw == "matrix") {
            matrix_statement();
          } else if (kw == "perm") {
            perm_statement();
          } else if (kw == "gen") {
            gen_statement();
          } else {
            fail("unknown statement '" + kw + "'");
          }
        }
        return std::move(_gens);
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _line + 1, _pos + 1);
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool at_end() const {
        return _pos >= _text.size();
      }

      char peek() {
        skip_space();
        return at_end() ? '\0' : _text[_pos];
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      std::string ident() {
        skip_space();
        auto start = _pos;
        while (_pos < _text.size()
               && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
          ++_pos;
        }
        if (start == _pos || std::isdigit(static_cast<unsigned char>(_text[start]))) {
          _pos = start;
          fail("expected a name");
        }
        return _text.substr(start, _pos - start);
      }

      long integer() {
        skip_space();
        auto start = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        return std::stol(_text.substr(start, _pos - start));
      }

      void end_of_line() {
        skip_space();
        if (!at_end()) {
          fail("unexpected trailing text");
        }
        ++_line;
      }

      void define(std::string const& name, Gf2Matrix m) {
        if (_named.count(name) != 0) {
          fail("name '" + name + "' is already defined");
        }
        _named.emplace(name, std::move(m));
      }

      void matrix_statement() {
        auto name = ident();
        auto n = integer();
        if (n < 1) {
          fail("matrix dimension must be positive");
        }
        end_of_line();
        std::vector<std::vector<int>> table;
        for (long i = 0; i < n; ++i) {
          if (_line >= _lines.size()) {
            _pos = 0;
            fail("matrix '" + name + "' ends early");
          }
          _text = _lines[_line];
          _pos = 0;
          std::vector<int> row;
          while (peek() != '\0') {
            auto bit = integer();
            if (bit != 0 && bit != 1) {
              fail("matrix entries must be 0 or 1");
            }
            row.push_back(static_cast<int>(bit));
          }
          if (row.size() != static_cast<std::size_t>(n)) {
            fail("row has " + std::to_string(row.size()) + " entries, expected "
                 + std::to_string(n));
          }
          table.push_back(std::move(row));
          ++_line;
        }
        define(name, Gf2Matrix::from_table(table));
      }

      // Cycle entry: integer, the loop variable, or variable +/- integer.
      long cycle_point(std::optional<std::pair<std::string, long>> const& var) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          return integer();
        }
        auto name = ident();
        if (!var || name != var->first) {
          fail("unknown variable '" + name + "'");
        }
        long value = var->second;
        auto c = peek();
        if (c == '+' || c == '-') {
          ++_pos;
          auto k = integer();
          value += (c == '+') ? k : -k;
        }
        return value;
      }

      std::vector<std::vector<long>>
      cycles(std::size_t start, std::optional<std::pair<std::string, long>> const& var) {
        std::vector<std::vector<long>> out;
        _pos = start;
        while (peek() == '(') {
          ++_pos;
          std::vector<long> cycle{cycle_point(var)};
          while (peek() == ',') {
            ++_pos;
            cycle.push_back(cycle_point(var));
          }
          expect(')');
          out.push_back(std::move(cycle));
        }
        return out;
      }

      void perm_statement() {
        auto name = ident();
        auto n = integer();
        expect('=');
        std::vector<std::vector<long>> all;
        while (peek() != '\0') {
          if (peek() == '(') {
            auto cs = cycles(_pos, std::nullopt);
            all.insert(all.end(), cs.begin(), cs.end());
            continue;
          }
          if (ident() != "prod") {
            fail("expected a cycle or 'prod'");
          }
          auto var = ident();
          if (ident() != "in") {
            fail("expected 'in'");
          }
          std::vector<long> values;
          if (peek() == '{') {
            ++_pos;
            values.push_back(integer());
            while (peek() == ',') {
              ++_pos;
              values.push_back(integer());
            }
            expect('}');
          } else {
            auto lo = integer();
            expect('.');
            expect('.');
            auto hi = integer();
            for (auto v = lo; v <= hi; ++v) {
              values.push_back(v);
            }
          }
          auto body = _pos;
          for (auto v : values) {
            auto cs = cycles(body, std::make_pair(var, v));
            all.insert(all.end(), cs.begin(), cs.end());
          }
          if (peek() != '\0') {
            fail("a product runs to the end of the line");
          }
        }
        Perm p(static_cast<std::size_t>(n));
        for (auto const& cycle : all) {
          std::vector<point> c;
          for (auto x : cycle) {
            if (x < 1 || x > n) {
              fail("point " + std::to_string(x) + " outside 1.." + std::to_string(n));
            }
            c.push_back(static_cast<point>(x - 1));
          }
          p = p * Perm::from_cycles(static_cast<std::size_t>(n), {c});
        }
        end_of_line();
        define(name, permutation_matrix(p));
      }

      // term := I<k> | E(i,j) | 0 | name, E and 0 need a block size.
      Gf2Matrix term(std::optional<std::size_t> size) {
        if (peek() == '0') {
          ++_pos;
          if (!size) {
            fail("0 needs a block size");
          }
          return Gf2Matrix(*size);
        }
        auto start = _pos;
        auto name = ident();
        if (name == "E" && peek() == '(') {
          ++_pos;
          auto i = integer();
          expect(',');
          auto j = integer();
          expect(')');
          if (!size) {
            fail("E(i,j) needs a block size");
          }
          if (i < 1 || j < 1 || static_cast<std::size_t>(i) > *size
              || static_cast<std::size_t>(j) > *size) {
            fail("E position outside the block");
          }
          return unit(i - 1, j - 1, *size);
        }
        if (name.size() > 1 && name[0] == 'I'
            && std::all_of(name.begin() + 1, name.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          return Gf2Matrix::identity(std::stoul(name.substr(1)));
        }
        auto it = _named.find(name);
        if (it == _named.end()) {
          _pos = start;
          fail("undefined name '" + name + "'");
        }
        return it->second;
      }

      Gf2Matrix sum(std::optional<std::size_t> size) {
        auto m = term(size);
        while (peek() == '+') {
          ++_pos;
          auto start = _pos;
          auto t = term(size);
          if (t.dim() != m.dim()) {
            _pos = start;
            fail("summands have different dimensions");
          }
          m = m + t;
        }
        return m;
      }

      Gf2Matrix expression() {
        auto start = _pos;
        skip_space();
        auto save = _pos;
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
          auto kw = ident();
          if (kw == "kron") {
            auto a = term(std::nullopt);
            auto b = term(std::nullopt);
            return kron(a, b);
          }
          if (kw == "blocks") {
            auto k = static_cast<std::size_t>(integer());
            expect('[');
            std::vector<std::vector<Gf2Matrix>> grid(1);
            while (peek() != ']') {
              if (peek() == '\0') {
                fail("unterminated block grid");
              }
              if (peek() == ';') {
                ++_pos;
                grid.emplace_back();
                continue;
              }
              auto at = _pos;
              auto m = sum(k);
              if (m.dim() != k) {
                _pos = at;
                fail("block has dimension " + std::to_string(m.dim()) + ", expected "
                     + std::to_string(k));
              }
              grid.back().push_back(std::move(m));
            }
            ++_pos;
            for (auto const& row : grid) {
              if (row.size() != grid.size()) {
                _pos = start;
                fail("block grid is not square");
              }
            }
            return block(grid);
          }
        }
        _pos = save;
        return sum(std::nullopt);
      }

      void gen_statement() {
        auto name = ident();
        expect('=');
        auto m = expression();
        if (!_gens.empty() && m.dim() != _gens[0].dim()) {
          fail("generator '" + name + "' has dimension " + std::to_string(m.dim())
               + ", earlier ones " + std::to_string(_gens[0].dim()));
        }
        if (m.rank() != m.dim()) {
          fail("generator '" + name + "' is singular");
        }
        end_of_line();
        _gens.push_back(std::move(m));
      }

      std::vector<std::string>         _lines;
      std::size_t                      _line = 0;
      std::string                      _text;
      std::size_t                      _pos = 0;
      std::map<std::string, Gf2Matrix> _named;
      std::vector<Gf2Matrix>           _gens;
    };

  }  // namespace

  std::vector<Gf2Matrix> parse_generator_data(std::string_view text) {
    return DataParser(text).run();
  }

  std::vector<Gf2Matrix> load_generator_data(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open generator data file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_generator_data(ss.str());
  }

  std::string_view builtin_generator_data() {
    return detail::generator_data;
  }

  std::vector<Gf2Matrix> const& builtin_generators() {
    static std::vector<Gf2Matrix> const gens = [] {
      auto g = parse_generator_data(builtin_generator_data());
      if (g.size() != 6) {
        throw Error("builtin generator data must declare six generators");
      }
      return g;
    }();
    return gens;
  }

  Gf2Matrix tau_matrix(std::span<Gf2Matrix const> abcdef) {
    // tau = c^(d e) = e d c d e, indices a=0 .. f=5.
    return word_matrix(abcdef, Word::of({4, 3, 2, 3, 4}));
  }

  std::vector<Gf2Vector> vector_orbit(Gf2Vector const& v, std::span<Gf2Matrix const> gens) {
    std::set<Gf2Vector>    seen{v};
    std::vector<Gf2Vector> out;
    std::vector<Gf2Vector> layer{v};
    while (!layer.empty()) {
      out.insert(out.end(), layer.begin(), layer.end());
      std::vector<Gf2Vector> next;
      for (auto const& x : layer) {
        for (auto const& g : gens) {
          auto y = x * g;
          if (seen.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  PermGroup induced_perm_action(std::vector<Gf2Vector> const& vectors,
                                std::span<Gf2Matrix const>    gens) {
    std::map<Gf2Vector, point> where;
    for (point i = 0; i < vectors.size(); ++i) {
      if (!where.emplace(vectors[i], i).second) {
        throw Error("vector list has repeats");
      }
    }
    std::vector<Perm> perms;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<point> images;
      images.reserve(vectors.size());
      for (auto const& v : vectors) {
        auto it = where.find(v * gens[g]);
        if (it == where.end()) {
          throw Error("vector list is not closed under generator "
                      + std::to_string(g));
        }
        images.push_back(it->second);
      }
      perms.emplace_back(std::move(images));
    }
    return PermGroup(vectors.size(), std::move(perms));
  }

  std::vector<Gf2Vector> block_vectors(std::size_t blocks, std::size_t block_size) {
    if (block_size >= 32) {
      throw Error("block size too large to enumerate");
    }
    std::vector<Gf2Vector> out;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<Gf2Vector> part;
      for (std::uint32_t bits = 1; bits < (1u << block_size); ++bits) {
        Gf2Vector v(blocks * block_size);
        for (std::size_t i = 0; i < block_size; ++i) {
          if (bits >> i & 1u) {
            v.set(b * block_size + i);
          }
        }
        part.push_back(std::move(v));
      }
      std::sort(part.begin(), part.end());
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<RelatorCheck> check_relations(Presentation const&        p,
                                            std::span<Gf2Matrix const> matrices) {
    if (matrices.size() != p.ngens()) {
      throw DimensionMismatch("need one matrix per generator: "
                              + std::to_string(p.ngens()) + " generators, "
                              + std::to_string(matrices.size()) + " matrices");
    }
    for (auto const& m : matrices) {
      if (m.dim() != matrices[0].dim()) {
        throw DimensionMismatch("matrices of different dimensions");
      }
    }
    std::vector<RelatorCheck> out;
    for (auto const& r : p.relators()) {
      out.push_back({r, word_matrix(matrices, r).is_identity()});
    }
    return out;
  }

}  // namespace tcx
