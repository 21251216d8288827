#include "tcx/enumerator.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <map>
#include <set>

#include "tcx/error.hpp"

namespace tcx {

  std::string to_string(Strategy s) {
    switch (s) {
      case Strategy::felsch: return "felsch";
      case Strategy::hlt: return "hlt";
      case Strategy::hlt_lookahead: return "hlt-lookahead";
    }
    return "?";
  }

  Strategy parse_strategy(std::string const& name) {
    if (name == "felsch") {
      return Strategy::felsch;
    } else if (name == "hlt") {
      return Strategy::hlt;
    } else if (name == "hlt-lookahead" || name == "hlt_lookahead") {
      return Strategy::hlt_lookahead;
    }
    throw Error("unknown strategy '" + name + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // CosetTable
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct ColumnLayout {
      std::vector<std::uint32_t> first_col;
      std::vector<std::uint32_t> inverse_col;
      std::vector<Letter>        col_letter;
    };

    ColumnLayout make_layout(InvolutionFlags involutive) {
      ColumnLayout layout;
      for (gen_index g = 0; g < involutive.size(); ++g) {
        auto col = static_cast<std::uint32_t>(layout.inverse_col.size());
        layout.first_col.push_back(col);
        if (involutive[g]) {
          layout.inverse_col.push_back(col);
          layout.col_letter.push_back(Letter{g, false});
        } else {
          layout.inverse_col.push_back(col + 1);
          layout.inverse_col.push_back(col);
          layout.col_letter.push_back(Letter{g, false});
          layout.col_letter.push_back(Letter{g, true});
        }
      }
      return layout;
    }
  }  // namespace

  CosetTable::CosetTable(std::vector<std::uint8_t> involutive,
                         std::vector<coset_index>  entries)
      : _involutive(std::move(involutive)), _entries(std::move(entries)) {
    auto layout = make_layout(_involutive);
    _first_col = std::move(layout.first_col);
    _inverse_col = std::move(layout.inverse_col);
    _col_letter = std::move(layout.col_letter);
    if (ncols() != 0 && _entries.size() % ncols() != 0) {
      throw Error("coset table entries do not fill whole rows");
    }
  }

  coset_index CosetTable::trace(coset_index c, Word const& w) const {
    for (auto const& l : w) {
      if (c == UNDEFINED) {
        return c;
      }
      if (l.gen >= ngens()) {
        throw InvalidWord("letter outside the table's alphabet");
      }
      c = act(c, l);
    }
    return c;
  }

  bool CosetTable::closed() const noexcept {
    return std::find(_entries.begin(), _entries.end(), UNDEFINED) == _entries.end();
  }

  bool CosetTable::consistent() const noexcept {
    auto n = nrows();
    for (coset_index c = 0; c < n; ++c) {
      for (std::uint32_t x = 0; x < ncols(); ++x) {
        auto d = entry(c, x);
        if (d == UNDEFINED) {
          continue;
        }
        if (d >= n || entry(d, inverse_column(x)) != c) {
          return false;
        }
      }
    }
    return true;
  }

  bool CosetTable::is_standard() const {
    return closed() && standardize(*this)._entries == _entries;
  }

  std::pair<coset_index, std::uint32_t> CosetTable::tree_edge(coset_index c) const {
    if (!has_transversal()) {
      throw Error("coset table carries no transversal");
    }
    return {_tree_parent.at(c), _tree_col.at(c)};
  }

  bool CosetTable::is_tree_edge(coset_index c, std::uint32_t col) const {
    auto d = entry(c, col);
    if (d == UNDEFINED) {
      return false;
    }
    if (d != 0 && _tree_parent[d] == c && _tree_col[d] == col) {
      return true;
    }
    return c != 0 && _tree_parent[c] == d && _tree_col[c] == inverse_column(col);
  }

  Word CosetTable::representative(coset_index c) const {
    std::vector<Letter> letters;
    while (c != 0) {
      auto [parent, col] = tree_edge(c);
      letters.push_back(column_letter(col));
      c = parent;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
  }

  std::uint64_t CosetTable::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint32_t v) {
      for (int k = 0; k < 4; ++k) {
        h ^= (v >> (8 * k)) & 0xFFu;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint32_t>(ngens()));
    mix(static_cast<std::uint32_t>(ncols()));
    for (auto e : _entries) {
      mix(e);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumerator
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Enumerator {
     public:
      Enumerator(Presentation const&      p,
                 std::vector<Word> const& subgroup,
                 EnumerationLimits const& limits)
          : _involutive(p.involutive().begin(), p.involutive().end()),
            _max(limits.max_cosets),
            _strategy(limits.effective_strategy()),
            _limits(limits) {
        if (_max < 1) {
          throw Error("max_cosets must be at least 1");
        }
        auto layout = make_layout(_involutive);
        _first_col = std::move(layout.first_col);
        _inv = std::move(layout.inverse_col);
        _ncols = _inv.size();

        for (auto const& r : p.relators()) {
          p.validate(r);
          auto cols = columns(r);
          // x x for an involutive column holds by construction.
          if (cols.size() == 2 && cols[0] == cols[1] && _inv[cols[0]] == cols[0]) {
            continue;
          }
          if (!cols.empty()) {
            _relators.push_back(std::move(cols));
          }
        }
        for (auto const& w : subgroup) {
          p.validate(w);
          auto cols = columns(p.reduce(w));
          if (!cols.empty()) {
            _subgens.push_back(std::move(cols));
          }
        }
        build_conjugates();
        _start = std::chrono::steady_clock::now();
        _last_progress = _start;
      }

      CosetTable run() {
        _stats.strategy = _strategy;
        new_coset_row();  // coset 0
        _nlive = 1;
        _stats.defined = 1;
        _stats.max_live = 1;
        if (_ncols != 0) {
          if (_strategy == Strategy::felsch) {
            run_felsch();
          } else {
            run_hlt();
          }
          while (!pass(true)) {
          }
        }
        compact();
        _stats.seconds = elapsed();
        std::vector<coset_index> entries(_table.begin(),
                                         _table.begin() + _nrows * _ncols);
        CosetTable t(std::vector<std::uint8_t>(_involutive), std::move(entries));
        if (!t.closed()) {
          throw Error("internal error: enumeration finished with an open table");
        }
        auto s = standardize(t);
        s.set_stats(_stats);
        return s;
      }

     private:
      enum class Status { ok, full };

      std::vector<std::uint32_t> columns(Word const& w) const {
        std::vector<std::uint32_t> out;
        out.reserve(w.size());
        for (auto const& l : w) {
          out.push_back(_first_col[l.gen]
                        + ((l.inverse && !_involutive[l.gen]) ? 1 : 0));
        }
        return out;
      }

      void build_conjugates() {
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<std::vector<std::vector<std::uint32_t>>> by_first(_ncols);
        auto add_rotations = [&](std::vector<std::uint32_t> const& r) {
          auto n = r.size();
          for (std::size_t k = 0; k < n; ++k) {
            std::vector<std::uint32_t> rot(n);
            for (std::size_t i = 0; i < n; ++i) {
              rot[i] = r[(k + i) % n];
            }
            if (seen.insert(rot).second) {
              by_first[rot[0]].push_back(std::move(rot));
            }
          }
        };
        for (auto const& r : _relators) {
          add_rotations(r);
          std::vector<std::uint32_t> inv(r.rbegin(), r.rend());
          for (auto& x : inv) {
            x = _inv[x];
          }
          add_rotations(inv);
        }
        _conj_start.assign(_ncols + 1, 0);
        for (std::uint32_t x = 0; x < _ncols; ++x) {
          _conj_start[x] = _conj_offsets.size();
          for (auto const& r : by_first[x]) {
            _conj_offsets.push_back(_conj_data.size());
            _conj_data.insert(_conj_data.end(), r.begin(), r.end());
          }
        }
        _conj_start[_ncols] = _conj_offsets.size();
        _conj_offsets.push_back(_conj_data.size());
      }

      double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start)
            .count();
      }

      coset_index& at(coset_index c, std::uint32_t x) {
        return _table[std::size_t(c) * _ncols + x];
      }

      bool live(coset_index c) const {
        return _parent[c] == c;
      }

      void new_coset_row() {
        auto c = static_cast<coset_index>(_nrows++);
        _table.resize(_nrows * _ncols, UNDEFINED);
        _parent.push_back(c);
      }

      void set(coset_index c, std::uint32_t x, coset_index d) {
        at(c, x) = d;
        at(d, _inv[x]) = c;
        ++_changes;
        if (_strategy == Strategy::felsch) {
          _deductions.emplace_back(c, x);
        }
      }

      // New coset d with c^x = d, or UNDEFINED when every row is in use.
      coset_index define(coset_index c, std::uint32_t x) {
        if (_nrows >= _max) {
          return UNDEFINED;
        }
        auto d = static_cast<coset_index>(_nrows);
        new_coset_row();
        ++_nlive;
        ++_stats.defined;
        _stats.max_live = std::max<std::uint64_t>(_stats.max_live, _nlive);
        set(c, x, d);
        if ((_stats.defined & 0xFFFF) == 0) {
          report_progress();
        }
        return d;
      }

      void report_progress() {
        if (!_limits.progress) {
          return;
        }
        auto now = std::chrono::steady_clock::now();
        if (now - _last_progress >= _limits.progress_interval) {
          _last_progress = now;
          _limits.progress(ProgressInfo{_nlive, _stats.defined, _stats.coincidences, elapsed()});
        }
      }

      coset_index rep(coset_index c) {
        coset_index r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          auto next = _parent[c];
          _parent[c] = r;
          c = next;
        }
        return r;
      }

      void merge(coset_index a, coset_index b) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        _queue.push_back(b);
        --_nlive;
        ++_stats.coincidences;
        ++_changes;
      }

      // Union-find coincidence processing; the queue is drained before
      // returning, after which no live row refers to a dead coset.
      void coincidence(coset_index a, coset_index b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          auto e = _queue[i];
          for (std::uint32_t x = 0; x < _ncols; ++x) {
            auto f = at(e, x);
            if (f == UNDEFINED) {
              continue;
            }
            auto xi = _inv[x];
            at(f, xi) = UNDEFINED;
            auto e1 = rep(e);
            auto f1 = rep(f);
            if (at(e1, x) != UNDEFINED) {
              merge(f1, at(e1, x));
            } else if (at(f1, xi) != UNDEFINED) {
              merge(e1, at(f1, xi));
            } else {
              set(e1, x, f1);
            }
          }
        }
        _queue.clear();
      }

      // Traces r from c in both directions, defining cosets to fill the
      // gap when fill is set. A gap of one entry is a deduction; a closed
      // cycle ending at two different cosets is a coincidence.
      template <bool Fill>
      Status scan(coset_index c, std::uint32_t const* r, std::size_t n) {
        coset_index f = c, b = c;
        std::size_t i = 0, j = n;
        while (true) {
          while (i < j) {
            auto next = at(f, r[i]);
            if (next == UNDEFINED) {
              break;
            }
            f = next;
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return Status::ok;
          }
          while (j > i) {
            auto next = at(b, _inv[r[j - 1]]);
            if (next == UNDEFINED) {
              break;
            }
            b = next;
            --j;
          }
          if (j == i) {
            if (f != b) {
              coincidence(f, b);
            }
            return Status::ok;
          }
          if (j == i + 1) {
            set(f, r[i], b);
            return Status::ok;
          }
          if constexpr (!Fill) {
            return Status::ok;
          } else {
            auto d = define(f, r[i]);
            if (d == UNDEFINED) {
              return Status::full;
            }
          }
        }
      }

      void process_deductions() {
        while (!_deductions.empty()) {
          auto [c, x] = _deductions.back();
          _deductions.pop_back();
          if (!live(c)) {
            continue;
          }
          for (auto k = _conj_start[x]; k < _conj_start[x + 1]; ++k) {
            auto off = _conj_offsets[k];
            scan<false>(c, _conj_data.data() + off, _conj_offsets[k + 1] - off);
            if (!live(c)) {
              break;
            }
          }
        }
      }

      // Removes dead rows keeping the relative order of live ones, and
      // returns the new index of the first live coset at or after c.
      coset_index compact(coset_index c = 0) {
        _deductions.clear();
        std::vector<coset_index> map(_nrows, UNDEFINED);
        coset_index next = 0;
        coset_index new_c = UNDEFINED;
        for (coset_index old = 0; old < _nrows; ++old) {
          if (old == c) {
            new_c = next;
          }
          if (live(old)) {
            map[old] = next++;
          }
        }
        if (new_c == UNDEFINED) {
          new_c = next;
        }
        if (next == _nrows) {
          return new_c;
        }
        ++_stats.compactions;
        for (coset_index old = 0; old < _nrows; ++old) {
          if (map[old] == UNDEFINED) {
            continue;
          }
          auto nw = map[old];
          for (std::uint32_t x = 0; x < _ncols; ++x) {
            auto t = at(old, x);
            at(nw, x) = (t == UNDEFINED) ? UNDEFINED : map[t];
          }
        }
        _nrows = next;
        _table.resize(_nrows * _ncols);
        _parent.resize(_nrows);
        for (coset_index k = 0; k < _nrows; ++k) {
          _parent[k] = k;
        }
        return new_c;
      }

      void lookahead() {
        ++_stats.lookaheads;
        for (coset_index c = 0; c < _nrows; ++c) {
          for (auto const& r : _relators) {
            if (!live(c)) {
              break;
            }
            scan<false>(c, r.data(), r.size());
          }
        }
      }

      // Frees rows; the returned index is c's position afterwards.
      coset_index make_room(coset_index c) {
        if (_strategy == Strategy::hlt_lookahead) {
          lookahead();
        }
        c = compact(c);
        if (_nrows >= _max) {
          throw CosetLimitExceeded(_max);
        }
        return c;
      }

      void scan_subgroup() {
        for (auto const& w : _subgens) {
          while (scan<true>(0, w.data(), w.size()) == Status::full) {
            make_room(0);
          }
          process_deductions();
        }
      }

      // One HLT-style sweep: every relator at every coset, defining as
      // needed, then the row's remaining gaps. Returns true when the sweep
      // changed nothing, i.e. the table is closed and every relator holds at
      // every coset.
      bool pass(bool fill_rows) {
        auto before = _changes;
        scan_subgroup();
        coset_index c = 0;
        while (c < _nrows) {
          if (!live(c)) {
            ++c;
            continue;
          }
          bool restart = false;
          for (auto const& r : _relators) {
            if (scan<true>(c, r.data(), r.size()) == Status::full) {
              c = make_room(c);
              restart = true;
              break;
            }
            if (!live(c)) {
              break;
            }
          }
          if (restart) {
            continue;
          }
          if (fill_rows && live(c)) {
            for (std::uint32_t x = 0; x < _ncols; ++x) {
              if (at(c, x) == UNDEFINED && define(c, x) == UNDEFINED) {
                c = make_room(c);
                restart = true;
                break;
              }
            }
            if (restart) {
              continue;
            }
          }
          process_deductions();
          ++c;
        }
        process_deductions();
        return _changes == before;
      }

      void run_hlt() {
        pass(true);
      }

      void run_felsch() {
        scan_subgroup();
        coset_index   row = 0;
        std::uint32_t col = 0;
        while (true) {
          bool found = false;
          for (; row < _nrows; ++row, col = 0) {
            if (!live(row)) {
              continue;
            }
            for (; col < _ncols; ++col) {
              if (at(row, col) == UNDEFINED) {
                found = true;
                break;
              }
            }
            if (found) {
              break;
            }
          }
          if (!found) {
            return;
          }
          if (define(row, col) == UNDEFINED) {
            row = make_room(row);
            col = 0;
            continue;
          }
          process_deductions();
        }
      }

      std::vector<std::uint8_t>  _involutive;
      std::vector<std::uint32_t> _first_col;
      std::vector<std::uint32_t> _inv;
      std::size_t                _ncols = 0;

      std::vector<std::vector<std::uint32_t>> _relators;
      std::vector<std::vector<std::uint32_t>> _subgens;
      std::vector<std::size_t>                _conj_start;
      std::vector<std::size_t>                _conj_offsets;
      std::vector<std::uint32_t>              _conj_data;

      std::vector<coset_index>                              _table;
      std::vector<coset_index>                              _parent;
      std::size_t                                           _nrows = 0;
      std::uint64_t                                         _nlive = 0;
      std::vector<coset_index>                              _queue;
      std::vector<std::pair<coset_index, std::uint32_t>>    _deductions;
      std::uint64_t                                         _changes = 0;

      std::size_t              _max;
      Strategy                 _strategy;
      EnumerationLimits const& _limits;
      EnumerationStats         _stats;
      std::chrono::steady_clock::time_point _start;
      std::chrono::steady_clock::time_point _last_progress;
    };

  }  // namespace

  CosetTable enumerate(Presentation const&      p,
                       std::vector<Word> const& subgroup,
                       EnumerationLimits const& limits) {
    return Enumerator(p, subgroup, limits).run();
  }

  CosetTable enumerate(Presentation const&      p,
                       std::string const&       subgroup_name,
                       EnumerationLimits const& limits) {
    return enumerate(p, p.subgroup(subgroup_name), limits);
  }

  std::size_t index(CosetTable const& t) {
    if (!t.closed()) {
      throw TableNotClosed();
    }
    return t.nrows();
  }

  CosetTable standardize(CosetTable const& t) {
    if (!t.closed()) {
      throw TableNotClosed();
    }
    auto                     n = t.nrows();
    auto                     ncols = t.ncols();
    std::vector<coset_index> new_of(n, UNDEFINED), old_of;
    std::vector<coset_index> tree_parent(n, UNDEFINED);
    std::vector<std::uint32_t> tree_col(n, 0);
    old_of.reserve(n);
    new_of[0] = 0;
    old_of.push_back(0);
    for (std::size_t k = 0; k < old_of.size(); ++k) {
      auto old = old_of[k];
      for (std::uint32_t x = 0; x < ncols; ++x) {
        auto d = t.entry(old, x);
        if (new_of[d] == UNDEFINED) {
          new_of[d] = static_cast<coset_index>(old_of.size());
          tree_parent[old_of.size()] = static_cast<coset_index>(k);
          tree_col[old_of.size()] = x;
          old_of.push_back(d);
        }
      }
    }
    if (old_of.size() != n) {
      throw Error("coset table is not connected");
    }
    std::vector<coset_index> entries(n * ncols);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::uint32_t x = 0; x < ncols; ++x) {
        entries[k * ncols + x] = new_of[t.entry(old_of[k], x)];
      }
    }
    CosetTable s(std::vector<std::uint8_t>(t.involutive().begin(), t.involutive().end()),
                 std::move(entries));
    s._tree_parent = std::move(tree_parent);
    s._tree_col = std::move(tree_col);
    s._stats = t.stats();
    return s;
  }

  PermGroup permutation_rep(CosetTable const& t) {
    if (!t.closed()) {
      throw TableNotClosed();
    }
    auto              n = t.nrows();
    std::vector<Perm> gens;
    for (gen_index g = 0; g < t.ngens(); ++g) {
      std::vector<point> images(n);
      auto               col = t.column(Letter{g, false});
      for (coset_index c = 0; c < n; ++c) {
        images[c] = t.entry(c, col);
      }
      gens.emplace_back(std::move(images));
    }
    return PermGroup(n, std::move(gens));
  }

  std::uint64_t regular_word_order(CosetTable const& t, Word const& w) {
    if (!t.closed()) {
      throw TableNotClosed();
    }
    coset_index   c = 0;
    std::uint64_t k = 0;
    do {
      c = t.trace(c, w);
      ++k;
      if (k > t.nrows()) {
        throw Error("word does not cycle back to coset 0");
      }
    } while (c != 0);
    return k;
  }

  Presentation reidemeister_schreier(Presentation const&      p,
                                    CosetTable const&        t,
                                    std::vector<Word> const& subgroup) {
    if (!t.closed()) {
      throw TableNotClosed();
    }
    CosetTable const  std_table = t.has_transversal() ? t : standardize(t);
    auto              n = std_table.nrows();
    auto              ncols = std_table.ncols();
    auto const&       names = p.gen_names();
    // Schreier generator of each (coset, column); -1 marks tree edges.
    // Each edge is named in its canonical orientation: the positive column
    // for non-involutive generators, the smaller endpoint otherwise.
    std::vector<std::int64_t> gen_of(n * ncols, -1);
    std::vector<std::uint8_t> flags;
    Presentation              q;
    for (coset_index c = 0; c < n; ++c) {
      for (std::uint32_t x = 0; x < ncols; ++x) {
        if (std_table.is_tree_edge(c, x)) {
          continue;
        }
        auto l = std_table.column_letter(x);
        auto d = std_table.entry(c, x);
        bool involutive = p.is_involutive(l.gen);
        bool canonical = involutive ? c <= d : !l.inverse;
        if (!canonical) {
          continue;
        }
        bool self_inverse = involutive && c == d;
        auto id = q.add_generator(
            "s" + std::to_string(c) + "_" + (l.gen < names.size() ? names[l.gen] : std::to_string(l.gen)),
            self_inverse);
        gen_of[std::size_t(c) * ncols + x] = id;
      }
    }
    auto rewrite = [&](coset_index c, Word const& w) {
      Word out;
      for (auto const& l : w) {
        auto x = std_table.column(l);
        auto d = std_table.entry(c, x);
        if (!std_table.is_tree_edge(c, x)) {
          auto id = gen_of[std::size_t(c) * ncols + x];
          if (id >= 0) {
            out.push_back(Letter{static_cast<gen_index>(id), false});
          } else {
            auto back = gen_of[std::size_t(d) * ncols + std_table.inverse_column(x)];
            out.push_back(Letter{static_cast<gen_index>(back), true});
          }
        }
        c = d;
      }
      return q.reduce(out);
    };
    std::set<Word> seen(q.relators().begin(), q.relators().end());
    for (coset_index c = 0; c < n; ++c) {
      for (auto const& r : p.relators()) {
        auto w = rewrite(c, r);
        if (!w.empty() && seen.insert(w).second) {
          q.add_relator(w);
        }
      }
    }
    if (!subgroup.empty()) {
      std::vector<Word> rewritten;
      for (auto const& w : subgroup) {
        p.validate(w);
        if (std_table.trace(0, w) != 0) {
          throw Error("subgroup generator does not fix coset 0");
        }
        rewritten.push_back(rewrite(0, p.reduce(w)));
      }
      q.add_subgroup("GENS", std::move(rewritten));
    }
    return q;
  }

  namespace {
    constexpr std::array<char, 4> TABLE_MAGIC{'T', 'C', 'X', 'T'};
    constexpr std::uint32_t       TABLE_VERSION = 1;

    void put_u32(std::ostream& out, std::uint32_t x) {
      char b[4];
      for (int i = 0; i < 4; ++i) {
        b[i] = static_cast<char>((x >> (8 * i)) & 0xFF);
      }
      out.write(b, 4);
    }

    std::uint32_t get_u32(std::istream& in, std::size_t& offset) {
      unsigned char b[4];
      if (!in.read(reinterpret_cast<char*>(b), 4)) {
        throw ParseError("truncated table", 0, offset);
      }
      offset += 4;
      return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16
             | std::uint32_t(b[3]) << 24;
    }
  }  // namespace

  void write_table_binary(CosetTable const& t, std::ostream& out) {
    out.write(TABLE_MAGIC.data(), TABLE_MAGIC.size());
    put_u32(out, TABLE_VERSION);
    put_u32(out, static_cast<std::uint32_t>(t.ngens()));
    put_u32(out, static_cast<std::uint32_t>(t.nrows()));
    for (auto f : t.involutive()) {
      out.put(f ? 1 : 0);
    }
    for (auto e : t.entries()) {
      put_u32(out, e);
    }
  }

  CosetTable read_table_binary(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), 4) || magic != TABLE_MAGIC) {
      throw ParseError("not a coset table file", 0, 0);
    }
    std::size_t offset = 4;
    if (get_u32(in, offset) != TABLE_VERSION) {
      throw ParseError("unsupported table version", 0, 4);
    }
    auto ngens = get_u32(in, offset);
    auto nrows = get_u32(in, offset);
    std::vector<std::uint8_t> inv(ngens);
    std::size_t               ncols = 0;
    for (auto& f : inv) {
      int c = in.get();
      if (c != 0 && c != 1) {
        throw ParseError(c == EOF ? "truncated table" : "bad involution flag", 0, offset);
      }
      f = static_cast<std::uint8_t>(c);
      ncols += f ? 1 : 2;
      ++offset;
    }
    std::vector<coset_index> entries(std::size_t(nrows) * ncols);
    for (auto& e : entries) {
      e = get_u32(in, offset);
      if (e >= nrows) {
        throw TableNotClosed();
      }
    }
    if (ncols == 0 && nrows != 1) {
      throw ParseError("table without columns must have one row", 0, 12);
    }
    CosetTable t(std::move(inv), std::move(entries));
    if (!t.closed() || !t.consistent()) {
      throw TableNotClosed();
    }
    return standardize(t);
  }

}  // namespace tcx
