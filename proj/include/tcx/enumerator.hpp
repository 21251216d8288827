#ifndef TCX_ENUMERATOR_HPP_
#define TCX_ENUMERATOR_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcx/perm_group.hpp"
#include "tcx/presentation.hpp"
#include "tcx/word.hpp"

namespace tcx {

  using coset_index = std::uint32_t;

  inline constexpr coset_index UNDEFINED = 0xFFFFFFFFu;

  enum class Strategy { felsch, hlt, hlt_lookahead };

  std::string        to_string(Strategy s);
  // Accepts "felsch", "hlt", "hlt-lookahead" and "hlt_lookahead".
  Strategy           parse_strategy(std::string const& name);

  struct EnumerationStats {
    Strategy      strategy = Strategy::felsch;
    std::uint64_t defined = 0;       // cosets ever defined
    std::uint64_t coincidences = 0;  // cosets killed by coincidences
    std::uint64_t max_live = 0;
    std::uint64_t compactions = 0;
    std::uint64_t lookaheads = 0;
    double        seconds = 0;
  };

  struct ProgressInfo {
    std::uint64_t live;
    std::uint64_t defined;
    std::uint64_t coincidences;
    double        seconds;
  };

  struct EnumerationLimits {
    // Cap on allocated rows, live or awaiting compaction.
    std::size_t max_cosets = std::size_t(1) << 26;
    // Unset: felsch up to 10^6 rows, hlt_lookahead above.
    std::optional<Strategy> strategy;

    std::function<void(ProgressInfo const&)> progress;
    std::chrono::milliseconds progress_interval{std::chrono::seconds(10)};

    Strategy effective_strategy() const {
      if (strategy) {
        return *strategy;
      }
      return max_cosets <= 1'000'000 ? Strategy::felsch : Strategy::hlt_lookahead;
    }
  };

  // Coset table of a subgroup. Columns are laid out per generator: one
  // column for an involutive generator, two (g, g^-1) otherwise.
  //
  // Tables returned by enumerate() are closed and standardized: coset 0 is
  // the subgroup, the others are numbered in breadth-first order scanning
  // columns left to right, and the tree of first visits is recorded as a
  // Schreier transversal.
  class CosetTable {
   public:
    CosetTable(std::vector<std::uint8_t> involutive,
               std::vector<coset_index>  entries);

    std::size_t ngens() const noexcept {
      return _involutive.size();
    }
    std::size_t ncols() const noexcept {
      return _inverse_col.size();
    }
    std::size_t nrows() const noexcept {
      return ncols() == 0 ? 1 : _entries.size() / ncols();
    }
    InvolutionFlags involutive() const noexcept {
      return _involutive;
    }

    std::uint32_t column(Letter l) const {
      return _first_col[l.gen] + ((l.inverse && !_involutive[l.gen]) ? 1 : 0);
    }
    std::uint32_t inverse_column(std::uint32_t col) const {
      return _inverse_col[col];
    }
    Letter column_letter(std::uint32_t col) const {
      return _col_letter[col];
    }

    coset_index entry(coset_index c, std::uint32_t col) const {
      return _entries[std::size_t(c) * ncols() + col];
    }
    coset_index act(coset_index c, Letter l) const {
      return entry(c, column(l));
    }
    // UNDEFINED if the trace runs into an undefined entry.
    coset_index trace(coset_index c, Word const& w) const;

    std::span<coset_index const> entries() const noexcept {
      return _entries;
    }

    bool closed() const noexcept;
    bool consistent() const noexcept;
    bool is_standard() const;

    // Transversal from the breadth-first tree; present on standardized
    // tables.
    bool has_transversal() const noexcept {
      return !_tree_parent.empty();
    }
    // (parent coset, column) of the tree edge reaching c; c = parent * col.
    std::pair<coset_index, std::uint32_t> tree_edge(coset_index c) const;
    bool  is_tree_edge(coset_index c, std::uint32_t col) const;
    Word  representative(coset_index c) const;

    EnumerationStats const& stats() const noexcept {
      return _stats;
    }
    void set_stats(EnumerationStats const& s) {
      _stats = s;
    }

    // 64-bit FNV-1a over ngens, ncols and the entries.
    std::uint64_t hash() const noexcept;

    friend bool operator==(CosetTable const& a, CosetTable const& b) {
      return a._involutive == b._involutive && a._entries == b._entries;
    }

   private:
    friend CosetTable standardize(CosetTable const&);

    std::vector<std::uint8_t>  _involutive;
    std::vector<std::uint32_t> _first_col;
    std::vector<std::uint32_t> _inverse_col;
    std::vector<Letter>        _col_letter;
    std::vector<coset_index>   _entries;
    std::vector<coset_index>   _tree_parent;
    std::vector<std::uint32_t> _tree_col;
    EnumerationStats           _stats;
  };

  // Todd-Coxeter enumeration of the cosets of the subgroup generated by the
  // given words. Throws CosetLimitExceeded when limits.max_cosets rows do not
  // suffice and InvalidWord for letters outside the alphabet.
  CosetTable enumerate(Presentation const&      p,
                       std::vector<Word> const& subgroup,
                       EnumerationLimits const& limits = {});

  CosetTable enumerate(Presentation const&      p,
                       std::string const&       subgroup_name,
                       EnumerationLimits const& limits = {});

  // Number of live cosets. Throws TableNotClosed.
  std::size_t index(CosetTable const& t);

  // Renumbers cosets in breadth-first order from coset 0 and records the
  // Schreier transversal. Requires a closed table.
  CosetTable standardize(CosetTable const& t);

  // Action of each generator on the cosets. Throws TableNotClosed.
  PermGroup permutation_rep(CosetTable const& t);

  // Presentation of the subgroup on Schreier generators, one per non-tree
  // edge of the transversal, with relators p's relators rewritten from every
  // coset. When given, the subgroup's original generators, rewritten, are
  // recorded as subgroup "GENS".
  Presentation reidemeister_schreier(Presentation const&      p,
                                     CosetTable const&        t,
                                     std::vector<Word> const& subgroup = {});

  // Binary table layout, little-endian: "TCXT", u32 version (1), u32 ngens,
  // u32 nrows, ngens involution flag bytes, then nrows * ncols u32 entries
  // row by row.
  void       write_table_binary(CosetTable const& t, std::ostream& out);
  // Reads the layout above and standardizes. Throws ParseError (line 0,
  // column = byte offset) on a malformed stream and TableNotClosed when the
  // entries do not form a closed table.
  CosetTable read_table_binary(std::istream& in);

  // Order of the element represented by w in a table over the trivial
  // subgroup (the length of the cycle of w through coset 0).
  std::uint64_t regular_word_order(CosetTable const& t, Word const& w);

}  // namespace tcx

#endif  // TCX_ENUMERATOR_HPP_
