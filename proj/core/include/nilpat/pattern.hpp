#pragma once

// Zero-nonzero and sign patterns, and the combinatorics of their digraphs.
//
// Positions are 1-based throughout. Vertex i of the digraph is row/column i;
// a star at (i, j) is the arc i -> j and a diagonal star is a loop.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilpat/error.hpp"
#include "nilpat/position.hpp"

namespace nilpat {

class ZnzPattern {
 public:
  static constexpr int kMaxOrder = 8;

  ZnzPattern() = default;
  /// The all-zero pattern. Error(order_too_large) past kMaxOrder,
  /// Error(order_too_small) below 1.
  explicit ZnzPattern(int n);
  static ZnzPattern from_positions(int n, std::span<const Position> stars);
  /// Rows of '*'/'0' (or '+'/'-'/'0'), e.g. {"**0", "*0*", "0**"}.
  static ZnzPattern from_rows(std::span<const std::string_view> rows);
  static ZnzPattern from_rows(std::initializer_list<std::string_view> rows);

  int order() const noexcept { return n_; }
  bool is_signed() const noexcept { return signed_; }

  bool has(int row, int col) const noexcept { return (stars_ >> bit(row, col)) & 1U; }
  bool has(Position p) const noexcept { return has(p.row, p.col); }
  /// -1 for a negative entry of a sign pattern, otherwise +1.
  int sign(int row, int col) const noexcept { return ((negative_ >> bit(row, col)) & 1U) ? -1 : 1; }

  void set(int row, int col, bool star);
  /// Turns the pattern into a sign pattern; `sign` is +1 or -1. The position
  /// must hold a star.
  void set_sign(int row, int col, int sign);

  /// Stars in row-major order.
  std::vector<Position> stars() const;
  int star_count() const noexcept;
  /// Diagonal stars, ascending.
  std::vector<int> loops() const;
  int loop_count() const noexcept;
  /// Bit j-1 set iff (row, j) is a star.
  std::uint32_t row_mask(int row) const noexcept;

  /// Raw storage: bit (i-1)*n + (j-1) for position (i, j).
  std::uint64_t star_bits() const noexcept { return stars_; }
  std::uint64_t negative_bits() const noexcept { return negative_; }

  /// Row-major indicator string as a number, first cell most significant.
  /// Lexicographic order of patterns of equal order is numeric order of keys.
  std::uint64_t key() const noexcept;

  friend bool operator==(const ZnzPattern&, const ZnzPattern&) = default;
  /// Order, then key, then signs.
  friend std::strong_ordering operator<=>(const ZnzPattern& a, const ZnzPattern& b) noexcept;

 private:
  int bit(int row, int col) const noexcept { return (row - 1) * n_ + (col - 1); }

  int n_ = 0;
  bool signed_ = false;
  std::uint64_t stars_ = 0;
  std::uint64_t negative_ = 0;
};

/// Text format: n lines of exactly n symbols, '\n'-separated, one optional
/// trailing newline. Errors: RaggedInput, MixedAlphabet, BadSymbol,
/// OrderTooLarge.
ZnzPattern parse_pattern(std::string_view text);
/// Inverse of parse_pattern, with a trailing newline.
std::string format_pattern(const ZnzPattern& a);
/// The rows of format_pattern without newlines.
std::vector<std::string> pattern_rows(const ZnzPattern& a);

struct SimpleCycle {
  /// Canonical rotation: least vertex first.
  std::vector<int> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  std::uint32_t vertex_mask() const noexcept;
  friend auto operator<=>(const SimpleCycle&, const SimpleCycle&) = default;
};

/// All simple cycles of length k, sorted. k = 1 gives the loops.
std::vector<SimpleCycle> simple_cycles(const ZnzPattern& a, int k);
/// All simple cycles, by length then vertex sequence.
std::vector<SimpleCycle> simple_cycles(const ZnzPattern& a);

/// Tarjan's algorithm. Components are in a topological order of the
/// condensation (arcs only go from earlier to later components), ties broken
/// by smallest vertex; vertices inside a component are ascending.
std::vector<std::vector<int>> strongly_connected_components(const ZnzPattern& a);
bool is_irreducible(const ZnzPattern& a);

/// Number of permutations sigma with every (i, sigma(i)) a star.
std::uint64_t transversal_count(const ZnzPattern& a);

/// P*A*P^T: the entry at (i, j) moves to (perm[i-1], perm[j-1]). `perm` is a
/// permutation of 1..n.
ZnzPattern permute(const ZnzPattern& a, std::span<const int> perm);

/// Least key over all permutation images (signs break ties).
/// Error(order_too_large) for n > 8.
ZnzPattern canonicalize(const ZnzPattern& a);
ZnzPattern transpose(const ZnzPattern& a);

/// The principal subpattern on `vertices` (in the given order), keeping signs.
ZnzPattern induced(const ZnzPattern& a, std::span<const int> vertices);

/// n loops plus the cycle 1 -> 2 -> ... -> n -> 1. Error(order_too_small)
/// for n < 3.
ZnzPattern an_family(int n);

/// One canonical representative per class of irreducible order-n patterns,
/// sorted by key. Error(order_too_large) for n > 4.
std::vector<ZnzPattern> enumerate_irreducible(int n);

}  // namespace nilpat
