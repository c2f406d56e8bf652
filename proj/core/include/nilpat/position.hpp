#pragma once

#include <compare>

namespace nilpat {

/// A 1-based (row, column) matrix position.
struct Position {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

}  // namespace nilpat
