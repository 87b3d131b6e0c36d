#pragma once

#include <compare>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

/// 1-based (row, column), row 1 at the top.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class DiagramFlavor { young, shifted };

/// Skew diagram outer/inner, in ordinary (Young) or shifted coordinates.
/// Young: row i holds columns inner_i+1 .. outer_i.
/// Shifted: row i is indented by i-1, so columns inner_i+i .. outer_i+i-1;
/// both partitions must be strict.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner, DiagramFlavor flavor);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  DiagramFlavor flavor() const { return flavor_; }

  int rows() const { return outer_.length(); }
  /// Column range of row i as a half-open interval [first, last+1).
  int row_first_col(int i) const;
  int row_last_col(int i) const;

  bool contains(Cell c) const;
  int cell_count() const;

  /// Row-major, left to right within each row.
  std::vector<Cell> cells() const;
  /// Word order: rows top to bottom, right to left within each row.
  std::vector<Cell> reading_order() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
  DiagramFlavor flavor_;
};

/// Shifted cells of bigger/smaller for strict partitions.
std::vector<Cell> shifted_cells(const Partition& bigger, const Partition& smaller);

/// Edge-connected component structure of S(bigger/smaller).
/// N is one less than the number of components; when bigger/smaller is a
/// horizontal strip every component is checked to be a border strip
/// (no 2x2 block of cells).
struct BorderStripData {
  int components = 0;
  int N = 0;
};
BorderStripData border_strip_data(const Partition& bigger, const Partition& smaller);

}  // namespace schubert
