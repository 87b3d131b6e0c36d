#include "schubert/diagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

SkewShape::SkewShape(Partition outer, Partition inner, DiagramFlavor flavor)
    : outer_(std::move(outer)), inner_(std::move(inner)), flavor_(flavor) {
  if (!outer_.contains(inner_)) {
    throw std::invalid_argument("skew shape requires inner inside outer: " +
                                inner_.to_string() + " not inside " +
                                outer_.to_string());
  }
  if (flavor_ == DiagramFlavor::shifted &&
      (!outer_.is_strict() || !inner_.is_strict())) {
    throw std::invalid_argument("shifted shapes require strict partitions");
  }
}

int SkewShape::row_first_col(int i) const {
  int shift = flavor_ == DiagramFlavor::shifted ? i - 1 : 0;
  return inner_.part(i) + 1 + shift;
}

int SkewShape::row_last_col(int i) const {
  int shift = flavor_ == DiagramFlavor::shifted ? i - 1 : 0;
  return outer_.part(i) + shift;
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.row > rows()) return false;
  return c.col >= row_first_col(c.row) && c.col <= row_last_col(c.row);
}

int SkewShape::cell_count() const {
  return outer_.weight() - inner_.weight();
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int i = 1; i <= rows(); ++i) {
    for (int j = row_first_col(i); j <= row_last_col(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<Cell> SkewShape::reading_order() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int i = 1; i <= rows(); ++i) {
    for (int j = row_last_col(i); j >= row_first_col(i); --j) out.push_back({i, j});
  }
  return out;
}

std::vector<Cell> shifted_cells(const Partition& bigger, const Partition& smaller) {
  return SkewShape(bigger, smaller, DiagramFlavor::shifted).cells();
}

BorderStripData border_strip_data(const Partition& bigger, const Partition& smaller) {
  if (!bigger.contains(smaller)) {
    throw std::invalid_argument("border_strip_data requires smaller inside bigger");
  }
  if (!bigger.is_strict() || !smaller.is_strict()) {
    throw std::invalid_argument("border_strip_data requires strict partitions");
  }
  std::vector<Cell> strip = shifted_cells(bigger, smaller);
  if (strip.empty()) {
    throw std::invalid_argument("border_strip_data requires a nonempty strip");
  }
  std::set<Cell> cells(strip.begin(), strip.end());
  std::set<Cell> seen;
  int components = 0;
  for (const Cell& c : strip) {
    if (seen.count(c)) continue;
    ++components;
    std::vector<Cell> stack{c};
    seen.insert(c);
    while (!stack.empty()) {
      Cell cur = stack.back();
      stack.pop_back();
      const Cell nbrs[4] = {{cur.row + 1, cur.col},
                            {cur.row - 1, cur.col},
                            {cur.row, cur.col + 1},
                            {cur.row, cur.col - 1}};
      for (const Cell& nb : nbrs) {
        if (cells.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          stack.push_back(nb);
        }
      }
    }
  }
  if (is_horizontal_strip(smaller, bigger)) {
    // components of a Pieri strip are border strips: no 2x2 block
    for (const Cell& c : strip) {
      if (cells.count({c.row, c.col + 1}) && cells.count({c.row + 1, c.col}) &&
          cells.count({c.row + 1, c.col + 1})) {
        throw std::logic_error("border strip contains a 2x2 block");
      }
    }
  }
  return {components, components - 1};
}

}  // namespace schubert
