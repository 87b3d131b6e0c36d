#include "schubert/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

Tableau::Tableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.cell_count()) {
    throw std::invalid_argument("tableau entry count does not match shape");
  }
  row_offset_.assign(shape_.rows() + 2, 0);
  int idx = 0;
  for (int i = 1; i <= shape_.rows(); ++i) {
    row_offset_[i] = idx;
    idx += std::max(0, shape_.row_last_col(i) - shape_.row_first_col(i) + 1);
  }
  row_offset_[shape_.rows() + 1] = idx;
  for (const Cell& c : shape_.cells()) {
    int v = at(c);
    if (v < 1) throw std::invalid_argument("tableau entries must be positive");
    if (shape_.contains({c.row, c.col + 1}) && v > at({c.row, c.col + 1})) {
      throw std::invalid_argument("tableau rows must weakly increase");
    }
    if (shape_.contains({c.row + 1, c.col}) && v >= at({c.row + 1, c.col})) {
      throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

int Tableau::at(Cell c) const {
  if (!shape_.contains(c)) throw std::out_of_range("cell outside tableau shape");
  return entries_[row_offset_[c.row] + (c.col - shape_.row_first_col(c.row))];
}

Word Tableau::word() const {
  Word w;
  w.reserve(entries_.size());
  for (const Cell& c : shape_.reading_order()) w.push_back(at(c));
  return w;
}

std::vector<int> Tableau::content() const {
  std::vector<int> counts;
  for (int v : entries_) {
    if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
    ++counts[v - 1];
  }
  return counts;
}

std::string Tableau::to_text() const {
  if (entries_.empty()) return "(empty)\n";
  std::ostringstream out;
  for (int i = 1; i <= shape_.rows(); ++i) {
    for (int j = 1; j <= shape_.row_last_col(i); ++j) {
      if (j > 1) out << ' ';
      if (shape_.contains({i, j})) {
        out << at({i, j});
      } else {
        out << '.';
      }
    }
    out << '\n';
  }
  return out.str();
}

Word word_of(const Tableau& t) { return t.word(); }

bool is_lattice_word(const Word& w) {
  std::vector<int> counts;
  for (int v : w) {
    if (v < 1) return false;
    if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
    if (v > 1 && counts[v - 1] + 1 > counts[v - 2]) return false;
    ++counts[v - 1];
  }
  return true;
}

bool is_lr_tableau(const Tableau& t) { return is_lattice_word(t.word()); }

namespace {

// Backtracking fill in reading order. The lattice condition is
// prefix-monotone in this order, so violations prune immediately.
struct LrEnumerator {
  const SkewShape& shape;
  std::vector<int> remaining;  // per value; empty means unbounded
  int max_entry;
  std::vector<Cell> order;
  std::vector<int> right_of;     // reading index of the right neighbor, -1 if none
  std::vector<int> above_of;     // reading index of the cell above, -1 if none
  std::vector<int> rowmajor_of;  // row-major position of each reading index
  std::vector<int> prefix_count;
  std::vector<int> values;  // by reading-order index
  std::vector<Tableau> out;

  LrEnumerator(const SkewShape& s, std::vector<int> content, int maxv)
      : shape(s), remaining(std::move(content)), max_entry(maxv) {
    order = shape.reading_order();
    prefix_count.assign(max_entry + 1, 0);
    values.assign(order.size(), 0);
    std::vector<Cell> rowmajor = shape.cells();
    auto index_of = [&](Cell c) -> int {
      auto it = std::lower_bound(order.begin(), order.end(), c,
                                 [](const Cell& a, const Cell& b) {
                                   return a.row != b.row ? a.row < b.row : a.col > b.col;
                                 });
      return (it != order.end() && *it == c) ? static_cast<int>(it - order.begin()) : -1;
    };
    right_of.resize(order.size());
    above_of.resize(order.size());
    rowmajor_of.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      right_of[i] = index_of({order[i].row, order[i].col + 1});
      above_of[i] = index_of({order[i].row - 1, order[i].col});
      auto it = std::lower_bound(rowmajor.begin(), rowmajor.end(), order[i]);
      rowmajor_of[i] = static_cast<int>(it - rowmajor.begin());
    }
  }

  void run(std::size_t idx) {
    if (idx == order.size()) {
      emit();
      return;
    }
    // the right neighbor and the cell above were placed earlier
    int hi = right_of[idx] >= 0 ? values[right_of[idx]] : max_entry;
    int lo = above_of[idx] >= 0 ? values[above_of[idx]] + 1 : 1;
    for (int v = lo; v <= hi; ++v) {
      if (!remaining.empty() && remaining[v - 1] == 0) continue;
      if (v > 1 && prefix_count[v] + 1 > prefix_count[v - 1]) continue;
      values[idx] = v;
      ++prefix_count[v];
      if (!remaining.empty()) --remaining[v - 1];
      run(idx + 1);
      if (!remaining.empty()) ++remaining[v - 1];
      --prefix_count[v];
    }
  }

  void emit() {
    std::vector<int> entries(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) entries[rowmajor_of[i]] = values[i];
    out.emplace_back(shape, std::move(entries));
  }
};

}  // namespace

std::vector<Tableau> enumerate_lr(const SkewShape& shape,
                                  const std::vector<int>& content) {
  if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("content counts must be nonnegative");
  }
  if (std::accumulate(content.begin(), content.end(), 0) != shape.cell_count()) {
    return {};
  }
  int maxv = static_cast<int>(content.size());
  LrEnumerator e(shape, content, std::max(maxv, 1));
  e.run(0);
  return std::move(e.out);
}

std::vector<Tableau> enumerate_lr_all(const SkewShape& shape, int max_entry) {
  LrEnumerator e(shape, {}, std::max(max_entry, 1));
  e.run(0);
  return std::move(e.out);
}

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu, const AmbientSpace& space,
                         Convention convention) {
  if (space.type() != SpaceType::type_a) {
    throw std::invalid_argument("lr_coefficient requires a type A space");
  }
  space.require_member(lambda, "lambda");
  space.require_member(mu, "mu");
  space.require_member(nu, "nu");
  if (convention == Convention::paper_form) {
    Partition lv = space.dual(lambda);
    if (!lv.contains(mu)) return 0;
    Partition nv = space.dual(nu);
    std::vector<int> content(nv.parts().begin(), nv.parts().end());
    return static_cast<long long>(
        enumerate_lr(SkewShape(lv, mu, DiagramFlavor::young), content).size());
  }
  if (!nu.contains(lambda) || lambda.weight() + mu.weight() != nu.weight()) return 0;
  std::vector<int> content(mu.parts().begin(), mu.parts().end());
  return static_cast<long long>(
      enumerate_lr(SkewShape(nu, lambda, DiagramFlavor::young), content).size());
}

}  // namespace schubert
