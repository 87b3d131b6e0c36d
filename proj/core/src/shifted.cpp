#include "schubert/shifted.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

MarkedWord hat_word(const MarkedWord& w) {
  MarkedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->marked) {
      out.push_back({it->value, false});
    } else {
      out.push_back({it->value + 1, true});
    }
  }
  return out;
}

bool is_lrs_word(const MarkedWord& w) {
  MarkedWord doubled = w;
  MarkedWord hw = hat_word(w);
  doubled.insert(doubled.end(), hw.begin(), hw.end());

  int maxv = 0;
  for (const MarkedSymbol& s : doubled) maxv = std::max(maxv, s.value);
  std::vector<int> unmarked(maxv + 2, 0);
  for (const MarkedSymbol& s : doubled) {
    if (s.value >= 2 && unmarked[s.value - 1] <= unmarked[s.value]) return false;
    if (!s.marked) ++unmarked[s.value];
  }

  // last i' in w must be followed by an unmarked i within w
  std::vector<int> last_marked(maxv + 2, -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].marked) last_marked[w[i].value] = static_cast<int>(i);
  }
  for (int v = 1; v <= maxv; ++v) {
    if (last_marked[v] < 0) continue;
    bool found = false;
    for (std::size_t i = last_marked[v] + 1; i < w.size(); ++i) {
      if (w[i].value == v && !w[i].marked) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

MarkedTableau::MarkedTableau(SkewShape shape, std::vector<MarkedSymbol> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (shape_.flavor() != DiagramFlavor::shifted) {
    throw std::invalid_argument("marked tableaux live on shifted shapes");
  }
  if (static_cast<int>(entries_.size()) != shape_.cell_count()) {
    throw std::invalid_argument("marked tableau entry count does not match shape");
  }
  row_offset_.assign(shape_.rows() + 2, 0);
  int idx = 0;
  for (int i = 1; i <= shape_.rows(); ++i) {
    row_offset_[i] = idx;
    idx += std::max(0, shape_.row_last_col(i) - shape_.row_first_col(i) + 1);
  }
  row_offset_[shape_.rows() + 1] = idx;

  std::map<std::pair<int, int>, int> marked_in_row, unmarked_in_col;
  for (const Cell& c : shape_.cells()) {
    MarkedSymbol s = at(c);
    if (s.value < 1) throw std::invalid_argument("marked symbols must have positive value");
    if (shape_.contains({c.row, c.col + 1}) && s > at({c.row, c.col + 1})) {
      throw std::invalid_argument("marked tableau rows must weakly increase");
    }
    if (shape_.contains({c.row + 1, c.col}) && s > at({c.row + 1, c.col})) {
      throw std::invalid_argument("marked tableau columns must weakly increase");
    }
    if (s.marked && ++marked_in_row[{c.row, s.value}] > 1) {
      throw std::invalid_argument("at most one marked symbol per value and row");
    }
    if (!s.marked && ++unmarked_in_col[{c.col, s.value}] > 1) {
      throw std::invalid_argument("at most one unmarked symbol per value and column");
    }
  }
}

MarkedSymbol MarkedTableau::at(Cell c) const {
  if (!shape_.contains(c)) throw std::out_of_range("cell outside tableau shape");
  return entries_[row_offset_[c.row] + (c.col - shape_.row_first_col(c.row))];
}

MarkedWord MarkedTableau::word() const {
  MarkedWord w;
  w.reserve(entries_.size());
  for (const Cell& c : shape_.reading_order()) w.push_back(at(c));
  return w;
}

std::vector<int> MarkedTableau::content() const {
  std::vector<int> counts;
  for (const MarkedSymbol& s : entries_) {
    if (s.value > static_cast<int>(counts.size())) counts.resize(s.value, 0);
    ++counts[s.value - 1];
  }
  return counts;
}

std::string MarkedTableau::to_text() const {
  if (entries_.empty()) return "(empty)\n";
  std::ostringstream out;
  for (int i = 1; i <= shape_.rows(); ++i) {
    for (int j = 1; j <= shape_.row_last_col(i); ++j) {
      if (j > 1) out << ' ';
      if (shape_.contains({i, j})) {
        std::string s = at({i, j}).to_string();
        out << s << (s.size() == 1 ? " " : "");
      } else {
        out << ". ";
      }
    }
    out << '\n';
  }
  return out.str();
}

bool is_lrs_tableau(const MarkedTableau& t) { return is_lrs_word(t.word()); }

namespace {

struct LrsEnumerator {
  const SkewShape& shape;
  std::vector<int> remaining;  // per value; empty means unbounded
  int max_value;
  std::vector<Cell> order;
  std::vector<int> right_of, above_of, rowmajor_of;
  std::vector<int> unmarked_prefix;
  std::vector<std::map<int, int>> marked_in_row;    // row -> value counts
  std::map<std::pair<int, int>, int> unmarked_in_col;
  std::vector<MarkedSymbol> values;
  std::vector<MarkedTableau> out;

  LrsEnumerator(const SkewShape& s, std::vector<int> content, int maxv)
      : shape(s), remaining(std::move(content)), max_value(maxv) {
    order = shape.reading_order();
    unmarked_prefix.assign(max_value + 2, 0);
    marked_in_row.assign(shape.rows() + 2, {});
    values.assign(order.size(), MarkedSymbol{});
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
    Cell c = order[idx];
    int hi_key = right_of[idx] >= 0 ? values[right_of[idx]].key() : 2 * max_value;
    int lo_key = above_of[idx] >= 0 ? values[above_of[idx]].key() : 1;
    for (int key = lo_key; key <= hi_key; ++key) {
      MarkedSymbol s{(key + 1) / 2, key % 2 == 1};
      if (!remaining.empty() && remaining[s.value - 1] == 0) continue;
      if (s.marked && marked_in_row[c.row][s.value] > 0) continue;
      if (!s.marked && unmarked_in_col[{c.col, s.value}] > 0) continue;
      // word-prefix part of LRS condition (i)
      if (s.value >= 2 && unmarked_prefix[s.value - 1] <= unmarked_prefix[s.value]) continue;
      values[idx] = s;
      if (!remaining.empty()) --remaining[s.value - 1];
      if (s.marked) {
        ++marked_in_row[c.row][s.value];
      } else {
        ++unmarked_in_col[{c.col, s.value}];
        ++unmarked_prefix[s.value];
      }
      run(idx + 1);
      if (!remaining.empty()) ++remaining[s.value - 1];
      if (s.marked) {
        --marked_in_row[c.row][s.value];
      } else {
        --unmarked_in_col[{c.col, s.value}];
        --unmarked_prefix[s.value];
      }
    }
  }

  void emit() {
    MarkedWord w(values.begin(), values.end());
    if (!is_lrs_word(w)) return;
    std::vector<MarkedSymbol> entries(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) entries[rowmajor_of[i]] = values[i];
    out.emplace_back(shape, std::move(entries));
  }
};

}  // namespace

std::vector<MarkedTableau> enumerate_lrs(const SkewShape& shape,
                                         const std::vector<int>& content) {
  if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("content counts must be nonnegative");
  }
  if (std::accumulate(content.begin(), content.end(), 0) != shape.cell_count()) {
    return {};
  }
  LrsEnumerator e(shape, content, std::max<int>(content.size(), 1));
  e.run(0);
  return std::move(e.out);
}

std::vector<MarkedTableau> enumerate_lrs_all(const SkewShape& shape, int max_value) {
  LrsEnumerator e(shape, {}, std::max(max_value, 1));
  e.run(0);
  return std::move(e.out);
}

long long lrs_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu, int n, Convention convention) {
  AmbientSpace space = AmbientSpace::type_b(n);
  space.require_member(lambda, "lambda");
  space.require_member(mu, "mu");
  space.require_member(nu, "nu");
  if (convention == Convention::paper_form) {
    Partition lv = space.dual(lambda);
    if (!lv.contains(mu)) return 0;
    Partition nv = space.dual(nu);
    std::vector<int> content(nv.parts().begin(), nv.parts().end());
    return static_cast<long long>(
        enumerate_lrs(SkewShape(lv, mu, DiagramFlavor::shifted), content).size());
  }
  if (!nu.contains(lambda) || lambda.weight() + mu.weight() != nu.weight()) return 0;
  std::vector<int> content(mu.parts().begin(), mu.parts().end());
  return static_cast<long long>(
      enumerate_lrs(SkewShape(nu, lambda, DiagramFlavor::shifted), content).size());
}

}  // namespace schubert
