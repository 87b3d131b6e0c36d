// Shifted slides and the hole-strip transfer bijection. Slides run on a
// plain cell->symbol map; mid-transfer states are not partition-shaped, so
// shapes are only reassembled (and revalidated) once all holes have landed.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schubert/shifted.hpp"

namespace schubert {

namespace {

using EntryMap = std::map<Cell, MarkedSymbol>;

EntryMap entry_map(const MarkedTableau& t) {
  EntryMap m;
  for (const Cell& c : t.shape().cells()) m[c] = t.at(c);
  return m;
}

MarkedTableau from_map(const Partition& outer, const Partition& inner,
                       const EntryMap& entries) {
  SkewShape shape(outer, inner, DiagramFlavor::shifted);
  std::vector<MarkedSymbol> vals;
  vals.reserve(entries.size());
  for (const Cell& c : shape.cells()) {
    auto it = entries.find(c);
    if (it == entries.end()) throw std::logic_error("slide produced a ragged shape");
    vals.push_back(it->second);
  }
  if (vals.size() != entries.size()) {
    throw std::logic_error("slide produced entries outside the shape");
  }
  return MarkedTableau(shape, std::move(vals));
}

std::vector<Cell> run_forward(EntryMap& entries, Cell hole) {
  std::vector<Cell> path{hole};
  Cell cur = hole;
  while (true) {
    auto right = entries.find({cur.row, cur.col + 1});
    auto below = entries.find({cur.row + 1, cur.col});
    bool has_right = right != entries.end();
    bool has_below = below != entries.end();
    if (cur.row == cur.col && has_right && right->second.marked) {
      auto diag = entries.find({cur.row + 1, cur.col + 1});
      if (diag != entries.end() &&
          diag->second == MarkedSymbol{right->second.value, false}) {
        // special slide: u i' y i v  ->  u i i y v
        int i = right->second.value;
        entries[cur] = {i, false};
        right->second = {i, false};
        entries.erase(diag);
        cur = {cur.row + 1, cur.col + 1};
        path.push_back(cur);
        continue;
      }
    }
    if (has_below &&
        (!has_right || below->second < right->second ||
         (below->second == right->second && !below->second.marked))) {
      entries[cur] = below->second;
      entries.erase(below);
      cur = {cur.row + 1, cur.col};
    } else if (has_right) {
      entries[cur] = right->second;
      entries.erase(right);
      cur = {cur.row, cur.col + 1};
    } else {
      break;
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<Cell> run_reverse(EntryMap& entries, Cell hole) {
  std::vector<Cell> path{hole};
  Cell cur = hole;
  while (true) {
    auto above = entries.find({cur.row - 1, cur.col});
    auto left = entries.find({cur.row, cur.col - 1});
    bool has_above = above != entries.end();
    bool has_left = left != entries.end();
    if (cur.row == cur.col && has_above && !above->second.marked) {
      auto diag = entries.find({cur.row - 1, cur.col - 1});
      if (diag != entries.end() &&
          diag->second == MarkedSymbol{above->second.value, false}) {
        // inverse special slide: re-mark the diagonal entry
        int i = above->second.value;
        entries[cur] = {i, false};
        above->second = {i, true};
        entries.erase(diag);
        cur = {cur.row - 1, cur.col - 1};
        path.push_back(cur);
        continue;
      }
    }
    if (has_above &&
        (!has_left || above->second > left->second ||
         (above->second == left->second && !above->second.marked))) {
      entries[cur] = above->second;
      entries.erase(above);
      cur = {cur.row - 1, cur.col};
    } else if (has_left) {
      entries[cur] = left->second;
      entries.erase(left);
      cur = {cur.row, cur.col - 1};
    } else {
      break;
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<int> shrink_row(const Partition& p, int row) {
  std::vector<int> parts = p.parts();
  parts[row - 1] -= 1;
  return parts;
}

std::vector<int> grow_row(const Partition& p, int row) {
  std::vector<int> parts = p.parts();
  if (row > static_cast<int>(parts.size())) parts.resize(row, 0);
  parts[row - 1] += 1;
  return parts;
}

}  // namespace

ShiftedSlideResult shifted_slide(const MarkedTableau& t, Cell hole) {
  SkewShape inner(t.shape().inner(), Partition{}, DiagramFlavor::shifted);
  if (!inner.contains(hole) || inner.contains({hole.row, hole.col + 1}) ||
      inner.contains({hole.row + 1, hole.col})) {
    throw std::invalid_argument("shifted slide hole must be an inner corner");
  }
  auto entries = entry_map(t);
  std::vector<Cell> path = run_forward(entries, hole);
  Partition new_outer(shrink_row(t.shape().outer(), path.back().row));
  Partition new_inner(shrink_row(t.shape().inner(), hole.row));
  return {from_map(new_outer, new_inner, entries), {hole, std::move(path)}};
}

ShiftedSlideResult reverse_shifted_slide(const MarkedTableau& t, Cell hole) {
  const Partition& outer = t.shape().outer();
  Partition grown;
  try {
    grown = Partition(grow_row(outer, hole.row));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("reverse shifted slide hole must be an outer corner");
  }
  if (!grown.is_strict() || hole.col != outer.part(hole.row) + hole.row) {
    throw std::invalid_argument("reverse shifted slide hole must be an outer corner");
  }
  auto entries = entry_map(t);
  std::vector<Cell> path = run_reverse(entries, hole);
  Partition new_inner(grow_row(t.shape().inner(), path.back().row));
  return {from_map(grown, new_inner, entries), {hole, std::move(path)}};
}

bool valid_hole_marking(const std::vector<HoleCell>& holes) {
  if (holes.empty()) return true;
  std::map<Cell, bool> mark;
  for (const HoleCell& h : holes) mark[h.cell] = h.marked;
  std::map<int, int> marked_in_row;
  std::map<int, int> unmarked_in_col;
  for (const auto& [cell, m] : mark) {
    auto right = mark.find({cell.row, cell.col + 1});
    auto below = mark.find({cell.row + 1, cell.col});
    // o' < o: weakly increasing along rows and columns
    if (right != mark.end() && !m && right->second) return false;
    if (below != mark.end() && !m && below->second) return false;
    if (m && ++marked_in_row[cell.row] > 1) return false;
    if (!m && ++unmarked_in_col[cell.col] > 1) return false;
  }
  // word in reading order over o' < o, read as marked/unmarked value 1
  std::vector<Cell> order;
  for (const auto& [cell, m] : mark) order.push_back(cell);
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  MarkedWord w;
  for (const Cell& c : order) w.push_back({1, mark[c]});
  return is_lrs_word(w);
}

std::vector<HoleStrip> enumerate_hole_strips(const Partition& base, int p, int n,
                                             HoleSide /*side: marking rules coincide*/) {
  AmbientSpace space = AmbientSpace::type_b(n);
  std::vector<HoleStrip> out;
  for (const Partition& ext : horizontal_strip_successors(base, p, space)) {
    std::vector<Cell> cells = shifted_cells(ext, base);
    int count = static_cast<int>(cells.size());
    for (unsigned bits = 0; bits < (1u << count); ++bits) {
      std::vector<HoleCell> holes;
      holes.reserve(count);
      for (int i = 0; i < count; ++i) holes.push_back({cells[i], (bits >> i & 1) != 0});
      if (valid_hole_marking(holes)) out.push_back({ext, std::move(holes)});
    }
  }
  return out;
}

HoledTableau::HoledTableau(HoleSide side, Partition full_outer, Partition full_inner,
                           std::vector<HoleCell> holes, MarkedTableau base)
    : side_(side),
      full_outer_(std::move(full_outer)),
      full_inner_(std::move(full_inner)),
      holes_(std::move(holes)),
      base_(std::move(base)) {
  std::sort(holes_.begin(), holes_.end());
  const Partition& strip_outer =
      side_ == HoleSide::nw ? base_.shape().inner() : full_outer_;
  const Partition& strip_inner =
      side_ == HoleSide::nw ? full_inner_ : base_.shape().outer();
  if (side_ == HoleSide::nw ? base_.shape().outer() != full_outer_
                            : base_.shape().inner() != full_inner_) {
    throw std::invalid_argument("holed tableau base does not match the full shape");
  }
  if (!is_horizontal_strip(strip_inner, strip_outer)) {
    throw std::invalid_argument("holes must form a horizontal strip");
  }
  std::vector<Cell> expected = shifted_cells(strip_outer, strip_inner);
  if (expected.size() != holes_.size() ||
      !std::equal(expected.begin(), expected.end(), holes_.begin(),
                  [](const Cell& c, const HoleCell& h) { return c == h.cell; })) {
    throw std::invalid_argument("hole cells do not tile the border strip");
  }
  if (!valid_hole_marking(holes_)) {
    throw std::invalid_argument("invalid hole marking");
  }
  if (!is_lrs_tableau(base_)) {
    throw std::invalid_argument("holed tableau base must be an LRS tableau");
  }
}

std::string HoledTableau::to_text() const {
  SkewShape full(full_outer_, full_inner_, DiagramFlavor::shifted);
  std::map<Cell, std::string> symbols;
  for (const Cell& c : base_.shape().cells()) symbols[c] = base_.at(c).to_string();
  for (const HoleCell& h : holes_) symbols[h.cell] = h.marked ? "o'" : "o";
  std::ostringstream out;
  for (int i = 1; i <= full.rows(); ++i) {
    for (int j = 1; j <= full.row_last_col(i); ++j) {
      if (j > 1) out << ' ';
      auto it = symbols.find({i, j});
      std::string s = it != symbols.end() ? it->second : ".";
      out << s << (s.size() == 1 ? " " : "");
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct TransferState {
  EntryMap entries;
  std::vector<HoleCell> landed;
  std::vector<SlideTrace> traces;
};

bool touches_diagonal(const std::vector<Cell>& path) {
  return std::any_of(path.begin(), path.end(),
                     [](const Cell& c) { return c.row == c.col; });
}

}  // namespace

HoleTransferResult transfer_nw_to_se(const HoledTableau& h) {
  if (h.side() != HoleSide::nw) {
    throw std::invalid_argument("transfer_nw_to_se requires a NW-holed tableau");
  }
  std::vector<HoleCell> unmarked, marked;
  for (const HoleCell& hc : h.holes()) (hc.marked ? marked : unmarked).push_back(hc);
  std::sort(unmarked.begin(), unmarked.end(),
            [](const HoleCell& a, const HoleCell& b) { return a.cell.col > b.cell.col; });
  std::sort(marked.begin(), marked.end(),
            [](const HoleCell& a, const HoleCell& b) { return a.cell.row > b.cell.row; });
  std::vector<HoleCell> order = std::move(unmarked);
  order.insert(order.end(), marked.begin(), marked.end());

  TransferState st{entry_map(h.base()), {}, {}};
  Partition outer = h.full_outer();
  std::optional<Cell> prev_land;
  for (const HoleCell& hc : order) {
    std::vector<Cell> path = run_forward(st.entries, hc.cell);
    Cell land = path.back();
    bool mark = hc.marked;
    if (!mark && prev_land && land.row < prev_land->row) mark = true;
    st.landed.push_back({land, mark});
    prev_land = land;
    outer = Partition(shrink_row(outer, land.row));
    st.traces.push_back({hc.cell, std::move(path)});
  }
  MarkedTableau base = from_map(outer, h.full_inner(), st.entries);
  return {HoledTableau(HoleSide::se, h.full_outer(), h.full_inner(), st.landed,
                       std::move(base)),
          std::move(st.traces)};
}

HoleTransferResult transfer_se_to_nw(const HoledTableau& h) {
  if (h.side() != HoleSide::se) {
    throw std::invalid_argument("transfer_se_to_nw requires a SE-holed tableau");
  }
  std::vector<HoleCell> unmarked, marked;
  for (const HoleCell& hc : h.holes()) (hc.marked ? marked : unmarked).push_back(hc);
  std::sort(marked.begin(), marked.end(),
            [](const HoleCell& a, const HoleCell& b) { return a.cell.row < b.cell.row; });
  std::sort(unmarked.begin(), unmarked.end(),
            [](const HoleCell& a, const HoleCell& b) { return a.cell.col < b.cell.col; });
  std::vector<HoleCell> order = std::move(marked);
  order.insert(order.end(), unmarked.begin(), unmarked.end());

  TransferState st{entry_map(h.base()), {}, {}};
  Partition inner = h.full_inner();
  for (const HoleCell& hc : order) {
    std::vector<Cell> path = run_reverse(st.entries, hc.cell);
    Cell land = path.back();
    bool mark = hc.marked && !touches_diagonal(path);
    st.landed.push_back({land, mark});
    inner = Partition(grow_row(inner, land.row));
    st.traces.push_back({hc.cell, std::move(path)});
  }
  MarkedTableau base = from_map(h.full_outer(), inner, st.entries);
  return {HoledTableau(HoleSide::nw, h.full_outer(), h.full_inner(), st.landed,
                       std::move(base)),
          std::move(st.traces)};
}

bool paths_persistence_ok(const SlideTrace& first, const SlideTrace& second) {
  auto west_of = [&](Cell b) {
    return std::any_of(first.path.begin(), first.path.end(), [&](const Cell& p) {
      return p.col > b.col && p.row <= b.row;
    });
  };
  auto north_of = [&](Cell b) {
    return std::any_of(first.path.begin(), first.path.end(), [&](const Cell& p) {
      return p.row > b.row && p.col <= b.col;
    });
  };
  for (std::size_t i = 0; i + 1 < second.path.size(); ++i) {
    Cell q = second.path[i];
    Cell next = second.path[i + 1];
    if (west_of(q) && q.row != q.col && !west_of(next)) return false;
    if (north_of(q) && !north_of(next)) return false;
  }
  return true;
}

bool paths_persistence_reverse_ok(const SlideTrace& first, const SlideTrace& second) {
  auto east_of = [&](Cell b) {
    return std::any_of(first.path.begin(), first.path.end(), [&](const Cell& p) {
      return p.col < b.col && p.row >= b.row;
    });
  };
  auto south_of = [&](Cell b) {
    return std::any_of(first.path.begin(), first.path.end(), [&](const Cell& p) {
      return p.row < b.row && p.col >= b.col;
    });
  };
  for (std::size_t i = 0; i + 1 < second.path.size(); ++i) {
    Cell q = second.path[i];
    Cell next = second.path[i + 1];
    if (east_of(q) && !east_of(next)) return false;
    if (south_of(q) && q.row != q.col && !south_of(next)) return false;
  }
  return true;
}

}  // namespace schubert
