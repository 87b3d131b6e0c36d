#include "schubert/jdt.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace schubert {

namespace {

std::map<Cell, int> entry_map(const Tableau& t) {
  std::map<Cell, int> m;
  for (const Cell& c : t.shape().cells()) m[c] = t.at(c);
  return m;
}

Tableau from_map(const Partition& outer, const Partition& inner,
                 const std::map<Cell, int>& entries) {
  SkewShape shape(outer, inner, DiagramFlavor::young);
  std::vector<int> vals;
  vals.reserve(entries.size());
  for (const Cell& c : shape.cells()) {
    auto it = entries.find(c);
    if (it == entries.end()) throw std::logic_error("slide produced a ragged shape");
    vals.push_back(it->second);
  }
  if (vals.size() != entries.size()) {
    throw std::logic_error("slide produced entries outside the shape");
  }
  return Tableau(shape, std::move(vals));
}

std::vector<int> shrink_row(const Partition& p, int row) {
  std::vector<int> parts = p.parts();
  parts[row - 1] -= 1;
  return parts;
}

// One full forward slide over an entry map; shapes are adjusted by the
// caller. Returns the hole's path.
std::vector<Cell> run_forward(std::map<Cell, int>& entries, Cell hole) {
  std::vector<Cell> path{hole};
  Cell cur = hole;
  while (true) {
    auto below = entries.find({cur.row + 1, cur.col});
    auto right = entries.find({cur.row, cur.col + 1});
    bool has_below = below != entries.end();
    bool has_right = right != entries.end();
    if (has_below && (!has_right || below->second <= right->second)) {
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

std::vector<Cell> run_reverse(std::map<Cell, int>& entries, Cell hole) {
  std::vector<Cell> path{hole};
  Cell cur = hole;
  while (true) {
    auto above = entries.find({cur.row - 1, cur.col});
    auto left = entries.find({cur.row, cur.col - 1});
    bool has_above = above != entries.end();
    bool has_left = left != entries.end();
    if (has_above && (!has_left || above->second >= left->second)) {
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

}  // namespace

std::vector<Cell> inner_corners(const SkewShape& shape) {
  SkewShape inner(shape.inner(), Partition{}, shape.flavor());
  std::vector<Cell> out;
  for (const Cell& c : inner.cells()) {
    if (!inner.contains({c.row, c.col + 1}) && !inner.contains({c.row + 1, c.col})) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Cell> outer_corners(const SkewShape& shape, const AmbientSpace& space) {
  const Partition& outer = shape.outer();
  std::vector<Cell> out;
  for (int i = 1; i <= outer.length() + 1; ++i) {
    std::vector<int> parts = outer.parts();
    if (i > outer.length()) {
      parts.push_back(1);
    } else {
      parts[i - 1] += 1;
    }
    try {
      Partition grown{std::move(parts)};
      if (shape.flavor() == DiagramFlavor::shifted && !grown.is_strict()) continue;
      if (!space.contains(grown)) continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
    int shift = shape.flavor() == DiagramFlavor::shifted ? i - 1 : 0;
    out.push_back({i, outer.part(i) + 1 + shift});
  }
  return out;
}

SlideResult slide(const Tableau& t, Cell hole) {
  SkewShape inner(t.shape().inner(), Partition{}, DiagramFlavor::young);
  if (!inner.contains(hole) || inner.contains({hole.row, hole.col + 1}) ||
      inner.contains({hole.row + 1, hole.col})) {
    throw std::invalid_argument("slide hole must be an inner corner");
  }
  auto entries = entry_map(t);
  std::vector<Cell> path = run_forward(entries, hole);
  Partition new_outer(shrink_row(t.shape().outer(), path.back().row));
  Partition new_inner(shrink_row(t.shape().inner(), hole.row));
  return {from_map(new_outer, new_inner, entries), {hole, std::move(path)}};
}

SlideResult reverse_slide(const Tableau& t, Cell hole) {
  const Partition& outer = t.shape().outer();
  if (hole.col != outer.part(hole.row) + 1 ||
      (hole.row > 1 && outer.part(hole.row - 1) < hole.col)) {
    throw std::invalid_argument("reverse slide hole must be an outer corner");
  }
  auto entries = entry_map(t);
  std::vector<Cell> path = run_reverse(entries, hole);
  std::vector<int> grown = outer.parts();
  if (hole.row > outer.length()) grown.push_back(0);
  grown[hole.row - 1] += 1;
  std::vector<int> inner = t.shape().inner().parts();
  if (path.back().row > static_cast<int>(inner.size())) inner.resize(path.back().row, 0);
  inner[path.back().row - 1] += 1;
  return {from_map(Partition(std::move(grown)), Partition(std::move(inner)), entries),
          {hole, std::move(path)}};
}

TransferResult pieri_transfer(const Tableau& t, const Partition& mu,
                              const AmbientSpace& space) {
  if (space.type() != SpaceType::type_a) {
    throw std::invalid_argument("pieri_transfer requires a type A space");
  }
  if (!is_lr_tableau(t)) {
    throw std::invalid_argument("pieri_transfer requires an LR tableau");
  }
  const Partition& mu_tilde = t.shape().inner();
  if (!is_horizontal_strip(mu, mu_tilde)) {
    throw std::invalid_argument("inner shapes must differ by a horizontal strip");
  }
  // holes of mu~/mu in right-to-left order; a strip has one cell per column
  std::vector<Cell> holes =
      SkewShape(mu_tilde, mu, DiagramFlavor::young).cells();
  std::sort(holes.begin(), holes.end(),
            [](const Cell& a, const Cell& b) { return a.col > b.col; });

  auto entries = entry_map(t);
  Partition outer = t.shape().outer();
  Partition inner = mu_tilde;
  std::vector<SlideTrace> traces;
  for (const Cell& h : holes) {
    std::vector<Cell> path = run_forward(entries, h);
    outer = Partition(shrink_row(outer, path.back().row));
    inner = Partition(shrink_row(inner, h.row));
    traces.push_back({h, std::move(path)});
  }
  Tableau result = from_map(outer, inner, entries);
  if (!is_horizontal_strip(outer, t.shape().outer())) {
    throw std::logic_error("transfer did not vacate a horizontal strip");
  }
  return {space.dual(outer), std::move(result), std::move(traces)};
}

TransferResult pieri_transfer_reverse(const Tableau& t, const Partition& lambda,
                                      const AmbientSpace& space) {
  if (space.type() != SpaceType::type_a) {
    throw std::invalid_argument("pieri_transfer_reverse requires a type A space");
  }
  if (!is_lr_tableau(t)) {
    throw std::invalid_argument("pieri_transfer_reverse requires an LR tableau");
  }
  Partition lambda_v = space.dual(lambda);
  const Partition& outer_now = t.shape().outer();  // lambda~^v
  if (!is_horizontal_strip(outer_now, lambda_v)) {
    throw std::invalid_argument("outer shapes must differ by a horizontal strip");
  }
  // reverse slides start from the vacated strip in left-to-right order
  std::vector<Cell> holes =
      SkewShape(lambda_v, outer_now, DiagramFlavor::young).cells();
  std::sort(holes.begin(), holes.end(),
            [](const Cell& a, const Cell& b) { return a.col < b.col; });

  auto entries = entry_map(t);
  std::vector<int> outer = outer_now.parts();
  std::vector<int> inner = t.shape().inner().parts();
  std::vector<SlideTrace> traces;
  for (const Cell& h : holes) {
    if (h.row > static_cast<int>(outer.size())) outer.resize(h.row, 0);
    std::vector<Cell> path = run_reverse(entries, h);
    outer[h.row - 1] += 1;
    if (path.back().row > static_cast<int>(inner.size())) inner.resize(path.back().row, 0);
    inner[path.back().row - 1] += 1;
    traces.push_back({h, std::move(path)});
  }
  Partition mu_tilde{std::move(inner)};
  Tableau result = from_map(Partition(std::move(outer)), mu_tilde, entries);
  if (!is_horizontal_strip(t.shape().inner(), mu_tilde)) {
    throw std::logic_error("reverse transfer did not restore a horizontal strip");
  }
  return {mu_tilde, std::move(result), std::move(traces)};
}

bool paths_noncrossing(const SlideTrace& earlier, const SlideTrace& later) {
  for (const Cell& pos : earlier.path) {
    for (const Cell& q : later.path) {
      if (!(q.col < pos.col || q.row >= pos.row)) return false;
    }
  }
  return true;
}

}  // namespace schubert
