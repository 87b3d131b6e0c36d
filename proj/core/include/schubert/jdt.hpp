#pragma once

#include <vector>

#include "schubert/tableau.hpp"

namespace schubert {

/// Cells occupied by a hole during one slide, start through final position.
struct SlideTrace {
  Cell start;
  std::vector<Cell> path;
};

struct SlideResult {
  Tableau tableau;
  SlideTrace trace;
};

/// Inner corners of a skew shape: maximal cells of the inner diagram
/// (right and below neighbors outside the inner diagram). Works for both
/// flavors.
std::vector<Cell> inner_corners(const SkewShape& shape);

/// Cells addable to the outer diagram while staying inside the ambient
/// bounds; start positions for reverse slides.
std::vector<Cell> outer_corners(const SkewShape& shape, const AmbientSpace& space);

/// Forward jeu de taquin slide from an inner-corner hole. At each step the
/// hole swaps with its below neighbor a or right neighbor b, choosing below
/// when a <= b or b is absent. The result lives on a shape with one fewer
/// inner and one fewer outer cell.
SlideResult slide(const Tableau& t, Cell hole);

/// Exact inverse of slide, started from an outer corner.
SlideResult reverse_slide(const Tableau& t, Cell hole);

struct TransferResult {
  Partition new_index;  // lambda-tilde for forward, mu-tilde for reverse
  Tableau tableau;
  std::vector<SlideTrace> traces;
};

/// Slides the holes of mu~/mu (the inner shape of t relative to mu) through
/// the LR tableau t in right-to-left order; returns the LR tableau on
/// lambda~^v / mu together with lambda~.
TransferResult pieri_transfer(const Tableau& t, const Partition& mu,
                              const AmbientSpace& space);

/// Inverse transfer: reverse slides from the cells of lambda^v / lambda~^v
/// in left-to-right order.
TransferResult pieri_transfer_reverse(const Tableau& t, const Partition& lambda,
                                      const AmbientSpace& space);

/// Every cell of the later path lies strictly left of or weakly below every
/// position of the earlier path (sliding paths cannot cross).
bool paths_noncrossing(const SlideTrace& earlier, const SlideTrace& later);

}  // namespace schubert
