#pragma once

#include <string>
#include <vector>

#include "schubert/jdt.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

/// Symbol of the marked alphabet 1' < 1 < 2' < 2 < ...; i' is "marked".
struct MarkedSymbol {
  int value = 0;
  bool marked = false;

  /// Total order key: i' maps to 2i-1, i maps to 2i.
  int key() const { return 2 * value - (marked ? 1 : 0); }

  std::string to_string() const {
    return std::to_string(value) + (marked ? "'" : "");
  }

  friend bool operator==(const MarkedSymbol&, const MarkedSymbol&) = default;
  friend auto operator<=>(const MarkedSymbol& a, const MarkedSymbol& b) {
    return a.key() <=> b.key();
  }
};

using MarkedWord = std::vector<MarkedSymbol>;

/// Reverses w and replaces i' by i and i by (i+1)'.
MarkedWord hat_word(const MarkedWord& w);

/// LRS word test: (i) in w followed by its hat word, every symbol of value i
/// is preceded by strictly more unmarked i-1 than unmarked i (vacuous at
/// i = 1); (ii) the last i' of w, if any, is followed in w by an unmarked i.
bool is_lrs_word(const MarkedWord& w);

/// Shifted skew tableau over the marked alphabet: rows and columns weakly
/// increase, each row holds at most one i' and each column at most one i.
class MarkedTableau {
 public:
  /// entries in row-major order matching shape.cells(); shape must be shifted.
  MarkedTableau(SkewShape shape, std::vector<MarkedSymbol> entries);

  const SkewShape& shape() const { return shape_; }
  const std::vector<MarkedSymbol>& entries() const { return entries_; }
  MarkedSymbol at(Cell c) const;

  MarkedWord word() const;
  /// content()[i-1] counts cells holding i or i'.
  std::vector<int> content() const;

  std::string to_text() const;

  friend bool operator==(const MarkedTableau&, const MarkedTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<MarkedSymbol> entries_;
  std::vector<int> row_offset_;
};

bool is_lrs_tableau(const MarkedTableau& t);

/// All LRS tableaux of the shape whose content (counting i and i' together)
/// equals the given counts; deterministic order, no duplicates.
std::vector<MarkedTableau> enumerate_lrs(const SkewShape& shape,
                                         const std::vector<int>& content);

/// All LRS tableaux of the shape with values bounded by max_value.
std::vector<MarkedTableau> enumerate_lrs_all(const SkewShape& shape, int max_value);

/// f(lambda, mu; nu) for strict partitions inside rho_n.
long long lrs_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu, int n,
                          Convention convention = Convention::paper_form);

// ---------------------------------------------------------------------------
// Worley/Sagan shifted slides
// ---------------------------------------------------------------------------

struct ShiftedSlideResult {
  MarkedTableau tableau;
  SlideTrace trace;
};

/// Forward shifted slide. Ordinary moves compare the below entry a and the
/// right entry b in the marked alphabet: a moves up when a < b, or when
/// a == b and both are unmarked; otherwise b moves left. When the hole sits
/// on the main diagonal with i' to its right and an unmarked i diagonally
/// below-right, the special slide applies: the i' unmarks into the hole, the
/// diagonal i moves up and the hole advances diagonally.
ShiftedSlideResult shifted_slide(const MarkedTableau& t, Cell hole);

/// Exact inverse of shifted_slide, started from an outer corner.
ShiftedSlideResult reverse_shifted_slide(const MarkedTableau& t, Cell hole);

// ---------------------------------------------------------------------------
// Holed tableaux and the hole-strip transfer bijection
// ---------------------------------------------------------------------------

enum class HoleSide { nw, se };

struct HoleCell {
  Cell cell;
  bool marked = false;
  friend bool operator==(const HoleCell&, const HoleCell&) = default;
  friend auto operator<=>(const HoleCell&, const HoleCell&) = default;
};

/// Marking validity for a hole strip: the strip filled with o'/o must be a
/// valid marked tableau whose word is an LRS word. Equivalently: any hole
/// above another hole is marked, any hole right of another hole in its row
/// is unmarked, and the most southwest hole is unmarked.
bool valid_hole_marking(const std::vector<HoleCell>& holes);

/// A shifted LRS tableau on a sub-shape of S(full_outer/full_inner) carrying
/// a marked/unmarked hole strip along the NW or SE border.
class HoledTableau {
 public:
  /// NW side: holes fill S(base.inner()/full_inner); SE side: holes fill
  /// S(full_outer/base.outer()). Validates strip shape, marking rules and
  /// that the base is an LRS tableau.
  HoledTableau(HoleSide side, Partition full_outer, Partition full_inner,
               std::vector<HoleCell> holes, MarkedTableau base);

  HoleSide side() const { return side_; }
  const Partition& full_outer() const { return full_outer_; }
  const Partition& full_inner() const { return full_inner_; }
  const std::vector<HoleCell>& holes() const { return holes_; }
  const MarkedTableau& base() const { return base_; }

  std::string to_text() const;

  friend bool operator==(const HoledTableau&, const HoledTableau&) = default;

 private:
  HoleSide side_;
  Partition full_outer_;
  Partition full_inner_;
  std::vector<HoleCell> holes_;  // sorted by cell
  MarkedTableau base_;
};

struct HoleStrip {
  Partition extended;           // base ->p extended
  std::vector<HoleCell> holes;  // cells of S(extended/base) with marks
};

/// All (extended, marking) pairs for strips of p cells added to base inside
/// rho_n. For each extended shape there are exactly 2^N valid markings.
std::vector<HoleStrip> enumerate_hole_strips(const Partition& base, int p, int n,
                                             HoleSide side);

struct HoleTransferResult {
  HoledTableau result;
  std::vector<SlideTrace> traces;
};

/// Slides the unmarked holes to the south-east border in right-to-left
/// order, then the marked holes bottom to top. An unmarked hole landing in a
/// row above the previous hole's landing becomes marked; marked holes stay
/// marked.
HoleTransferResult transfer_nw_to_se(const HoledTableau& h);

/// Inverse: reverse slides, marked holes top to bottom first, then unmarked
/// holes left to right. A marked hole whose path touches the main diagonal
/// loses its mark; unmarked holes stay unmarked.
HoleTransferResult transfer_se_to_nw(const HoledTableau& h);

/// Step persistence of two consecutively slid holes in a NW-to-SE transfer:
/// once the second hole lies west (off the diagonal) or north of the first
/// hole's path, it stays so at the next step.
bool paths_persistence_ok(const SlideTrace& first, const SlideTrace& second);

/// Mirrored persistence for SE-to-NW transfers: east, and south off the
/// diagonal.
bool paths_persistence_reverse_ok(const SlideTrace& first, const SlideTrace& second);

}  // namespace schubert
