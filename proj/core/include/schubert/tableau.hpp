#pragma once

#include <string>
#include <vector>

#include "schubert/ambient.hpp"
#include "schubert/diagram.hpp"

namespace schubert {

using Word = std::vector<int>;

/// Semistandard skew tableau in Young coordinates: rows weakly increase
/// left to right, columns strictly increase top to bottom.
class Tableau {
 public:
  /// entries are given in row-major order, left to right within each row,
  /// matching shape.cells(). Validates semistandardness.
  Tableau(SkewShape shape, std::vector<int> entries);

  const SkewShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int at(Cell c) const;

  /// Reading word: rows top to bottom, right to left within each row.
  Word word() const;
  /// content()[i-1] = number of cells holding i.
  std::vector<int> content() const;

  std::string to_text() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
  std::vector<int> row_offset_;  // index of the first entry of each row
};

Word word_of(const Tableau& t);

/// Every prefix contains at least as many i as i+1, for all i.
bool is_lattice_word(const Word& w);

bool is_lr_tableau(const Tableau& t);

/// All Littlewood-Richardson tableaux of the given shape and content,
/// each exactly once, in a deterministic order (cells are filled in
/// reading order with entries tried in increasing order).
std::vector<Tableau> enumerate_lr(const SkewShape& shape,
                                  const std::vector<int>& content);

/// All LR tableaux of the shape with entries bounded by max_entry.
std::vector<Tableau> enumerate_lr_all(const SkewShape& shape, int max_entry);

enum class Convention {
  paper_form,    // count shape lambda^v / mu with content nu^v
  standard_form  // count shape nu / lambda with content mu
};

/// Littlewood-Richardson coefficient c(lambda, mu; nu) for a type A space.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu, const AmbientSpace& space,
                         Convention convention = Convention::paper_form);

}  // namespace schubert
