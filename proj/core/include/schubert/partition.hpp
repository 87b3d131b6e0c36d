#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schubert {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Trailing zeros are never stored, so (4,2,0) and (4,2) compare equal.
/// The empty partition is a valid value.
class Partition {
 public:
  Partition() = default;

  /// Strips trailing zeros, then requires parts to be weakly decreasing
  /// and positive. Throws std::invalid_argument otherwise.
  explicit Partition(std::vector<int> parts);

  /// Parses a comma-separated decreasing list, e.g. "5,3,1".
  /// The empty string denotes the empty partition.
  static Partition parse(const std::string& text);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  /// 1-based part access; rows beyond the length read as 0.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  bool is_strict() const;

  /// true iff other fits inside this diagram (other_i <= this_i for all i).
  bool contains(const Partition& other) const;

  const std::vector<int>& parts() const { return parts_; }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Basis order: ascending weight, ties broken lexicographically descending.
bool basis_less(const Partition& a, const Partition& b);

/// Printed term order: descending weight, then lexicographically descending.
bool term_less(const Partition& a, const Partition& b);

/// Complement in the k x m rectangle: (m - lambda_k, ..., m - lambda_1).
/// Requires lambda inside the rectangle; involutive.
Partition dual_partition(const Partition& lambda, int k, int m);

/// Complement of the parts of a strict partition in {1, ..., n}; involutive.
Partition staircase_complement(const Partition& lambda, int n);

/// outer/inner is a horizontal strip: inner fits in outer and no two cells
/// of the difference share a column (outer_{i+1} <= inner_i).
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

std::vector<Partition> partitions_in_rectangle(int k, int m);
std::vector<Partition> strict_partitions_in_staircase(int n);

}  // namespace schubert
