#pragma once

#include <string>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

enum class SpaceType { type_a, type_b, type_c };

/// Ambient index space of a Grassmannian basis.
///   A:k=K,m=M  partitions inside the k x m rectangle
///   B:n=N      strict partitions inside the staircase rho_n
///   C:n=N      same basis as B, structure constants carry powers of two
///   D:n=N      accepted on input and normalized to B:n=N-1
class AmbientSpace {
 public:
  static AmbientSpace type_a(int k, int m);
  static AmbientSpace type_b(int n);
  static AmbientSpace type_c(int n);
  static AmbientSpace type_d(int n);

  /// Parses "A:k=3,m=5", "B:n=7", "C:n=7" or "D:n=8".
  static AmbientSpace parse(const std::string& text);

  SpaceType type() const { return type_; }
  bool shifted() const { return type_ != SpaceType::type_a; }
  int k() const;
  int m() const;
  int n() const;

  bool contains(const Partition& p) const;
  /// Throws std::invalid_argument naming `what` if p is not a basis index.
  void require_member(const Partition& p, const char* what) const;

  /// Rectangle complement (type A) or staircase complement (types B/C).
  Partition dual(const Partition& p) const;

  /// Upper bound for special class indices p (m for type A, n otherwise).
  int special_class_bound() const;

  /// All basis indices: ascending weight, then lexicographically descending.
  std::vector<Partition> elements() const;

  std::string to_string() const;

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

 private:
  AmbientSpace(SpaceType type, int a, int b) : type_(type), k_(a), m_(b) {}

  SpaceType type_;
  int k_;  // k for type A, n for types B/C
  int m_;  // m for type A, unused otherwise
};

/// All partitions obtained from lambda by adding a horizontal strip of p
/// cells inside the ambient basis (strict for shifted types). p = 0 yields
/// {lambda}. Sorted lexicographically descending.
std::vector<Partition> horizontal_strip_successors(const Partition& lambda, int p,
                                                   const AmbientSpace& space);

}  // namespace schubert
