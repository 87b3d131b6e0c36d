#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "schubert/ambient.hpp"

namespace schubert {

/// Finite integer combination of basis symbols of one ambient space.
/// Zero coefficients are never stored.
class RingElement {
 public:
  explicit RingElement(AmbientSpace space) : space_(std::move(space)) {}
  static RingElement basis_element(const AmbientSpace& space, const Partition& lambda);

  const AmbientSpace& space() const { return space_; }
  const std::map<Partition, long long>& terms() const { return terms_; }
  long long coefficient(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  RingElement& add_term(const Partition& p, long long coeff);
  RingElement& operator+=(const RingElement& other);
  RingElement& scale(long long factor);

  /// Terms in printed order (descending weight, then lexicographic).
  std::vector<std::pair<Partition, long long>> ordered_terms() const;
  std::string to_string(const std::string& symbol = "s") const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  AmbientSpace space_;
  std::map<Partition, long long> terms_;
};

struct VerifyReport {
  std::string space;
  long long pairs_checked = 0;
  long long triples_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// The ring of Schubert symbols of one ambient space; products are defined
/// by structure constants. Expansions are memoized per (lambda, mu).
class SchubertRing {
 public:
  explicit SchubertRing(AmbientSpace space);

  const AmbientSpace& space() const { return space_; }
  const std::vector<Partition>& basis() const { return basis_; }

  /// Coefficient of nu in the product of lambda and mu.
  /// Type A counts LR tableaux, types B/D count LRS tableaux, type C
  /// rescales type B by 2^(l(lambda)+l(mu)-l(nu)).
  long long structure_constant(const Partition& lambda, const Partition& mu,
                               const Partition& nu) const;

  /// Full product expansion of two basis symbols; memoized.
  std::map<Partition, long long> expansion(const Partition& lambda,
                                           const Partition& mu) const;

  RingElement multiply(const RingElement& a, const RingElement& b) const;

  /// Pieri product of the special class p with x, computed from horizontal
  /// strips and border-strip counts only (no tableau enumeration).
  RingElement pieri_multiply(int p, const RingElement& x) const;

  /// Runs associativity, commutativity, identity, Pieri agreement and (for
  /// type A) duality checks over the whole basis. Violations are returned
  /// as data, not thrown.
  VerifyReport verify() const;

 private:
  std::map<Partition, long long> compute_expansion(const Partition& lambda,
                                                   const Partition& mu) const;

  AmbientSpace space_;
  std::vector<Partition> basis_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Partition, Partition>, std::map<Partition, long long>>
      memo_;
};

}  // namespace schubert
