#pragma once

#include <map>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

// Brute-force symmetric polynomial oracles. Deliberately independent of the
// tableau enumerators: no lattice words, no LRS conditions, no slides. The
// only shared code is the Partition type.

/// Exact multivariate polynomial with a fixed variable count and a total
/// degree bound; terms beyond the bound are dropped in products.
class TruncatedPolynomial {
 public:
  TruncatedPolynomial(int variables, int degree_bound);

  int variables() const { return variables_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exponents, long long coeff);
  TruncatedPolynomial multiply(const TruncatedPolynomial& other) const;

  /// Lexicographically greatest exponent vector; zero polynomial has none.
  const std::vector<int>* leading_exponent() const;
  long long coefficient(const std::vector<int>& exponents) const;

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) =
      default;

 private:
  int variables_;
  int degree_bound_;
  std::map<std::vector<int>, long long> terms_;
};

/// Schur polynomial in v variables: generating sum over column-strict
/// fillings of the straight shape with entries <= v. Returns the zero
/// polynomial when v < l(lambda).
TruncatedPolynomial schur_polynomial(const Partition& lambda, int variables);

/// Coefficient of s_nu in s_lambda * s_mu, extracted by leading-term
/// elimination; independent of any ambient rectangle.
long long schur_product_coefficient(const Partition& lambda, const Partition& mu,
                                    const Partition& nu);

/// Schur P-polynomial in v variables: generating sum over marked shifted
/// fillings of the straight shifted shape with no marked entry on the main
/// diagonal.
TruncatedPolynomial p_function(const Partition& lambda, int variables);

/// Coefficient of P_nu in P_lambda * P_mu; equals the stable LRS count.
long long p_product_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

}  // namespace schubert
