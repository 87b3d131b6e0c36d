#include "schubert/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "schubert/checked.hpp"

namespace schubert {

TruncatedPolynomial::TruncatedPolynomial(int variables, int degree_bound)
    : variables_(variables), degree_bound_(degree_bound) {
  if (variables < 0 || degree_bound < 0) {
    throw std::invalid_argument("polynomial needs nonnegative sizes");
  }
}

void TruncatedPolynomial::add_term(const std::vector<int>& exponents, long long coeff) {
  if (static_cast<int>(exponents.size()) != variables_) {
    throw std::invalid_argument("exponent vector length mismatch");
  }
  int degree = std::accumulate(exponents.begin(), exponents.end(), 0);
  if (degree > degree_bound_) return;
  long long next = checked_add(coefficient(exponents), coeff);
  if (next == 0) {
    terms_.erase(exponents);
  } else {
    terms_[exponents] = next;
  }
}

TruncatedPolynomial TruncatedPolynomial::multiply(const TruncatedPolynomial& other) const {
  if (other.variables_ != variables_) {
    throw std::invalid_argument("polynomial variable counts differ");
  }
  TruncatedPolynomial out(variables_, degree_bound_ + other.degree_bound_);
  std::vector<int> exps(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < variables_; ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, checked_mul(ca, cb));
    }
  }
  return out;
}

const std::vector<int>* TruncatedPolynomial::leading_exponent() const {
  if (terms_.empty()) return nullptr;
  return &terms_.rbegin()->first;
}

long long TruncatedPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

// Straight-shape column-strict fillings, entries bounded by `variables`.
void schur_fill(const Partition& lambda, int variables, int row, int col,
                std::vector<std::vector<int>>& grid, std::vector<int>& exps,
                TruncatedPolynomial& out) {
  if (row > lambda.length()) {
    out.add_term(exps, 1);
    return;
  }
  if (col > lambda.part(row)) {
    schur_fill(lambda, variables, row + 1, 1, grid, exps, out);
    return;
  }
  int lo = 1;
  if (col > 1) lo = std::max(lo, grid[row - 1][col - 2]);      // row weakly increases
  if (row > 1) lo = std::max(lo, grid[row - 2][col - 1] + 1);  // column strictly increases
  for (int v = lo; v <= variables; ++v) {
    grid[row - 1][col - 1] = v;
    ++exps[v - 1];
    schur_fill(lambda, variables, row, col + 1, grid, exps, out);
    --exps[v - 1];
  }
}

struct MarkedEntry {
  int value = 0;
  bool marked = false;
  int key() const { return 2 * value - (marked ? 1 : 0); }
};

// Marked shifted fillings of the straight shifted shape of lambda: rows and
// columns weakly increase, at most one i' per row and one i per column, no
// marked entry on the main diagonal.
void p_fill(const Partition& lambda, int variables, std::size_t idx,
            const std::vector<std::pair<int, int>>& cells,
            std::map<std::pair<int, int>, MarkedEntry>& grid, std::vector<int>& exps,
            std::vector<std::vector<bool>>& marked_in_row,
            std::map<std::pair<int, int>, bool>& unmarked_in_col,
            TruncatedPolynomial& out) {
  if (idx == cells.size()) {
    out.add_term(exps, 1);
    return;
  }
  auto [r, c] = cells[idx];
  bool on_diagonal = r == c;
  auto left = grid.find({r, c - 1});
  auto above = grid.find({r - 1, c});
  int lo_key = 1;
  if (left != grid.end()) lo_key = std::max(lo_key, left->second.key());
  if (above != grid.end()) lo_key = std::max(lo_key, above->second.key());
  for (int key = lo_key; key <= 2 * variables; ++key) {
    MarkedEntry e{(key + 1) / 2, key % 2 == 1};
    if (e.marked && (on_diagonal || marked_in_row[r][e.value])) continue;
    if (!e.marked && unmarked_in_col[{c, e.value}]) continue;
    grid[{r, c}] = e;
    ++exps[e.value - 1];
    if (e.marked) {
      marked_in_row[r][e.value] = true;
    } else {
      unmarked_in_col[{c, e.value}] = true;
    }
    p_fill(lambda, variables, idx + 1, cells, grid, exps, marked_in_row,
           unmarked_in_col, out);
    if (e.marked) {
      marked_in_row[r][e.value] = false;
    } else {
      unmarked_in_col[{c, e.value}] = false;
    }
    --exps[e.value - 1];
    grid.erase({r, c});
  }
}

Partition exponent_partition(const std::vector<int>& exps) {
  std::vector<int> parts;
  for (int e : exps) {
    if (e != 0) parts.push_back(e);
  }
  // leading exponents of symmetric polynomials are already sorted; the
  // constructor validates that
  return Partition(std::move(parts));
}

}  // namespace

TruncatedPolynomial schur_polynomial(const Partition& lambda, int variables) {
  TruncatedPolynomial out(variables, lambda.weight());
  if (variables < lambda.length()) return out;  // zero polynomial, documented
  if (lambda.empty() || variables == 0) {
    if (lambda.empty()) out.add_term(std::vector<int>(variables, 0), 1);
    return out;
  }
  std::vector<std::vector<int>> grid(lambda.length(),
                                     std::vector<int>(lambda.part(1), 0));
  std::vector<int> exps(variables, 0);
  schur_fill(lambda, variables, 1, 1, grid, exps, out);
  return out;
}

TruncatedPolynomial p_function(const Partition& lambda, int variables) {
  if (!lambda.is_strict()) {
    throw std::invalid_argument("P-functions are indexed by strict partitions");
  }
  TruncatedPolynomial out(variables, lambda.weight());
  if (lambda.empty() || variables == 0) {
    if (lambda.empty()) out.add_term(std::vector<int>(variables, 0), 1);
    return out;
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = i; j <= lambda.part(i) + i - 1; ++j) cells.emplace_back(i, j);
  }
  std::map<std::pair<int, int>, MarkedEntry> grid;
  std::vector<int> exps(variables, 0);
  std::vector<std::vector<bool>> marked_in_row(
      lambda.length() + 1, std::vector<bool>(variables + 2, false));
  std::map<std::pair<int, int>, bool> unmarked_in_col;
  p_fill(lambda, variables, 0, cells, grid, exps, marked_in_row, unmarked_in_col, out);
  return out;
}

namespace {

// memoized access; the caches only grow, guarded for concurrent use
const TruncatedPolynomial& cached_schur(const Partition& lambda, int variables) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, TruncatedPolynomial> cache;
  std::scoped_lock lock(mutex);
  auto key = std::make_pair(lambda, variables);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, schur_polynomial(lambda, variables)).first;
  }
  return it->second;
}

const TruncatedPolynomial& cached_p(const Partition& lambda, int variables) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, TruncatedPolynomial> cache;
  std::scoped_lock lock(mutex);
  auto key = std::make_pair(lambda, variables);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, p_function(lambda, variables)).first;
  }
  return it->second;
}

}  // namespace

long long schur_product_coefficient(const Partition& lambda, const Partition& mu,
                                    const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  int v = std::max({nu.length(), lambda.length(), mu.length(), 1});
  TruncatedPolynomial product =
      cached_schur(lambda, v).multiply(cached_schur(mu, v));
  // leading-term elimination: unitriangular over the dominance-compatible
  // lexicographic order, so each step strictly reduces the leading exponent
  while (const std::vector<int>* lead = product.leading_exponent()) {
    Partition candidate = exponent_partition(*lead);
    long long coeff = product.coefficient(*lead);
    if (candidate == nu) return coeff;
    if (candidate.parts() < nu.parts()) return 0;
    const TruncatedPolynomial& basis = cached_schur(candidate, v);
    std::vector<int> previous = *lead;
    for (const auto& [exps, c] : basis.terms()) {
      product.add_term(exps, checked_mul(-coeff, c));
    }
    const std::vector<int>* next = product.leading_exponent();
    if (next && !(*next < previous)) {
      throw std::logic_error("leading-term elimination failed to decrease");
    }
  }
  return 0;
}

long long p_product_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
  if (!lambda.is_strict() || !mu.is_strict() || !nu.is_strict()) {
    throw std::invalid_argument("P-product coefficients need strict partitions");
  }
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  int v = std::max(lambda.weight() + mu.weight(), 1);
  TruncatedPolynomial product = cached_p(lambda, v).multiply(cached_p(mu, v));
  while (const std::vector<int>* lead = product.leading_exponent()) {
    Partition candidate = exponent_partition(*lead);
    if (!candidate.is_strict()) {
      throw std::logic_error("P-product leading term is not strict");
    }
    long long coeff = product.coefficient(*lead);
    if (candidate == nu) return coeff;
    if (candidate.parts() < nu.parts()) return 0;
    const TruncatedPolynomial& basis = cached_p(candidate, v);
    std::vector<int> previous = *lead;
    for (const auto& [exps, c] : basis.terms()) {
      product.add_term(exps, checked_mul(-coeff, c));
    }
    const std::vector<int>* next = product.leading_exponent();
    if (next && !(*next < previous)) {
      throw std::logic_error("leading-term elimination failed to decrease");
    }
  }
  return 0;
}

}  // namespace schubert
