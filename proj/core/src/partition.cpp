#include "schubert/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive: " +
                                  std::to_string(parts_[i]));
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: bad token '" + token + "'");
    }
    if (pos != token.size() || value <= 0) {
      throw std::invalid_argument("malformed partition: bad token '" + token + "'");
    }
    parts.push_back(value);
  }
  if (text.back() == ',') {
    throw std::invalid_argument("malformed partition: trailing comma");
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed partition: parts not decreasing in '" +
                                text + "'");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] <= parts_[i + 1]) return false;
  }
  return true;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool basis_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.parts() > b.parts();
}

bool term_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  return a.parts() > b.parts();
}

Partition dual_partition(const Partition& lambda, int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("rectangle must have k,m >= 1");
  if (lambda.length() > k || lambda.part(1) > m) {
    throw std::invalid_argument("partition " + lambda.to_string() +
                                " does not fit in the " + std::to_string(k) + "x" +
                                std::to_string(m) + " rectangle");
  }
  std::vector<int> parts;
  parts.reserve(k);
  for (int i = k; i >= 1; --i) parts.push_back(m - lambda.part(i));
  return Partition(std::move(parts));
}

Partition staircase_complement(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("staircase requires n >= 1");
  if (!lambda.is_strict() || lambda.part(1) > n) {
    throw std::invalid_argument("partition " + lambda.to_string() +
                                " is not strict inside the staircase rho_" +
                                std::to_string(n));
  }
  std::vector<bool> used(n + 1, false);
  for (int p : lambda.parts()) used[p] = true;
  std::vector<int> parts;
  for (int v = n; v >= 1; --v) {
    if (!used[v]) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i < outer.length(); ++i) {
    if (outer.part(i + 1) > inner.part(i)) return false;
  }
  return true;
}

namespace {

void rectangle_rec(int k, int m, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  out.emplace_back(std::vector<int>(acc));
  if (static_cast<int>(acc.size()) == k) return;
  for (int p = max_part; p >= 1; --p) {
    acc.push_back(p);
    rectangle_rec(k, m, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_rectangle(int k, int m) {
  std::vector<Partition> out;
  std::vector<int> acc;
  rectangle_rec(k, m, m, acc, out);
  std::sort(out.begin(), out.end(), basis_less);
  return out;
}

std::vector<Partition> strict_partitions_in_staircase(int n) {
  std::vector<Partition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parts;
    for (int v = n; v >= 1; --v) {
      if (mask >> (v - 1) & 1) parts.push_back(v);
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), basis_less);
  return out;
}

}  // namespace schubert
