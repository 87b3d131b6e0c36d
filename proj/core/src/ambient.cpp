#include "schubert/ambient.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

AmbientSpace AmbientSpace::type_a(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("type A requires k >= 1 and m >= 1");
  return AmbientSpace(SpaceType::type_a, k, m);
}

AmbientSpace AmbientSpace::type_b(int n) {
  if (n < 1) throw std::invalid_argument("type B requires n >= 1");
  return AmbientSpace(SpaceType::type_b, n, 0);
}

AmbientSpace AmbientSpace::type_c(int n) {
  if (n < 1) throw std::invalid_argument("type C requires n >= 1");
  return AmbientSpace(SpaceType::type_c, n, 0);
}

AmbientSpace AmbientSpace::type_d(int n) {
  if (n < 2) throw std::invalid_argument("type D requires n >= 2");
  return type_b(n - 1);
}

namespace {

int parse_field(const std::string& text, const std::string& key, std::size_t& pos) {
  if (text.compare(pos, key.size(), key) != 0) {
    throw std::invalid_argument("malformed space literal '" + text + "'");
  }
  pos += key.size();
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text.substr(pos), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed space literal '" + text + "'");
  }
  pos += used;
  return value;
}

}  // namespace

AmbientSpace AmbientSpace::parse(const std::string& text) {
  if (text.size() < 2 || text[1] != ':') {
    throw std::invalid_argument("malformed space literal '" + text +
                                "' (expected A:k=K,m=M | B:n=N | C:n=N | D:n=N)");
  }
  char kind = text[0];
  std::size_t pos = 2;
  if (kind == 'A') {
    int k = parse_field(text, "k=", pos);
    if (pos >= text.size() || text[pos] != ',') {
      throw std::invalid_argument("malformed space literal '" + text + "'");
    }
    ++pos;
    int m = parse_field(text, "m=", pos);
    if (pos != text.size()) {
      throw std::invalid_argument("malformed space literal '" + text + "'");
    }
    return type_a(k, m);
  }
  if (kind == 'B' || kind == 'C' || kind == 'D') {
    int n = parse_field(text, "n=", pos);
    if (pos != text.size()) {
      throw std::invalid_argument("malformed space literal '" + text + "'");
    }
    if (kind == 'B') return type_b(n);
    if (kind == 'C') return type_c(n);
    return type_d(n);
  }
  throw std::invalid_argument("unknown space type '" + std::string(1, kind) + "'");
}

int AmbientSpace::k() const {
  if (type_ != SpaceType::type_a) throw std::logic_error("k() is a type A accessor");
  return k_;
}

int AmbientSpace::m() const {
  if (type_ != SpaceType::type_a) throw std::logic_error("m() is a type A accessor");
  return m_;
}

int AmbientSpace::n() const {
  if (type_ == SpaceType::type_a) throw std::logic_error("n() is a type B/C accessor");
  return k_;
}

bool AmbientSpace::contains(const Partition& p) const {
  if (type_ == SpaceType::type_a) return p.length() <= k_ && p.part(1) <= m_;
  return p.is_strict() && p.part(1) <= k_;
}

void AmbientSpace::require_member(const Partition& p, const char* what) const {
  if (!contains(p)) {
    throw std::invalid_argument(std::string(what) + " " + (p.empty() ? "(empty)" : p.to_string()) +
                                " is not a basis index of " + to_string() +
                                (shifted() && !p.is_strict() ? " (not strict)" : ""));
  }
}

Partition AmbientSpace::dual(const Partition& p) const {
  require_member(p, "partition");
  if (type_ == SpaceType::type_a) return dual_partition(p, k_, m_);
  return staircase_complement(p, k_);
}

int AmbientSpace::special_class_bound() const {
  return type_ == SpaceType::type_a ? m_ : k_;
}

std::vector<Partition> AmbientSpace::elements() const {
  if (type_ == SpaceType::type_a) return partitions_in_rectangle(k_, m_);
  return strict_partitions_in_staircase(k_);
}

std::string AmbientSpace::to_string() const {
  switch (type_) {
    case SpaceType::type_a:
      return "A:k=" + std::to_string(k_) + ",m=" + std::to_string(m_);
    case SpaceType::type_b:
      return "B:n=" + std::to_string(k_);
    case SpaceType::type_c:
      return "C:n=" + std::to_string(k_);
  }
  return {};
}

namespace {

void strip_rec(const Partition& lambda, const AmbientSpace& space, int row,
               int budget, std::vector<int>& acc, std::vector<Partition>& out) {
  if (budget == 0 && row > lambda.length()) {
    out.emplace_back(std::vector<int>(acc));
    return;
  }
  int max_rows = space.shifted() ? space.n() : space.k();
  if (row > max_rows || row > lambda.length() + 1) return;

  int lo = std::max(lambda.part(row), 1);
  int hi = space.shifted() ? space.n() : space.m();
  if (row > 1) {
    // weak decrease (strict for shifted types) and the strip condition
    hi = std::min(hi, acc[row - 2] - (space.shifted() ? 1 : 0));
    hi = std::min(hi, lambda.part(row - 1));
  }
  hi = std::min(hi, lambda.part(row) + budget);
  for (int v = lo; v <= hi; ++v) {
    acc.push_back(v);
    strip_rec(lambda, space, row + 1, budget - (v - lambda.part(row)), acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> horizontal_strip_successors(const Partition& lambda, int p,
                                                   const AmbientSpace& space) {
  if (p < 0) throw std::invalid_argument("strip size must be nonnegative");
  space.require_member(lambda, "partition");
  std::vector<Partition> out;
  std::vector<int> acc;
  strip_rec(lambda, space, 1, p, acc, out);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
  return out;
}

}  // namespace schubert
