#include "schubert/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schubert/checked.hpp"
#include "schubert/diagram.hpp"
#include "schubert/shifted.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

RingElement RingElement::basis_element(const AmbientSpace& space,
                                       const Partition& lambda) {
  space.require_member(lambda, "partition");
  RingElement x(space);
  x.add_term(lambda, 1);
  return x;
}

long long RingElement::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

RingElement& RingElement::add_term(const Partition& p, long long coeff) {
  space_.require_member(p, "partition");
  long long next = checked_add(coefficient(p), coeff);
  if (next == 0) {
    terms_.erase(p);
  } else {
    terms_[p] = next;
  }
  return *this;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  if (other.space_ != space_) {
    throw std::invalid_argument("ring elements live in different spaces");
  }
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

RingElement& RingElement::scale(long long factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c = checked_mul(c, factor);
  return *this;
}

std::vector<std::pair<Partition, long long>> RingElement::ordered_terms() const {
  std::vector<std::pair<Partition, long long>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return term_less(a.first, b.first); });
  return out;
}

std::string RingElement::to_string(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : ordered_terms()) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c << "*";
    out << symbol << "(" << p.to_string() << ")";
  }
  return out.str();
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << "space " << space << ": " << pairs_checked << " pairs, " << triples_checked
      << " triples checked, " << violations.size() << " violation(s)";
  return out.str();
}

SchubertRing::SchubertRing(AmbientSpace space)
    : space_(std::move(space)), basis_(space_.elements()) {}

std::map<Partition, long long> SchubertRing::compute_expansion(
    const Partition& lambda, const Partition& mu) const {
  std::map<Partition, long long> out;
  Partition lv = space_.dual(lambda);
  if (!lv.contains(mu)) return out;
  if (space_.type() == SpaceType::type_a) {
    SkewShape shape(lv, mu, DiagramFlavor::young);
    for (const Tableau& t : enumerate_lr_all(shape, space_.k())) {
      Partition content{t.content()};
      if (!space_.contains(content)) {
        throw std::logic_error("LR tableau content escaped the ambient basis");
      }
      Partition nu = space_.dual(content);
      out[nu] = checked_add(out.count(nu) ? out[nu] : 0, 1);
    }
    return out;
  }
  SkewShape shape(lv, mu, DiagramFlavor::shifted);
  for (const MarkedTableau& t : enumerate_lrs_all(shape, space_.n())) {
    Partition content{t.content()};
    if (!space_.contains(content)) {
      throw std::logic_error("LRS tableau content escaped the ambient basis");
    }
    Partition nu = space_.dual(content);
    out[nu] = checked_add(out.count(nu) ? out[nu] : 0, 1);
  }
  if (space_.type() == SpaceType::type_c) {
    for (auto& [nu, f] : out) {
      int exponent = lambda.length() + mu.length() - nu.length();
      if (exponent < 0) {
        throw std::logic_error("negative type C exponent for a nonzero constant");
      }
      f = checked_mul(f, checked_pow2(exponent));
    }
  }
  return out;
}

std::map<Partition, long long> SchubertRing::expansion(const Partition& lambda,
                                                       const Partition& mu) const {
  space_.require_member(lambda, "lambda");
  space_.require_member(mu, "mu");
  std::pair<Partition, Partition> key{lambda, mu};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto value = compute_expansion(lambda, mu);
  std::unique_lock lock(mutex_);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

long long SchubertRing::structure_constant(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu) const {
  space_.require_member(nu, "nu");
  auto exp = expansion(lambda, mu);
  auto it = exp.find(nu);
  return it == exp.end() ? 0 : it->second;
}

RingElement SchubertRing::multiply(const RingElement& a, const RingElement& b) const {
  if (a.space() != space_ || b.space() != space_) {
    throw std::invalid_argument("ring elements live in different spaces");
  }
  RingElement out(space_);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [mu, cb] : b.terms()) {
      long long c = checked_mul(ca, cb);
      for (const auto& [nu, k] : expansion(la, mu)) {
        out.add_term(nu, checked_mul(c, k));
      }
    }
  }
  return out;
}

RingElement SchubertRing::pieri_multiply(int p, const RingElement& x) const {
  if (x.space() != space_) {
    throw std::invalid_argument("ring element lives in a different space");
  }
  if (p < 1 || p > space_.special_class_bound()) {
    throw std::invalid_argument("special class index p out of range");
  }
  RingElement out(space_);
  for (const auto& [lambda, c] : x.terms()) {
    for (const Partition& succ : horizontal_strip_successors(lambda, p, space_)) {
      long long weight = 1;
      if (space_.shifted()) {
        int N = border_strip_data(succ, lambda).N;
        weight = checked_pow2(N);
        if (space_.type() == SpaceType::type_c) {
          int exponent = lambda.length() + 1 - succ.length();
          if (exponent < 0) {
            throw std::logic_error("negative type C Pieri exponent");
          }
          weight = checked_mul(weight, checked_pow2(exponent));
        }
      }
      out.add_term(succ, checked_mul(c, weight));
    }
  }
  return out;
}

VerifyReport SchubertRing::verify() const {
  VerifyReport report;
  report.space = space_.to_string();
  const auto& b = basis_;

  auto at = [](const Partition& x, const Partition& y) {
    return " at (" + x.to_string() + ") (" + y.to_string() + ")";
  };

  RingElement one = RingElement::basis_element(space_, Partition{});
  for (const Partition& la : b) {
    RingElement x = RingElement::basis_element(space_, la);
    if (multiply(one, x) != x || multiply(x, one) != x) {
      report.violations.push_back("identity failed at (" + la.to_string() + ")");
    }
  }

  for (const Partition& la : b) {
    for (const Partition& mu : b) {
      ++report.pairs_checked;
      if (expansion(la, mu) != expansion(mu, la)) {
        report.violations.push_back("commutativity failed" + at(la, mu));
      }
      if (space_.type() == SpaceType::type_a) {
        // duality: the coefficient of the full rectangle is a delta
        long long c = structure_constant(la, mu, space_.dual(Partition{}));
        if (c != (mu == space_.dual(la) ? 1 : 0)) {
          report.violations.push_back("duality failed" + at(la, mu));
        }
      }
    }
  }

  for (int p = 1; p <= space_.special_class_bound(); ++p) {
    RingElement sp = RingElement::basis_element(space_, Partition{{p}});
    for (const Partition& la : b) {
      RingElement x = RingElement::basis_element(space_, la);
      if (pieri_multiply(p, x) != multiply(sp, x)) {
        report.violations.push_back("Pieri agreement failed at p=" + std::to_string(p) +
                                    " (" + la.to_string() + ")");
      }
    }
  }

  for (const Partition& la : b) {
    RingElement x = RingElement::basis_element(space_, la);
    for (const Partition& mu : b) {
      RingElement y = RingElement::basis_element(space_, mu);
      RingElement xy = multiply(x, y);
      for (const Partition& nu : b) {
        ++report.triples_checked;
        RingElement z = RingElement::basis_element(space_, nu);
        if (multiply(xy, z) != multiply(x, multiply(y, z))) {
          report.violations.push_back("associativity failed" + at(la, mu) + " (" +
                                      nu.to_string() + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace schubert
