#include "framecomplex/poly_expr.hpp"

#include <algorithm>

#include "framecomplex/errors.hpp"

namespace fcx {

// ---------------------------------------------------------------- JetCoordinate

std::strong_ordering JetCoordinate::operator<=>(const JetCoordinate& other) const {
  if (auto cmp = index <=> other.index; cmp != 0) return cmp;
  return fiber <=> other.fiber;
}

bool JetCoordinate::operator==(const JetCoordinate& other) const {
  return (*this <=> other) == 0;
}

std::string JetCoordinate::to_string() const {
  std::string out = "u[" + std::to_string(fiber) + ";";
  bool first = true;
  for (int dir : index.directions()) {
    if (!first) out += " ";
    out += std::to_string(dir);
    first = false;
  }
  return out + "]";
}

JetCoordinate jet(int fiber, MultiIndex index) {
  if (fiber < 1) throw DomainError("fiber index must be at least 1");
  return JetCoordinate{fiber, std::move(index)};
}

JetCoordinate jet(int fiber, std::vector<int> counts) {
  return jet(fiber, MultiIndex(std::move(counts)));
}

// --------------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& [coord, exp] : factors) {
    if (exp <= 0) throw DomainError("monomial exponents must be positive");
    if (!factors_.empty() && factors_.back().first == coord)
      factors_.back().second += exp;
    else
      factors_.emplace_back(coord, exp);
  }
}

Monomial Monomial::coordinate(const JetCoordinate& c) {
  Monomial out;
  out.factors_.emplace_back(c, 1);
  return out;
}

int Monomial::total_degree() const {
  int total = 0;
  for (const auto& [coord, exp] : factors_) total += exp;
  return total;
}

int Monomial::intrinsic_order() const {
  int order = 0;
  for (const auto& [coord, exp] : factors_) order = std::max(order, coord.order());
  return order;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto it = factors_.begin();
  auto jt = other.factors_.begin();
  while (it != factors_.end() && jt != other.factors_.end()) {
    if (it->first == jt->first) {
      merged.emplace_back(it->first, it->second + jt->second);
      ++it, ++jt;
    } else if (it->first < jt->first) {
      merged.push_back(*it++);
    } else {
      merged.push_back(*jt++);
    }
  }
  merged.insert(merged.end(), it, factors_.end());
  merged.insert(merged.end(), jt, other.factors_.end());
  Monomial out;
  out.factors_ = std::move(merged);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto cmp = total_degree() <=> other.total_degree(); cmp != 0) return cmp;
  auto it = factors_.begin();
  auto jt = other.factors_.begin();
  while (it != factors_.end() && jt != other.factors_.end()) {
    if (auto cmp = it->first <=> jt->first; cmp != 0) return cmp;
    if (auto cmp = it->second <=> jt->second; cmp != 0) return cmp;
    ++it, ++jt;
  }
  return (factors_.end() - it) <=> (other.factors_.end() - jt);
}

bool Monomial::operator==(const Monomial& other) const {
  return factors_ == other.factors_;
}

// --------------------------------------------------------------------- PolyExpr

PolyExpr PolyExpr::constant(Rational value) {
  PolyExpr out;
  out.add_term(Monomial(), value);
  return out;
}

PolyExpr PolyExpr::coordinate(const JetCoordinate& c) {
  PolyExpr out;
  out.add_term(Monomial::coordinate(c), 1);
  return out;
}

PolyExpr PolyExpr::term(Monomial monomial, Rational coefficient) {
  PolyExpr out;
  out.add_term(monomial, coefficient);
  return out;
}

void PolyExpr::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

bool PolyExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational PolyExpr::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyExpr::total_degree() const {
  int degree = 0;
  for (const auto& [monomial, coeff] : terms_) degree = std::max(degree, monomial.total_degree());
  return degree;
}

int PolyExpr::intrinsic_order() const {
  int order = 0;
  for (const auto& [monomial, coeff] : terms_) order = std::max(order, monomial.intrinsic_order());
  return order;
}

PolyExpr PolyExpr::operator+(const PolyExpr& other) const {
  PolyExpr out = *this;
  for (const auto& [monomial, coeff] : other.terms_) out.add_term(monomial, coeff);
  return out;
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr out;
  for (const auto& [monomial, coeff] : terms_) out.terms_.emplace(monomial, -coeff);
  return out;
}

PolyExpr PolyExpr::operator-(const PolyExpr& other) const {
  return *this + (-other);
}

PolyExpr PolyExpr::operator*(const PolyExpr& other) const {
  PolyExpr out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

PolyExpr PolyExpr::scaled(const Rational& c) const {
  PolyExpr out;
  if (c == 0) return out;
  for (const auto& [monomial, coeff] : terms_) out.terms_.emplace(monomial, coeff * c);
  return out;
}

PolyExpr PolyExpr::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative exponent in polynomial power");
  PolyExpr out = constant(1);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

PolyExpr PolyExpr::partial(const JetCoordinate& c) const {
  PolyExpr out;
  for (const auto& [monomial, coeff] : terms_) {
    const auto& factors = monomial.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!(factors[i].first == c)) continue;
      std::vector<Monomial::Factor> rest;
      rest.reserve(factors.size());
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j == i) {
          if (factors[j].second > 1) rest.emplace_back(factors[j].first, factors[j].second - 1);
        } else {
          rest.push_back(factors[j]);
        }
      }
      out.add_term(Monomial(std::move(rest)), coeff * factors[i].second);
    }
  }
  return out;
}

Rational PolyExpr::eval(const std::map<JetCoordinate, Rational>& point) const {
  Rational total = 0;
  for (const auto& [monomial, coeff] : terms_) {
    Rational value = coeff;
    for (const auto& [coord, exp] : monomial.factors()) {
      auto it = point.find(coord);
      if (it == point.end())
        throw DomainError("evaluation point misses coordinate " + coord.to_string());
      for (int e = 0; e < exp; ++e) value *= it->second;
    }
    total += value;
  }
  return total;
}

std::vector<JetCoordinate> PolyExpr::support() const {
  std::vector<JetCoordinate> out;
  for (const auto& [monomial, coeff] : terms_)
    for (const auto& [coord, exp] : monomial.factors()) out.push_back(coord);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fcx
