// The coefficient ring: canonical multivariate polynomials over exact
// rationals in the jet coordinates u^alpha_I.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "framecomplex/multi_index.hpp"
#include "framecomplex/rational.hpp"

namespace fcx {

// A jet coordinate u^alpha_I; fiber index alpha is 1-based.
struct JetCoordinate {
  int fiber;
  MultiIndex index;

  int order() const { return index.degree(); }

  // Canonical coordinate order: (degree, index lex, fiber).
  std::strong_ordering operator<=>(const JetCoordinate& other) const;
  bool operator==(const JetCoordinate& other) const;

  std::string to_string() const;  // "u[alpha;i1 i2 ...]"
};

JetCoordinate jet(int fiber, MultiIndex index);
JetCoordinate jet(int fiber, std::vector<int> counts);

// Product of jet coordinates with positive exponents, factors kept sorted in
// canonical coordinate order. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<JetCoordinate, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);  // sorts and merges
  static Monomial coordinate(const JetCoordinate& c);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int total_degree() const;
  int intrinsic_order() const;

  Monomial times(const Monomial& other) const;

  // Graded order: by total degree, then lexicographically on the factor list.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const;

 private:
  std::vector<Factor> factors_;
};

// Canonical form: no zero coefficients, no duplicate monomials; the zero
// polynomial is the empty term map. Equality of values is structural equality.
class PolyExpr {
 public:
  PolyExpr() = default;  // zero

  static PolyExpr constant(Rational value);
  static PolyExpr coordinate(const JetCoordinate& c);
  static PolyExpr term(Monomial monomial, Rational coefficient);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;  // coefficient of the monomial 1
  int total_degree() const;        // max monomial degree, 0 for the zero polynomial
  int intrinsic_order() const;

  PolyExpr operator+(const PolyExpr& other) const;
  PolyExpr operator-() const;
  PolyExpr operator-(const PolyExpr& other) const;
  PolyExpr operator*(const PolyExpr& other) const;
  PolyExpr scaled(const Rational& c) const;
  PolyExpr pow(int exponent) const;  // exponent >= 0, else DomainError

  // Formal partial derivative, all jet coordinates independent.
  PolyExpr partial(const JetCoordinate& c) const;

  // Exact evaluation; every coordinate occurring in the polynomial must be
  // assigned, else DomainError.
  Rational eval(const std::map<JetCoordinate, Rational>& point) const;

  // Coordinates occurring with nonzero exponent, in canonical order.
  std::vector<JetCoordinate> support() const;

  bool operator==(const PolyExpr& other) const { return terms_ == other.terms_; }

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  std::map<Monomial, Rational> terms_;
};

}  // namespace fcx
