// Scalar r-forms and Lambda^s(R^m)*-valued forms on the frame bundles.
#pragma once

#include <map>
#include <vector>

#include "framecomplex/bundle.hpp"
#include "framecomplex/poly_expr.hpp"

namespace fcx {

// A scalar r-form: a sum of PolyExpr-weighted wedge monomials in the du^alpha_I.
// Keys are strictly increasing label tuples in canonical coordinate order;
// canonicalization absorbs permutation signs into the coefficient and kills
// repeated labels. The zero form is the empty map.
class ScalarForm {
 public:
  ScalarForm(BundleContext ctx, int degree);  // zero form

  static ScalarForm function(BundleContext ctx, PolyExpr f);  // degree 0
  // Coefficient times du^{labels[0]} ^ ... ^ du^{labels[r-1]}, labels in any
  // order (possibly with repeats, giving zero).
  static ScalarForm term(BundleContext ctx, PolyExpr coefficient,
                         std::vector<JetCoordinate> labels);

  const BundleContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  const std::map<std::vector<JetCoordinate>, PolyExpr>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int intrinsic_order() const;
  // The coefficient polynomial of a degree-0 form.
  PolyExpr as_function() const;

  ScalarForm operator+(const ScalarForm& other) const;
  ScalarForm operator-() const;
  ScalarForm operator-(const ScalarForm& other) const;
  ScalarForm scaled(const Rational& c) const;
  ScalarForm scaled(const PolyExpr& f) const;
  ScalarForm wedge(const ScalarForm& other) const;
  ScalarForm d() const;  // exterior derivative

  // Zero forms compare equal regardless of recorded degree.
  bool operator==(const ScalarForm& other) const;

 private:
  friend class VectorForm;
  void add_term(const std::vector<JetCoordinate>& labels, const PolyExpr& coefficient);
  void check_compatible(const ScalarForm& other, const char* op) const;

  BundleContext ctx_;
  int degree_;
  std::map<std::vector<JetCoordinate>, PolyExpr> terms_;
};

// An element of Omega^{r,s}: scalar r-form components phi_{i1...is} indexed by
// strictly increasing s-tuples of frame indices. The stored component is the
// contraction of the value with e_{i1} ^ ... ^ e_{is}; the full skew family is
// implied. An absent key is a zero component.
class VectorForm {
 public:
  VectorForm(BundleContext ctx, int degree, int covalence);  // zero form

  static VectorForm from_scalar(ScalarForm phi);  // covalence 0
  // phi tensor dt^{tuple}, tuple in any order (repeats give zero).
  static VectorForm term(ScalarForm phi, std::vector<int> frame_tuple);

  const BundleContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  int covalence() const { return covalence_; }
  const std::map<std::vector<int>, ScalarForm>& components() const { return components_; }

  // Skew extension: permuted tuples pick up the sign, repeated indices give 0.
  ScalarForm component(std::vector<int> frame_tuple) const;
  // The single component of a covalence-0 form.
  ScalarForm as_scalar() const;

  bool is_zero() const { return components_.empty(); }
  int intrinsic_order() const;

  VectorForm operator+(const VectorForm& other) const;
  VectorForm operator-() const;
  VectorForm operator-(const VectorForm& other) const;
  VectorForm scaled(const Rational& c) const;
  VectorForm scaled(const PolyExpr& f) const;
  VectorForm wedge(const VectorForm& other) const;
  VectorForm d() const;  // componentwise exterior derivative

  // Canonical representative in the bar space: strips the constant part of
  // every component of a degree-0 form (quotient by constant vector-valued
  // functions as a normal form).
  VectorForm normalize_bar() const;

  // Zero forms compare equal regardless of recorded degree/covalence.
  bool operator==(const VectorForm& other) const;

 private:
  void add_component(const std::vector<int>& tuple, const ScalarForm& phi);
  void check_compatible(const VectorForm& other, const char* op) const;

  friend VectorForm dT(const VectorForm&);
  friend VectorForm iT(const VectorForm&);
  friend VectorForm S_op(const VectorForm&);
  friend VectorForm P_op(const VectorForm&);

  BundleContext ctx_;
  int degree_;
  int covalence_;
  std::map<std::vector<int>, ScalarForm> components_;
};

}  // namespace fcx
