// Frame-bundle derivations: total derivatives, contractions, vertical
// endomorphisms, and their vector-valued combinations d_T, i_T, S.
#pragma once

#include <map>

#include "framecomplex/forms.hpp"

namespace fcx {

// A vector field along a bundle projection, components on d/du^alpha_I.
class TangentField {
 public:
  explicit TangentField(BundleContext ctx);

  // T_j along tau^{order,order-1}: sum over |I| <= order-1 of
  // u^alpha_{I+1_j} d/du^alpha_I. order = 0 gives the zero field.
  static TangentField total_derivative_field(BundleContext ctx, int direction, int order);

  const BundleContext& context() const { return ctx_; }
  const std::map<JetCoordinate, PolyExpr>& components() const { return components_; }

  // Tensor action of S^i on vector fields: d/du^alpha_I -> (I(i)+1) d/du^alpha_{I+1_i}.
  TangentField vertical_endo(int direction) const;

  // Apply as a derivation on functions: sum of coefficient * df/d(slot).
  PolyExpr apply(const PolyExpr& f) const;

  bool operator==(const TangentField& other) const;

 private:
  void add_component(const JetCoordinate& slot, const PolyExpr& coefficient);

  BundleContext ctx_;
  std::map<JetCoordinate, PolyExpr> components_;
};

// d_i f = sum over coordinates of u^alpha_{I+1_i} df/du^alpha_I.
PolyExpr total_derivative(const BundleContext& ctx, const PolyExpr& f, int direction);
// The derivation extending d_i with d_i(du^alpha_I) = du^alpha_{I+1_i}; commutes with d.
ScalarForm total_derivative(const ScalarForm& phi, int direction);
VectorForm total_derivative(const VectorForm& phi, int direction);

// Antiderivation with i_i(f) = 0 and i_i(du^alpha_I) = u^alpha_{I+1_i}.
ScalarForm contract_total(const ScalarForm& phi, int direction);
VectorForm contract_total(const VectorForm& phi, int direction);

// Degree-0 derivation with S^i(f) = 0 and S^i(du^alpha_J) = J(i) du^alpha_{J-1_i}.
ScalarForm vertical_endo(const ScalarForm& phi, int direction);
VectorForm vertical_endo(const VectorForm& phi, int direction);

// d_T(theta tensor w) = d_i theta tensor (dt^i ^ w). Covalence +1, order +1.
VectorForm dT(const VectorForm& phi);

// i_T(theta tensor w) = i_i theta tensor (dt^i ^ w). Degree -1, covalence +1.
VectorForm iT(const VectorForm& phi);

// S(theta tensor w) = S^i theta tensor (d/dt^i _| w). Covalence -1.
VectorForm S_op(const VectorForm& phi);

// Compose d_{i} / S^{i} according to a multi-index (the factors commute).
ScalarForm apply_dI(const ScalarForm& phi, const MultiIndex& I);
ScalarForm apply_SI(const ScalarForm& phi, const MultiIndex& I);
PolyExpr apply_dI(const BundleContext& ctx, const PolyExpr& f, const MultiIndex& I);

// Delta^I_j = S^I(T_j) applied to f, with T_j the total derivative field along
// tau^{order,order-1}. Used for the homogeneity conditions.
PolyExpr delta_apply(const BundleContext& ctx, const MultiIndex& I, int direction_j,
                     const PolyExpr& f, int order);

}  // namespace fcx
