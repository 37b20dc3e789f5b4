// Edge-sequence constructions for Lagrangians on frame bundles: homogeneity,
// Hilbert forms, the Euler-Lagrange form, the Helmholtz-Sonin map and the
// fundamental form.
#pragma once

#include <string>
#include <vector>

#include "framecomplex/homotopy.hpp"

namespace fcx {

// A k-th order Lagrangian density L; the vector-valued form Lambda = L d^m t
// is derived from it. intrinsic_order(L) <= order is enforced.
struct Lagrangian {
  BundleContext ctx;
  int order;
  PolyExpr density;

  Lagrangian(BundleContext ctx, int order, PolyExpr density);

  // L tensor dt^1 ^ ... ^ dt^m as a covalence-m vector form.
  VectorForm volume_form() const;
};

struct HomogeneityReport {
  bool homogeneous = true;
  std::vector<std::string> failures;  // one line per violated condition
};

// Zermelo-type conditions: Delta^i_j(L) = delta^i_j L and Delta^I_j(L) = 0
// for 1 < |I| <= k+1.
HomogeneityReport is_homogeneous(const Lagrangian& lagrangian);

// Hilbert forms theta^i = P^i_(1) dL, i = 1..m.
std::vector<ScalarForm> hilbert(const Lagrangian& lagrangian);

struct EulerLagrangeResult {
  VectorForm source;            // epsilon tensor d^m t, from the homotopy route
  VectorForm coordinate_route;  // sum of (-1)^|I| d_I(dL/du^alpha_I) du^alpha tensor d^m t
  bool routes_agree = false;
};

// Computes epsilon by both routes and compares exactly; disagreement is
// reported through the flag, never hidden.
EulerLagrangeResult euler_lagrange(const Lagrangian& lagrangian);

// H(phi) = d phi - dT(P(d phi)), the canonical representative of the class of
// d phi. Zero exactly on locally variational source forms. Input must have
// degree 1 and covalence m.
VectorForm helmholtz(const VectorForm& source);

struct FundamentalFormResult {
  ScalarForm theta;          // Theta_m = (Pd)^m Lambda, a scalar m-form
  int order = 0;             // intrinsic order of theta
  bool projectable_to_first = false;  // only meaningful when lagrangian.order == 1
  bool s_route_computed = false;      // S^1 d S^2 d ... S^m dL comparison ran (k = 1)
  bool s_route_proportional = false;  // theta == factor * s_route
  Rational s_route_factor = 0;
  std::string note;          // human-readable comparison summary
};

FundamentalFormResult fundamental_form(const Lagrangian& lagrangian);

}  // namespace fcx
