// The pseudo-homotopy operator P for d_T and the exactness machinery built
// around it: canonical representatives, the radial homotopy for d, and the
// constructive d/d_T splitting.
#pragma once

#include <utility>

#include "framecomplex/calculus.hpp"

namespace fcx {

// Coefficient of d_J S^{J+1_j} in P^j_(s) on r-forms over an m-frame bundle:
//   (-1)^{|J|} (m-s)! |J|! / ( r^{|J|+1} (m-s+|J|+1)! J! ).
Rational P_coeff(const MultiIndex& J, int degree_r, int covalence_s, int frame_dim);

// P^j_(s) phi = sum over |J| <= r*k - 1 of P_coeff(J) d_J S^{J+1_j} phi,
// where k is the intrinsic order of phi (k = 0 gives the empty sum).
// Requires degree >= 1.
ScalarForm P_scalar(const ScalarForm& phi, int direction_j, int covalence_s);

// The vector-valued operator: P^j_(s) applied to each stored component, with
// d/dt^j contracted into the dt-monomial (skew signs). Covalence s -> s-1;
// P of a covalence-0 form is 0. Requires degree >= 1.
VectorForm P_op(const VectorForm& phi);

// dT(P(phi)) + P(dT(phi)) - phi. The homotopy theorem asserts this is zero
// for degree >= 1 and covalence <= m-1; both are enforced preconditions.
VectorForm homotopy_residual(const VectorForm& phi);

// phi - dT(P(phi)) for covalence-m forms of degree >= 1: the canonical global
// representative of the class of phi modulo d_T-exact forms.
VectorForm canonical_rep(const VectorForm& phi);

// Radial (Poincare) homotopy for d, centered at the coordinate origin, with
// all jet coordinates up to the intrinsic order treated as flat coordinates.
// Satisfies d(h(w)) + h(d(w)) = w for degree >= 1 (and = w - w(0) on degree 0
// through h(d(w))). Requires degree >= 1.
ScalarForm poincare(const ScalarForm& omega);
VectorForm poincare(const VectorForm& omega);

// Constructive splitting (the local-exactness diagram chase made effective):
// returns (psi, phi1) with phi = d(psi) + dT(phi1), recursing through
// phi0 = P(d phi) and bottoming out in the radial homotopy at covalence 0.
// Preconditions: dT(d phi) = 0 for covalence <= m-1; d phi must be d_T-exact
// on the nose at covalence m; d phi = 0 for covalence 0. Violations throw
// DomainError carrying the rendered residual.
std::pair<VectorForm, VectorForm> split_dT_d(const VectorForm& phi);

}  // namespace fcx
