// Randomized exact verification of the operator identities. Every check is a
// zero-tolerance canonical-form comparison; a failing case is rendered into
// the report so it can be replayed.
#pragma once

#include <cstdint>
#include <string>

#include "framecomplex/bundle.hpp"

namespace fcx {

struct VerifyResult {
  bool ok = true;
  int cases = 0;       // individual identity checks performed
  std::string report;  // deterministic, one summary plus any counterexample
};

// Commutator lemmas S^i d_j - d_j S^i = r delta^i_j on random r-forms
// (r = 0..3), the weighted multi-index identity
//   sum_{|I|=p} w_I d_I S^I d_j = d_j (sum_{|I|=p} w_I d_I S^I
//                                      + r p sum_{|J|=p-1} w_J d_J S^J)
// for p = 1,2, and the bicomplex relations d^2 = 0, dT^2 = 0, d dT = dT d.
VerifyResult verify_lemmas(const BundleContext& ctx, int order, int cases, std::uint64_t seed);

// dT P + P dT = id on random forms of the given degree and covalence
// (degree >= 1, covalence <= m-1), coefficients random monomials of degree <= 2.
VerifyResult verify_homotopy(const BundleContext& ctx, int order, int degree, int covalence,
                             int cases, std::uint64_t seed);

// Both Euler-Lagrange routes agree and H(epsilon) = 0 on random Lagrangians.
VerifyResult verify_euler_lagrange(const BundleContext& ctx, int order, int cases,
                                   std::uint64_t seed);

// split_dT_d recomposes phi = d psi0 + dT x0 exactly on constructed inputs.
VerifyResult verify_split(const BundleContext& ctx, int cases, std::uint64_t seed);

// d h + h d = id (minus evaluation at 0 in degree 0) on random forms.
VerifyResult verify_poincare(const BundleContext& ctx, int degree, int order, int cases,
                             std::uint64_t seed);

}  // namespace fcx
