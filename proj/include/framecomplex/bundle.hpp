// Bundle bookkeeping: the (m, n) context, fibre dimensions and order metadata.
#pragma once

#include <string>

namespace fcx {

// The chart is global: E = R^n with coordinates u^1..u^n, and the frame
// bundles carry the jet coordinates u^alpha_I for |I| <= k. Jet coordinates
// are shared across all orders, so pullback along the bundle projections is
// the identity on expressions and "order" is metadata recovered from the
// coordinates actually present (intrinsic_order below).
struct BundleContext {
  int frame_dim;  // m, number of frame directions
  int fiber_dim;  // n = dim E

  BundleContext(int m, int n);

  bool operator==(const BundleContext& other) const = default;
  std::string to_string() const;
};

// dim F^k_(m)E = n * C(m+k, k), the number of jet coordinates of order <= k.
long long dimension(const BundleContext& ctx, int order);

// Maximum |I| over the jet coordinates occurring in x (coefficients and
// du-labels alike); 0 for constants.
template <typename T>
int intrinsic_order(const T& x) {
  return x.intrinsic_order();
}

// x lives on every bundle of order >= intrinsic_order(x); under the shared
// coordinate convention the value itself is its own projection.
template <typename T>
bool projectable_to(const T& x, int target_order) {
  return x.intrinsic_order() <= target_order;
}

}  // namespace fcx
