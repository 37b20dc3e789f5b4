#include "framecomplex/bundle.hpp"

#include "framecomplex/errors.hpp"
#include "framecomplex/rational.hpp"

namespace fcx {

BundleContext::BundleContext(int m, int n) : frame_dim(m), fiber_dim(n) {
  if (m < 1) throw DomainError("frame dimension m must be at least 1");
  if (n < 1) throw DomainError("fiber dimension n must be at least 1");
}

std::string BundleContext::to_string() const {
  return "(m=" + std::to_string(frame_dim) + ", n=" + std::to_string(fiber_dim) + ")";
}

long long dimension(const BundleContext& ctx, int order) {
  if (order < 0) throw DomainError("bundle order must be non-negative");
  Integer count = binomial(static_cast<unsigned>(ctx.frame_dim + order),
                           static_cast<unsigned>(order)) * ctx.fiber_dim;
  return count.get_si();
}

}  // namespace fcx
