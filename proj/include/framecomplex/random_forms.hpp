// Deterministic random generators for expressions and forms, used by the
// fuzz-verification entry points and the test suites. Same seed, same values,
// on every platform (no distribution objects, plain modulo draws).
#pragma once

#include <cstdint>
#include <random>

#include "framecomplex/forms.hpp"

namespace fcx {

class RandomGen {
 public:
  explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive bounds
  Rational rational(int max_abs_numerator = 4, int max_denominator = 3);  // nonzero
  MultiIndex multi_index(int width, int max_degree);
  JetCoordinate coordinate(const BundleContext& ctx, int max_order);
  Monomial monomial(const BundleContext& ctx, int max_order, int max_degree);
  PolyExpr poly(const BundleContext& ctx, int max_order, int max_terms, int max_degree);

  // Forms of the exact degree/covalence with coefficients of bounded monomial
  // count and degree; labels have index order <= max_order.
  ScalarForm scalar_form(const BundleContext& ctx, int degree, int max_order,
                         int max_terms = 3, int coeff_terms = 1, int coeff_degree = 2);
  VectorForm vector_form(const BundleContext& ctx, int degree, int covalence,
                         int max_order, int max_terms = 2, int coeff_terms = 1,
                         int coeff_degree = 2);

  // Polynomial Lagrangian density of intrinsic order <= order.
  PolyExpr lagrangian_density(const BundleContext& ctx, int order, int max_terms = 3,
                              int max_degree = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace fcx
