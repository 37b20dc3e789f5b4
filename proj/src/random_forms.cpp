#include "framecomplex/random_forms.hpp"

#include "framecomplex/errors.hpp"

namespace fcx {

int RandomGen::uniform(int lo, int hi) {
  if (hi < lo) throw DomainError("uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational RandomGen::rational(int max_abs_numerator, int max_denominator) {
  int num = 0;
  while (num == 0) num = uniform(-max_abs_numerator, max_abs_numerator);
  return make_rational(num, uniform(1, max_denominator));
}

MultiIndex RandomGen::multi_index(int width, int max_degree) {
  MultiIndex out = MultiIndex::zero(width);
  int degree = uniform(0, max_degree);
  for (int step = 0; step < degree; ++step) out = out.raised(uniform(1, width));
  return out;
}

JetCoordinate RandomGen::coordinate(const BundleContext& ctx, int max_order) {
  return jet(uniform(1, ctx.fiber_dim), multi_index(ctx.frame_dim, max_order));
}

Monomial RandomGen::monomial(const BundleContext& ctx, int max_order, int max_degree) {
  std::vector<Monomial::Factor> factors;
  int degree = uniform(0, max_degree);
  for (int step = 0; step < degree; ++step) factors.emplace_back(coordinate(ctx, max_order), 1);
  return Monomial(std::move(factors));
}

PolyExpr RandomGen::poly(const BundleContext& ctx, int max_order, int max_terms,
                         int max_degree) {
  PolyExpr out;
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    out = out + PolyExpr::term(monomial(ctx, max_order, max_degree), rational());
  return out;
}

ScalarForm RandomGen::scalar_form(const BundleContext& ctx, int degree, int max_order,
                                  int max_terms, int coeff_terms, int coeff_degree) {
  ScalarForm out(ctx, degree);
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<JetCoordinate> labels;
    for (int l = 0; l < degree; ++l) labels.push_back(coordinate(ctx, max_order));
    out = out + ScalarForm::term(ctx, poly(ctx, max_order, coeff_terms, coeff_degree),
                                 std::move(labels));
  }
  return out;
}

VectorForm RandomGen::vector_form(const BundleContext& ctx, int degree, int covalence,
                                  int max_order, int max_terms, int coeff_terms,
                                  int coeff_degree) {
  VectorForm out(ctx, degree, covalence);
  int components = uniform(1, 2);
  for (int c = 0; c < components; ++c) {
    std::vector<int> tuple;
    for (int l = 0; l < covalence; ++l) tuple.push_back(uniform(1, ctx.frame_dim));
    out = out + VectorForm::term(
                    scalar_form(ctx, degree, max_order, max_terms, coeff_terms, coeff_degree),
                    std::move(tuple));
  }
  return out;
}

PolyExpr RandomGen::lagrangian_density(const BundleContext& ctx, int order, int max_terms,
                                       int max_degree) {
  return poly(ctx, order, max_terms, max_degree);
}

}  // namespace fcx
