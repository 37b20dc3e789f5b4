#include "framecomplex/variational.hpp"

#include <numeric>

#include "framecomplex/errors.hpp"
#include "framecomplex/serialize.hpp"

namespace fcx {

Lagrangian::Lagrangian(BundleContext ctx_in, int order_in, PolyExpr density_in)
    : ctx(ctx_in), order(order_in), density(std::move(density_in)) {
  if (order < 0) throw DomainError("Lagrangian order must be non-negative");
  if (density.intrinsic_order() > order)
    throw DomainError("Lagrangian density has intrinsic order " +
                      std::to_string(density.intrinsic_order()) + " > declared order " +
                      std::to_string(order));
  for (const auto& coord : density.support()) {
    if (coord.index.width() != ctx.frame_dim || coord.fiber > ctx.fiber_dim)
      throw DomainError("Lagrangian density coordinate " + coord.to_string() +
                        " does not fit context " + ctx.to_string());
  }
}

VectorForm Lagrangian::volume_form() const {
  std::vector<int> full(ctx.frame_dim);
  std::iota(full.begin(), full.end(), 1);
  return VectorForm::term(ScalarForm::function(ctx, density), full);
}

namespace {

// "c*L" when the result is proportional to the density, for readable reports.
std::string describe_multiple(const PolyExpr& value, const PolyExpr& density) {
  if (value.is_zero()) return "0";
  if (!density.is_zero() && !density.terms().empty()) {
    const auto& [lead_mono, lead_coeff] = *density.terms().begin();
    auto it = value.terms().find(lead_mono);
    if (it != value.terms().end()) {
      Rational ratio = it->second / lead_coeff;
      if (value == density.scaled(ratio)) return to_string(ratio) + "*L";
    }
  }
  return render(value, Format::Plain);
}

}  // namespace

HomogeneityReport is_homogeneous(const Lagrangian& lagrangian) {
  const auto& ctx = lagrangian.ctx;
  HomogeneityReport report;
  for (int i = 1; i <= ctx.frame_dim; ++i) {
    for (int j = 1; j <= ctx.frame_dim; ++j) {
      PolyExpr value = delta_apply(ctx, MultiIndex::unit(ctx.frame_dim, i), j,
                                   lagrangian.density, lagrangian.order);
      PolyExpr expected = i == j ? lagrangian.density : PolyExpr();
      if (!(value == expected)) {
        report.homogeneous = false;
        report.failures.push_back(
            "Delta^" + MultiIndex::unit(ctx.frame_dim, i).to_string() + "_" +
            std::to_string(j) + " L = " + describe_multiple(value, lagrangian.density) +
            ", expected " + (i == j ? "L" : "0"));
      }
    }
  }
  for (int p = 2; p <= lagrangian.order + 1; ++p) {
    for (const auto& index : MultiIndex::all_of_degree(ctx.frame_dim, p)) {
      for (int j = 1; j <= ctx.frame_dim; ++j) {
        PolyExpr value = delta_apply(ctx, index, j, lagrangian.density, lagrangian.order);
        if (!value.is_zero()) {
          report.homogeneous = false;
          report.failures.push_back("Delta^" + index.to_string() + "_" + std::to_string(j) +
                                    " L = " + describe_multiple(value, lagrangian.density) +
                                    ", expected 0");
        }
      }
    }
  }
  return report;
}

std::vector<ScalarForm> hilbert(const Lagrangian& lagrangian) {
  ScalarForm dL = ScalarForm::function(lagrangian.ctx, lagrangian.density).d();
  std::vector<ScalarForm> out;
  out.reserve(lagrangian.ctx.frame_dim);
  for (int i = 1; i <= lagrangian.ctx.frame_dim; ++i) {
    if (dL.is_zero())
      out.push_back(ScalarForm(lagrangian.ctx, 1));
    else
      out.push_back(P_scalar(dL, i, 1));
  }
  return out;
}

EulerLagrangeResult euler_lagrange(const Lagrangian& lagrangian) {
  const auto& ctx = lagrangian.ctx;

  VectorForm lambda = lagrangian.volume_form();
  VectorForm homotopy_route = lambda.d().is_zero()
                                  ? VectorForm(ctx, 1, ctx.frame_dim)
                                  : canonical_rep(lambda.d());

  // Coordinate formula: sum over alpha and |I| <= k of
  // (-1)^{|I|} d_I(dL/du^alpha_I) du^alpha.
  ScalarForm epsilon(ctx, 1);
  for (int alpha = 1; alpha <= ctx.fiber_dim; ++alpha) {
    PolyExpr total;
    for (int p = 0; p <= lagrangian.order; ++p) {
      for (const auto& index : MultiIndex::all_of_degree(ctx.frame_dim, p)) {
        PolyExpr contribution =
            apply_dI(ctx, lagrangian.density.partial(jet(alpha, index)), index);
        total = p % 2 == 0 ? total + contribution : total - contribution;
      }
    }
    epsilon = epsilon + ScalarForm::term(ctx, total,
                                         {jet(alpha, MultiIndex::zero(ctx.frame_dim))});
  }
  std::vector<int> full(ctx.frame_dim);
  std::iota(full.begin(), full.end(), 1);
  VectorForm coordinate_route = VectorForm::term(epsilon, full);

  EulerLagrangeResult result{homotopy_route, coordinate_route,
                             homotopy_route == coordinate_route};
  return result;
}

VectorForm helmholtz(const VectorForm& source) {
  const auto& ctx = source.context();
  if (source.degree() != 1 && !source.is_zero())
    throw DomainError("Helmholtz-Sonin map needs a source form of degree 1");
  if (source.covalence() != ctx.frame_dim && !source.is_zero())
    throw DomainError("Helmholtz-Sonin map needs covalence m");
  VectorForm ds = source.d();
  if (ds.is_zero()) return VectorForm(ctx, 2, ctx.frame_dim);
  return canonical_rep(ds);
}

FundamentalFormResult fundamental_form(const Lagrangian& lagrangian) {
  const auto& ctx = lagrangian.ctx;

  VectorForm theta = lagrangian.volume_form();
  for (int step = 0; step < ctx.frame_dim; ++step) {
    VectorForm differential = theta.d();
    if (differential.is_zero()) {
      theta = VectorForm(ctx, theta.degree() + 1, theta.covalence() == 0 ? 0 : theta.covalence() - 1);
      break;
    }
    theta = P_op(differential);
  }
  FundamentalFormResult result{theta.as_scalar(), 0, false, false, false, 0, {}};
  result.order = result.theta.intrinsic_order();
  if (lagrangian.order <= 1) result.projectable_to_first = result.order <= 1;

  if (lagrangian.order == 1) {
    // First-order alternative S^1 d S^2 d ... S^m dL, innermost first.
    ScalarForm alternative = ScalarForm::function(ctx, lagrangian.density);
    for (int i = ctx.frame_dim; i >= 1; --i)
      alternative = vertical_endo(alternative.d(), i);
    result.s_route_computed = true;
    if (result.theta == alternative) {
      result.s_route_proportional = true;
      result.s_route_factor = 1;
      result.note = "Theta_m equals S^1 d ... S^m dL";
    } else if (!alternative.is_zero() && !result.theta.is_zero()) {
      const auto& [labels, coeff] = *alternative.terms().begin();
      auto it = result.theta.terms().find(labels);
      if (it != result.theta.terms().end() && !coeff.terms().empty()) {
        const auto& [mono, lead] = *coeff.terms().begin();
        auto jt = it->second.terms().find(mono);
        if (jt != it->second.terms().end()) {
          Rational ratio = jt->second / lead;
          if (result.theta == alternative.scaled(ratio)) {
            result.s_route_proportional = true;
            result.s_route_factor = ratio;
            result.note = "Theta_m = " + to_string(ratio) + " * S^1 d ... S^m dL";
          }
        }
      }
      if (!result.s_route_proportional)
        result.note = "Theta_m is not a constant multiple of S^1 d ... S^m dL";
    } else {
      result.s_route_proportional = result.theta == alternative;
      result.s_route_factor = 0;
      result.note = result.s_route_proportional ? "both routes vanish"
                                                : "exactly one route vanishes";
    }
  }
  return result;
}

}  // namespace fcx
