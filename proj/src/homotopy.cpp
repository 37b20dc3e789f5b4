#include "framecomplex/homotopy.hpp"

#include <algorithm>

#include "framecomplex/errors.hpp"
#include "framecomplex/serialize.hpp"

namespace fcx {

Rational P_coeff(const MultiIndex& J, int degree_r, int covalence_s, int frame_dim) {
  if (degree_r < 1) throw DomainError("P coefficient needs degree >= 1");
  if (covalence_s < 1 || covalence_s > frame_dim)
    throw DomainError("P coefficient needs covalence in 1..m");
  if (J.width() != frame_dim) throw DomainError("P coefficient multi-index width mismatch");
  int p = J.degree();
  Integer num = factorial(static_cast<unsigned>(frame_dim - covalence_s)) *
                factorial(static_cast<unsigned>(p));
  Integer r_power;
  mpz_ui_pow_ui(r_power.get_mpz_t(), static_cast<unsigned>(degree_r),
                static_cast<unsigned>(p + 1));
  Integer den = r_power *
                factorial(static_cast<unsigned>(frame_dim - covalence_s + p + 1)) *
                Integer(static_cast<long>(J.index_factorial()));
  Rational out(num, den);
  out.canonicalize();
  return p % 2 == 0 ? out : Rational(-out);
}

ScalarForm P_scalar(const ScalarForm& phi, int direction_j, int covalence_s) {
  const auto& ctx = phi.context();
  if (phi.degree() < 1) throw DomainError("P needs a form of degree >= 1");
  if (direction_j < 1 || direction_j > ctx.frame_dim)
    throw DomainError("frame direction " + std::to_string(direction_j) + " out of range");
  ScalarForm out(ctx, phi.degree());
  // The summation bound r*k - 1 uses the intrinsic order of the argument;
  // k = 0 leaves the empty sum.
  int bound = phi.degree() * phi.intrinsic_order() - 1;
  for (int p = 0; p <= bound; ++p) {
    for (const auto& J : MultiIndex::all_of_degree(ctx.frame_dim, p)) {
      ScalarForm acted = apply_SI(phi, J.raised(direction_j));
      if (acted.is_zero()) continue;
      acted = apply_dI(acted, J);
      out = out + acted.scaled(P_coeff(J, phi.degree(), covalence_s, ctx.frame_dim));
    }
  }
  return out;
}

VectorForm P_op(const VectorForm& phi) {
  const auto& ctx = phi.context();
  if (phi.degree() < 1) throw DomainError("P needs a form of degree >= 1");
  int s = phi.covalence();
  VectorForm out(ctx, phi.degree(), s == 0 ? 0 : s - 1);
  if (s == 0) return out;  // P^j_(0) = 0
  for (const auto& [tuple, component] : phi.components()) {
    // d/dt^j contracted into dt^tuple, summed over j in the tuple.
    for (std::size_t l = 0; l < tuple.size(); ++l) {
      std::vector<int> rest;
      rest.reserve(tuple.size() - 1);
      for (std::size_t j = 0; j < tuple.size(); ++j)
        if (j != l) rest.push_back(tuple[j]);
      ScalarForm applied = P_scalar(component, tuple[l], s);
      out = out + VectorForm::term(l % 2 == 0 ? applied : -applied, rest);
    }
  }
  return out;
}

VectorForm homotopy_residual(const VectorForm& phi) {
  const auto& ctx = phi.context();
  if (phi.degree() < 1) throw DomainError("homotopy residual needs degree >= 1");
  if (phi.covalence() > ctx.frame_dim - 1)
    throw DomainError("homotopy residual needs covalence <= m-1; the identity is not "
                      "asserted at covalence m");
  return dT(P_op(phi)) + P_op(dT(phi)) - phi;
}

VectorForm canonical_rep(const VectorForm& phi) {
  if (phi.degree() < 1) throw DomainError("canonical representative needs degree >= 1");
  if (phi.covalence() != phi.context().frame_dim && !phi.is_zero())
    throw DomainError("canonical representative needs covalence m");
  return phi - dT(P_op(phi));
}

ScalarForm poincare(const ScalarForm& omega) {
  const auto& ctx = omega.context();
  if (omega.degree() < 1) throw DomainError("poincare homotopy needs degree >= 1");
  ScalarForm out(ctx, omega.degree() - 1);
  for (const auto& [labels, coeff] : omega.terms()) {
    for (const auto& [monomial, value] : coeff.terms()) {
      int weight_den = monomial.total_degree() + omega.degree();
      Rational weight = make_rational(1, weight_den);
      PolyExpr scaled_term = PolyExpr::term(monomial, value * weight);
      int sign = 1;
      for (std::size_t l = 0; l < labels.size(); ++l) {
        std::vector<JetCoordinate> rest;
        rest.reserve(labels.size() - 1);
        for (std::size_t j = 0; j < labels.size(); ++j)
          if (j != l) rest.push_back(labels[j]);
        PolyExpr factor = scaled_term * PolyExpr::coordinate(labels[l]);
        out = out + ScalarForm::term(ctx, sign == 1 ? factor : -factor, std::move(rest));
        sign = -sign;
      }
    }
  }
  return out;
}

VectorForm poincare(const VectorForm& omega) {
  if (omega.degree() < 1) throw DomainError("poincare homotopy needs degree >= 1");
  VectorForm out(omega.context(), omega.degree() - 1, omega.covalence());
  for (const auto& [tuple, component] : omega.components())
    out = out + VectorForm::term(poincare(component), tuple);
  return out;
}

std::pair<VectorForm, VectorForm> split_dT_d(const VectorForm& phi) {
  const auto& ctx = phi.context();
  int r = phi.degree();
  int s = phi.covalence();
  VectorForm zero_psi(ctx, r > 0 ? r - 1 : 0, s);
  VectorForm zero_phi1(ctx, r, s > 0 ? s - 1 : 0);
  if (phi.is_zero()) return {zero_psi, zero_phi1};

  VectorForm dphi = phi.d();
  if (s == 0) {
    if (!dphi.is_zero())
      throw DomainError("split: input of covalence 0 is not closed; d(phi) = " +
                        render(dphi, Format::Plain));
    if (r == 0)
      throw DomainError("split: a nonzero closed function is constant and neither d- nor "
                        "dT-exact");
    return {poincare(phi), zero_phi1};
  }

  if (s <= ctx.frame_dim - 1) {
    VectorForm obstruction = dT(dphi);
    if (!obstruction.is_zero())
      throw DomainError("split: precondition dT(d(phi)) = 0 fails; residual = " +
                        render(obstruction, Format::Plain));
  } else {
    VectorForm residual = dphi - dT(P_op(dphi));
    if (!residual.is_zero())
      throw DomainError("split: d(phi) is not dT-exact at covalence m; residual = " +
                        render(residual, Format::Plain));
  }

  // Lemma 5 recursion: phi0 = P(d phi) satisfies dT(phi0) = d(phi), split phi0,
  // then phi - dT(phi1) is d-closed and the radial homotopy provides psi.
  VectorForm phi0 = P_op(dphi);
  auto [phi1, phi2] = split_dT_d(phi0);
  VectorForm corrected = phi - dT(phi1);
  if (r == 0) {
    if (!corrected.is_zero())
      throw DomainError("split: degree-0 residual is a nonzero constant: " +
                        render(corrected, Format::Plain));
    return {zero_psi, phi1};
  }
  return {poincare(corrected), phi1};
}

}  // namespace fcx
