#include "framecomplex/verify.hpp"

#include "framecomplex/homotopy.hpp"
#include "framecomplex/random_forms.hpp"
#include "framecomplex/serialize.hpp"
#include "framecomplex/variational.hpp"

namespace fcx {

namespace {

void record_failure(VerifyResult& result, const std::string& what, const VectorForm& witness) {
  if (!result.ok) return;  // keep the first counterexample
  result.ok = false;
  result.report += "FAIL " + what + "\n  witness: " + render(witness, Format::Plain) + "\n";
}

void record_failure(VerifyResult& result, const std::string& what, const ScalarForm& witness) {
  record_failure(result, what, VectorForm::from_scalar(witness));
}

std::string case_tag(int index) { return "case " + std::to_string(index); }

}  // namespace

VerifyResult verify_lemmas(const BundleContext& ctx, int order, int cases, std::uint64_t seed) {
  RandomGen gen(seed);
  VerifyResult result;
  const int m = ctx.frame_dim;

  for (int c = 0; c < cases; ++c) {
    // Lemmas 1 and 2: S^i d_j - d_j S^i = r delta^i_j on r-forms.
    for (int r = 0; r <= 3; ++r) {
      ScalarForm phi = gen.scalar_form(ctx, r, order);
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          ScalarForm lhs = vertical_endo(total_derivative(phi, j), i) -
                           total_derivative(vertical_endo(phi, i), j);
          ScalarForm rhs = i == j ? phi.scaled(Rational(r)) : ScalarForm(ctx, r);
          ++result.cases;
          if (!(lhs == rhs))
            record_failure(result,
                           case_tag(c) + ": S^" + std::to_string(i) + " d_" +
                               std::to_string(j) + " - d_" + std::to_string(j) + " S^" +
                               std::to_string(i) + " != r delta (r=" + std::to_string(r) + ")",
                           phi);
        }
      }
    }

    // Lemmas 3 and 4: the weighted multi-index rearrangement identity.
    for (int p = 1; p <= 2; ++p) {
      ScalarForm phi = gen.scalar_form(ctx, 2, order);
      int r = phi.degree();
      for (int j = 1; j <= m; ++j) {
        auto weighted_dS = [&](const ScalarForm& input, int degree_p) {
          ScalarForm total(ctx, input.degree());
          for (const auto& index : MultiIndex::all_of_degree(m, degree_p))
            total = total +
                    apply_dI(apply_SI(input, index), index).scaled(Rational(index.weight()));
          return total;
        };
        ScalarForm lhs = weighted_dS(total_derivative(phi, j), p);
        ScalarForm rhs = total_derivative(weighted_dS(phi, p), j) +
                         total_derivative(weighted_dS(phi, p - 1), j)
                             .scaled(Rational(r * p));
        ++result.cases;
        if (!(lhs == rhs))
          record_failure(result,
                         case_tag(c) + ": lemma 4 identity fails (p=" + std::to_string(p) +
                             ", j=" + std::to_string(j) + ")",
                         phi);
      }
    }

    // Bicomplex relations on vector-valued forms.
    {
      int s = gen.uniform(0, m - 1);
      int r = gen.uniform(0, 2);
      VectorForm phi = gen.vector_form(ctx, r, s, order);
      result.cases += 3;
      if (!phi.d().d().is_zero())
        record_failure(result, case_tag(c) + ": d^2 != 0", phi);
      if (!dT(dT(phi)).is_zero())
        record_failure(result, case_tag(c) + ": dT^2 != 0", phi);
      if (!(dT(phi).d() == dT(phi.d())))
        record_failure(result, case_tag(c) + ": d dT != dT d", phi);
    }
  }

  result.report = (result.ok ? "PASS" : "FAIL") + std::string(" lemmas: ") +
                  std::to_string(result.cases) + " checks on " + ctx.to_string() +
                  " order<=" + std::to_string(order) + "\n" + result.report;
  return result;
}

VerifyResult verify_homotopy(const BundleContext& ctx, int order, int degree, int covalence,
                             int cases, std::uint64_t seed) {
  RandomGen gen(seed);
  VerifyResult result;
  for (int c = 0; c < cases; ++c) {
    VectorForm phi = gen.vector_form(ctx, degree, covalence, order);
    VectorForm residual = homotopy_residual(phi);
    ++result.cases;
    if (!residual.is_zero()) {
      result.ok = false;
      result.report += "FAIL " + case_tag(c) + ": dT P + P dT != id\n  phi: " +
                       render(phi, Format::Plain) + "\n  residual: " +
                       render(residual, Format::Plain) + "\n";
      break;
    }
  }
  result.report = (result.ok ? "PASS" : "FAIL") + std::string(" homotopy: ") +
                  std::to_string(result.cases) + " forms, " + ctx.to_string() + " k<=" +
                  std::to_string(order) + " r=" + std::to_string(degree) + " s=" +
                  std::to_string(covalence) + "\n" + result.report;
  return result;
}

VerifyResult verify_euler_lagrange(const BundleContext& ctx, int order, int cases,
                                   std::uint64_t seed) {
  RandomGen gen(seed);
  VerifyResult result;
  for (int c = 0; c < cases; ++c) {
    Lagrangian lagrangian(ctx, order, gen.lagrangian_density(ctx, order));
    EulerLagrangeResult el = euler_lagrange(lagrangian);
    ++result.cases;
    if (!el.routes_agree) {
      result.ok = false;
      result.report += "FAIL " + case_tag(c) + ": Euler-Lagrange routes disagree\n  L: " +
                       render(lagrangian.density, Format::Plain) + "\n  homotopy: " +
                       render(el.source, Format::Plain) + "\n  coordinate: " +
                       render(el.coordinate_route, Format::Plain) + "\n";
      break;
    }
    VectorForm h = helmholtz(el.source);
    ++result.cases;
    if (!h.is_zero()) {
      result.ok = false;
      result.report += "FAIL " + case_tag(c) + ": H(epsilon) != 0\n  L: " +
                       render(lagrangian.density, Format::Plain) + "\n  H: " +
                       render(h, Format::Plain) + "\n";
      break;
    }
  }
  result.report = (result.ok ? "PASS" : "FAIL") + std::string(" euler-lagrange: ") +
                  std::to_string(result.cases) + " checks, " + ctx.to_string() + " k=" +
                  std::to_string(order) + "\n" + result.report;
  return result;
}

VerifyResult verify_split(const BundleContext& ctx, int cases, std::uint64_t seed) {
  RandomGen gen(seed);
  VerifyResult result;
  for (int c = 0; c < cases; ++c) {
    // phi = d(psi0) + dT(x0) with psi0 in Omega^{0,1}, x0 in Omega^{1,0}.
    VectorForm psi0 = gen.vector_form(ctx, 0, 1, 1);
    VectorForm x0 = gen.vector_form(ctx, 1, 0, 1);
    VectorForm phi = psi0.d() + dT(x0);
    auto [psi, phi1] = split_dT_d(phi);
    VectorForm recomposed = psi.d() + dT(phi1);
    ++result.cases;
    if (!(recomposed == phi)) {
      result.ok = false;
      result.report += "FAIL " + case_tag(c) + ": split recomposition differs\n  phi: " +
                       render(phi, Format::Plain) + "\n  got: " +
                       render(recomposed, Format::Plain) + "\n";
      break;
    }
  }
  result.report = (result.ok ? "PASS" : "FAIL") + std::string(" split: ") +
                  std::to_string(result.cases) + " constructed forms, " + ctx.to_string() +
                  "\n" + result.report;
  return result;
}

VerifyResult verify_poincare(const BundleContext& ctx, int degree, int order, int cases,
                             std::uint64_t seed) {
  RandomGen gen(seed);
  VerifyResult result;
  for (int c = 0; c < cases; ++c) {
    ScalarForm omega = gen.scalar_form(ctx, degree, order, 3, 2, 2);
    ScalarForm lhs = degree >= 1 ? poincare(omega).d() + poincare(omega.d())
                                 : poincare(omega.d());
    ScalarForm rhs = omega;
    if (degree == 0) {
      PolyExpr f = omega.as_function();
      rhs = ScalarForm::function(ctx, f - PolyExpr::constant(f.constant_term()));
    }
    ++result.cases;
    if (!(lhs == rhs))
      record_failure(result, case_tag(c) + ": d h + h d != id (r=" + std::to_string(degree) + ")",
                     omega);
  }
  result.report = (result.ok ? "PASS" : "FAIL") + std::string(" poincare: ") +
                  std::to_string(result.cases) + " forms, degree " + std::to_string(degree) +
                  "\n" + result.report;
  return result;
}

}  // namespace fcx
