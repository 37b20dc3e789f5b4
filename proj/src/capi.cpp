// C bindings: exceptions from the core are translated into status codes and a
// per-thread error message here; no exception crosses the boundary.
#include "framecomplex.h"

#include <cstring>
#include <string>

#include "framecomplex/errors.hpp"
#include "framecomplex/expr_parser.hpp"
#include "framecomplex/homotopy.hpp"
#include "framecomplex/serialize.hpp"
#include "framecomplex/variational.hpp"
#include "framecomplex/verify.hpp"

struct fcx_context {
  fcx::BundleContext impl;
};

struct fcx_expr {
  fcx::BundleContext ctx;
  fcx::PolyExpr impl;
};

struct fcx_form {
  fcx::VectorForm impl;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
fcx_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fcx::ParseError& e) {
    g_last_error = e.what();
    return FCX_PARSE_ERROR;
  } catch (const fcx::DomainError& e) {
    g_last_error = e.what();
    return FCX_DOMAIN_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FCX_DOMAIN_ERROR;
  }
}

fcx_status require(bool condition, const char* what) {
  if (condition) return FCX_OK;
  g_last_error = what;
  return FCX_DOMAIN_ERROR;
}

template <typename Fn>
fcx_status unary_form_op(const fcx_form* form, fcx_form** out, Fn&& fn) {
  fcx_status bad = require(form && out, "null argument to form operation");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    *out = new fcx_form{fn(form->impl)};
    return FCX_OK;
  });
}

}  // namespace

extern "C" {

const char* fcx_version(void) { return "framecomplex 1.0.0"; }

const char* fcx_last_error(void) { return g_last_error.c_str(); }

void fcx_string_free(char* text) { delete[] text; }

/* --------------------------------------------------------------------- context */

fcx_context* fcx_context_new(int frame_dim_m, int fiber_dim_n) {
  fcx_context* out = nullptr;
  guarded([&] {
    out = new fcx_context{fcx::BundleContext(frame_dim_m, fiber_dim_n)};
    return FCX_OK;
  });
  return out;
}

void fcx_context_free(fcx_context* ctx) { delete ctx; }

int fcx_context_m(const fcx_context* ctx) { return ctx ? ctx->impl.frame_dim : 0; }

int fcx_context_n(const fcx_context* ctx) { return ctx ? ctx->impl.fiber_dim : 0; }

long long fcx_dimension(const fcx_context* ctx, int order) {
  long long out = -1;
  if (!ctx) return -1;
  guarded([&] {
    out = fcx::dimension(ctx->impl, order);
    return FCX_OK;
  });
  return out;
}

/* ----------------------------------------------------------------- expressions */

fcx_status fcx_expr_parse(const fcx_context* ctx, const char* text, fcx_expr** out) {
  fcx_status bad = require(ctx && text && out, "null argument to fcx_expr_parse");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    *out = new fcx_expr{ctx->impl, fcx::parse_expr(text, ctx->impl)};
    return FCX_OK;
  });
}

void fcx_expr_free(fcx_expr* expr) { delete expr; }

char* fcx_expr_render(const fcx_expr* expr, const char* format) {
  if (!expr || !format) return nullptr;
  char* out = nullptr;
  guarded([&] {
    out = copy_string(fcx::render(expr->impl, fcx::format_from_string(format)));
    return FCX_OK;
  });
  return out;
}

int fcx_expr_order(const fcx_expr* expr) { return expr ? expr->impl.intrinsic_order() : -1; }

int fcx_expr_equal(const fcx_expr* a, const fcx_expr* b) {
  if (!a || !b) return 0;
  return a->impl == b->impl ? 1 : 0;
}

/* ----------------------------------------------------------------------- forms */

fcx_status fcx_form_parse_json(const char* document, fcx_form** out) {
  fcx_status bad = require(document && out, "null argument to fcx_form_parse_json");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    *out = new fcx_form{fcx::form_from_json(document)};
    return FCX_OK;
  });
}

void fcx_form_free(fcx_form* form) { delete form; }

char* fcx_form_render(const fcx_form* form, const char* format) {
  if (!form || !format) return nullptr;
  char* out = nullptr;
  guarded([&] {
    out = copy_string(fcx::render(form->impl, fcx::format_from_string(format)));
    return FCX_OK;
  });
  return out;
}

int fcx_form_degree(const fcx_form* form) { return form ? form->impl.degree() : -1; }

int fcx_form_covalence(const fcx_form* form) { return form ? form->impl.covalence() : -1; }

int fcx_form_order(const fcx_form* form) { return form ? form->impl.intrinsic_order() : -1; }

int fcx_form_is_zero(const fcx_form* form) { return form && form->impl.is_zero() ? 1 : 0; }

int fcx_form_equal(const fcx_form* a, const fcx_form* b) {
  if (!a || !b) return 0;
  return a->impl == b->impl ? 1 : 0;
}

/* ---------------------------------------------------------- exterior calculus */

fcx_status fcx_form_d(const fcx_form* form, fcx_form** out) {
  return unary_form_op(form, out, [](const fcx::VectorForm& phi) { return phi.d(); });
}

fcx_status fcx_form_dT(const fcx_form* form, fcx_form** out) {
  return unary_form_op(form, out, [](const fcx::VectorForm& phi) { return fcx::dT(phi); });
}

fcx_status fcx_form_P(const fcx_form* form, fcx_form** out) {
  return unary_form_op(form, out, [](const fcx::VectorForm& phi) { return fcx::P_op(phi); });
}

fcx_status fcx_form_add(const fcx_form* a, const fcx_form* b, fcx_form** out) {
  fcx_status bad = require(a && b && out, "null argument to fcx_form_add");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    *out = new fcx_form{a->impl + b->impl};
    return FCX_OK;
  });
}

fcx_status fcx_form_wedge(const fcx_form* a, const fcx_form* b, fcx_form** out) {
  fcx_status bad = require(a && b && out, "null argument to fcx_form_wedge");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    *out = new fcx_form{a->impl.wedge(b->impl)};
    return FCX_OK;
  });
}

fcx_status fcx_form_homotopy_residual(const fcx_form* form, fcx_form** out) {
  return unary_form_op(form, out,
                       [](const fcx::VectorForm& phi) { return fcx::homotopy_residual(phi); });
}

fcx_status fcx_form_split(const fcx_form* form, fcx_form** psi, fcx_form** phi1) {
  fcx_status bad = require(form && psi && phi1, "null argument to fcx_form_split");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    auto [p, q] = fcx::split_dT_d(form->impl);
    *psi = new fcx_form{std::move(p)};
    *phi1 = new fcx_form{std::move(q)};
    return FCX_OK;
  });
}

/* ------------------------------------------------- variational constructions */

fcx_status fcx_euler_lagrange(const fcx_context* ctx, int order, const fcx_expr* density,
                              fcx_form** epsilon, int* routes_agree) {
  fcx_status bad =
      require(ctx && density && epsilon && routes_agree, "null argument to fcx_euler_lagrange");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    fcx::Lagrangian lagrangian(ctx->impl, order, density->impl);
    fcx::EulerLagrangeResult result = fcx::euler_lagrange(lagrangian);
    *epsilon = new fcx_form{result.source};
    *routes_agree = result.routes_agree ? 1 : 0;
    if (!result.routes_agree) {
      g_last_error = "Euler-Lagrange route cross-check failed";
      return FCX_VERIFY_FAIL;
    }
    return FCX_OK;
  });
}

fcx_status fcx_hilbert(const fcx_context* ctx, int order, const fcx_expr* density,
                       int direction, fcx_form** theta) {
  fcx_status bad = require(ctx && density && theta, "null argument to fcx_hilbert");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    if (direction < 1 || direction > ctx->impl.frame_dim)
      throw fcx::DomainError("hilbert direction out of range");
    fcx::Lagrangian lagrangian(ctx->impl, order, density->impl);
    *theta = new fcx_form{
        fcx::VectorForm::from_scalar(fcx::hilbert(lagrangian)[direction - 1])};
    return FCX_OK;
  });
}

fcx_status fcx_check_homogeneous(const fcx_context* ctx, int order, const fcx_expr* density,
                                 int* homogeneous, char** report) {
  fcx_status bad =
      require(ctx && density && homogeneous && report, "null argument to fcx_check_homogeneous");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    fcx::Lagrangian lagrangian(ctx->impl, order, density->impl);
    fcx::HomogeneityReport result = fcx::is_homogeneous(lagrangian);
    *homogeneous = result.homogeneous ? 1 : 0;
    std::string text;
    for (const auto& line : result.failures) text += line + "\n";
    *report = copy_string(text);
    return FCX_OK;
  });
}

fcx_status fcx_helmholtz(const fcx_form* source, fcx_form** out) {
  return unary_form_op(source, out,
                       [](const fcx::VectorForm& phi) { return fcx::helmholtz(phi); });
}

fcx_status fcx_fundamental_form(const fcx_context* ctx, int order, const fcx_expr* density,
                                fcx_form** theta, char** report) {
  fcx_status bad =
      require(ctx && density && theta && report, "null argument to fcx_fundamental_form");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    fcx::Lagrangian lagrangian(ctx->impl, order, density->impl);
    fcx::FundamentalFormResult result = fcx::fundamental_form(lagrangian);
    *theta = new fcx_form{fcx::VectorForm::from_scalar(result.theta)};
    std::string text = "intrinsic order: " + std::to_string(result.order) + "\n";
    if (lagrangian.order <= 1)
      text += std::string("projectable to first-order bundle: ") +
              (result.projectable_to_first ? "yes" : "no") + "\n";
    if (result.s_route_computed) text += result.note + "\n";
    *report = copy_string(text);
    return FCX_OK;
  });
}

/* ----------------------------------------------------------------- verification */

fcx_status fcx_verify_homotopy(const fcx_context* ctx, int order, int degree, int covalence,
                               int cases, unsigned long long seed, char** report) {
  fcx_status bad = require(ctx && report, "null argument to fcx_verify_homotopy");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    fcx::VerifyResult result =
        fcx::verify_homotopy(ctx->impl, order, degree, covalence, cases, seed);
    *report = copy_string(result.report);
    if (!result.ok) {
      g_last_error = "homotopy identity verification failed";
      return FCX_VERIFY_FAIL;
    }
    return FCX_OK;
  });
}

fcx_status fcx_verify_lemmas(const fcx_context* ctx, int order, int cases,
                             unsigned long long seed, char** report) {
  fcx_status bad = require(ctx && report, "null argument to fcx_verify_lemmas");
  if (bad != FCX_OK) return bad;
  return guarded([&] {
    fcx::VerifyResult result = fcx::verify_lemmas(ctx->impl, order, cases, seed);
    *report = copy_string(result.report);
    if (!result.ok) {
      g_last_error = "lemma verification failed";
      return FCX_VERIFY_FAIL;
    }
    return FCX_OK;
  });
}

}  // extern "C"
