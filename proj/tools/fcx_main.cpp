// fcx: command-line front end for the framecomplex shared library. Talks to
// the engine exclusively through the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "framecomplex.h"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain error.
int exit_code(fcx_status status) { return static_cast<int>(status); }

struct ContextDeleter {
  void operator()(fcx_context* p) const { fcx_context_free(p); }
};
struct ExprDeleter {
  void operator()(fcx_expr* p) const { fcx_expr_free(p); }
};
struct FormDeleter {
  void operator()(fcx_form* p) const { fcx_form_free(p); }
};
using ContextPtr = std::unique_ptr<fcx_context, ContextDeleter>;
using ExprPtr = std::unique_ptr<fcx_expr, ExprDeleter>;
using FormPtr = std::unique_ptr<fcx_form, FormDeleter>;

std::string take_string(char* text) {
  if (!text) return {};
  std::string out(text);
  fcx_string_free(text);
  return out;
}

int fail(fcx_status status) {
  std::cerr << "error: " << fcx_last_error() << "\n";
  return exit_code(status);
}

ContextPtr make_context(int m, int n) {
  ContextPtr ctx(fcx_context_new(m, n));
  if (!ctx) std::cerr << "error: " << fcx_last_error() << "\n";
  return ctx;
}

std::string render_form(const fcx_form* form, const std::string& format) {
  return take_string(fcx_form_render(form, format.c_str()));
}

std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(3);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

unsigned long long default_seed() {
  const char* env = std::getenv("FRAMECOMPLEX_SEED");
  if (!env) return 0;
  return std::strtoull(env, nullptr, 10);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of vector-valued forms on frame bundles"};
  app.set_version_flag("--version", fcx_version());
  app.require_subcommand(1);

  int m = 1, n = 2, k = 1, r = 1, s = 0, cases = 20;
  unsigned long long seed = default_seed();
  std::string expression, format = "plain", path = "-";

  auto add_context = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "number of frame directions")->required();
    cmd->add_option("--n", n, "dimension of E")->required();
  };
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "Lagrangian / bundle order")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "plain|latex|json")->capture_default_str();
  };

  CLI::App* el = app.add_subcommand("el", "Euler-Lagrange form with route cross-check");
  add_context(el);
  add_order(el);
  add_format(el);
  el->add_option("expression", expression, "Lagrangian density")->required();

  CLI::App* hil = app.add_subcommand("hilbert", "Hilbert forms theta^i = P^i_(1) dL");
  add_context(hil);
  add_order(hil);
  add_format(hil);
  hil->add_option("expression", expression, "Lagrangian density")->required();

  CLI::App* hom = app.add_subcommand("check-homogeneous", "Zermelo homogeneity conditions");
  add_context(hom);
  add_order(hom);
  hom->add_option("expression", expression, "Lagrangian density")->required();

  CLI::App* fund = app.add_subcommand("fundamental", "fundamental form Theta_m = (Pd)^m Lambda");
  add_context(fund);
  add_order(fund);
  add_format(fund);
  fund->add_option("expression", expression, "Lagrangian density")->required();

  CLI::App* helm = app.add_subcommand("helmholtz", "Helmholtz-Sonin map of a source form");
  add_format(helm);
  helm->add_option("form", path, "form JSON file, or - for stdin")->capture_default_str();

  CLI::App* split = app.add_subcommand("split", "write phi as d(psi) + dT(phi1)");
  add_format(split);
  split->add_option("form", path, "form JSON file, or - for stdin")->capture_default_str();

  CLI::App* hv = app.add_subcommand("homotopy-verify", "fuzz dT P + P dT = id");
  add_context(hv);
  add_order(hv);
  hv->add_option("--r", r, "form degree")->required();
  hv->add_option("--s", s, "covalence")->required();
  hv->add_option("--cases", cases, "number of random forms")->capture_default_str();
  hv->add_option("--seed", seed, "RNG seed (default: FRAMECOMPLEX_SEED or 0)");

  CLI::App* lem = app.add_subcommand("lemmas", "fuzz the commutator lemmas and bicomplex relations");
  add_context(lem);
  add_order(lem);
  lem->add_option("--cases", cases, "number of random cases")->capture_default_str();
  lem->add_option("--seed", seed, "RNG seed (default: FRAMECOMPLEX_SEED or 0)");

  CLI::App* ren = app.add_subcommand("render", "re-render an expression or a form document");
  add_format(ren);
  ren->add_option("--m", m, "number of frame directions (with --expr)");
  ren->add_option("--n", n, "dimension of E (with --expr)");
  ren->add_option("--expr", expression, "expression text");
  ren->add_option("form", path, "form JSON file, or - for stdin")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (el->parsed() || hil->parsed() || hom->parsed() || fund->parsed()) {
    ContextPtr ctx = make_context(m, n);
    if (!ctx) return 3;
    fcx_expr* raw_expr = nullptr;
    fcx_status status = fcx_expr_parse(ctx.get(), expression.c_str(), &raw_expr);
    if (status != FCX_OK) return fail(status);
    ExprPtr density(raw_expr);

    if (el->parsed()) {
      fcx_form* raw = nullptr;
      int agree = 0;
      status = fcx_euler_lagrange(ctx.get(), k, density.get(), &raw, &agree);
      FormPtr epsilon(raw);
      if (status != FCX_OK && status != FCX_VERIFY_FAIL) return fail(status);
      std::cout << "epsilon = " << render_form(epsilon.get(), format) << "\n";
      std::cout << "cross-check: " << (agree ? "PASS" : "FAIL") << "\n";
      return agree ? 0 : 1;
    }
    if (hil->parsed()) {
      for (int i = 1; i <= fcx_context_m(ctx.get()); ++i) {
        fcx_form* raw = nullptr;
        status = fcx_hilbert(ctx.get(), k, density.get(), i, &raw);
        if (status != FCX_OK) return fail(status);
        FormPtr theta(raw);
        std::cout << "theta^" << i << " = " << render_form(theta.get(), format) << "\n";
      }
      return 0;
    }
    if (hom->parsed()) {
      int homogeneous = 0;
      char* raw_report = nullptr;
      status = fcx_check_homogeneous(ctx.get(), k, density.get(), &homogeneous, &raw_report);
      if (status != FCX_OK) return fail(status);
      std::string report = take_string(raw_report);
      std::cout << "homogeneous: " << (homogeneous ? "yes" : "NOT homogeneous") << "\n";
      if (!report.empty()) std::cout << report;
      return homogeneous ? 0 : 1;
    }
    // fundamental
    fcx_form* raw = nullptr;
    char* raw_report = nullptr;
    status = fcx_fundamental_form(ctx.get(), k, density.get(), &raw, &raw_report);
    if (status != FCX_OK) return fail(status);
    FormPtr theta(raw);
    std::cout << "Theta = " << render_form(theta.get(), format) << "\n";
    fcx_form* raw_d = nullptr;
    status = fcx_form_d(theta.get(), &raw_d);
    if (status != FCX_OK) return fail(status);
    FormPtr dtheta(raw_d);
    std::cout << "closed: " << (fcx_form_is_zero(dtheta.get()) ? "yes" : "no") << "\n";
    std::cout << take_string(raw_report);
    return 0;
  }

  if (helm->parsed() || split->parsed() || (ren->parsed() && expression.empty())) {
    fcx_form* raw = nullptr;
    std::string document = read_document(path);
    fcx_status status = fcx_form_parse_json(document.c_str(), &raw);
    if (status != FCX_OK) return fail(status);
    FormPtr input(raw);

    if (helm->parsed()) {
      fcx_form* raw_h = nullptr;
      status = fcx_helmholtz(input.get(), &raw_h);
      if (status != FCX_OK) return fail(status);
      FormPtr h(raw_h);
      std::cout << "H = " << render_form(h.get(), format) << "\n";
      std::cout << "vanishes: " << (fcx_form_is_zero(h.get()) ? "yes" : "no") << "\n";
      return 0;
    }
    if (split->parsed()) {
      fcx_form *raw_psi = nullptr, *raw_phi1 = nullptr;
      status = fcx_form_split(input.get(), &raw_psi, &raw_phi1);
      if (status != FCX_OK) return fail(status);
      FormPtr psi(raw_psi), phi1(raw_phi1);
      std::cout << "psi = " << render_form(psi.get(), format) << "\n";
      std::cout << "phi1 = " << render_form(phi1.get(), format) << "\n";
      // Recompose d(psi) + dT(phi1) and compare against the input.
      fcx_form *raw_d = nullptr, *raw_dt = nullptr, *raw_sum = nullptr;
      if (fcx_form_d(psi.get(), &raw_d) != FCX_OK) return fail(FCX_DOMAIN_ERROR);
      FormPtr dpsi(raw_d);
      if (fcx_form_dT(phi1.get(), &raw_dt) != FCX_OK) return fail(FCX_DOMAIN_ERROR);
      FormPtr dtphi1(raw_dt);
      if (fcx_form_add(dpsi.get(), dtphi1.get(), &raw_sum) != FCX_OK)
        return fail(FCX_DOMAIN_ERROR);
      FormPtr sum(raw_sum);
      bool ok = fcx_form_equal(sum.get(), input.get()) == 1;
      std::cout << "recomposition: " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
    // render (form input)
    std::cout << render_form(input.get(), format) << "\n";
    return 0;
  }

  if (ren->parsed()) {  // --expr variant
    ContextPtr ctx = make_context(m, n);
    if (!ctx) return 3;
    fcx_expr* raw = nullptr;
    fcx_status status = fcx_expr_parse(ctx.get(), expression.c_str(), &raw);
    if (status != FCX_OK) return fail(status);
    ExprPtr expr(raw);
    std::cout << take_string(fcx_expr_render(expr.get(), format.c_str())) << "\n";
    return 0;
  }

  if (hv->parsed() || lem->parsed()) {
    ContextPtr ctx = make_context(m, n);
    if (!ctx) return 3;
    char* raw_report = nullptr;
    fcx_status status =
        hv->parsed() ? fcx_verify_homotopy(ctx.get(), k, r, s, cases, seed, &raw_report)
                     : fcx_verify_lemmas(ctx.get(), k, cases, seed, &raw_report);
    if (status != FCX_OK && status != FCX_VERIFY_FAIL) return fail(status);
    std::cout << take_string(raw_report);
    return exit_code(status);
  }

  return 0;
}
