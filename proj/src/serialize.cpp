#include "framecomplex/serialize.hpp"

#include <json.hpp>

#include "framecomplex/errors.hpp"
#include "framecomplex/expr_parser.hpp"

namespace fcx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string coordinate_plain(const JetCoordinate& c) { return c.to_string(); }

std::string coordinate_latex(const JetCoordinate& c) {
  std::string out = "u^{" + std::to_string(c.fiber) + "}";
  auto dirs = c.index.directions();
  if (!dirs.empty()) {
    out += "_{";
    for (int dir : dirs) out += std::to_string(dir);
    out += "}";
  }
  return out;
}

std::string monomial_plain(const Monomial& m) {
  std::string out;
  for (const auto& [coord, exp] : m.factors()) {
    if (!out.empty()) out += "*";
    out += coordinate_plain(coord);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

std::string monomial_latex(const Monomial& m) {
  std::string out;
  for (const auto& [coord, exp] : m.factors()) {
    if (exp > 1)
      out += "(" + coordinate_latex(coord) + ")^{" + std::to_string(exp) + "}";
    else
      out += coordinate_latex(coord);
  }
  return out;
}

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  Rational a = abs(q);
  return sign + "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

// One polynomial term with the sign split off, so sums can join with " - ".
std::string poly_term(const Monomial& mono, const Rational& coeff, Format format) {
  Rational a = abs(coeff);
  std::string mono_str = format == Format::LaTeX ? monomial_latex(mono) : monomial_plain(mono);
  if (mono_str.empty()) return format == Format::LaTeX ? rational_latex(a) : to_string(a);
  if (a == 1) return mono_str;
  if (format == Format::LaTeX) return rational_latex(a) + mono_str;
  return to_string(a) + "*" + mono_str;
}

std::string poly_to_text(const PolyExpr& e, Format format) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : e.terms()) {
    bool negative = coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += poly_term(mono, coeff, format);
    first = false;
  }
  return out;
}

ordered_json poly_to_json(const PolyExpr& e) {
  ordered_json terms = ordered_json::array();
  for (const auto& [mono, coeff] : e.terms()) {
    ordered_json factors = ordered_json::array();
    for (const auto& [coord, exp] : mono.factors())
      factors.push_back(ordered_json::array({coord.fiber, coord.index.counts(), exp}));
    terms.push_back(ordered_json{{"coeff", to_string(coeff)}, {"factors", factors}});
  }
  return ordered_json{{"terms", terms}};
}

// Scalar-form term: coefficient polynomial times a wedge of du labels.
std::string scalar_term(const std::vector<JetCoordinate>& labels, const PolyExpr& coeff,
                        Format format, bool* negative) {
  const bool latex = format == Format::LaTeX;
  std::string du;
  for (const auto& label : labels) {
    if (!du.empty()) du += latex ? "\\wedge " : "^";
    du += latex ? "d" + coordinate_latex(label) : "d" + coordinate_plain(label);
  }
  *negative = false;
  if (labels.empty()) return poly_to_text(coeff, format);
  if (coeff.terms().size() == 1) {
    const auto& [mono, c] = *coeff.terms().begin();
    *negative = c < 0;
    Rational a = abs(c);
    if (a == 1 && mono.is_one()) return du;
    std::string head = poly_term(mono, c, format);
    return latex ? head + "\\," + du : head + "*" + du;
  }
  std::string coeff_str = poly_to_text(coeff, format);
  if (latex) return "\\left(" + coeff_str + "\\right)" + du;
  return "(" + coeff_str + ")*" + du;
}

std::string scalar_to_text(const ScalarForm& phi, Format format) {
  if (phi.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [labels, coeff] : phi.terms()) {
    bool negative = false;
    std::string term = scalar_term(labels, coeff, format, &negative);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += term;
    first = false;
  }
  return out;
}

std::string dt_text(const std::vector<int>& tuple, Format format) {
  const bool latex = format == Format::LaTeX;
  std::string out;
  for (int i : tuple) {
    if (!out.empty()) out += latex ? "\\wedge " : "^";
    out += latex ? "dt^{" + std::to_string(i) + "}" : "dt[" + std::to_string(i) + "]";
  }
  return out;
}

std::string vector_to_text(const VectorForm& phi, Format format) {
  if (phi.is_zero()) return "0";
  const bool latex = format == Format::LaTeX;
  std::string out;
  for (const auto& [tuple, component] : phi.components()) {
    if (!out.empty()) out += " + ";
    std::string scalar = scalar_to_text(component, format);
    if (tuple.empty()) {
      out += scalar;
      continue;
    }
    bool wrap = component.terms().size() > 1;
    if (wrap) scalar = latex ? "\\left(" + scalar + "\\right)" : "(" + scalar + ")";
    out += scalar + (latex ? "\\otimes " : " (x) ") + dt_text(tuple, format);
  }
  return out;
}

ordered_json form_to_json_object(const VectorForm& phi) {
  ordered_json components = ordered_json::array();
  for (const auto& [tuple, component] : phi.components()) {
    ordered_json terms = ordered_json::array();
    for (const auto& [labels, coeff] : component.terms()) {
      ordered_json du = ordered_json::array();
      for (const auto& label : labels)
        du.push_back(ordered_json::array({label.fiber, label.index.counts()}));
      terms.push_back(ordered_json{{"coeff", poly_to_text(coeff, Format::Plain)}, {"du", du}});
    }
    components.push_back(ordered_json{{"dt", tuple}, {"terms", terms}});
  }
  return ordered_json{{"m", phi.context().frame_dim},
                      {"n", phi.context().fiber_dim},
                      {"r", phi.degree()},
                      {"s", phi.covalence()},
                      {"components", components}};
}

int require_int(const json& value, const char* what) {
  if (!value.is_number_integer())
    throw ParseError(std::string("form schema: ") + what + " must be an integer", 0);
  return value.get<int>();
}

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "latex") return Format::LaTeX;
  if (name == "json") return Format::Json;
  throw DomainError("unknown format '" + std::string(name) + "' (plain|latex|json)");
}

std::string render(const PolyExpr& expression, Format format) {
  if (format == Format::Json) return poly_to_json(expression).dump();
  return poly_to_text(expression, format);
}

std::string render(const ScalarForm& form, Format format) {
  if (format == Format::Json) return form_to_json(VectorForm::from_scalar(form));
  return scalar_to_text(form, format);
}

std::string render(const VectorForm& form, Format format) {
  if (format == Format::Json) return form_to_json(form);
  return vector_to_text(form, format);
}

std::string form_to_json(const VectorForm& form) {
  return form_to_json_object(form).dump();
}

VectorForm form_from_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("form schema: top level must be an object", 0);
  for (const auto& [key, value] : doc.items())
    if (key != "m" && key != "n" && key != "r" && key != "s" && key != "components")
      throw ParseError("form schema: unknown key '" + key + "'", 0);
  for (const char* key : {"m", "n", "r", "s", "components"})
    if (!doc.contains(key))
      throw ParseError(std::string("form schema: missing key '") + key + "'", 0);

  BundleContext ctx(require_int(doc["m"], "m"), require_int(doc["n"], "n"));
  int degree = require_int(doc["r"], "r");
  int covalence = require_int(doc["s"], "s");
  if (degree < 0) throw DomainError("form degree must be non-negative");
  if (covalence < 0 || covalence > ctx.frame_dim)
    throw DomainError("covalence must lie in 0.." + std::to_string(ctx.frame_dim));

  VectorForm out(ctx, degree, covalence);
  if (!doc["components"].is_array())
    throw ParseError("form schema: components must be an array", 0);
  for (const auto& entry : doc["components"]) {
    if (!entry.is_object() || !entry.contains("dt") || !entry.contains("terms"))
      throw ParseError("form schema: component needs 'dt' and 'terms'", 0);
    for (const auto& [key, value] : entry.items())
      if (key != "dt" && key != "terms")
        throw ParseError("form schema: unknown component key '" + key + "'", 0);

    if (!entry["dt"].is_array() || static_cast<int>(entry["dt"].size()) != covalence)
      throw ParseError("form schema: dt must be an array of length s", 0);
    std::vector<int> tuple;
    for (const auto& value : entry["dt"]) {
      int index = require_int(value, "dt entry");
      if (index < 1 || index > ctx.frame_dim)
        throw DomainError("frame index " + std::to_string(index) + " out of range");
      if (!tuple.empty() && tuple.back() >= index)
        throw ParseError("form schema: dt tuple must be strictly increasing", 0);
      tuple.push_back(index);
    }

    if (!entry["terms"].is_array())
      throw ParseError("form schema: terms must be an array", 0);
    ScalarForm component(ctx, degree);
    for (const auto& term : entry["terms"]) {
      if (!term.is_object() || !term.contains("coeff") || !term.contains("du"))
        throw ParseError("form schema: term needs 'coeff' and 'du'", 0);
      for (const auto& [key, value] : term.items())
        if (key != "coeff" && key != "du")
          throw ParseError("form schema: unknown term key '" + key + "'", 0);
      if (!term["coeff"].is_string())
        throw ParseError("form schema: coeff must be an expression string", 0);
      PolyExpr coeff = parse_expr(term["coeff"].get<std::string>(), ctx);

      if (!term["du"].is_array() || static_cast<int>(term["du"].size()) != degree)
        throw ParseError("form schema: du must be an array of length r", 0);
      std::vector<JetCoordinate> labels;
      for (const auto& label : term["du"]) {
        if (!label.is_array() || label.size() != 2 || !label[1].is_array())
          throw ParseError("form schema: du label must be [alpha, [counts]]", 0);
        int alpha = require_int(label[0], "du fiber index");
        if (alpha < 1 || alpha > ctx.fiber_dim)
          throw DomainError("fiber index " + std::to_string(alpha) + " out of range");
        std::vector<int> counts;
        for (const auto& count : label[1]) counts.push_back(require_int(count, "du count"));
        if (static_cast<int>(counts.size()) != ctx.frame_dim)
          throw ParseError("form schema: du counts must have length m", 0);
        for (int count : counts)
          if (count < 0) throw DomainError("du counts must be non-negative");
        JetCoordinate coordinate = jet(alpha, counts);
        if (!labels.empty() && !(labels.back() < coordinate))
          throw ParseError("form schema: du labels must be strictly increasing", 0);
        labels.push_back(coordinate);
      }
      component = component + ScalarForm::term(ctx, coeff, labels);
    }
    out = out + VectorForm::term(component, tuple);
  }
  return out;
}

}  // namespace fcx
