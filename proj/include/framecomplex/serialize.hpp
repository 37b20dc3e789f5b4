// Rendering (plain / LaTeX / JSON) and the canonical JSON form schema.
//
// Form schema:
//   {"m":int, "n":int, "r":int, "s":int,
//    "components":[{"dt":[ints, strictly increasing],
//                   "terms":[{"coeff": expression string,
//                             "du":[[alpha,[counts]], ...]}]}]}
// Rationals inside expression strings are written "p/q" so nothing is lost to
// floating point. parse(render(x)) == x.
#pragma once

#include <string>
#include <string_view>

#include "framecomplex/forms.hpp"

namespace fcx {

enum class Format { Plain, LaTeX, Json };

Format format_from_string(std::string_view name);  // "plain"|"latex"|"json"

// Plain output is valid parser input; LaTeX follows u^{alpha}_{i1...ip}.
std::string render(const PolyExpr& expression, Format format);
std::string render(const ScalarForm& form, Format format);
std::string render(const VectorForm& form, Format format);

std::string form_to_json(const VectorForm& form);
VectorForm form_from_json(std::string_view document);

}  // namespace fcx
