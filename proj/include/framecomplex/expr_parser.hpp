// Recursive-descent parser for polynomial expressions in jet coordinates.
//
// Grammar (whitespace-insensitive between tokens):
//   expr     := sign? term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := atom ("^" nat)*
//   atom     := rational | coord | "(" expr ")"
//   rational := nat ("/" nat)?
//   coord    := "u[" nat ";" nat* "]"    -- directions separated by spaces
//
// The direction list is symmetric: "u[1;1 2]" and "u[1;2 1]" both denote u^1
// with multi-index (1,1). Syntax errors throw ParseError with the offset;
// fiber or direction indices out of range throw DomainError.
#pragma once

#include <string_view>

#include "framecomplex/bundle.hpp"
#include "framecomplex/poly_expr.hpp"

namespace fcx {

PolyExpr parse_expr(std::string_view text, const BundleContext& ctx);

}  // namespace fcx
