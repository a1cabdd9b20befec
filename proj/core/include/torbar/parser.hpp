#pragma once

#include "torbar/presentation.hpp"

namespace torbar {

/// Syntax or reference error with the 1-based source position.
struct ParseError : InputError {
  int line = 0;
  int col = 0;
  ParseError(const std::string& what, int line_, int col_)
      : InputError("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                   ": " + what),
        line(line_),
        col(col_) {}
};

/// Line-oriented presentation format. Directives, one per line, '#' for
/// comments:
///   algebra NAME
///   generator NAME degree D
///   rbase NAME [NAME ...]
///   relation EXPR
///   augment NAME -> EXPR
///   differential NAME -> EXPR
/// Expressions use + - * ^, integer or rational (p/q) literals and
/// declared generator names; juxtaposition is not multiplication.
AlgebraPresentation parse_presentation(const std::string& text);

/// One expression in the format above, against declared generators.
Polynomial parse_polynomial(const std::string& expr, const AlgebraPresentation& pres);

/// Canonical rendering; parse(render(p)) == p.
std::string render_presentation(const AlgebraPresentation& pres);

std::string render_polynomial(const Polynomial& p, const AlgebraPresentation& pres);

}  // namespace torbar
