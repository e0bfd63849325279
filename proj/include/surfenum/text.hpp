#pragma once

#include <string>
#include <string_view>

#include "surfenum/triangulation.hpp"

namespace surfenum {

enum class TextFormat {
  Auto,    // native if the text contains a comma, else digits
  Native,  // "1,2,3 1,2,4"
  Digits,  // "123 124", single-digit labels only
};

/// Throws Syntax, NonContiguousLabels or DegenerateTriangle.
Triangulation parse_triangulation_text(std::string_view text, TextFormat format = TextFormat::Auto);

/// Native one-line form, triangles in stored order.
std::string format_triangulation(const Triangulation& t);

/// Digit form; throws Syntax when a label exceeds 9.
std::string format_triangulation_digits(const Triangulation& t);

}  // namespace surfenum
