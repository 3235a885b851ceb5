#pragma once

#include <string>
#include <string_view>

#include "morsekit/gradient.hpp"

namespace morsekit {

// .grad text format, one entry per line, order free:
//   PAIR 1,2 1,2,3
//   CRIT 0
// Vertex lists are comma separated and ascending.

/// Throws ParseError on bad syntax or simplices missing from K.
Matching parse_gradient(const SimplicialComplex& K, std::string_view text);

/// Pairs first, then critical simplices, each sorted by (dimension, lex).
std::string format_gradient(const SimplicialComplex& K, const DiscreteGradient& V);

}  // namespace morsekit
