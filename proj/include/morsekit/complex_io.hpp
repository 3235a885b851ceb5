#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "morsekit/complex.hpp"

namespace morsekit {

// .cplx text format: one simplex per line as space separated vertex labels,
// '#' starts a comment. Reading takes the closure.

SimplicialComplex parse_cplx(std::string_view text);
SimplicialComplex read_cplx_file(const std::string& path);

/// Writes only the maximal simplices, sorted lexicographically.
std::string format_cplx(const SimplicialComplex& K);
void write_cplx_file(const std::string& path, const SimplicialComplex& K);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace morsekit
