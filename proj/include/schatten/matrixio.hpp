#pragma once

#include <iosfwd>
#include <string>

#include "schatten/cmatrix.hpp"

namespace schatten::cli {

// Plain-text matrix interchange: a "rows cols" header followed by row-major
// "re im" pairs, whitespace-separated. Written with 17 significant digits so
// doubles round-trip exactly.
CMatrix read_matrix(std::istream& in);
CMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const CMatrix& m);
void write_matrix_file(const std::string& path, const CMatrix& m);

}  // namespace schatten::cli
