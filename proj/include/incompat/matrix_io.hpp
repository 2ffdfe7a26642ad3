#pragma once

#include "incompat/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace incompat {

enum class MatrixFormat { json, csv };

// Accepts "json" or "csv"; anything else is an invalid-argument error.
MatrixFormat parse_matrix_format(std::string_view name);

// JSON: {"rows": r, "cols": c, "re": [[...], ...], "im": [[...], ...]} with
// "im" optional (all-zero when omitted).
// CSV: one row per line, comma separated entries of the form "a", "a+bi",
// "a-bi" or "bi"; no header.
ComplexMatrix load_matrix(std::istream& in, MatrixFormat format);
ComplexMatrix load_matrix_file(const std::string& path, MatrixFormat format);

// Writes doubles with enough digits to round-trip exactly.
void save_matrix(std::ostream& out, const ComplexMatrix& m, MatrixFormat format);

}  // namespace incompat
