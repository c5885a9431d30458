#pragma once

#include <string>
#include <string_view>

#include "tfg/graph.hpp"
#include "tfg/matrix.hpp"

namespace tfg {

/// "n m" on the first line, then one "u v" line per edge in canonical order.
std::string format_graph(const Graph& g);

/// Reads the graph text format; blank lines and '#' comments are skipped.
/// Throws parse-error, plus the Graph constructor's errors.
Graph parse_graph(std::string_view text);

/// {"rows": r, "cols": c, "data": [...]} with row-major entries printed to
/// 17 significant digits, so doubles round-trip exactly. `extra` is spliced
/// in after "data" verbatim (e.g. "\"bound\": 1").
std::string format_matrix(const Matrix& m, std::string_view extra = {});

/// Reads the matrix format; unknown keys are ignored. Throws parse-error.
Matrix parse_matrix(std::string_view text);

/// True when the text's first significant character opens a JSON object.
bool looks_like_matrix(std::string_view text);

}  // namespace tfg
