#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ineqlab/linalg.hpp"

namespace ineqlab {

/// Matrix/vector exchange format:
///   {"rows": r, "cols": c, "re": [[...], ...], "im": [[...], ...]}
/// "im" may be omitted for real data. A vector is a c = 1 matrix.
/// Doubles are written in shortest round-trip form, so write/read is exact.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json vector_to_json(const ComplexVector& v);

/// Throws InputError on malformed documents.
ComplexMatrix matrix_from_json(const nlohmann::json& doc);
ComplexVector vector_from_json(const nlohmann::json& doc);

/// Throws InputError if the file cannot be read or parsed.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ineqlab
