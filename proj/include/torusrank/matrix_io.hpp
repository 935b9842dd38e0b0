#pragma once

// Matrix files. Two formats are accepted:
//   text:  first line "n", then n lines of n whitespace-separated integers
//   JSON:  {"n": 3, "rows": [["1","0","0"], ...]}  (entries may be numbers or
//          decimal strings; strings are emitted so large values survive)

#include "torusrank/exactmat.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torusrank {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strict decimal integer: optional sign followed by digits.
Int parse_int(std::string_view token);

Mat parse_matrix_text(std::string_view text);
Mat matrix_from_json(const nlohmann::json& doc);
// Dispatches on the first non-blank character ('{' means JSON).
Mat parse_matrix(std::string_view content);
Mat read_matrix_file(const std::filesystem::path& path);

std::string format_matrix_text(const Mat& a);
// Square matrices get the file layout {"n", "rows"}; others {"rows", "cols", "entries"}.
nlohmann::json matrix_to_json(const Mat& a);
nlohmann::json rows_to_json(const Mat& a);
Mat rows_from_json(const nlohmann::json& rows);
nlohmann::json vector_to_json(const ColVec& v);
ColVec vector_from_json(const nlohmann::json& v);

std::string read_file(const std::filesystem::path& path);

}  // namespace torusrank
