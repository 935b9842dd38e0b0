#include "torusrank/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace torusrank {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Int json_int(const nlohmann::json& v) {
  if (v.is_string()) return parse_int(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Int(std::to_string(v.get<std::uint64_t>()));
    return Int(std::to_string(v.get<std::int64_t>()));
  }
  throw ParseError("expected an integer (number or decimal string), got " + v.dump());
}

}  // namespace

Int parse_int(std::string_view token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) ++i;
  if (i == token.size()) throw ParseError("not an integer: '" + std::string(token) + "'");
  for (std::size_t j = i; j < token.size(); ++j)
    if (token[j] < '0' || token[j] > '9') throw ParseError("not an integer: '" + std::string(token) + "'");
  std::string digits(token.substr(token[0] == '+' ? 1 : 0));
  return Int(digits, 10);
}

Mat parse_matrix_text(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto toks = split_tokens(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw ParseError("empty matrix file");
  if (lines[0].size() != 1) throw ParseError("first line must hold the dimension n alone");
  const Int n_big = parse_int(lines[0][0]);
  if (n_big < 1) throw ParseError("dimension must be at least 1");
  if (n_big > 10000) throw ParseError("dimension too large");
  const std::size_t n = n_big.get_ui();
  if (lines.size() != n + 1)
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  Mat a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (lines[r + 1].size() != n)
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(lines[r + 1].size()) +
                       " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) a(r, c) = parse_int(lines[r + 1][c]);
  }
  return a;
}

Mat rows_from_json(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("'rows' must be a nonempty array");
  std::vector<std::vector<Int>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(json_int(x));
    if (!out.empty() && r.size() != out.front().size()) throw ParseError("ragged rows");
    out.push_back(std::move(r));
  }
  if (out.front().empty()) throw ParseError("rows must be nonempty");
  return Mat::from_rows(out);
}

Mat matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
    throw ParseError("JSON matrix must be an object with keys 'n' and 'rows'");
  const Int n = json_int(doc.at("n"));
  if (n < 1) throw ParseError("dimension must be at least 1");
  Mat a = rows_from_json(doc.at("rows"));
  if (Int(a.rows()) != n || Int(a.cols()) != n) throw ParseError("'rows' is not an n x n array");
  return a;
}

Mat parse_matrix(std::string_view content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return matrix_from_json(doc);
  }
  return parse_matrix_text(content);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mat read_matrix_file(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

std::string format_matrix_text(const Mat& a) {
  std::ostringstream os;
  os << a.rows() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? " " : "") << a(r, c);
    os << '\n';
  }
  return os.str();
}

nlohmann::json rows_to_json(const Mat& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json matrix_to_json(const Mat& a) {
  if (a.is_square()) return {{"n", a.rows()}, {"rows", rows_to_json(a)}};
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows_to_json(a)}};
}

nlohmann::json vector_to_json(const ColVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Int& x : v) out.push_back(x.get_str());
  return out;
}

ColVec vector_from_json(const nlohmann::json& v) {
  if (!v.is_array() || v.empty()) throw ParseError("vector must be a nonempty array");
  std::vector<Int> entries;
  for (const auto& x : v) entries.push_back(json_int(x));
  return ColVec(std::move(entries));
}

}  // namespace torusrank
