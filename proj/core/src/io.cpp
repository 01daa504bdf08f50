#include "aont/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "aont/combinatorics.hpp"
#include "json.hpp"

namespace aont::io {

namespace {

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back(line.substr(first));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> words_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

unsigned long long to_number(std::string_view word, std::string_view what) {
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("expected a number for " + std::string(what) + ", got '" + std::string(word) + "'");
  }
  return value;
}

// Parses "key=value" words into a map; every key in `keys` must be present.
std::map<std::string, unsigned long long, std::less<>> header_fields(std::string_view line,
                                                                     std::initializer_list<std::string_view> keys) {
  std::map<std::string, unsigned long long, std::less<>> out;
  for (auto w : words_of(line)) {
    const auto eq = w.find('=');
    if (eq == std::string_view::npos) throw ParseError("malformed header field '" + std::string(w) + "'");
    out[std::string(w.substr(0, eq))] = to_number(w.substr(eq + 1), w.substr(0, eq));
  }
  for (auto k : keys) {
    if (!out.contains(k)) throw ParseError("header is missing '" + std::string(k) + "='");
  }
  return out;
}

std::vector<std::uint8_t> symbols(std::span<const std::string_view> words, unsigned bound, std::string_view what) {
  std::vector<std::uint8_t> out;
  for (auto w : words) {
    const auto v = to_number(w, what);
    if (v >= bound) throw ParseError(std::string(what) + " " + std::string(w) + " out of range");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

void append_tuple(std::string& out, std::span<const std::uint8_t> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x[i]);
  }
}

}  // namespace

std::string format_matrix(const Matrix& m) {
  const Field& f = m.field();
  std::string out = "q=" + std::to_string(f.q()) + " p=" + std::to_string(f.p()) + " n=" + std::to_string(f.n()) +
                    " poly=" + std::to_string(f.modulus()) + " s=" + std::to_string(m.size()) + "\n";
  for (int r = 0; r < m.size(); ++r) {
    append_tuple(out, m.row(r));
    out += '\n';
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty matrix file");
  auto h = header_fields(lines[0], {"q", "p", "n", "poly", "s"});
  FieldPtr field;
  try {
    field = Field::make(static_cast<unsigned>(h["p"]), static_cast<unsigned>(h["n"]),
                        h["n"] == 1 ? std::nullopt : std::optional<unsigned>(static_cast<unsigned>(h["poly"])));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad field in header: ") + e.what());
  }
  if (field->q() != h["q"]) throw ParseError("header q does not equal p^n");
  const auto s = static_cast<int>(h["s"]);
  if (s < 1 || s > 256) throw ParseError("matrix dimension out of range");
  if (static_cast<int>(lines.size()) != s + 1) {
    throw ParseError("expected " + std::to_string(s) + " matrix rows, got " + std::to_string(lines.size() - 1));
  }
  std::vector<std::uint8_t> codes;
  for (int r = 1; r <= s; ++r) {
    const auto words = words_of(lines[static_cast<std::size_t>(r)]);
    if (static_cast<int>(words.size()) != s) throw ParseError("row " + std::to_string(r) + " does not have s entries");
    const auto row = symbols(words, field->q(), "element");
    codes.insert(codes.end(), row.begin(), row.end());
  }
  return Matrix(field, s, std::move(codes));
}

std::string format_verify_report(const VerifyReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["valid"] = report.valid;
  j["t"] = report.t;
  j["s"] = report.s;
  j["q"] = report.q;
  if (report.singular) {
    j["witness"] = "matrix singular";
  } else if (!report.witness_rows.empty()) {
    j["witness"] = "submatrix";
  } else {
    j["witness"] = nullptr;
  }
  auto one_based = [](const std::vector<int>& v) {
    if (v.empty()) return ordered_json(nullptr);
    ordered_json a = ordered_json::array();
    for (int i : v) a.push_back(i + 1);
    return a;
  };
  j["witness_rows"] = one_based(report.witness_rows);
  j["witness_cols"] = one_based(report.witness_cols);
  j["mu"] = report.mu ? ordered_json(*report.mu) : ordered_json(nullptr);
  j["tau"] = report.tau ? ordered_json(report.tau->code) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string format_transform(const GeneralTransform& phi) {
  std::string out = "v=" + std::to_string(phi.v()) + " s=" + std::to_string(phi.s()) + "\n";
  for (std::uint64_t r = 0; r < phi.rows(); ++r) {
    append_tuple(out, tuple_unrank(r, phi.v(), phi.s()));
    out += " -> ";
    append_tuple(out, phi.output(r));
    out += '\n';
  }
  return out;
}

GeneralTransform parse_transform(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty transform file");
  auto h = header_fields(lines[0], {"v", "s"});
  const auto v = static_cast<unsigned>(h["v"]);
  const auto s = static_cast<int>(h["s"]);
  if (v < 2 || v > 256 || s < 1) throw ParseError("transform header out of range");
  const std::uint64_t rows = checked_pow(v, static_cast<std::uint64_t>(s));
  if (rows > kDefaultTableCeiling) throw ParseError("transform table above the row ceiling");
  if (lines.size() != rows + 1) throw ParseError("expected " + std::to_string(rows) + " transform lines");
  std::vector<std::uint8_t> table(static_cast<std::size_t>(rows) * static_cast<std::size_t>(s));
  std::vector<bool> seen(static_cast<std::size_t>(rows), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = words_of(lines[i]);
    if (static_cast<int>(words.size()) != 2 * s + 1 || words[static_cast<std::size_t>(s)] != "->") {
      throw ParseError("transform line " + std::to_string(i) + " is not 'x1 .. xs -> y1 .. ys'");
    }
    const auto x = symbols(std::span(words).first(static_cast<std::size_t>(s)), v, "symbol");
    const auto y = symbols(std::span(words).subspan(static_cast<std::size_t>(s) + 1), v, "symbol");
    const auto r = tuple_rank(x, v);
    if (seen[static_cast<std::size_t>(r)]) throw ParseError("transform input listed twice");
    seen[static_cast<std::size_t>(r)] = true;
    std::copy(y.begin(), y.end(), table.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::uint64_t>(s)));
  }
  try {
    return GeneralTransform(v, s, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_array(const OrthogonalArray& oa) {
  const Array& a = oa.array;
  std::string out = std::to_string(a.n_rows) + " " + std::to_string(a.k) + " " + std::to_string(a.v) + " " +
                    std::to_string(oa.t) + " " + std::to_string(oa.lambda) + "\n";
  for (std::uint64_t i = 0; i < a.n_rows; ++i) {
    append_tuple(out, a.row(i));
    out += '\n';
  }
  return out;
}

OrthogonalArray parse_array(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty array file");
  const auto head = words_of(lines[0]);
  if (head.size() != 5) throw ParseError("array header must be 'N k v t lambda'");
  OrthogonalArray oa;
  oa.array.n_rows = to_number(head[0], "N");
  oa.array.k = static_cast<int>(to_number(head[1], "k"));
  oa.array.v = static_cast<unsigned>(to_number(head[2], "v"));
  oa.t = static_cast<int>(to_number(head[3], "t"));
  oa.lambda = to_number(head[4], "lambda");
  if (oa.array.v < 1 || oa.array.v > 256) throw ParseError("array alphabet out of range");
  if (lines.size() != oa.array.n_rows + 1) throw ParseError("array row count does not match N");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = words_of(lines[i]);
    if (static_cast<int>(words.size()) != oa.array.k) throw ParseError("array row " + std::to_string(i) + " does not have k symbols");
    const auto row = symbols(words, oa.array.v, "symbol");
    oa.array.cells.insert(oa.array.cells.end(), row.begin(), row.end());
  }
  return oa;
}

std::string format_resilient_function(const ResilientFunction& f) {
  std::string out = "n=" + std::to_string(f.n) + " m=" + std::to_string(f.m) + " t=" + std::to_string(f.t) +
                    " v=" + std::to_string(f.v) + "\n";
  if (f.is_linear()) {
    out += "linear " + f.field->designation() + "\n";
    for (int r = 0; r < f.m; ++r) {
      append_tuple(out, std::span<const std::uint8_t>(f.generator).subspan(static_cast<std::size_t>(r * f.n),
                                                                          static_cast<std::size_t>(f.n)));
      out += '\n';
    }
    return out;
  }
  out += "table\n";
  const std::uint64_t rows = checked_pow(f.v, static_cast<std::uint64_t>(f.n));
  for (std::uint64_t r = 0; r < rows; ++r) {
    append_tuple(out, tuple_unrank(r, f.v, f.n));
    out += " ->";
    if (f.m > 0) out += ' ';
    append_tuple(out, std::span<const std::uint8_t>(f.table).subspan(static_cast<std::size_t>(r) * static_cast<std::size_t>(f.m),
                                                                     static_cast<std::size_t>(f.m)));
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace aont::io
