#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>

#include "aont/constructions.hpp"
#include "aont/equivalence.hpp"
#include "aont/io.hpp"
#include "aont/transforms.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "table1_expected.hpp"

namespace aont::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

FieldPtr require_field(const GlobalOptions& g) {
  if (g.field.empty()) throw UsageError("--field is required");
  return Field::parse(g.field);
}

// Sends content to --out (atomically, with a manifest next to it) or stdout.
void emit(const GlobalOptions& g, const std::string& field, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
    return;
  }
  Manifest manifest(g.command_line, field);
  const fs::path path(g.out);
  manifest.write(path, content);
  manifest.finish(fs::path(g.out + ".manifest.json"));
}

std::string numbered(std::string_view stem, std::size_t index, std::size_t total, std::string_view ext) {
  const int width = std::max(4, static_cast<int>(std::to_string(total).size()));
  std::string digits = std::to_string(index);
  if (static_cast<int>(digits.size()) < width) digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  return std::string(stem) + "-" + digits + std::string(ext);
}

ordered_json matrix_rows(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.size(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<int>(row.begin(), row.end()));
  }
  return rows;
}

ordered_json optional_code(const std::optional<Element>& e) {
  return e ? ordered_json(e->code) : ordered_json(nullptr);
}

ProgressFn progress_printer(const GlobalOptions& g, std::string label) {
  if (g.quiet) return {};
  auto mutex = std::make_shared<std::mutex>();
  return [mutex, label = std::move(label)](const SearchProgress& p) {
    std::lock_guard lock(*mutex);
    std::cerr << label << ": shard " << p.shard << " nodes " << p.nodes << " found " << p.count << "\n";
  };
}

SearchResult execute(const GlobalOptions& g, const SearchSpec& spec, int shards, const std::string& label) {
  const auto progress = progress_printer(g, label);
  if (shards <= 1 && g.jobs <= 1) return run_search(spec, progress);
  return run_search_parallel(spec, std::max(shards, 1), g.jobs, progress);
}

std::vector<Element> elements(const std::vector<unsigned>& codes) {
  std::vector<Element> out;
  for (auto c : codes) out.emplace_back(c);
  return out;
}

}  // namespace

int cmd_construct(const GlobalOptions& g, const ConstructOptions& o) {
  Matrix m = [&] {
    if (o.kind == "cauchy") {
      auto field = require_field(g);
      if (o.s < 1) throw UsageError("cauchy needs --s");
      std::optional<std::vector<Element>> a;
      std::optional<std::vector<Element>> b;
      if (!o.a.empty()) a = elements(o.a);
      if (!o.b.empty()) b = elements(o.b);
      return cauchy(field, o.s, a, b);
    }
    if (o.kind == "vandermonde") {
      if (o.n < 1 || o.s < 1) throw UsageError("vandermonde needs --n and --s");
      return vandermonde_aont(o.n, o.s);
    }
    if (o.kind == "additive") return additive_matrix(require_field(g));
    if (o.kind == "example") {
      if (o.name.empty()) throw UsageError("example needs a name");
      return builtin_example(o.name);
    }
    throw UsageError("unknown construction '" + o.kind + "'");
  }();
  emit(g, m.field().designation(), io::format_matrix(m));
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& o) {
  const Matrix m = io::parse_matrix(io::read_file(o.in));
  const auto report = verify_linear_aont(m, o.t);
  emit(g, m.field().designation(), io::format_verify_report(report));
  return report.valid ? kExitOk : kExitNegative;
}

int cmd_search(const GlobalOptions& g, const SearchOptions& o) {
  SearchSpec spec;
  spec.field = require_field(g);
  spec.mode = parse_search_mode(o.mode);
  spec.s = o.s;
  spec.t = o.t;
  spec.limit = o.limit;
  spec.node_ceiling = g.node_ceiling;
  spec = normalize(spec);

  const auto result = execute(g, spec, o.shards, "search");

  ordered_json summary;
  summary["field"] = spec.field->designation();
  summary["mode"] = to_string(spec.mode);
  summary["s"] = spec.s;
  summary["t"] = spec.t;
  summary["limit"] = spec.limit ? ordered_json(*spec.limit) : ordered_json(nullptr);
  summary["count"] = result.count;
  summary["stored"] = result.matrices.size();
  summary["nodes_visited"] = result.nodes_visited;
  summary["files"] = ordered_json::array();

  if (!g.out.empty()) {
    Manifest manifest(g.command_line, spec.field->designation());
    const fs::path dir(g.out);
    for (std::size_t i = 0; i < result.matrices.size(); ++i) {
      const auto name = numbered("matrix", i + 1, result.matrices.size(), ".mat");
      manifest.write(dir / name, io::format_matrix(result.matrices[i]));
      summary["files"].push_back(name);
    }
    manifest.write(dir / "summary.json", summary.dump(2) + "\n");
    manifest.finish(dir / "manifest.json");
  }
  std::cout << summary.dump(2) << "\n";
  if (!g.quiet) {
    std::cerr << "search: " << result.count << " found, " << result.nodes_visited << " nodes, "
              << result.elapsed.count() << " s\n";
  }
  return result.count > 0 ? kExitOk : kExitNegative;
}

int cmd_classify(const GlobalOptions& g, const ClassifyOptions& o) {
  const fs::path dir(o.in);
  if (!fs::is_directory(dir)) throw UsageError(o.in + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("no .mat files in " + o.in);

  std::vector<Matrix> matrices;
  std::map<std::vector<std::uint8_t>, std::vector<std::string>> names;
  for (const auto& f : files) {
    matrices.push_back(io::parse_matrix(io::read_file(f)));
    const auto codes = matrices.back().codes();
    names[std::vector<std::uint8_t>(codes.begin(), codes.end())].push_back(f.filename().string());
    if (!(matrices.back().field() == matrices.front().field())) {
      throw UsageError(f.string() + " is over a different field");
    }
  }
  const auto classes = classify(matrices, !o.no_interior_scaling);
  const std::string field = matrices.front().field().designation();

  ordered_json j;
  j["field"] = field;
  j["inputs"] = files.size();
  j["class_count"] = classes.classes.size();
  j["interior_scaling"] = !o.no_interior_scaling;
  j["needed_extra_pass"] = classes.needed_extra_pass;
  j["classes"] = ordered_json::array();
  std::vector<std::string> member_lists;
  for (std::size_t i = 0; i < classes.classes.size(); ++i) {
    const auto& cls = classes.classes[i];
    ordered_json c;
    c["index"] = i + 1;
    c["size"] = cls.members.size();
    c["closure_size"] = classes.closure_sizes[i];
    c["tau"] = optional_code(skew_parameter(cls.representative));
    c["symmetric"] = is_symmetric(cls.representative);
    c["representative"] = matrix_rows(cls.representative);
    std::string list;
    for (const auto& m : cls.members) {
      const auto codes = m.codes();
      for (const auto& n : names[std::vector<std::uint8_t>(codes.begin(), codes.end())]) list += n + "\n";
    }
    c["members_file"] = numbered("class", i + 1, classes.classes.size(), ".txt");
    member_lists.push_back(std::move(list));
    j["classes"].push_back(std::move(c));
  }
  if (!g.out.empty()) {
    Manifest manifest(g.command_line, field);
    const fs::path out(g.out);
    for (std::size_t i = 0; i < member_lists.size(); ++i) {
      manifest.write(out / j["classes"][i]["members_file"].get<std::string>(), member_lists[i]);
    }
    manifest.write(out / "classes.json", j.dump(2) + "\n");
    manifest.finish(out / "manifest.json");
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_transform(const GlobalOptions& g, const TransformOptions& o) {
  const std::string text = io::read_file(o.in);
  const auto start = text.find_first_not_of(" \t\r\n");
  const bool is_table = start != std::string::npos && text.compare(start, 2, "v=") == 0;
  std::optional<Matrix> matrix;
  std::optional<GeneralTransform> phi;
  std::string field;
  if (is_table) {
    phi = io::parse_transform(text);
  } else {
    matrix = io::parse_matrix(text);
    field = matrix->field().designation();
  }
  const auto general = [&]() -> const GeneralTransform& {
    if (!phi) phi = linear_to_general(*matrix);
    return *phi;
  };
  const int s = matrix ? matrix->size() : phi->s();
  if (o.t < 1 || o.t > s) throw UsageError("--t must be in 1.." + std::to_string(s));

  if (o.to == "table") {
    emit(g, field, io::format_transform(general()));
    return kExitOk;
  }
  if (o.to == "rf") {
    ResilientFunction f;
    if (matrix) {
      if (!verify_linear_aont(*matrix, o.t).valid) {
        std::cerr << "transform: input is not a linear (" << o.t << "," << s << ") AONT\n";
        return kExitNegative;
      }
      std::optional<std::vector<int>> drop;
      if (!o.delete_rows.empty()) {
        drop.emplace();
        for (int r : o.delete_rows) drop->push_back(r - 1);
      }
      f = linear_aont_to_rf(*matrix, o.t, drop);
    } else {
      if (!o.delete_rows.empty()) throw UsageError("--delete-rows applies to matrix input only");
      if (!verify_general_aont(*phi, o.t).valid) {
        std::cerr << "transform: input is not a t=" << o.t << " AONT\n";
        return kExitNegative;
      }
      f = aont_to_rf(*phi, o.t);
    }
    emit(g, field, io::format_resilient_function(f));
    return kExitOk;
  }
  if (o.to != "oa" && o.to != "largeset") throw UsageError("--to must be oa, largeset, rf or table");
  if (!verify_general_aont(general(), o.t).valid) {
    std::cerr << "transform: input is not a t=" << o.t << " AONT\n";
    return kExitNegative;
  }
  if (o.to == "oa") {
    std::vector<std::uint8_t> suffix(static_cast<std::size_t>(s - o.t), 0);
    if (!o.suffix.empty()) {
      if (o.suffix.size() != suffix.size()) throw UsageError("--suffix needs s - t = " + std::to_string(s - o.t) + " symbols");
      for (std::size_t i = 0; i < suffix.size(); ++i) {
        if (o.suffix[i] >= general().v()) throw UsageError("--suffix symbol out of range");
        suffix[i] = static_cast<std::uint8_t>(o.suffix[i]);
      }
    }
    emit(g, field, io::format_array(extract_oa(general(), o.t, suffix)));
    return kExitOk;
  }
  const auto arrays = aont_to_large_set(general(), o.t);
  if (g.out.empty()) {
    for (std::size_t i = 0; i < arrays.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << io::format_array(arrays[i]);
    }
    return kExitOk;
  }
  Manifest manifest(g.command_line, field);
  const fs::path dir(g.out);
  for (std::size_t i = 0; i < arrays.size(); ++i) {
    manifest.write(dir / numbered("oa", i + 1, arrays.size(), ".txt"), io::format_array(arrays[i]));
  }
  manifest.finish(dir / "manifest.json");
  return kExitOk;
}

int cmd_table1(const GlobalOptions& g, const Table1Options& o) {
  std::vector<Table1Row> rows;
  for (const auto& row : kTable1Expected) {
    if (o.qs.empty() || std::find(o.qs.begin(), o.qs.end(), row.q) != o.qs.end()) rows.push_back(row);
  }
  for (auto q : o.qs) {
    if (std::none_of(rows.begin(), rows.end(), [&](const Table1Row& r) { return r.q == q; })) {
      throw UsageError("q=" + std::to_string(q) + " is not a row of the table");
    }
  }
  const int shards = o.shards > 0 ? o.shards : std::max(1, g.jobs * 4);

  ordered_json j;
  j["fixture_version"] = kTable1FixtureVersion;
  j["rows"] = ordered_json::array();
  std::string table = "q   reduced  expected  inequivalent  expected\n";
  std::vector<std::string> diffs;
  for (const auto& row : rows) {
    SearchSpec spec;
    spec.field = Field::parse(std::to_string(row.q));
    spec.mode = SearchMode::reduced;
    const auto result = execute(g, spec, g.jobs > 1 ? shards : 1, "table1 q=" + std::to_string(row.q));
    const auto classes = classify(result.matrices);
    const auto inequivalent = static_cast<unsigned long long>(classes.classes.size());

    std::array<char, 96> line{};
    std::snprintf(line.data(), line.size(), "%-3u %-8llu %-9llu %-13llu %llu\n", row.q,
                  static_cast<unsigned long long>(result.count), row.reduced, inequivalent, row.inequivalent);
    table += line.data();
    if (result.count != row.reduced) {
      diffs.push_back("q=" + std::to_string(row.q) + " reduced: got " + std::to_string(result.count) + ", expected " +
                      std::to_string(row.reduced));
    }
    if (inequivalent != row.inequivalent) {
      diffs.push_back("q=" + std::to_string(row.q) + " inequivalent: got " + std::to_string(inequivalent) +
                      ", expected " + std::to_string(row.inequivalent));
    }
    ordered_json r;
    r["q"] = row.q;
    r["reduced"] = result.count;
    r["reduced_expected"] = row.reduced;
    r["inequivalent"] = inequivalent;
    r["inequivalent_expected"] = row.inequivalent;
    r["nodes_visited"] = result.nodes_visited;
    j["rows"].push_back(std::move(r));
  }
  j["mismatches"] = diffs;
  std::cout << table;
  for (const auto& d : diffs) std::cerr << "mismatch: " << d << "\n";
  if (!g.out.empty()) {
    Manifest manifest(g.command_line, "");
    const fs::path dir(g.out);
    manifest.write(dir / "table1.txt", table);
    manifest.write(dir / "table1.json", j.dump(2) + "\n");
    manifest.finish(dir / "manifest.json");
  }
  return diffs.empty() ? kExitOk : kExitNegative;
}

}  // namespace aont::cli
