#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aont/io.hpp"
#include "aont/search.hpp"
#include "aont/transforms.hpp"
#include "commands.hpp"

using namespace aont::cli;

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify, search and classify all-or-nothing transforms over finite fields", "aont"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GlobalOptions g;
  for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(argv[i]);
  app.add_option("--field", g.field, "Field: q, p^n or p^n/modulus (e.g. 9, 3^2, 3^2/10)")->ignore_case();
  app.add_option("--out", g.out, "Output file or directory (stdout when absent)");
  app.add_option("--jobs", g.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--node-ceiling", g.node_ceiling, "Refuse general-linear searches estimated above this");
  app.add_flag("--quiet", g.quiet, "No progress on stderr");
  for (auto* opt : app.get_options()) opt->configurable(false);

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Emit a matrix in the text format");
  construct->fallthrough();
  construct->add_option("kind", co.kind, "cauchy | vandermonde | additive | example")
      ->required()
      ->check(CLI::IsMember({"cauchy", "vandermonde", "additive", "example"}));
  construct->add_option("name", co.name, "Example name (E1, E2, E3, E4, E289, E5)");
  construct->add_option("--s", co.s, "Dimension");
  construct->add_option("--n", co.n, "Vandermonde: field GF(2^n)");
  construct->add_option("--a", co.a, "Cauchy row elements")->delimiter(',');
  construct->add_option("--b", co.b, "Cauchy column elements")->delimiter(',');

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Test a matrix for the linear AONT property");
  verify->fallthrough();
  verify->add_option("--in", vo.in, "Matrix file")->required()->check(CLI::ExistingFile);
  verify->add_option("--t", vo.t, "Strength")->check(CLI::PositiveNumber);

  SearchOptions so;
  auto* search = app.add_subcommand("search", "Exhaustive search in a canonical form");
  search->fallthrough();
  search->add_option("--mode", so.mode, "reduced | type-q-minus-1 | symmetric-reduced | general-linear")
      ->check(CLI::IsMember({"reduced", "type-q-minus-1", "symmetric-reduced", "general-linear"}));
  search->add_option("--s", so.s, "Dimension (general-linear)");
  search->add_option("--t", so.t, "Strength (general-linear)")->check(CLI::PositiveNumber);
  search->add_option("--shards", so.shards, "Independent subtrees")->check(CLI::PositiveNumber);
  search->add_option("--limit", so.limit, "Store at most this many matrices");

  ClassifyOptions clo;
  auto* cls = app.add_subcommand("classify", "Partition reduced matrices into equivalence classes");
  cls->fallthrough();
  cls->add_option("--in", clo.in, "Directory of .mat files")->required();
  cls->add_flag("--no-interior-scaling", clo.no_interior_scaling, "Close under row/column pair moves only");

  TransformOptions to;
  auto* transform = app.add_subcommand("transform", "Derive arrays or resilient functions from an AONT");
  transform->fallthrough();
  transform->add_option("--in", to.in, "Matrix file or transform table")->required()->check(CLI::ExistingFile);
  transform->add_option("--t", to.t, "Strength")->check(CLI::PositiveNumber);
  transform->add_option("--to", to.to, "oa | largeset | rf | table")
      ->required()
      ->check(CLI::IsMember({"oa", "largeset", "rf", "table"}));
  transform->add_option("--suffix", to.suffix, "Fixed output suffix for --to oa")->delimiter(',');
  transform->add_option("--delete-rows", to.delete_rows, "Rows (1-based) dropped for --to rf")->delimiter(',');

  Table1Options t1;
  auto* table1 = app.add_subcommand("table1", "Recount reduced and inequivalent (2,q,q)-AONT against the embedded expected values");
  table1->fallthrough();
  table1->add_option("--q", t1.qs, "Restrict to these q")->delimiter(',');
  table1->add_option("--shards", t1.shards, "Subtrees per search when --jobs > 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(g, co);
    if (*verify) return cmd_verify(g, vo);
    if (*search) return cmd_search(g, so);
    if (*cls) return cmd_classify(g, clo);
    if (*transform) return cmd_transform(g, to);
    if (*table1) return cmd_table1(g, t1);
  } catch (const aont::SearchGuardError& e) {
    std::cerr << "aont: search refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const aont::CeilingError& e) {
    std::cerr << "aont: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "aont: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
