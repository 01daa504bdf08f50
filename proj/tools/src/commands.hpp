#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aont/search.hpp"

namespace aont::cli {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2 };

/// Bad arguments or an unusable input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string command_line;
  std::string field;
  std::string out;
  int jobs = 1;
  std::uint64_t node_ceiling = kDefaultNodeCeiling;
  bool quiet = false;
};

struct ConstructOptions {
  std::string kind;
  int s = 0;
  unsigned n = 0;
  std::vector<unsigned> a;
  std::vector<unsigned> b;
  std::string name;
};

struct VerifyOptions {
  std::string in;
  int t = 2;
};

struct SearchOptions {
  std::string mode = "reduced";
  int s = 0;
  int t = 2;
  int shards = 1;
  std::optional<std::uint64_t> limit;
};

struct ClassifyOptions {
  std::string in;
  bool no_interior_scaling = false;
};

struct TransformOptions {
  std::string in;
  int t = 2;
  std::string to;
  std::vector<unsigned> suffix;
  std::vector<int> delete_rows;
};

struct Table1Options {
  std::vector<unsigned> qs;
  int shards = 0;
};

int cmd_construct(const GlobalOptions& g, const ConstructOptions& o);
int cmd_verify(const GlobalOptions& g, const VerifyOptions& o);
int cmd_search(const GlobalOptions& g, const SearchOptions& o);
int cmd_classify(const GlobalOptions& g, const ClassifyOptions& o);
int cmd_transform(const GlobalOptions& g, const TransformOptions& o);
int cmd_table1(const GlobalOptions& g, const Table1Options& o);

}  // namespace aont::cli
