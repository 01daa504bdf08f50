#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace aont::cli {

std::string sha256_hex(std::string_view data);

/// Records every file a command writes and, on finish(), a manifest.json
/// with the command line, field, versions, elapsed time and digests.
class Manifest {
 public:
  Manifest(std::string command_line, std::string field);

  /// Writes `content` atomically and records its digest under `path`.
  void write(const std::filesystem::path& path, std::string_view content);
  void finish(const std::filesystem::path& manifest_path) const;

 private:
  std::string command_line_;
  std::string field_;
  std::chrono::steady_clock::time_point start_;
  std::map<std::string, std::string> digests_;
};

}  // namespace aont::cli
