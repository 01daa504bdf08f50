#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "aont/io.hpp"
#include "json.hpp"

#ifndef AONT_VERSION
#define AONT_VERSION "0.1.0"
#endif

namespace aont::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned i = 0; i < len; ++i) {
    std::array<char, 3> byte{};
    std::snprintf(byte.data(), byte.size(), "%02x", md[i]);
    hex += byte.data();
  }
  return hex;
}

Manifest::Manifest(std::string command_line, std::string field)
    : command_line_(std::move(command_line)), field_(std::move(field)), start_(std::chrono::steady_clock::now()) {}

void Manifest::write(const std::filesystem::path& path, std::string_view content) {
  io::write_file_atomic(path, content);
  digests_[path.filename().string()] = sha256_hex(content);
}

void Manifest::finish(const std::filesystem::path& manifest_path) const {
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  nlohmann::ordered_json j;
  j["command"] = command_line_;
  j["field"] = field_.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(field_);
  j["determinism"] = "no randomness; rerunning the command reproduces every listed output byte for byte";
  j["versions"] = {{"aont", AONT_VERSION}, {"compiler", __VERSION__}, {"cxx", __cplusplus}};
  j["elapsed_seconds"] = elapsed.count();
  j["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [name, digest] : digests_) j["outputs"][name] = "sha256:" + digest;
  io::write_file_atomic(manifest_path, j.dump(2) + "\n");
}

}  // namespace aont::cli
