// Runs the aont executable and checks exit codes and outputs.

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "aont/io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "aont_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
};

// Runs `aont <args>`, capturing stdout; stderr is discarded.
Run run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string("'") + AONT_CLI_PATH + "' " + args + " > '" + out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, aont::io::read_file(out)};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("construct and verify") {
  auto r = run("construct example E1 --out " + path("e1.mat"));
  CHECK(r.code == 0);
  CHECK(fs::exists(path("e1.mat.manifest.json")));
  r = run("verify --in " + path("e1.mat") + " --t 2");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["tau"] == 2);

  CHECK(run("--field 5 construct additive --out " + path("additive5.mat")).code == 0);
  r = run("verify --in " + path("additive5.mat") + " --t 2");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["witness"] == "matrix singular");

  r = run("--field 13 construct cauchy --s 6");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q=13 p=13 n=1 poly=13 s=6\n", 0) == 0);
  CHECK(run("construct vandermonde --n 3 --s 7").code == 0);
}

TEST_CASE("search and classify") {
  auto r = run("--field 8 search --mode reduced");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["count"] == 0);

  r = run("--field 5 --out " + path("s5a") + " search");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 100);
  CHECK(run("--field 5 --out " + path("s5b") + " search").code == 0);
  CHECK(run("--field 5 --jobs 2 --out " + path("s5c") + " search --shards 4").code == 0);
  for (const char* f : {"summary.json", "matrix-0001.mat", "matrix-0100.mat"}) {
    CAPTURE(f);
    CHECK(aont::io::read_file(fs::path(path("s5a")) / f) == aont::io::read_file(fs::path(path("s5b")) / f));
  }
  const auto ma = nlohmann::json::parse(aont::io::read_file(fs::path(path("s5a")) / "manifest.json"));
  const auto mb = nlohmann::json::parse(aont::io::read_file(fs::path(path("s5b")) / "manifest.json"));
  CHECK(ma["outputs"] == mb["outputs"]);
  // Sharding changes only the node tally, never the matrices.
  for (const char* f : {"matrix-0001.mat", "matrix-0050.mat", "matrix-0100.mat"}) {
    CHECK(aont::io::read_file(fs::path(path("s5a")) / f) == aont::io::read_file(fs::path(path("s5c")) / f));
  }
  const auto sc = nlohmann::json::parse(aont::io::read_file(fs::path(path("s5c")) / "summary.json"));
  CHECK(sc["count"] == 100);
  CHECK_FALSE(fs::exists(fs::path(path("s5c")) / "matrix-0101.mat"));

  r = run("--out " + path("c5") + " classify --in " + path("s5a"));
  CHECK(r.code == 0);
  const auto cls = nlohmann::json::parse(aont::io::read_file(fs::path(path("c5")) / "classes.json"));
  CHECK(cls["class_count"] == 5);
  r = run("classify --no-interior-scaling --in " + path("s5a"));
  CHECK(nlohmann::json::parse(r.out)["class_count"] == 6);
}

TEST_CASE("transform") {
  CHECK(run("construct example E1 --out " + path("t1.mat")).code == 0);
  auto r = run("transform --in " + path("t1.mat") + " --t 2 --to oa --suffix 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("9 3 3 2 1\n", 0) == 0);
  r = run("--out " + path("t1.tab") + " transform --in " + path("t1.mat") + " --t 2 --to table");
  CHECK(r.code == 0);
  r = run("transform --in " + path("t1.tab") + " --t 2 --to rf");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n=3 m=1 t=2 v=3\ntable\n", 0) == 0);
  r = run("--out " + path("ls") + " transform --in " + path("t1.mat") + " --t 2 --to largeset");
  CHECK(r.code == 0);
  CHECK(fs::exists(fs::path(path("ls")) / "manifest.json"));
  CHECK(run("transform --in " + path("t1.mat") + " --t 2 --to rf --delete-rows 2").code == 0);
  CHECK(run("transform --in " + path("t1.mat") + " --t 1 --to oa").code == 1);
  CHECK(run("transform --in " + path("t1.mat") + " --t 2 --to oa --suffix 0,0").code == 2);
}

TEST_CASE("table1") {
  auto r = run("table1 --q 9");
  CHECK(r.code == 0);
  r = run("table1 --q 3 --out " + path("t1out"));
  CHECK(r.code == 0);
  CHECK(fs::exists(fs::path(path("t1out")) / "table1.json"));
  // The q = 7 recount differs from the embedded reduced count.
  CHECK(run("table1 --q 7").code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--field 6 search").code == 2);
  CHECK(run("--field 5 search --mode general-linear --s 6 --t 2 --node-ceiling 1000").code == 2);
  CHECK(run("verify --in " + path("does-not-exist.mat")).code == 2);
  CHECK(run("--help").code == 0);
}
