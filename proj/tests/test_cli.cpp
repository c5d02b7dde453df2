#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "apexminor/io.hpp"

using namespace apexminor;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "apexminor_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Runs the CLI inside the scratch directory; args are passed through the shell verbatim.
Result cli(const std::string& args) {
  const fs::path dir = work_dir();
  std::string cmd = "cd '" + dir.string() + "' && '" APEXMINOR_CLI_PATH "' " + args + " > stdout.txt 2> stderr.txt";
  int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "stdout.txt");
  r.err = slurp(dir / "stderr.txt");
  return r;
}

Json error_json(const Result& r) { return Json::parse(r.err.substr(0, r.err.find('\n'))); }

}  // namespace

TEST_CASE("cli: usage errors") {
  auto none = cli("");
  CHECK(none.code == 64);
  auto unknown = cli("frobnicate");
  CHECK(unknown.code == 64);
  auto bad = cli("gen-grid --rows 3");
  CHECK(bad.code == 2);
  CHECK(error_json(bad)["error"]["code"] == "bad-flags");
}

TEST_CASE("cli: thresholds") {
  auto r = cli("threshold apex --r 1 --t 5 --d 4");
  CHECK(r.code == 0);
  CHECK(r.out == "320\n");
  CHECK(cli("threshold simple --t 5 --r 1").out == "8\n");
  CHECK(cli("threshold k3t --t 3 --r 1").out == "10\n");
  CHECK(cli("threshold genus-to-k3t --g 0").out == "3\n");
  auto bad = cli("threshold apex --r 0 --t 5 --d 4");
  CHECK(bad.code == 2);
  CHECK(error_json(bad)["error"].contains("kind"));
  CHECK(fs::exists(work_dir() / "threshold-apex.manifest.json"));
}

TEST_CASE("cli: gen-grid, verify-model and a corrupted model") {
  auto r = cli("gen-grid --rows 5 --cols 5 --apex all --out g5.txt --grid-model gm5.json");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(work_dir() / "g5.txt.manifest.json"));
  Json manifest = read_json_file(work_dir() / "g5.txt.manifest.json");
  CHECK(manifest["format"] == "apexminor-manifest/1");
  CHECK(manifest["exit_code"] == 0);
  CHECK(manifest["outputs"].size() == 2);
  CHECK(manifest["outputs"][0]["sha256"].get<std::string>().size() == 64);

  CHECK(cli("verify-model --graph g5.txt --model gm5.json").code == 0);

  Json model = read_json_file(work_dir() / "gm5.json");
  model["branch_sets"]["1"] = model["branch_sets"]["0"];
  write_json_file(work_dir() / "broken.json", model);
  auto broken = cli("verify-model --graph g5.txt --model broken.json");
  CHECK(broken.code == 2);
  CHECK(broken.err.find("disjointness") != std::string::npos);
}

TEST_CASE("cli: oracle and decomposition commands") {
  REQUIRE(cli("gen-grid --rows 3 --cols 3 --out g3.txt").code == 0);
  auto tw = cli("oracle tw --graph g3.txt --out td3.json");
  CHECK(tw.code == 0);
  CHECK(tw.out.find('3') != std::string::npos);
  CHECK(cli("verify-td --graph g3.txt --decomp td3.json").code == 0);
  auto k4 = cli("oracle minor --graph g3.txt --pattern-name K4 --out k4.json");
  CHECK(k4.code == 0);
  CHECK(cli("verify-model --model k4.json").code == 0);
  CHECK(cli("oracle planar --graph g3.txt").code == 0);
  CHECK(cli("decompose-ttw --graph g3.txt --root 4 --out ttw.json --bag-tw").code == 0);
  CHECK(cli("verify-td --graph g3.txt --decomp ttw.json").code == 0);
  CHECK(cli("double-model --model k4.json --out k4d.json").code == 0);
  CHECK(cli("verify-model --model k4d.json").code == 0);
}

TEST_CASE("cli: randomized commands replay byte-identically") {
  REQUIRE(cli("gen-grid --rows 20 --cols 20 --apex all --out g20.txt --grid-model gm20.json").code == 0);
  REQUIRE(cli("extract-k3t --graph g20.txt --centre 400 --radius 1 --grid-model gm20.json --seed 9 --out k3t_a.json")
              .code == 0);
  REQUIRE(cli("extract-k3t --graph g20.txt --centre 400 --radius 1 --grid-model gm20.json --seed 9 --out k3t_b.json")
              .code == 0);
  CHECK(slurp(work_dir() / "k3t_a.json") == slurp(work_dir() / "k3t_b.json"));
  Json m = read_json_file(work_dir() / "k3t_a.json.manifest.json");
  CHECK(m["seed"] == 9);

  REQUIRE(cli("gen-grid --rows 7 --cols 7 --apex all --out g7.txt --grid-model gm7.json").code == 0);
  REQUIRE(cli("gen-grid --rows 3 --cols 3 --out h3.txt").code == 0);
  REQUIRE(cli("oracle minor --graph h3.txt --pattern-name K4 --out hk4.json").code == 0);
  std::ofstream(work_dir() / "k5.txt") << "p 5 10\ne 0 1\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
  const std::string apex_args =
      "extract-apex --graph g7.txt --centre 49 --grid-model gm7.json --apex k5.txt --apex-vertex 4 "
      "--h-model hk4.json --seed 3 --out ";
  REQUIRE(cli(apex_args + "apex_a.json").code == 0);
  REQUIRE(cli(apex_args + "apex_b.json").code == 0);
  CHECK(slurp(work_dir() / "apex_a.json") == slurp(work_dir() / "apex_b.json"));
  CHECK(cli("verify-model --model apex_a.json").code == 0);
}

TEST_CASE("cli: precondition failures exit 2") {
  REQUIRE(cli("gen-grid --rows 20 --cols 20 --apex even --out ge.txt --grid-model gme.json").code == 0);
  auto r = cli("extract-k3t --graph ge.txt --centre 400 --radius 1 --grid-model gme.json --seed 1 --out x.json");
  CHECK(r.code == 2);
  CHECK(error_json(r)["error"]["code"] == "radius");
  Json m = read_json_file(work_dir() / "x.json.manifest.json");
  CHECK(m["exit_code"] == 2);
}

TEST_CASE("cli: report") {
  auto r = cli("report --family genus --r 1..3 --param 2..10 --out genus.csv");
  REQUIRE(r.code == 0);
  std::string csv = slurp(work_dir() / "genus.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 28);
  CHECK(cli("report --family k3t --r 1 --param \"\" --out empty.csv").code == 0);
  CHECK(slurp(work_dir() / "empty.csv") == "family,r,param,upper_threshold,lower_grid,achieved_t\n");
  REQUIRE(cli("report --family k3t --r 1 --param 10 --extract --seed 2 --out k3t.csv").code == 0);
  std::string k3t = slurp(work_dir() / "k3t.csv");
  std::string row = k3t.substr(k3t.find('\n') + 1);
  CHECK(row.back() == '\n');
  CHECK(row[row.size() - 2] != ',');
}
