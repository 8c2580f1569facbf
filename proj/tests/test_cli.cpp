#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scop/cli.hpp"

namespace {

const std::string kData = SCOP_DATA_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = scop::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("lattice gen emits the 28-element lattice as json") {
  auto r = run_cli({"lattice", "gen", "-g", "e1,e2,e6", "-z", "e1^e6", "-z",
                    "e2^e6", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["elements"].size() == 28);
  CHECK(doc["zero_meets"].size() == 2);

  // orthocomplement ids are involution-consistent
  for (const auto& el : doc["elements"]) {
    std::size_t id = el["id"];
    std::size_t ortho = el["ortho"];
    CHECK(doc["elements"][ortho]["ortho"] == id);
  }
}

TEST_CASE("lattice gen output is byte-identical across runs") {
  std::vector<std::string> args = {"lattice", "gen",    "-g",    "e1,e2,e6",
                                   "-z",      "e1^e6",  "-z",    "e2^e6",
                                   "--format", "json"};
  auto r1 = run_cli(args);
  auto r2 = run_cli(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("lattice export defaults to dot") {
  auto r = run_cli({"lattice", "export", "-g", "e"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("lattice gen respects --out") {
  auto path = temp_file("scop_cli_lattice.json");
  std::filesystem::remove(path);
  auto r = run_cli({"lattice", "gen", "-g", "e", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["elements"].size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("lattice verify reports clean axioms") {
  auto r = run_cli({"lattice", "verify", "-g", "e1,e2,e6", "-z", "e1^e6",
                    "-z", "e2^e6"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["partial_order_ok"] == true);
  CHECK(doc["involution_ok"] == true);
  CHECK(doc["antitone_ok"] == true);
  CHECK(doc["complement_laws_ok"] == true);
  CHECK(doc["missing_joins"].size() > 0);
}

TEST_CASE("lattice complete reports the completion size") {
  auto r = run_cli({"lattice", "complete", "-g", "e1,e2,e6", "-z", "e1^e6",
                    "-z", "e2^e6"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["input_elements"] == 28);
  CHECK(doc["completion_size"] == 66);
  CHECK(doc["already_complete"] == false);
  CHECK(doc["embedding"].size() == 28);
}

TEST_CASE("scop rank prints dog first under the bone context") {
  auto r = run_cli({"scop", "rank", "--context", "e1", "--fixtures", kData});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "dog 0.50");
  CHECK(r.out.find("cat 0.25") != std::string::npos);
}

TEST_CASE("scop eigen lists and tests eigenstates") {
  auto r = run_cli({"scop", "eigen", "--context", "e3", "--fixtures", kData});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "p3");

  auto yes = run_cli({"scop", "eigen", "--context", "e3", "--state", "p3",
                      "--fixtures", kData});
  CHECK(yes.out == "true\n");
  auto no = run_cli({"scop", "eigen", "--context", "e3", "--state", "ground",
                     "--fixtures", kData});
  CHECK(no.out == "false\n");
}

TEST_CASE("scop weights prints published weights") {
  auto r = run_cli({"scop", "weights", "--state", "ground", "--property",
                    "a1", "--fixtures", kData});
  CHECK(r.code == 0);
  CHECK(r.out == "0.94\n");

  auto all = run_cli({"scop", "weights", "--state", "p6", "--fixtures", kData});
  CHECK(all.code == 0);
  CHECK(all.out.find("a7 1\n") != std::string::npos);
}

TEST_CASE("scop super on the pet system") {
  auto r = run_cli({"scop", "super", "--state", "p1", "--contexts", "e1,e2",
                    "--fixtures", kData});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
}

TEST_CASE("scop build emits a loadable system") {
  auto path = temp_file("scop_cli_pet.json");
  std::filesystem::remove(path);
  auto r = run_cli({"scop", "build", "--fixtures", kData, "--out",
                    path.string()});
  CHECK(r.code == 0);
  REQUIRE(std::filesystem::exists(path));

  // the emitted file feeds the other subcommands via --scop
  auto rank = run_cli({"scop", "rank", "--context", "e6", "--scop",
                       path.string()});
  CHECK(rank.code == 0);
  CHECK(first_line(rank.out) == "goldfish 0.48");
  std::filesystem::remove(path);
}

TEST_CASE("scop build from explicit tables") {
  auto r = run_cli({"scop", "build", "--contexts", kData + "/contexts.csv",
                    "--exemplars", kData + "/exemplars_rate.csv",
                    "--properties", kData + "/properties_rate.csv",
                    "--property-labels", kData + "/properties.csv"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["states"].size() == 7);
  CHECK(doc["properties"].size() == 14);
}

TEST_CASE("stats ttest on identical files gives p = 1") {
  auto path = temp_file("scop_cli_sample.txt");
  {
    std::ofstream f(path);
    f << "1.0\n2.0\n3.0\n";
  }
  auto r = run_cli({"stats", "ttest", "--a", path.string(), "--b",
                    path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("p 1\n") != std::string::npos);
  CHECK(r.out.find("degenerate true") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("usage and input errors exit 1 with one-line diagnostics") {
  auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 1);
  CHECK_FALSE(unknown.err.empty());

  auto missing_flag = run_cli({"lattice", "gen"});
  CHECK(missing_flag.code == 1);

  auto bad_zero = run_cli({"lattice", "gen", "-g", "e1", "-z", "e1"});
  CHECK(bad_zero.code == 1);
  CHECK(bad_zero.err.find("error:") == 0);
  CHECK(std::count(bad_zero.err.begin(), bad_zero.err.end(), '\n') == 1);

  auto bad_format = run_cli({"lattice", "gen", "-g", "e1", "--format", "xml"});
  CHECK(bad_format.code == 1);
  CHECK(bad_format.err.find("unknown export format") != std::string::npos);

  auto bad_context =
      run_cli({"scop", "rank", "--context", "e99", "--fixtures", kData});
  CHECK(bad_context.code == 1);
  CHECK(bad_context.err.find("unknown context") != std::string::npos);

  auto bad_dir = run_cli({"scop", "rank", "--context", "e1", "--fixtures",
                          "/nonexistent"});
  CHECK(bad_dir.code == 1);
}

TEST_CASE("help is reachable") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lattice") != std::string::npos);
  CHECK(r.out.find("scop") != std::string::npos);
  CHECK(r.out.find("stats") != std::string::npos);
}
