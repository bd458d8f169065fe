#include "doctest.h"

#include "lieorbit/cli.hpp"
#include "lieorbit/document.hpp"
#include "lieorbit/fixtures.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace lieorbit;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lieorbit-test-" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("classify emits a JSON report") {
  const Run r = run({"classify", "paper-6dim", "--ell", "ell_BS", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "lieorbit-report/1");
  CHECK(j["report"]["si_mod_pker"] == false);
  CHECK(j["report"]["orbit_dim"] == 4);
  CHECK(j["report"]["cs_status"] == "indeterminate_nonunimodular_quotient");
  CHECK(j["provenance"]["input_hash"] == input_hash(fixture("paper-6dim")));
  CHECK(parse_report(r.out).functional_name == "ell_BS");
}

TEST_CASE("classify output is deterministic") {
  const std::vector<std::string> args{"classify", "paper-5dim", "--json"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"classify", "paper-5dim"}).out == run({"classify", "paper-5dim"}).out);
}

TEST_CASE("text report") {
  const Run r = run({"classify", "heisenberg3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("functional: ell_Z = (0, 0, 1)") != std::string::npos);
  CHECK(r.out.find("stabilizer: span{Z}") != std::string::npos);
  CHECK(r.out.find("affine_hull_direction: span{X*, Y*}") != std::string::npos);
}

TEST_CASE("inline functional on the command line") {
  const Run named = run({"classify", "paper-6dim", "--ell", "ell_BS", "--json"});
  const Run inl = run({"classify", "paper-6dim", "--ell", "B=1,S=1", "--json"});
  CHECK(nlohmann::json::parse(named.out)["report"] == nlohmann::json::parse(inl.out)["report"]);
}

TEST_CASE("strict mode fails on warnings") {
  CHECK(run({"classify", "e2-cover", "--strict"}).code == kExitCheckFailed);
  CHECK(run({"classify", "e2-cover"}).code == kExitOk);
  CHECK(run({"classify", "heisenberg3", "--strict"}).code == kExitOk);
}

TEST_CASE("orbit sampling command") {
  const Run r = run({"orbit", "paper-5dim", "--ell", "ell_X3", "--samples", "200", "--seed", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Run six = run({"orbit", "paper-6dim", "--samples", "50"});
  CHECK(six.code == kExitOk);

  const auto csv = std::filesystem::temp_directory_path() / "lieorbit-test-orbit.csv";
  const Run c = run({"orbit", "heisenberg3", "--samples", "3", "--csv", csv.string()});
  CHECK(c.code == kExitOk);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "X*,Y*,Z*");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) rows += line.empty() ? 0 : 1;
  CHECK(rows == 3);
  std::filesystem::remove(csv);
}

TEST_CASE("witness command") {
  const Run r = run({"witness", "paper-6dim", "--ell", "ell_BS", "--f", "ell_f"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("cs_witness_check: true") != std::string::npos);
  CHECK(run({"witness", "paper-6dim", "--ell", "ell_BS", "--f", "ell_BS"}).code == kExitCheckFailed);
  CHECK(run({"witness", "paper-6dim", "--ell", "ell_BS", "--f", "ell_f", "--p", "1"}).code == kExitCheckFailed);
  CHECK(run({"witness", "paper-6dim", "--ell", "ell_BS"}).code == kExitInputError);
}

TEST_CASE("validate reports Jacobi failures") {
  const auto path = temp_file("broken.json", R"({"name": "broken", "dim": 3, "basis": ["X", "Y", "Z"],
    "brackets": [{"i": "X", "j": "Y", "coeffs": {"Z": "1"}}, {"i": "X", "j": "Z", "coeffs": {"X": "1"}}]})");
  const Run r = run({"validate", path.string()});
  CHECK(r.code == kExitInputError);
  CHECK((r.out + r.err).find("(X, Y, Z)") != std::string::npos);
  CHECK(run({"classify", path.string()}).code == kExitInputError);
  std::filesystem::remove(path);

  const Run ok = run({"validate", "paper-6dim"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.starts_with("ok"));
}

TEST_CASE("parse errors carry their location") {
  const auto path = temp_file("badcoeff.json", R"({"name": "t", "dim": 3, "basis": ["X", "Y", "Z"],
    "brackets": [{"i": "X", "j": "Y", "coeffs": {"Z": "1/0"}}]})");
  const Run r = run({"validate", path.string()});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("/brackets/0/coeffs/Z") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {}, {"classify"}, {"classify", "heisenberg3", "--wat"}, {"classify", "/no/such/file.json"},
           {"frobnicate"}, {"orbit", "heisenberg3", "--samples", "0"}, {"classify", "heisenberg3", "--ell", "W=1"}}) {
    const Run r = run(args);
    INFO(r.err);
    CHECK(r.code == kExitInputError);
    CHECK(r.err.starts_with("error:"));
    CHECK(r.out.empty());
  }
  CHECK(run({"classify", "heisenberg3", "--wat"}).err.find("Usage:") != std::string::npos);
}

TEST_CASE("fixtures subcommand") {
  const Run list = run({"fixtures", "list"});
  CHECK(list.code == kExitOk);
  for (const auto& [name, doc] : fixtures()) CHECK(list.out.find(name) != std::string::npos);

  const Run show = run({"fixtures", "show", "paper-6dim"});
  CHECK(show.code == kExitOk);
  CHECK(show.out.find("paper-6dim") != std::string::npos);

  for (const auto& [name, doc] : fixtures()) {
    const Run exp = run({"fixtures", "export", name});
    REQUIRE(exp.code == kExitOk);
    CHECK(parse_algebra(exp.out) == doc);
    // exported files are valid inputs and classify like the built-in fixture
    const auto file = temp_file(name + ".json", exp.out);
    CHECK(run({"classify", file.string(), "--json"}).out == run({"classify", name, "--json"}).out);
    std::filesystem::remove(file);
  }
  CHECK(run({"fixtures", "show", "nope"}).code == kExitInputError);
}

TEST_CASE("version flag") {
  const Run r = run({"--version"});
  CHECK(r.code == kExitOk);
  CHECK_FALSE(r.out.empty());
}
