#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "starr/cli.hpp"
#include "starr/corpus.hpp"
#include "starr/io.hpp"

using namespace starr;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("st on ex4") {
  const auto r = run({"st", "--example", "ex4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hilbert_vector: [1,3,5,4,1]") != std::string::npos);
  CHECK(r.out.find("gorenstein: false") != std::string::npos);
}

TEST_CASE("json report shape") {
  const auto r = run({"st", "--example", "ex4", "--report", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "st");
  CHECK(j.contains("input"));
  CHECK(j.contains("results"));
  CHECK(j["checks"].is_array());
  CHECK(run({"st", "--example", "ex4", "--json"}).out == r.out);
}

TEST_CASE("free on notsplit") {
  const auto r = run({"free", "--example", "notsplit", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["freeness"]["free"] == false);
  CHECK(j["results"]["arrangement"]["size"] == 7);
}

TEST_CASE("file input and eta override") {
  const auto path = std::filesystem::temp_directory_path() / "starr-cli-test.json";
  std::ofstream(path) << render_arrangement_json(arrangement_file_from(example("ex4").arrangement));
  CHECK(run({"st", path.string(), "--eta", "x^2+2*y^2+3*z^2"}).code == 0);
  CHECK(run({"st", path.string(), "--eta", "x*y"}).code == 1);
  CHECK(run({"psi", path.string()}).code == 0);
  CHECK(run({"lattice", path.string()}).code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"st"}).code == 2);
  CHECK(run({"st", "--example", "no-such"}).code == 2);
  CHECK(run({"st", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"coxeter", "ideal", "A", "3", "--roots", "0,1,4"}).code == 2);
  CHECK(run({"coxeter", "inversion", "4231"}).code == 0);
  CHECK(run({"analyze", "--example", "ex4"}).code == 0);
  CHECK(run({"verify", "--suite", "examples"}).code == 0);
  CHECK(run({"search", "--count", "2", "--conjectures", "bogus"}).code == 2);
}

TEST_CASE("analyze notsplit") {
  const auto r = run({"analyze", "--example", "notsplit"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("(1+t)(1+3t)^2") != std::string::npos);
}

}
