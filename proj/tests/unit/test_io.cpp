#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "starr/corpus.hpp"
#include "starr/io.hpp"

using namespace starr;

TEST_SUITE("io") {

TEST_CASE("round trip over the corpus") {
  for (const auto& name : full_corpus()) {
    CAPTURE(name);
    const auto e = example(name);
    const auto file = arrangement_file_from(e.arrangement, e.eta);
    const auto back = parse_arrangement_json(render_arrangement_json(file));
    CHECK(back == file);
    CHECK(render_arrangement_json(back) == render_arrangement_json(file));
  }
}

TEST_CASE("extension field file") {
  const char* text = R"({
    "field": {"type": "extension", "minpoly": [-2, 0, 1], "symbol": "r"},
    "variables": ["x", "y"],
    "hyperplanes": [[1, 0], [1, [0, 1]], ["1/2", -1]],
    "eta": {"degree": 2, "coefficients": [{"monomial": [2, 0], "coeff": 1}, {"monomial": [0, 2], "coeff": [0, 1]}]}
  })";
  const auto f = parse_arrangement_json(text);
  CHECK(f.field->degree() == 2);
  CHECK(f.hyperplanes.size() == 3);
  CHECK(f.hyperplanes[1][1] == Scalar::generator(f.field));
  CHECK(f.eta->to_string(f.variables) == "x^2 + r*y^2");
  CHECK(f.arrangement().size() == 3);
}

TEST_CASE("parse errors carry a location") {
  auto where = [](const std::string& text) {
    try {
      parse_arrangement_json(text);
    } catch (const ParseError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  CHECK(where("{") != "no error");
  CHECK(where(R"({"variables": ["x"], "hyperplanes": [[0]]})").find("hyperplanes") != std::string::npos);
  CHECK(where(R"({"variables": ["x", "y"], "hyperplanes": [[1]]})").find("hyperplanes") != std::string::npos);
  CHECK(where(R"({"variables": ["x"], "hyperplanes": [["1/0"]]})") != "no error");
  CHECK(where(R"({"field": {"type": "extension", "minpoly": [-1, 0, 1]}, "variables": ["x"], "hyperplanes": [[1]]})") !=
        "no error");
  CHECK(where(R"({"variables": ["x", "y"], "hyperplanes": [[1, 0]],
                  "eta": {"degree": 2, "coefficients": [{"monomial": [1, 0], "coeff": 1}]}})")
            .find("eta") != std::string::npos);
}

TEST_CASE("reading a file") {
  const auto path = std::filesystem::temp_directory_path() / "starr-io-test.json";
  std::ofstream(path) << render_arrangement_json(arrangement_file_from(example("ex4").arrangement));
  CHECK(read_arrangement_file(path.string()).arrangement().size() == 4);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_arrangement_file(path.string()), ParseError);
}

TEST_CASE("polynomial parser") {
  const auto* Q = FieldDescriptor::rational();
  const std::vector<std::string> v = {"x", "y", "z"};
  CHECK(parse_polynomial("2x y", Q, v) == parse_polynomial("2*x*y", Q, v));
  CHECK(parse_polynomial("-(x - y)^2 / 2", Q, v) == parse_polynomial("-1/2*x^2 + x*y - 1/2*y^2", Q, v));
  CHECK(parse_polynomial("0", Q, v).is_zero());
  CHECK_THROWS_AS(parse_polynomial("x / y", Q, v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + w", Q, v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", Q, v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-1", Q, v), ParseError);
  const auto* K = FieldDescriptor::extension({-2, 0, 1}, "r");
  CHECK(parse_polynomial("(x + r*y)^2", K, v) == parse_polynomial("x^2 + 2*r*x*y + 2*y^2", K, v));
  CHECK_THROWS_AS(parse_polynomial("r*x", Q, v), ParseError);
}

TEST_CASE("scalar JSON") {
  CHECK(render_scalar_json(Scalar::rational(3)) == "3");
  CHECK(render_scalar_json(Scalar::rational(-1, 2)) == "\"-1/2\"");
  const auto* K = FieldDescriptor::extension({-2, 0, 1}, "r");
  CHECK(render_scalar_json(Scalar::generator(K)) == "[0,1]");
}

}
