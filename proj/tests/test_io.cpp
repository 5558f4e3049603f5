#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "preset_list.hpp"
#include "random_poly.hpp"
#include "wick/catalog.hpp"
#include "wick/io.hpp"

using namespace wick;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wick_test_" + name)).string();
}

}  // namespace

TEST_CASE("parser examples") {
  Polynomial p = parse_expression("a1* a2 - 1/2 a2 a1*", 2);
  Polynomial expect = Polynomial::dag(1) * Polynomial::gen(2) - Scalar::ratio(1, 2) * (Polynomial::gen(2) * Polynomial::dag(1));
  CHECK(p == expect);
  CHECK(p.size() == 2);
  CHECK(parse_expression("1", 3) == Polynomial::one());
  CHECK(parse_expression("(1+2i) a1 a1", 1) == Scalar(Rational(1), Rational(2)) * Polynomial(Word::gens({1, 1})));
  CHECK(parse_expression("-i a2*", 2) == Scalar(Rational(0), Rational(-1)) * Polynomial::dag(2));
  CHECK(parse_expression("3/4i", 1) == Polynomial(Scalar(Rational(0), Rational(3, 4))));
  CHECK(parse_expression("(a1 + a2)(a1 - a2)", 2) ==
        (Polynomial::gen(1) + Polynomial::gen(2)) * (Polynomial::gen(1) - Polynomial::gen(2)));
  CHECK(parse_expression("a1 a1* - a1 a1*", 1).is_zero());
  CHECK(parse_expression("  2 a12  ", 12) == Scalar(2) * Polynomial::gen(12));
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_expression("", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("a3", 2), IndexError);
  CHECK_THROWS_AS(parse_expression("a0", 2), IndexError);
  CHECK_THROWS_AS(parse_expression("1/0", 2), ParseError);
  try {
    parse_expression("a1 + * a2", 2);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  try {
    parse_expression("(a1 a2", 2);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_expression("a", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("a1 )", 2), ParseError);
}

TEST_CASE("formatting") {
  CHECK(format_scalar(Scalar::ratio(-3, 4)) == "-3/4");
  CHECK(format_scalar(Scalar(Rational(0), Rational(3))) == "3i");
  CHECK(format_scalar(Scalar::imag_unit()) == "i");
  CHECK(format_polynomial(Polynomial()) == "0");
  CHECK(format_polynomial(Polynomial::one()) == "1");
  CHECK(format_polynomial(-Polynomial::gen(1)) == "-a1");
}

TEST_CASE("print/parse round trip on random polynomials") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = testing::random_polynomial(rng, 3, 1 + trial % 5, 4, false);
    const std::string text = format_polynomial(p);
    CAPTURE(text);
    CHECK(parse_expression(text, 3) == p);
  }
}

TEST_CASE("relation files round trip for every preset") {
  for (const auto& spec : testing::sample_presets()) {
    auto rs = make_preset(spec);
    CAPTURE(spec.family);
    auto back = relations_from_json(relations_to_json(rs));
    CHECK(back.tensor.d() == rs.tensor.d());
    CHECK(back.tensor.entries() == rs.tensor.entries());
    CHECK(back.ideal_generators == rs.ideal_generators);
    CHECK(back.name == rs.name);
    CHECK(back.params == rs.params);
  }
  auto rs = make_preset({"twisted_car", 3, {{"mu", Scalar::ratio(1, 3)}}});
  const auto path = temp_path("rel.json");
  save_relations(rs, path);
  auto back = load_relations(path);
  CHECK(back.tensor.entries() == rs.tensor.entries());
  std::filesystem::remove(path);
}

TEST_CASE("minimal relation file and warnings") {
  auto j = nlohmann::json::parse(R"({"d": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 1, "re": "1/2", "im": "0"}]})");
  std::vector<std::string> warnings;
  auto rs = relations_from_json(j, &warnings);
  CHECK(rs.tensor.entries().size() == 1);
  CHECK(rs.tensor.get(1, 1, 1, 1) == Scalar::ratio(1, 2));
  CHECK(warnings.empty());
  auto nh = nlohmann::json::parse(R"({"d": 2, "entries": [{"i": 1, "j": 2, "k": 1, "l": 1, "re": "1", "im": "0"}]})");
  auto rs2 = relations_from_json(nh, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(rs2.tensor.get(1, 2, 1, 1) == Scalar(1));
  CHECK_THROWS_AS(relations_from_json(nlohmann::json::parse(R"({"entries": []})")), Error);
  CHECK_THROWS_AS(relations_from_json(nlohmann::json::parse(
                      R"({"d": 2, "entries": [{"i": 3, "j": 1, "k": 1, "l": 1, "re": "1", "im": "0"}]})")),
                  IndexError);
  CHECK_THROWS(load_relations(temp_path("missing.json")));
}

TEST_CASE("scalar json keeps exact values") {
  Scalar s(Rational(123456789, 1000000007), Rational(-7, 3));
  CHECK(scalar_from_json(scalar_to_json(s)) == s);
  CHECK(scalar_to_json(Scalar::ratio(-1, 2))["re"] == "-1/2");
}

TEST_CASE("report round trip") {
  auto t = make_preset({"qccr", 2, {{"q", Scalar::ratio(1, 2)}}}).tensor;
  Report r;
  r.command = "positivity";
  r.relations_name = "qccr";
  r.relations_d = 2;
  r.relations_params = {{"q", "1/2"}, {"d", "2"}};
  r.checks.push_back(positivity_record(positivity_report(t, 4)));
  r.timing_ms = 1.25;
  auto j = report_to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(report_from_json(j) == r);
  const auto path = temp_path("report.json");
  save_report(r, path);
  CHECK(load_report(path) == r);
  std::filesystem::remove(path);
}
