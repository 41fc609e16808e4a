#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "circulus/cli.hpp"
#include "circulus/elementary.hpp"
#include "circulus/verify.hpp"

using namespace circulus;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "circulus");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("huygens lower bound from the 30-gon") {
  Outcome o = call({"compute", "--method", "huygens-final-lower", "--seed", "30", "--doublings", "1", "--digits", "12"});
  CHECK(o.code == cli::ok);
  CHECK(lines(o.out).size() == 1);
  CHECK(o.out.find("3.14159265339") != std::string::npos);
  CHECK(o.out.find("n=30") != std::string::npos);
  CHECK(o.out.find("trig-seeded") != std::string::npos);
}

TEST_CASE("ladder as csv") {
  Outcome o = call({"ladder", "--seed", "6", "--doublings", "4", "--digits", "10", "--format", "csv"});
  REQUIRE(o.code == cli::ok);
  auto rows = lines(o.out);
  REQUIRE(rows.size() == 36);
  CHECK(rows[0] == "method,n,side,lo,hi,width,correct_digits");
  bool seen = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto cells = split(rows[i]);
    REQUIRE(cells.size() == 7);
    CHECK(cells[3].ends_with("~rd"));
    CHECK(cells[4].ends_with("~ru"));
    if (cells[0] == "archimedes" && cells[1] == "96") {
      seen = true;
      Rational lo = Rational::parse(cells[3].substr(0, cells[3].size() - 3));
      Rational hi = Rational::parse(cells[4].substr(0, cells[4].size() - 3));
      CHECK(lo > Rational(3) + Rational(10, 71));
      CHECK(hi < Rational(3) + Rational(1, 7));
      CHECK(Rational::parse(cells[5]) == hi - lo);
    }
  }
  CHECK(seen);
}

TEST_CASE("ladder as json round-trips") {
  Outcome o = call({"ladder", "--seed", "4", "--doublings", "2", "--format", "json"});
  REQUIRE(o.code == cli::ok);
  auto j = nlohmann::ordered_json::parse(o.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 21);
  std::vector<std::string> keys;
  for (auto& [k, v] : j[0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"method", "n", "side", "lo", "hi", "width", "correct_digits"});
  CHECK(j[0]["lo"].is_string());
  CHECK(j[0]["n"].is_number_integer());
  CHECK(j.dump() + "\n" == o.out);
}

TEST_CASE("appendix f") {
  Outcome o = call({"appendix-f", "--x", "1", "--digits", "8"});
  CHECK(o.code == cli::ok);
  CHECK(o.out.find("-0.003412474") != std::string::npos);
  CHECK(o.out.find("holds") != std::string::npos);
  CHECK(call({"appendix_f", "--x", "1/2"}).code == cli::ok);
  CHECK(call({"appendix-f", "--x", "0"}).code == cli::domain);
}

TEST_CASE("other reports") {
  Outcome order = call({"order", "--method", "cusa", "--doublings", "8", "--format", "csv"});
  CHECK(order.code == cli::ok);
  CHECK(order.out.find("order,4") != std::string::npos);
  Outcome bary = call({"barycenter", "--theta", "pi/2", "--format", "json"});
  CHECK(bary.code == cli::ok);
  CHECK(nlohmann::json::parse(bary.out)["overlap"] == "holds");
  Outcome seg = call({"segment", "--theta", "2*pi/3"});
  CHECK(seg.code == cli::ok);
  CHECK(seg.out.find("violated") == std::string::npos);
  CHECK(call({"segment", "--theta", "4"}).code == cli::domain);
}

TEST_CASE("angles") {
  Precision p(96);
  Enclosure pi = pi_reference(p);
  CHECK(cli::parse_angle("pi", p).overlaps(pi));
  CHECK(cli::parse_angle("pi/2", p).overlaps(pi.scaled(-1)));
  CHECK(cli::parse_angle("2pi/3", p).overlaps(2 * pi / 3));
  CHECK(cli::parse_angle("3*pi/4", p).overlaps(3 * pi / 4));
  CHECK(cli::parse_angle("1.25", p).contains(Rational(5, 4)));
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::usage);
  CHECK(call({"nonsense"}).code == cli::usage);
  CHECK(call({"compute"}).code == cli::usage);
  CHECK(call({"compute", "--method", "nope"}).code == cli::usage);
  CHECK(call({"compute", "--method", "cusa", "--digits", "3"}).code == cli::usage);
  CHECK(call({"compute", "--method", "cusa", "--seed", "5"}).code == cli::usage);
  CHECK(call({"compute", "--method", "cusa", "--doublings", "41"}).code == cli::usage);
  CHECK(call({"ladder", "--format", "xml"}).code == cli::usage);
  CHECK(call({"compute", "--method", "cusa", "--doublings", "0"}).code == cli::domain);
  Outcome help = call({"--help"});
  CHECK(help.code == cli::ok);
  CHECK(help.out.find("appendix-f") != std::string::npos);
  Outcome bad = call({"compute", "--method", "nope"});
  CHECK(!bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("determinism") {
  std::vector<std::string> args{"ladder", "--seed", "3", "--doublings", "5", "--digits", "20"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("precision override") {
  CHECK(cli::working_precision(10).bits() == 66);
  setenv("CIRCULUS_PRECISION_BITS", "64", 1);
  CHECK(cli::working_precision(10).bits() == 64);
  Outcome wide = call({"compute", "--method", "archimedes", "--digits", "40"});
  setenv("CIRCULUS_PRECISION_BITS", "16", 1);
  CHECK_THROWS_AS(cli::working_precision(10), std::invalid_argument);
  CHECK(call({"compute", "--method", "archimedes"}).code == cli::usage);
  unsetenv("CIRCULUS_PRECISION_BITS");
  Outcome normal = call({"compute", "--method", "archimedes", "--digits", "40"});
  CHECK(wide.code == cli::ok);
  CHECK(wide.out != normal.out);
}

TEST_CASE("verify suite") {
  std::vector<CheckResult> results = run_verify_suite(1, 20);
  CHECK(results.size() == 27);
  for (const CheckResult& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.truth == Truth::holds);
  }
  CHECK(overall(results) == Truth::holds);
  Outcome o = call({"verify", "--samples", "20"});
  CHECK(o.code == cli::ok);
  CHECK(o.out.find("BARY-3") != std::string::npos);
}
