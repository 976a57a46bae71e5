#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <sstream>

#include <json.hpp>

#include "abelrep/cli.hpp"

using namespace abelrep;

namespace {

RunRequest request_for(const std::string& group, const std::string& q) {
  RunRequest request;
  request.group = parse_group_spec(group);
  request.field = parse_field(q, std::nullopt, std::nullopt, std::nullopt);
  return request;
}

struct RunOutcome {
  int code;
  std::string out;
  std::string err;
};

RunOutcome run_request(const RunRequest& request) {
  std::ostringstream out, err;
  const int code = run(request, out, err);
  return {code, out.str(), err.str()};
}

// run_main writes to std::cout/std::cerr; capture both.
RunOutcome run_argv(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"abelrep"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  const int code = run_main(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_field resolves the three field forms") {
  const FieldRange from_q = parse_field(std::string("8"), {}, {}, {});
  CHECK(from_q.p == 2);
  CHECK(from_q.m_lo == 3);
  CHECK(from_q.m_hi == 3);
  CHECK_FALSE(from_q.is_range);

  const FieldRange from_pm = parse_field({}, std::string("2"), std::string("6"), {});
  CHECK(from_pm.p == 2);
  CHECK(from_pm.m_lo == 6);
  CHECK(from_pm.m_hi == 6);

  const FieldRange range = parse_field({}, std::string("3"), {}, std::string("2:5"));
  CHECK(range.p == 3);
  CHECK(range.m_lo == 2);
  CHECK(range.m_hi == 5);
  CHECK(range.is_range);
}

TEST_CASE("parse_field rejects bad combinations and values") {
  CHECK_THROWS_AS(parse_field(std::string("12"), {}, {}, {}), NotAPrimePower);
  CHECK_THROWS_AS(parse_field(std::string("1"), {}, {}, {}), NotAPrimePower);
  CHECK_THROWS_AS(parse_field({}, std::string("4"), std::string("1"), {}), NotAPrimePower);
  CHECK_THROWS_AS(parse_field(std::string("4"), std::string("2"), {}, {}), InputError);
  CHECK_THROWS_AS(parse_field({}, std::string("2"), {}, {}), InputError);
  CHECK_THROWS_AS(parse_field({}, {}, std::string("3"), {}), InputError);
  CHECK_THROWS_AS(parse_field({}, {}, {}, {}), InputError);
  CHECK_THROWS_AS(parse_field({}, std::string("2"), std::string("1"), std::string("1:2")),
                  InputError);
  CHECK_THROWS_AS(parse_field({}, std::string("2"), std::string("0"), {}), InputError);
  CHECK_THROWS_AS(parse_field({}, std::string("2"), {}, std::string("5:3")), InputError);
  CHECK_THROWS_AS(parse_field({}, std::string("2"), {}, std::string("x:3")), InputError);
  CHECK_THROWS_AS(parse_field({}, std::string("2"), {}, std::string("3")), InputError);
  CHECK_THROWS_AS(parse_field(std::string("-7"), {}, {}, {}), InputError);
}

TEST_CASE("exit codes map errors by category") {
  CHECK(exit_code_for(NotCoprime("")) == kExitNotCoprime);
  CHECK(exit_code_for(OracleBoundExceeded("")) == kExitOracleBound);
  CHECK(exit_code_for(ParseError("", 0)) == kExitUsage);
  CHECK(exit_code_for(ValueError("")) == kExitUsage);
  CHECK(exit_code_for(NotAPrimePower("")) == kExitUsage);
  CHECK(exit_code_for(InputError("")) == kExitUsage);
  CHECK(exit_code_for(FactorizationLimitExceeded("")) == kExitUsage);
  CHECK(exit_code_for(std::runtime_error("")) == kExitInternal);
}

TEST_CASE("table output for C9xC5 over F_2") {
  const RunOutcome outcome = run_request(request_for("C9xC5", "2"));
  CHECK(outcome.code == kExitSuccess);
  CHECK(outcome.err.empty());
  CHECK(outcome.out.find("G = Z/9 x Z/5  (order 45, exponent 45)") != std::string::npos);
  CHECK(outcome.out.find("q = 2 (p = 2, m = 1)") != std::string::npos);
  CHECK(outcome.out.find("1, 2, 4^3, 6, 12^2") != std::string::npos);
  CHECK(outcome.out.find("degree  multiplicity") != std::string::npos);
}

TEST_CASE("verification against the enumeration") {
  RunRequest request = request_for("C9xC5", "2");
  request.verify = true;
  const RunOutcome outcome = run_request(request);
  CHECK(outcome.code == kExitSuccess);
  CHECK(outcome.out.find("verify: MATCH") != std::string::npos);
}

TEST_CASE("error exit codes through run") {
  CHECK(run_request(request_for("C3", "3")).code == kExitNotCoprime);
  CHECK(run_request(request_for("C3", "9")).code == kExitNotCoprime);

  RunRequest bounded = request_for("C9xC5", "2");
  bounded.verify = true;
  bounded.oracle_bound = 10;
  CHECK(run_request(bounded).code == kExitOracleBound);

  RunRequest zero;
  zero.group.factors.push_back(Int(0));
  zero.field = parse_field(std::string("2"), {}, {}, {});
  CHECK(run_request(zero).code == kExitUsage);
}

TEST_CASE("output is byte-deterministic") {
  RunRequest request = request_for("C9xC5", "2");
  request.show_divisors = true;
  for (const OutputFormat format :
       {OutputFormat::kTable, OutputFormat::kJson, OutputFormat::kCsv}) {
    request.format = format;
    CHECK(run_request(request).out == run_request(request).out);
  }
}

TEST_CASE("json output round-trips byte-identically") {
  RunRequest request = request_for("C9xC5", "2");
  request.format = OutputFormat::kJson;
  request.show_divisors = true;
  request.verify = true;
  const RunOutcome outcome = run_request(request);
  CHECK(outcome.code == kExitSuccess);

  const nlohmann::json parsed = nlohmann::json::parse(outcome.out);
  CHECK(parsed.dump(2) + "\n" == outcome.out);

  CHECK(parsed["group"]["cyclic_factors"] == nlohmann::json::array({"9", "5"}));
  CHECK(parsed["group"]["order"] == "45");
  CHECK(parsed["group"]["exponent"] == "45");
  CHECK(parsed["field"]["p"] == "2");
  CHECK(parsed["field"]["m"] == 1);
  CHECK(parsed["field"]["q"] == "2");
  REQUIRE(parsed["degrees"].size() == 5);
  CHECK(parsed["degrees"][0]["degree"] == "1");
  CHECK(parsed["degrees"][0]["multiplicity"] == "1");
  CHECK(parsed["degrees"][4]["degree"] == "12");
  CHECK(parsed["degrees"][4]["multiplicity"] == "2");
  REQUIRE(parsed["divisors"].size() == 6);
  CHECK(parsed["divisors"][5]["d"] == "45");
  CHECK(parsed["divisors"][5]["card_Id"] == "24");
  CHECK(parsed["divisors"][5]["degree"] == "12");
  CHECK(parsed["divisors"][5]["count"] == "2");
  CHECK(parsed["verify"]["match"] == true);
}

TEST_CASE("m-range sweeps ascend and render as a json array") {
  RunRequest request;
  request.group = parse_group_spec("9,5");
  request.field = parse_field({}, std::string("2"), {}, std::string("1:3"));
  request.format = OutputFormat::kJson;
  const RunOutcome outcome = run_request(request);
  CHECK(outcome.code == kExitSuccess);

  const nlohmann::json parsed = nlohmann::json::parse(outcome.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["field"]["q"] == "2");
  CHECK(parsed[1]["field"]["q"] == "4");
  CHECK(parsed[2]["field"]["q"] == "8");
  CHECK(parsed[2]["field"]["m"] == 3);
}

TEST_CASE("csv output shape") {
  RunRequest request = request_for("C9xC5", "2");
  request.format = OutputFormat::kCsv;
  const RunOutcome outcome = run_request(request);
  std::istringstream lines(outcome.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "p,m,q,degree,multiplicity");
  CHECK(rows[1] == "2,1,2,1,1");
  CHECK(rows[2] == "2,1,2,2,1");
  CHECK(rows[3] == "2,1,2,4,3");
  CHECK(rows[4] == "2,1,2,6,1");
  CHECK(rows[5] == "2,1,2,12,2");
}

TEST_CASE("run_main end to end") {
  CHECK(run_argv({"--group", "C9xC5", "--q", "2"}).code == kExitSuccess);
  CHECK(run_argv({"--group", "C9xC5", "--q", "2", "--verify"}).code == kExitSuccess);
  CHECK(run_argv({"--group", "9,5", "--p", "2", "--m-range", "1:4", "--format", "csv"}).code ==
        kExitSuccess);

  CHECK(run_argv({"--q", "2"}).code == kExitUsage);                      // missing --group
  CHECK(run_argv({"--group", "C9xC5"}).code == kExitUsage);              // missing field
  CHECK(run_argv({"--group", "C9xC5", "--q", "12"}).code == kExitUsage); // not a prime power
  CHECK(run_argv({"--group", "9,x", "--q", "2"}).code == kExitUsage);
  CHECK(run_argv({"--group", "C9xC5", "--q", "2", "--format", "yaml"}).code == kExitUsage);
  CHECK(run_argv({"--group", "C9xC5", "--q", "2", "--bogus"}).code == kExitUsage);
  CHECK(run_argv({"--group", "C3", "--q", "3"}).code == kExitNotCoprime);
  CHECK(run_argv({"--group", "C9xC5", "--q", "2", "--verify", "--oracle-bound", "10"}).code ==
        kExitOracleBound);

  const RunOutcome table = run_argv({"--group", "45", "--q", "2"});
  CHECK(table.out.find("1, 2, 4^3, 6, 12^2") != std::string::npos);
}
