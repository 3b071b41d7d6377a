#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/sweep.hpp"

using namespace supercong;

TEST_CASE("theorem sweep passes") {
  const SweepReport r = sweep({"CHK-THM11A", "CHK-THM11B", "CHK-THM12"}, 7, 200, 4);
  CHECK(r.all_pass());
  // 21 primes p = 1 mod 3 in [7, 200], 22 others.
  for (const auto& [id, tally] : r.summary) {
    CAPTURE(id);
    CHECK(tally.pass == 21);
    CHECK(tally.fail == 0);
    CHECK(tally.skipped == 22);
  }
  CHECK(r.results.size() == 63);
}

TEST_CASE("Wolstenholme sweep") {
  const SweepReport r = sweep({"CHK-WOLST"}, 5, 300, 2);
  CHECK(r.all_pass());
  CHECK(r.summary.at("CHK-WOLST").skipped == 1);  // p = 5
}

TEST_CASE("empty check list") {
  const SweepReport r = sweep({}, 7, 100);
  CHECK(r.results.empty());
  CHECK(r.summary.empty());
  CHECK(r.all_pass());
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(sweep({"CHK-NOPE"}, 7, 100), UnknownCheckError);
  CHECK_THROWS_AS(sweep({"CHK-WOLST"}, 100, 7), std::invalid_argument);
  CHECK_THROWS_AS(resolve_check_ids("CHK-FP2,CHK-NOPE"), UnknownCheckError);
  CHECK(resolve_check_ids("CHK-FP2,CHK-WOLST,CHK-FP2") == std::vector<std::string>{"CHK-FP2", "CHK-WOLST"});
  CHECK(resolve_check_ids("all").size() == list_checks().size());
}

TEST_CASE("skipped primes are neither passes nor failures") {
  const SweepReport r = sweep({"CHK-FP2"}, 2, 30);
  const CheckTally& t = r.summary.at("CHK-FP2");
  CHECK(t.pass == 3);  // 7, 13, 19
  CHECK(t.fail == 0);
  CHECK(t.skipped == 7);
  for (const auto& res : r.results) CHECK(res.p % 3 == 1);
}

TEST_CASE("results do not depend on the thread count") {
  const std::vector<std::string> ids = {"CHK-FP2", "CHK-LEM22", "CHK-SUNH-HHALF", "CHK-P13"};
  const std::string one = to_json(sweep(ids, 7, 150, 1));
  CHECK(one == to_json(sweep(ids, 7, 150, 8)));
  CHECK(one == to_json(sweep(ids, 7, 150, 3)));
}

TEST_CASE("JSON schema") {
  const auto doc = nlohmann::json::parse(to_json(sweep({"CHK-FP2", "CHK-WOLST"}, 7, 13)));
  CHECK(doc.at("version") == std::string(kToolVersion));
  CHECK(doc.at("range").at("lo") == "7");
  CHECK(doc.at("range").at("hi") == "13");
  const auto& results = doc.at("results");
  REQUIRE(results.size() == 5);  // FP2 at 7, 13; WOLST at 7, 11, 13

  const auto& first = results.at(0);
  for (const char* key : {"check", "p", "x", "y", "lhs", "rhs", "modulus", "pass", "note"}) CHECK(first.contains(key));
  CHECK(first.at("check") == "CHK-FP2");
  CHECK(first.at("x") == "-2");
  CHECK(first.at("lhs") == "10");
  CHECK(first.at("modulus") == "49");
  CHECK(first.at("pass") == true);
  CHECK(results.at(2).at("x").is_null());

  const auto& tally = doc.at("summary").at("CHK-WOLST");
  CHECK(tally.at("pass") == "3");
  CHECK(tally.at("fail") == "0");
  CHECK(tally.at("skipped") == "0");
}

TEST_CASE("CSV layout") {
  const std::string csv = to_csv(sweep({"CHK-FP2", "CHK-WOLST"}, 7, 7));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "check,p,x,y,lhs,rhs,modulus,pass,note");
  std::getline(in, line);
  CHECK(line == "CHK-FP2,7,-2,1,10,10,49,true,\"instances=2 failed=0\"");
  std::getline(in, line);
  CHECK(line == "CHK-WOLST,7,,,0,0,49,true,\"\"");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("table report ends with a verdict") {
  const std::string table = to_table(sweep({"CHK-WOLST"}, 7, 20));
  CHECK(table.find("all checks passed") != std::string::npos);
}
