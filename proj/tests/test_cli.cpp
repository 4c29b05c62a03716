#include <doctest.h>

#include <json.hpp>

#include "ddgl2/report.hpp"

using namespace ddgl2;
using nlohmann::json;

TEST_CASE("verify sweep passes once curated discrepancies are consulted") {
  VerifyConfig config;
  config.discrepancy_path = default_discrepancy_path();  // set by the test env
  RunResult res = run_verify(config);
  json doc = json::parse(res.output);
  CHECK(res.exit_code == 0);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("summary").at("cases") == 38);
  CHECK(doc.at("summary").at("hard_failures") == 0);
  CHECK(doc.at("summary").at("known_discrepancies") == 18);
}

TEST_CASE("without the curated file the dimension mismatches are hard failures") {
  VerifyConfig config;
  config.discrepancy_path = "/nonexistent/no_such_file.json";
  RunResult res = run_verify(config);
  json doc = json::parse(res.output);
  CHECK(res.exit_code == 1);
  CHECK(doc.at("summary").at("hard_failures") == 18);
  CHECK(doc.at("summary").at("known_discrepancies") == 0);
}

TEST_CASE("unknown case ids are usage errors") {
  VerifyConfig config;
  config.cases = {"9.9"};
  CHECK(run_verify(config).exit_code == 2);
  ChainConfig chain;
  chain.case_id = "9.9";
  CHECK(run_chain(chain).exit_code == 2);
}

TEST_CASE("chains beyond the dense cap exit with code 3") {
  ChainConfig config;
  config.case_id = "2.1";
  config.L = 7;
  RunResult res = run_chain(config);
  CHECK(res.exit_code == 3);
  CHECK(json::parse(res.output).contains("error"));
}

TEST_CASE("chain runs emit symmetry and spectrum sections") {
  ChainConfig config;
  config.case_id = "2.2";
  config.L = 2;
  RunResult res = run_chain(config);
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc.at("dimension") == 16);
  CHECK(doc.at("symmetry").contains("d"));
  CHECK(doc.at("spectrum").at("eigenvalues").size() == 16);
  CHECK(doc.at("spectrum").at("hermiticity_rel").get<double>() <= 1e-9);
}

TEST_CASE("verification output is byte-identical across repeated runs") {
  VerifyConfig config;
  config.discrepancy_path = default_discrepancy_path();
  RunResult a = run_verify(config);
  RunResult b = run_verify(config);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);
}

TEST_CASE("root-of-unity report separates corrected and printed variants") {
  RootOfUnityConfig config;
  config.p = 3;
  RunResult res = run_root_of_unity(config);
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc.at("variants").at("corrected").at("relations_pass") == true);
  CHECK(doc.at("variants").at("as_printed").at("relations_pass") == false);
  CHECK(doc.at("variants").at("corrected").at("central_power_residual")
            .get<double>() <= 1e-10);
}
