#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using symplie::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = symplie::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Outcome o = run(args);
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  return json::parse(o.out);
}

}  // namespace

TEST(Cli, ChainHeisenberg) {
  json j = run_json({"chain", "heis4.json"});
  EXPECT_EQ(j["findings"]["length"], 2);
  EXPECT_EQ(j["findings"]["final_dim"], 0);
  EXPECT_EQ(j["findings"]["dims"], json({4, 2, 0}));
}

TEST(Cli, AffOpen) {
  json j = run_json({"aff", "2", "--g", "0,1", "--M", "nilblock", "open"});
  EXPECT_EQ(j["findings"]["open"], true);
  Outcome text = run({"aff", "2", "--g", "0,1", "--M", "nilblock", "open"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("open: true"), std::string::npos);
}

TEST(Cli, FrobeniusHeisenbergIsNone) {
  json j = run_json({"frobenius", "heis4.json"});
  EXPECT_EQ(j["findings"]["alpha"], "none");
  json a = run_json({"frobenius", "aff2"});
  EXPECT_EQ(a["findings"]["round_trip"], true);
}

TEST(Cli, CheckAnalyzeReduceMoment) {
  EXPECT_EQ(run_json({"check", "heis4"})["findings"]["symplectic"], true);
  json an = run_json({"analyze", "heis4"});
  EXPECT_EQ(an["findings"]["nilindex"], 3);
  EXPECT_EQ(an["findings"]["lsa_left_symmetric"], true);
  json red = run_json({"reduce", "heis4", "--ideal", "2"});
  EXPECT_EQ(red["findings"]["step"]["dim_after"], 2);
  json m = run_json({"moment", "heis4", "--x", "1,0,0,0"});
  EXPECT_EQ(m["findings"]["covector"], json({"0", "-1/2", "1", "0"}));
}

TEST(Cli, AffActionsAndCoad) {
  for (std::string action : {"orientation", "cyclic", "reduce", "split", "lagrangian"})
    EXPECT_EQ(run({"aff", "3", "--g", "0,0,1", "--M", "nilblock", action, "--json"}).code, 0) << action;
  json l = run_json({"aff", "3", "--g", "0,0,1", "--M", "nilblock", "lagrangian"});
  EXPECT_EQ(l["findings"]["verified"], true);
  json c = run_json({"coad", "2", "--g", "0,1", "--M", "nilblock", "--el", "1,2;1,0;0,3"});
  EXPECT_EQ(c["findings"]["momentum_agrees"], true);
  EXPECT_EQ(c["findings"]["momentum_translations"], json({"0", "1/3"}));
}

TEST(Cli, ValidationFailuresExitOne) {
  Outcome o = run({"aff", "2", "--g", "0,0", "--M", "nilblock", "cyclic", "--json"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(json::parse(o.out)["findings"]["error"], "NoCyclicVector");
  EXPECT_EQ(run({"chain", "aff1"}).code, 1);
  EXPECT_EQ(run({"reduce", "heis4", "--ideal", "0"}).code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"check", "no_such_algebra"}).code, 2);
  EXPECT_EQ(run({"aff", "2", "--g", "0,1/0", "--M", "nilblock", "open"}).code, 2);
  EXPECT_EQ(run({"aff", "2", "--g", "0,1", "--M", "nilblock", "sideways"}).code, 2);
}

TEST(Cli, CatalogListsAndEmits) {
  Outcome list = run({"catalog"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("heis4"), std::string::npos);
  Outcome heis = run({"catalog", "heis4"});
  EXPECT_EQ(heis.code, 0);
  EXPECT_EQ(json::parse(heis.out)["dim"], 4);
}
