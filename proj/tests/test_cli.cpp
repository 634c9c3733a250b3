#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ckq_cli.hpp"
#include "helpers.hpp"

using namespace ckq;
using ckq::cli::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ckq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ckq::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliJson, ScalarRoundTrip) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    CKScalar x = ckq::test::random_scalar(rng, 2, 4, true);
    EXPECT_EQ(ckq::cli::scalar_from_json(ckq::cli::scalar_to_json(x), 2), x) << to_string(x);
  }
  CKScalar s = hyper_monomial(HyperKind::sinh, 2, 3) * (BaseScalar::sqrt2() * BaseScalar::i() + BaseScalar::rational(-3, 7));
  EXPECT_EQ(ckq::cli::scalar_from_json(ckq::cli::scalar_to_json(s), 2), s);
}

TEST(CliJson, RelationsRoundTrip) {
  StructureBundle b = make_bundle(3, Basis::symplectic);
  RelationSet rs = bundle_relations(b);
  json j = ckq::cli::relations_to_json(rs);
  std::vector<Relation> back = ckq::cli::relations_from_json(j, 2);
  ASSERT_EQ(back.size(), rs.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    EXPECT_EQ(back[k].label, rs.items()[k].label);
    EXPECT_EQ(back[k].poly, rs.items()[k].poly);
  }
  EXPECT_EQ(ckq::cli::relations_to_json(RelationSet()).dump(), "[]");
}

TEST(CliJson, FailingReportCarriesWitnesses) {
  RingMatrix r = r_q(3);
  r(3, 1) = CKScalar::constant(1, 2);
  json j = ckq::cli::report_to_json(yang_baxter(r));
  EXPECT_FALSE(j.at("pass").get<bool>());
  EXPECT_FALSE(j.at("witnesses").empty());
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"relations", "--j", "1,iota", "--format", "json"},
                                                               {"pairings", "--format", "json"},
                                                               {"check", "--j", "iota,1", "--format", "json"}}) {
    Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, JsonDocumentShape) {
  Outcome r = run({"relations", "--dim", "4", "--j", "1,iota,1", "--basis", "cartesian", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = json::parse(r.out);
  EXPECT_EQ(d.at("meta").at("dim"), 4);
  EXPECT_EQ(d.at("meta").at("basis"), "cartesian");
  EXPECT_EQ(d.at("meta").at("j"), "1,iota,1");
  EXPECT_EQ(d.at("scalars-as"), "monomial-list");
  EXPECT_FALSE(d.at("relations").empty());
  for (const auto& rel : d.at("relations"))
    for (const auto& t : rel.at("terms")) EXPECT_EQ(t.at("jExp").size(), 3u);
}

TEST(Cli, SnapshotRelationsN3) {
  std::ifstream f(CKQ_GOLDEN_DIR "/relations_n3_11.json");
  ASSERT_TRUE(f.good());
  std::stringstream want;
  want << f.rdbuf();
  Outcome r = run({"relations", "--dim", "3", "--j", "1,1", "--format", "json"});
  EXPECT_EQ(r.out, want.str());
}

TEST(Cli, PairingsContainUnitEntry) {
  Outcome r = run({"pairings", "--j", "iota,iota", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  json d = json::parse(r.out);
  bool found = false;
  for (const auto& p : d.at("pairings"))
    if (p.at("functional") == "lp11" && p.at("generator") == "t22") {
      found = true;
      EXPECT_EQ(ckq::cli::scalar_from_json(p.at("value"), 2), CKScalar::constant(1, 2));
    }
  EXPECT_TRUE(found);
}

TEST(Cli, ContractionMatrix) {
  Outcome r = run({"check", "--select", "contraction", "--j", "iota,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = json::parse(r.out);
  ASSERT_EQ(d.at("matrices").size(), 1u);
  const json& m = d.at("matrices").front();
  EXPECT_EQ(m.at("name"), "rTilde");
  EXPECT_EQ(m.at("rows"), 9);
  bool found = false;
  for (const auto& e : m.at("entries"))
    if (e.at("row") == 4 && e.at("col") == 2) {
      found = true;
      EXPECT_EQ(ckq::cli::scalar_from_json(e.at("value"), 2), CKScalar::constant(2, 2));
    }
  EXPECT_TRUE(found);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "--j", "1,1"}).code, 0);
  EXPECT_EQ(run({"info"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"check", "--select", "contraction", "--j", "1,1"}).code, 2);
  EXPECT_EQ(run({"relations", "--dim", "9"}).code, 2);
  EXPECT_EQ(run({"relations", "--dim", "3", "--j", "1,1,1"}).code, 2);
  EXPECT_EQ(run({"relations", "--j", "1,x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, TextOutput) {
  Outcome r = run({"check", "--select", "ybe", "--j", "1,1"});
  EXPECT_NE(r.out.find("PASS ybe"), std::string::npos);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("[ybe]"), std::string::npos);
  EXPECT_NE(r.err.find("[ybe]"), std::string::npos);
}
