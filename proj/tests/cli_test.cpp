#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "posetdist/generate.hpp"
#include "posetdist/io.hpp"

namespace {

using namespace posetdist;
namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "posetdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("posetdist_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    const auto [a, b] = fixtures::cardinality_pair();
    card_a_ = write("card_a.json", to_json(a));
    card_b_ = write("card_b.json", to_json(b));
    diamond_ = write("diamond.json", to_json(fixtures::diamond()));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    save_text(p, content);
    return p.string();
  }

  fs::path dir_;
  std::string card_a_;
  std::string card_b_;
  std::string diamond_;
};

TEST_F(CliTest, DistanceJson) {
  const auto r = run({"distance", card_a_, card_b_, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["dmces"], 2);
  EXPECT_EQ(j["normalizer"], 4);
  EXPECT_DOUBLE_EQ(j["distance"].get<double>(), 0.5);
  EXPECT_EQ(j["distance_exact"], "1/2");
  EXPECT_EQ(j["solver"], "clique");
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_FALSE(j.contains("witness"));
}

TEST_F(CliTest, DistanceEverySolver) {
  for (const char* s : {"brute", "alg1", "clique", "auto"}) {
    const auto r = run({"distance", card_a_, card_b_, "--json", "--witness", "--solver", s});
    ASSERT_EQ(r.code, 0) << s << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["dmces"], 2) << s;
    EXPECT_EQ(j["witness"].size(), 3U) << s;
  }
}

TEST_F(CliTest, DistanceToItselfIsZero) {
  const auto r = run({"distance", diamond_, diamond_});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("distance"), std::string::npos);
  EXPECT_EQ(json::parse(run({"distance", diamond_, diamond_, "--json"}).out)["distance"], 0);
}

TEST_F(CliTest, DmcesAndMcis) {
  const auto d = run({"dmces", card_a_, card_b_, "--witness"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("n1"), std::string::npos);
  const auto [g, h] = fixtures::compatibility_pair();
  const auto a = write("c1.json", to_json(g));
  const auto b = write("c2.json", to_json(h));
  const auto m = run({"mcis", a, b, "--json"});
  ASSERT_EQ(m.code, 0) << m.err;
  const auto j = json::parse(m.out);
  EXPECT_EQ(j["mcis"], 3);
  EXPECT_EQ(j["distance"], 0);
}

TEST_F(CliTest, PosetDistance) {
  const auto p = write("p.txt", "node 1 a\nnode 2 b\nnode 3 c\n1 2\n2 3\n");
  const auto q = write("q.txt", "node 1 a\nnode 2 b\nnode 3 c\n1 3\n3 2\n");
  const auto r = run({"distance", p, q, "--poset", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["dmces"], 2);
  EXPECT_EQ(j["distance_exact"], "1/3");
  EXPECT_EQ(j["solver"], "alg3");
}

TEST_F(CliTest, EldDot) {
  const auto out = (dir_ / "out.dot").string();
  const auto r = run({"eld", diamond_, "--dot", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string dot = read_file(out);
  EXPECT_EQ(dot, to_dot(extended_line_digraph(fixtures::diamond())));
  const auto s = run({"eld", diamond_, "--dot", "-"});
  EXPECT_EQ(s.out, dot);
  const auto plain = run({"eld", diamond_});
  EXPECT_EQ(plain.code, 0);
  EXPECT_NE(plain.out.find("ht"), std::string::npos);
}

TEST_F(CliTest, EldWarnsOnTwoCycles) {
  const auto two = write("two.txt", "node a x\nnode b x\na b\nb a\n");
  const auto r = run({"eld", two});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, Validate) {
  const auto ok = run({"validate", card_a_, "--json"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto j = json::parse(ok.out);
  EXPECT_EQ(j["oriented"], true);
  EXPECT_EQ(j["acyclic"], false);
  const auto loose = write("loose.txt", "node a x\nnode b x\nnode c x\na b\n");
  EXPECT_EQ(run({"validate", loose}).code, 2);
  const auto bad_poset = write("bad.txt", "node 1 a\nnode 2 a\n1 2\n2 1\n");
  const auto r = run({"validate", bad_poset, "--poset"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Antisymmetry"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"distance", card_a_}).code, 64);
  EXPECT_EQ(run({"distance", card_a_, card_b_, "--solver", "fast"}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"distance", card_a_, (dir_ / "missing.json").string()}).code, 3);
  const auto broken = write("broken.txt", "node a x\nnode a x\n");
  const auto parse = run({"distance", broken, card_a_});
  EXPECT_EQ(parse.code, 3);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
  const auto loose = write("loose.txt", "node a x\nnode b x\nnode c x\na b\n");
  EXPECT_EQ(run({"distance", loose, card_a_}).code, 2);
  EXPECT_EQ(run({"distance", card_a_, card_b_, "--solver", "alg2"}).code, 2);
  const auto big = write("big.json", to_json(generate_instance({InstanceKind::Wso, 14, 2, 0.3, 1})));
  EXPECT_EQ(run({"dmces", big, big, "--solver", "brute"}).code, 5);
  const auto huge_a = write("ha.json", to_json(generate_instance({InstanceKind::Wso, 40, 2, 0.3, 5})));
  const auto huge_b = write("hb.json", to_json(generate_instance({InstanceKind::Wso, 40, 2, 0.3, 6})));
  EXPECT_EQ(run({"dmces", huge_a, huge_b, "--solver", "alg1", "--time-limit", "50"}).code, 5);
  EXPECT_EQ(run({"gen", "--kind", "wso", "--nodes", "1"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, GenIsReproducible) {
  const auto a = run({"gen", "--kind", "path-closure", "--nodes", "9", "--labels", "3", "--density", "0.3", "--seed", "4"});
  const auto b = run({"gen", "--kind", "path-closure", "--nodes", "9", "--labels", "3", "--density", "0.3", "--seed", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(validate_properties(parse_graph(a.out)).per_label_path);
  const auto out = (dir_ / "g.json").string();
  EXPECT_EQ(run({"gen", "--kind", "closure", "--nodes", "5", "--seed", "7", "--out", out}).code, 0);
  EXPECT_EQ(to_json(load_graph(out)), to_json(generate_instance({InstanceKind::Closure, 5, 2, 0.4, 7})));
}

TEST_F(CliTest, Bench) {
  const auto csv = (dir_ / "bench.csv").string();
  const auto r = run({"bench", "--kind", "closure", "--sizes", "5,6", "--trials", "3", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = read_file(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "solver,n_nodes,n_edges,value,elapsed_ms,agree,status");
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n' ? 1 : 0;
  EXPECT_EQ(lines, 1U + 2U * 3U * 4U);
}

}  // namespace
