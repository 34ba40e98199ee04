#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tempiso/bench.hpp"
#include "tempiso/cli.hpp"

using namespace tempiso;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tempiso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tempiso_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_F(CliTest, MatchChain) {
  const auto g = write("chain.txt", "1 2 0\n2 3 10\n");
  const auto q = write("p.edges", "a b\nb c\n");
  const auto stats = (dir_ / "stats.json").string();
  auto r = run({"match", "--graph", g, "--query", q, "--d", "10", "--strategy", "titoto", "--stats", stats});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"query\":\"p\",\"mapping\":{\"a\":\"1\",\"b\":\"2\",\"c\":\"3\"},"
                   "\"interactions\":[[\"1\",\"2\",0],[\"2\",\"3\",10]]}\n");
  const auto j = nlohmann::json::parse(read(stats));
  EXPECT_EQ(j["embeddings"], 1);
  EXPECT_EQ(j["spurious"], 0);

  r = run({"match", "--graph", g, "--query", q, "--d", "0", "--strategy", "titoto"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, StrategiesProduceIdenticalBytes) {
  std::mt19937_64 rng(12);
  std::string text;
  for (int i = 0; i < 30; ++i) {
    const int s = static_cast<int>(rng() % 12);
    int t = static_cast<int>(rng() % 11);
    if (t >= s) ++t;
    text += std::to_string(s) + " " + std::to_string(t) + " " + std::to_string(rng() % 100) + "\n";
  }
  const auto g = write("random.txt", text);
  for (const char* q : {"path_3", "feed_forward", "q06", "cycle_3"}) {
    for (const char* d : {"5", "30", "inf"}) {
      const auto toti = run({"match", "--graph", g, "--query", q, "--d", d, "--strategy", "toti"});
      const auto titoto = run({"match", "--graph", g, "--query", q, "--d", d, "--strategy", "titoto"});
      const auto tbt = run({"match", "--graph", g, "--query", q, "--d", d, "--strategy", "tbt"});
      ASSERT_EQ(toti.code, 0);
      EXPECT_EQ(toti.out, titoto.out) << q << " d=" << d;
      EXPECT_EQ(toti.out, tbt.out) << q << " d=" << d;
    }
  }
}

TEST_F(CliTest, ExitCodes) {
  const auto g = write("g.txt", "1 2 0\n2 3 1\n");
  EXPECT_EQ(run({"match", "--graph", g}).code, kExitBadArguments);
  EXPECT_EQ(run({"match", "--graph", g, "--query", "path_3", "--strategy", "quick"}).code, kExitBadArguments);
  EXPECT_EQ(run({"match", "--graph", g, "--query", "path_3", "--d", "soon"}).code, kExitBadArguments);
  EXPECT_EQ(run({"match", "--graph", g, "--query", "no_such_query"}).code, kExitBadArguments);
  EXPECT_EQ(run({"frobnicate"}).code, kExitBadArguments);
  EXPECT_EQ(run({}).code, kExitBadArguments);

  const auto bad = write("bad.txt", "1 2 0\n3 3 4\n");
  const auto r = run({"match", "--graph", bad, "--query", "path_3"});
  EXPECT_EQ(r.code, kExitParseFailure);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"match", "--graph", (dir_ / "missing.txt").string(), "--query", "path_3"}).code,
            kExitParseFailure);

  const auto chain = write("chain.txt", "a b 0\nb c 100\nc d 200\n");
  EXPECT_EQ(run({"match", "--graph", chain, "--query", "path_3", "--d", "1", "--strategy", "tbt", "--max-fragments",
                 "1"})
                .code,
            kExitResourceLimit);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, BenchWritesOneRowPerCell) {
  std::string text;
  for (int i = 0; i < 40; ++i) {
    text += std::to_string(i % 13) + " " + std::to_string((i * 7 + 3) % 13 == i % 13 ? (i + 1) % 13 : (i * 7 + 3) % 13) +
            " " + std::to_string(i * 37 % 500) + "\n";
  }
  const auto g = write("net.txt", text);
  const auto out = (dir_ / "out").string();
  const auto r = run({"bench", "--graph", g, "--queries", "q02,q04,q05", "--schedule", "10,100,inf", "--strategies",
                      "toti,titoto,tbt", "--repeats", "1", "--out-dir", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string bench = read(fs::path(out) / "bench.csv");
  EXPECT_EQ(lines(bench), 1u + 3 * 3 * 3);
  std::set<std::string> cells;
  std::istringstream in(bench);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "network,query,d_seconds,strategy,wall_time_s,embeddings,candidates,spurious,states,timeout");
  while (std::getline(in, line)) {
    std::stringstream fields(line);
    std::string network, query, d, strategy;
    std::getline(fields, network, ',');
    std::getline(fields, query, ',');
    std::getline(fields, d, ',');
    std::getline(fields, strategy, ',');
    EXPECT_EQ(network, "net");
    EXPECT_TRUE(cells.insert(query + "/" + d + "/" + strategy).second) << line;
  }
  EXPECT_EQ(cells.size(), 27u);
  const std::string speedup = read(fs::path(out) / "speedup.csv");
  EXPECT_EQ(lines(speedup), 1u + 3 * 3);

  const auto p = run({"predict", "--bench", (fs::path(out) / "bench.csv").string()});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "network,query,d_seconds,speedup,spurious,diameter,total_size");
  EXPECT_NE(p.out.find("# spearman"), std::string::npos);
}

TEST_F(CliTest, PredictReportsIncompleteCells) {
  const auto bench = write("bench.csv",
                           "network,query,d_seconds,strategy,wall_time_s,embeddings,candidates,spurious,states,timeout\n"
                           "n,q04,5,toti,0.5,0,3,3,9,0\n");
  const auto r = run({"predict", "--bench", bench});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("n/q04/5: missing titoto"), std::string::npos);
}

TEST_F(CliTest, AnalyzeD) {
  std::string text;
  for (int i = 0; i < 30; ++i) {
    text += "a" + std::to_string(i) + " b" + std::to_string(i) + " 0\n";
    text += "b" + std::to_string(i) + " c" + std::to_string(i) + " " + std::to_string(i < 25 ? i % 5 : 1000 * i) + "\n";
  }
  const auto g = write("d.txt", text);
  auto r = run({"analyze-d", "--graph", g});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "threshold,cumulative_count");
  EXPECT_NE(r.out.find("\n0,5\n"), std::string::npos);
  EXPECT_NE(r.out.find("# d_max=4 schedule=0,1,1,2,2\n"), std::string::npos) << r.out;

  r = run({"analyze-d", "--graph", g, "--d-max", "100d"});
  EXPECT_NE(r.out.find("# d_max=8640000 schedule=864000,1728000,2592000,3456000,4320000\n"), std::string::npos);

  const auto tiny = write("tiny.txt", "a b 0\n");
  r = run({"analyze-d", "--graph", tiny});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("--d-max"), std::string::npos);
}

TEST_F(CliTest, CatalogListAndExport) {
  auto r = run({"catalog", "list"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 31u);
  EXPECT_NE(r.out.find("q01\tfan_out_fan_in\t6\t6\t3\n"), std::string::npos);

  const auto out = (dir_ / "queries").string();
  r = run({"catalog", "export", "--dir", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out)) files += e.path().extension() == ".edges" ? 1 : 0;
  EXPECT_EQ(files, 30u);
  const std::string q04 = read(fs::path(out) / "q04.edges");
  EXPECT_EQ(q04.rfind("# cycle_3", 0), 0u);

  // Exported files work as a query directory.
  const auto g = write("g.txt", "1 2 0\n2 3 1\n");
  const auto m = run({"match", "--graph", g, "--query", (fs::path(out) / "q05.edges").string(), "--d", "1"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(lines(m.out), 1u);
}

TEST_F(CliTest, SliceAndGenerate) {
  const auto g = write("g.txt", "a b 5\nb c 10\nc d 15\n");
  auto r = run({"slice", "--graph", g, "--start", "5", "--end", "15"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "a b 5\nb c 10\n");
  r = run({"slice", "--graph", g, "--start", "15", "--end", "5"});
  EXPECT_EQ(r.code, kExitBadArguments);
  r = run({"slice", "--graph", g, "--cap", "1"});
  EXPECT_EQ(r.out, "a b 5\n");

  r = run({"generate", "--kind", "chain", "--nodes", "4", "--span", "10"});
  EXPECT_EQ(r.out, "0 1 0\n1 2 10\n2 3 20\n");
  r = run({"generate", "--kind", "flow", "--nodes", "50", "--interactions", "100", "--reach", "5"});
  EXPECT_EQ(lines(r.out), 100u);
}
