#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "ttk/metrics.hpp"
#include "ttk/model_file.hpp"
#include "ttk/stream.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ttk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string("\"") + TTK_CLI_PATH + "\" " + args + " 2>\"" + (dir_ / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  fs::path path(const std::string& name) const { return dir_ / name; }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  std::string err() const { return slurp(dir_ / "stderr.txt"); }

  fs::path dir_;
};

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(run("gen --seed 7 --events 100 --out " + path("a.tsv").string()), 0);
  ASSERT_EQ(run("gen --seed 7 --events 100 --out " + path("b.tsv").string()), 0);
  EXPECT_EQ(slurp(path("a.tsv")), slurp(path("b.tsv")));
  std::istringstream in(slurp(path("a.tsv")));
  EXPECT_EQ(ttk::read_tsv(in).size(), 100u);
}

TEST_F(Cli, GenPositiveFraction) {
  ASSERT_EQ(run("gen --events 2000 --positive-frac 0 --out " + path("zero.tsv").string()), 0);
  std::istringstream zero(slurp(path("zero.tsv")));
  for (const auto& e : ttk::read_tsv(zero)) EXPECT_EQ(e.truth, 0);

  ASSERT_EQ(run("gen --events 50000 --positive-frac 0.34 --out " + path("mix.tsv").string()), 0);
  std::istringstream mix(slurp(path("mix.tsv")));
  std::size_t pos = 0;
  for (const auto& e : ttk::read_tsv(mix)) pos += static_cast<std::size_t>(e.truth);
  EXPECT_GE(pos, 16'500u);
  EXPECT_LE(pos, 17'500u);
}

TEST_F(Cli, LearnWritesTrainingPerfectModel) {
  write("p.txt", "foo\nfood\n");
  write("n.txt", "bar\n");
  ASSERT_EQ(run("learn --positives " + path("p.txt").string() + " --negatives " + path("n.txt").string() +
                " --out " + path("m.txt").string()),
            0);
  const auto patterns = ttk::read_model_file(path("m.txt"));
  ASSERT_EQ(patterns.size(), 1u);
  EXPECT_EQ(ttk::render_pattern(patterns[0]), "f");
  EXPECT_NE(err().find("training tpr: 1.000000 fpr: 0.000000"), std::string::npos) << err();
}

TEST_F(Cli, LearnWithoutNegatives) {
  write("p.txt", "alpha\nbeta\ngamma\n");
  write("n.txt", "");
  ASSERT_EQ(run("learn --positives " + path("p.txt").string() + " --negatives " + path("n.txt").string() +
                " --out " + path("m.txt").string()),
            0);
  EXPECT_LE(ttk::read_model_file(path("m.txt")).size(), 3u);
}

TEST_F(Cli, LearnOverlapExitsTwo) {
  write("p.txt", "foo\nbar\n");
  write("n.txt", "bar\nbaz\n");
  EXPECT_EQ(run("learn --positives " + path("p.txt").string() + " --negatives " + path("n.txt").string()), 2);
  EXPECT_NE(err().find("bar"), std::string::npos);
}

TEST_F(Cli, TrackWindowArithmetic) {
  ASSERT_EQ(run("track --mode naive --window-size 10000 --events 25000 --out " + path("m.csv").string()), 0);
  std::istringstream in(slurp(path("m.csv")));
  const auto records = ttk::read_report(in);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].fpr, 0.0);
}

TEST_F(Cli, TrackInsufficientStreamExitsThree) {
  EXPECT_EQ(run("track --window-size 1000 --events 1500"), 3);
}

TEST_F(Cli, TrackFromFileWithSnapshots) {
  ASSERT_EQ(run("gen --seed 4 --events 4000 --drift-rate 0.2 --out " + path("e.tsv").string()), 0);
  ASSERT_EQ(run("track --mode adaptive --window-size 1000 --in " + path("e.tsv").string() + " --snapshots " +
                path("snap").string() + " --out " + path("m.csv").string()),
            0);
  EXPECT_TRUE(fs::exists(path("snap") / "model_gen0.txt"));
  std::istringstream in(slurp(path("m.csv")));
  EXPECT_EQ(ttk::read_report(in).size(), 3u);
  EXPECT_NE(err().find("tpr decrease"), std::string::npos);
}

TEST_F(Cli, TrackWithBlacklistLabels) {
  write("e.tsv", "0\tads.track.com\t0\n1\tnews.org\t0\n2\tx.track.com\t0\n3\tblog.net\t0\n");
  write("bl.txt", "ads\ttrack.com\nnews\tnews.org\n");
  ASSERT_EQ(run("track --mode naive --window-size 2 --in " + path("e.tsv").string() + " --blacklist " +
                path("bl.txt").string() + " --positive-categories ads --out " + path("m.csv").string()),
            0);
  std::istringstream in(slurp(path("m.csv")));
  const auto records = ttk::read_report(in);
  ASSERT_EQ(records.size(), 1u);
  // x.track.com is a positive under the blacklist but unseen by the naive list.
  EXPECT_EQ(records[0].counts, (ttk::Counts{0, 0, 1, 1}));
}

TEST_F(Cli, BenchRows) {
  ASSERT_EQ(run("bench --events 500 --patterns 0,10,100 --reps 1 --out " + path("b.csv").string()), 0);
  std::istringstream in(slurp(path("b.csv")));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "k,naive_ns_per_event,combined_ns_per_event");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3u);
}

TEST_F(Cli, BadUsageExitsOne) {
  EXPECT_EQ(run("track --mode sideways"), 1);
  EXPECT_EQ(run(""), 1);
}

}  // namespace
