#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "filtdom/cli.hpp"
#include "filtdom/expand.hpp"
#include "filtdom/io.hpp"
#include "fixtures.hpp"

using namespace filtdom;
using namespace filtdom::testing;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  const char* dir = std::getenv("FILTDOM_TMP");
  fs::path p = fs::path(dir ? dir : fs::temp_directory_path().string()) / "cli_scratch";
  fs::create_directories(p);
  return p;
}

std::string tmp(const std::string& name) { return (tmp_dir() / name).string(); }

std::string save(const std::string& name, const BifilteredGraph& g) {
  const auto path = tmp(name);
  std::ofstream out(path);
  write_edge_list(out, g);
  return path;
}

std::string save_text(const std::string& name, const std::string& text) {
  const auto path = tmp(name);
  std::ofstream(path) << text;
  return path;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Data rows of a CSV report, split on commas.
std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

BifilteredGraph load(const std::string& path) {
  std::ifstream in(path);
  return read_edge_list(in);
}

}  // namespace

TEST_CASE("collapse of a single edge keeps it") {
  const std::vector<Edge> edges = {{0, 1, {0, 0}}};
  const auto path = save("single_edge.txt", graph_from_edges(2, edges));
  const auto r = run({"collapse", "--edges", path});
  REQUIRE(r.code == cli::kOk);
  const auto table = rows(r.out);
  REQUIRE(table.size() == 2);
  CHECK(table.back()[5] == "total");
  CHECK(table.back()[6] == "1");
  CHECK(table.back()[7] == "1");
}

TEST_CASE("collapse of the six-vertex fixture removes (a, b) in full mode") {
  const auto path = save("fix6.txt", fix6());
  const auto output = tmp("fix6_reduced.txt");
  for (const char* order : {"lex", "colex"}) {
    const auto r = run({"collapse", "--edges", path, "--mode", "full", "--order", order,
                        "--output", output});
    REQUIRE(r.code == cli::kOk);
    const auto reduced = load(output);
    CHECK_FALSE(reduced.has_edge(A, B));
    CHECK_FALSE(fs::exists(output + ".tmp"));
  }
  // Reverse orders look at (w, x) first; removing it leaves (a, b) without a
  // dominator at (2, 2), so (a, b) survives its turn.
  REQUIRE(run({"collapse", "--edges", path, "--mode", "full", "--order", "revlex", "--output",
               output})
              .code == cli::kOk);
  const auto reduced = load(output);
  CHECK_FALSE(reduced.has_edge(W, X));
  CHECK(reduced.has_edge(A, B));
}

TEST_CASE("report header carries version, replay line and seed") {
  const auto r = run({"collapse", "--dataset", "circle", "--n", "30", "--seed", "5", "--order",
                      "random", "--grade-mode", "random"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("# filtdom ") == 0);
  CHECK(r.out.find("# replay: filtdom collapse --dataset circle --n 30 --grade-mode random "
                   "--mode strong --order random --iterations 1 --seed 5") != std::string::npos);
  CHECK(r.out.find("# seed: 5") != std::string::npos);
  CHECK(r.out.find("# shuffle: ") != std::string::npos);
  CHECK(r.out.find("input,grade_mode,mode,order,seed,iteration,edges_before,edges_after,"
                   "removed_pct,time_ms\n") != std::string::npos);
}

TEST_CASE("replaying a configuration reproduces the numbers") {
  const std::vector<std::string> args = {"collapse",  "--dataset",    "uniform", "--n",
                                         "60",        "--seed",       "11",      "--order",
                                         "random",    "--iterations", "3",       "--grade-mode",
                                         "random"};
  auto a = rows(run(args).out);
  auto b = rows(run(args).out);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].pop_back();  // timing
    b[i].pop_back();
    CHECK(a[i] == b[i]);
  }
}

TEST_CASE("bench-orders emits one row per order") {
  const auto path = save("fix6_bench.txt", fix6());
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"bench-orders", "--edges", path},
        std::vector<std::string>{"bench-orders", "--dataset", "torus", "--n", "40", "--seed", "2"}}) {
    const auto r = run(args);
    REQUIRE(r.code == cli::kOk);
    const auto table = rows(r.out);
    REQUIRE(table.size() == 5);
    const char* names[] = {"lex", "colex", "revlex", "revcolex", "random"};
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(table[i][3] == names[i]);
      const double pct = std::stod(table[i][8]);
      CHECK(pct >= 0);
      CHECK(pct <= 100);
    }
  }
}

TEST_CASE("markdown reports") {
  const auto r = run({"bench-orders", "--dataset", "circle", "--n", "20", "--format", "markdown"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("| input | grade_mode |") != std::string::npos);
  CHECK(r.out.find("| --- |") != std::string::npos);
  CHECK(r.out.find("<!-- filtdom ") == 0);
}

TEST_CASE("expand writes scc2020") {
  const auto path = save("k3.txt", triangle({0, 0}, {1, 0}, {0, 1}));
  const auto output = tmp("k3.scc");
  const auto r = run({"expand", "--edges", path, "--max-dim", "2", "--format", "scc2020",
                      "--output", output, "--no-collapse"});
  REQUIRE(r.code == cli::kOk);
  std::ifstream in(output);
  const auto scc = read_scc2020(in);
  CHECK(scc.blocks[0].size() == 1);
  CHECK(scc.blocks[1].size() == 3);

  const auto table = rows(r.out);
  REQUIRE(table.size() == 1);
  CHECK(table[0][5] == "no");
  CHECK(table[0][8] == "1");
  CHECK(table[0][9] == "1");
}

TEST_CASE("expand without collapse exports the raw clique counts") {
  const auto output = tmp("raw.scc");
  const auto r = run({"expand", "--dataset", "uniform", "--n", "30", "--seed", "3", "--output",
                      output, "--no-collapse"});
  REQUIRE(r.code == cli::kOk);
  const auto row = rows(r.out).at(0);
  CHECK(row[6] == "435");
  CHECK(row[7] == "435");
  CHECK(row[8] == "4060");
  CHECK(row[9] == "4060");
}

TEST_CASE("expand with collapse shrinks the complex") {
  const auto output = tmp("collapsed.scc");
  const auto r = run({"expand", "--dataset", "uniform", "--n", "60", "--seed", "3", "--output",
                      output});
  REQUIRE(r.code == cli::kOk);
  const auto row = rows(r.out).at(0);
  CHECK(std::stoul(row[7]) < std::stoul(row[6]));
  CHECK(std::stoul(row[9]) < std::stoul(row[8]));
  std::ifstream in(output);
  CHECK(read_scc2020(in).blocks[0].size() == std::stoul(row[9]));
}

TEST_CASE("expand to dimension one") {
  const auto output = tmp("k3_dim1.scc");
  const auto path = save("k3_dim1.txt", triangle());
  REQUIRE(run({"expand", "--edges", path, "--max-dim", "1", "--no-collapse", "--output", output})
              .code == cli::kOk);
  std::ifstream in(output);
  const auto scc = read_scc2020(in);
  CHECK(scc.blocks[0].empty());
  CHECK(scc.blocks[1].size() == 3);
  CHECK(run({"expand", "--edges", path, "--max-dim", "3", "--output", output}).code == cli::kUsage);
}

TEST_CASE("expand budget") {
  const auto r = run({"expand", "--dataset", "uniform", "--n", "40", "--no-collapse",
                      "--max-simplices", "100", "--output", tmp("over.scc")});
  CHECK(r.code == cli::kBudgetExceeded);
  CHECK_FALSE(fs::exists(tmp("over.scc")));
}

TEST_CASE("verify passes on seeded corpora") {
  auto r = run({"verify", "--oracle", "domination", "--instances", "40", "--seed", "9"});
  CHECK(r.code == cli::kOk);
  CHECK(rows(r.out).at(0)[5] == "0");
  r = run({"verify", "--oracle", "homology", "--instances", "10", "--seed", "9"});
  CHECK(r.code == cli::kOk);
}

TEST_CASE("verify flags a corrupted collapse") {
  const auto graph = save("c4.txt", four_cycle());
  auto broken = four_cycle();
  broken.remove_edge(0, 1);
  const auto reduced = save("c4_broken.txt", broken);
  const auto cx = tmp("c4_counterexample.txt");
  fs::remove(cx);
  const auto r = run({"verify", "--edges", graph, "--reduced", reduced, "--output", cx});
  CHECK(r.code == cli::kCheckFailed);
  REQUIRE(fs::exists(cx));
  CHECK(load(cx) == four_cycle());

  auto fine = four_cycle();
  CHECK(run({"verify", "--edges", graph, "--reduced", save("c4_same.txt", fine)}).code ==
        cli::kOk);
}

TEST_CASE("verify a single graph") {
  const auto path = save("fix6_verify.txt", fix6());
  CHECK(run({"verify", "--edges", path}).code == cli::kOk);
  CHECK(run({"verify", "--edges", path, "--oracle", "homology"}).code == cli::kOk);
}

TEST_CASE("points and distance matrix inputs agree") {
  const auto points = tmp("pts.txt");
  REQUIRE(run({"generate", "--dataset", "circle", "--n", "12", "--seed", "4", "--output", points})
              .code == cli::kOk);

  std::ifstream pin(points);
  const auto cloud = read_points(pin);
  std::ostringstream matrix;
  for (Eigen::Index i = 0; i < cloud.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      matrix << (j ? "," : "") << format_double((cloud.row(i) - cloud.row(j)).norm());
    }
    matrix << '\n';
  }
  const auto distances = save_text("dist.txt", matrix.str());

  const auto from_points = tmp("from_points.txt");
  const auto from_dist = tmp("from_dist.txt");
  const auto from_dataset = tmp("from_dataset.txt");
  REQUIRE(run({"generate", "--points", points, "--emit", "edges", "--output", from_points}).code ==
          0);
  REQUIRE(run({"generate", "--distances", distances, "--emit", "edges", "--output", from_dist})
              .code == 0);
  REQUIRE(run({"generate", "--dataset", "circle", "--n", "12", "--seed", "4", "--emit", "edges",
               "--output", from_dataset})
              .code == 0);
  CHECK(load(from_points) == load(from_dataset));
  const auto a = load(from_points);
  const auto b = load(from_dist);
  REQUIRE(a.num_edges() == b.num_edges());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    CHECK(a.edges()[i].grade.s == doctest::Approx(b.edges()[i].grade.s).epsilon(1e-9));
    CHECK(a.edges()[i].grade.t == doctest::Approx(b.edges()[i].grade.t).epsilon(1e-12));
  }
}

TEST_CASE("explicit densities") {
  const auto points = save_text("pts3.txt", "0 0\n1 0\n0 2\n");
  const auto dens = save_text("dens3.txt", "3\n2\n1\n");
  const auto out = tmp("dens_edges.txt");
  REQUIRE(run({"generate", "--points", points, "--densities", dens, "--emit", "edges", "--output",
               out})
              .code == cli::kOk);
  const auto g = load(out);
  CHECK(g.grade_of(0, 1) == Grade{-2, 1});
  CHECK(g.grade_of(0, 2) == Grade{-1, 2});
  CHECK(g.grade_of(1, 2).s == -1);

  const auto short_dens = save_text("dens2.txt", "3\n2\n");
  CHECK(run({"collapse", "--points", points, "--densities", short_dens}).code == cli::kInputError);
}

TEST_CASE("exit codes") {
  CHECK(run({"collapse", "--edges", tmp("does_not_exist.txt")}).code == cli::kInputError);
  CHECK(run({"collapse", "--edges", save_text("bad.txt", "2 1\n0 0 0 0\n")}).code ==
        cli::kInputError);
  CHECK(run({"collapse", "--edges", save_text("garbage.txt", "two edges\n")}).code ==
        cli::kInputError);
  CHECK(run({"collapse", "--dataset", "uniform", "--n", "10", "--order", "sideways"}).code ==
        cli::kUsage);
  CHECK(run({"collapse", "--dataset", "uniform", "--n", "10", "--mode", "weak"}).code ==
        cli::kUsage);
  CHECK(run({"collapse", "--dataset", "uniform", "--n", "10", "--iterations", "0"}).code ==
        cli::kUsage);
  CHECK(run({"collapse", "--dataset", "nope", "--n", "10"}).code == cli::kUsage);
  CHECK(run({"collapse", "--dataset", "uniform"}).code == cli::kUsage);
  CHECK(run({"collapse"}).code == cli::kUsage);
  CHECK(run({"collapse", "--dataset", "uniform", "--n", "5", "--edges", "x"}).code == cli::kUsage);
  CHECK(run({"collapse", "--edges", "x", "--densities", "y"}).code == cli::kUsage);
  CHECK(run({"expand", "--dataset", "uniform", "--n", "5"}).code == cli::kUsage);
  CHECK(run({"verify", "--reduced", "x"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"--version"}).code == cli::kOk);
}

TEST_CASE("report file is written atomically") {
  const auto report = tmp("report.csv");
  fs::remove(report);
  const auto r = run({"collapse", "--dataset", "circle", "--n", "15", "--report", report});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.empty());
  CHECK(fs::exists(report));
  CHECK_FALSE(fs::exists(report + ".tmp"));
}
