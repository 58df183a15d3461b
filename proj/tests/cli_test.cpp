#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "rigclique/bench.hpp"
#include "rigclique/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + RIGCLIQUE_CLI + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("rigclique_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate is reproducible and writes both files") {
  TempDir dir;
  const std::string common = " --n 200 --alpha 0.5 --p 0.2 --seed 5 --trial 3 --with-labels";
  REQUIRE(run("generate --out " + dir / "a.txt" + common).code == 0);
  REQUIRE(run("generate --out " + dir / "b.txt" + common).code == 0);
  CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));
  CHECK(slurp(dir / "a.txt.labels") == slurp(dir / "b.txt.labels"));

  const auto g = rigclique::load_edge_list(dir / "a.txt");
  const auto labels = rigclique::load_labels(dir / "a.txt.labels");
  CHECK(g.order() == 200);
  CHECK(rigclique::project_labels(labels, 200) == g);
}

TEST_CASE("solve prints the clique and its verification") {
  TempDir dir;
  {
    std::ofstream f(dir / "k6.txt");
    f << "10 15\n";
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) f << u << ' ' << v << '\n';
  }
  const auto spectral = run("solve --algo spectral --k 2 --t 6 --seed-set 0,1 --graph " + dir / "k6.txt");
  CHECK(spectral.code == 0);
  CHECK(spectral.out.find("spectral 6 0 1 2 3 4 5\n") == 0);
  CHECK(spectral.out.find("verified true") != std::string::npos);

  for (const char* algo : {"greedy", "mono", "exact"}) {
    const auto r = run(std::string("solve --algo ") + algo + " --graph " + dir / "k6.txt");
    CHECK(r.code == 0);
    CHECK(r.out.find(std::string(algo) + " 6 0 1 2 3 4 5\n") == 0);
  }
  const auto bt = run("solve --algo bt06 --k 2 --seed-set 0,1 --graph " + dir / "k6.txt");
  CHECK(bt.out.find("bt06 6 0 1 2 3 4 5\n") == 0);

  const auto dump = run("solve --algo spectral --k 2 --t 6 --seed-set 0,1 --dump-spectrum --graph " + dir / "k6.txt");
  CHECK(dump.out.find("lambda1") != std::string::npos);

  CHECK(run("solve --algo spectral --k 2 --t 6 --seed-set 0,7 --graph " + dir / "k6.txt").code == 2);
  CHECK(run("solve --algo nope --graph " + dir / "k6.txt").code != 0);
  CHECK(run("solve --algo greedy --graph " + dir / "missing.txt").code != 0);
}

TEST_CASE("solve seeds from a label file") {
  TempDir dir;
  REQUIRE(run("generate --out " + dir / "g.txt" + " --n 300 --alpha 0.3333333 --p 0.2 --seed 1 --with-labels").code == 0);
  const auto r = run("solve --algo spectral --k 3 --graph " + dir / "g.txt" + " --labels " + dir / "g.txt.labels");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("spectral ", 0) == 0);
  CHECK(r.out.find("verified true") != std::string::npos);
}

TEST_CASE("bench writes CSV and a plot script") {
  TempDir dir;
  const auto r = run("bench --alpha 0.5 --n 100 --k 2 --p-start 0.2 --p-end 0.3 --p-step 0.1 --trials 3"
                     " --algos spectral,greedy --seed 4 --quiet --out " + dir / "res");
  REQUIRE(r.code == 0);
  const std::string csv = slurp(dir / "res/curves.csv");
  CHECK(csv.rfind(std::string(rigclique::kCsvHeader), 0) == 0);
  std::istringstream in(csv);
  CHECK(rigclique::read_csv(in).size() == 4);
  CHECK(slurp(dir / "res/curves.gp").find("curves.csv") != std::string::npos);

  {
    std::ofstream cfg(dir / "cfg.json");
    cfg << R"({"alpha": 0.5, "n": 100, "k": 2, "p_grid": [0.2, 0.3], "trials": 3, "algos": ["spectral", "greedy"], "seed": 4})";
  }
  REQUIRE(run("bench --quiet --config " + dir / "cfg.json" + " --out " + dir / "res2").code == 0);
  CHECK(slurp(dir / "res2/curves.csv") == csv);

  // explicit flags override the file
  REQUIRE(run("bench --quiet --trials 2 --algos greedy --config " + dir / "cfg.json" + " --out " + dir / "res3").code == 0);
  std::istringstream in3(slurp(dir / "res3/curves.csv"));
  const auto t3 = rigclique::read_csv(in3);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].trials == 2);
  CHECK(t3[0].n == 100);
  CHECK(t3[0].algorithm == rigclique::Algorithm::Greedy);

  CHECK(run("bench --p-start 0.3 --p-end 0.2 --out " + dir / "bad").code == 2);
}
