#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fairdsg/report.hpp"

namespace fs = std::filesystem;

namespace {

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("fairdsg_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" + std::string(FAIRDSG_CLI) + "\" " + args + " 2>" +
                          (workdir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("run is byte-identical across repeats and job counts") {
    write(path("g.el"), "6 3 3\nRBRBRB\n0 1 1\n0 2 1\n1 2 1\n1 3 1\n2 3 1\n3 4 1\n4 5 1\n2 5 1\n");
    REQUIRE(run("run --algorithm fps --input " + path("g.el") + " --seed 1 --out " + path("a.csv")) == 0);
    REQUIRE(run("run --algorithm fps --input " + path("g.el") + " --seed 1 --out " + path("b.csv")) == 0);
    CHECK(slurp(path("a.csv")) == slurp(path("b.csv")));

    fs::create_directories(path("many"));
    for (int i = 0; i < 5; ++i) fs::copy_file(path("g.el"), path("many/i" + std::to_string(i) + ".el"), fs::copy_options::overwrite_existing);
    REQUIRE(run("run --input " + path("many") + " --jobs 1 --out " + path("j1.csv")) == 0);
    REQUIRE(run("run --input " + path("many") + " --jobs 3 --out " + path("j3.csv")) == 0);
    CHECK(slurp(path("j1.csv")) == slurp(path("j3.csv")));
  }

  TEST_CASE("all-red graph gives NoFeasiblePrefix") {
    write(path("red.el"), "3 3 0\nRRR\n0 1 1\n1 2 1\n0 2 1\n");
    REQUIRE(run("run --algorithm ss --delta 0 --input " + path("red.el") + " --out " + path("red.csv")) == 0);
    std::ifstream in(path("red.csv"));
    const auto rows = fairdsg::read_runs_csv(in);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == fairdsg::Status::NoFeasiblePrefix);
    CHECK(rows[0].normalized_density == 0.0);
  }

  TEST_CASE("exit codes") {
    CHECK(run("run --input " + path("missing.el")) == 2);
    CHECK(run("run --input " + path("g.el") + " --algorithm nope") == 1);
    CHECK(run("run --input " + path("g.el") + " --tol abc") == 1);
    CHECK(run("frobnicate") == 1);
    write(path("broken.el"), "3 1 1\nRBB\n");
    CHECK(run("run --input " + path("broken.el")) == 2);
    CHECK(run("--help > /dev/null") == 0);
  }

  TEST_CASE("seed falls back to the environment") {
    REQUIRE(run("run --input " + path("g.el") + " --out " + path("env.csv"), "FAIRDSG_SEED=5") == 0);
    REQUIRE(run("run --input " + path("g.el") + " --seed 5 --out " + path("flag.csv")) == 0);
    CHECK(slurp(path("env.csv")) == slurp(path("flag.csv")));
    CHECK(slurp(path("env.csv")).find("# seed: 5\n") != std::string::npos);
  }

  TEST_CASE("polbooks ingestion, pareto and summary") {
    REQUIRE(run("ingest-polbooks --input " + std::string(FAIRDSG_TEST_DATA) + "/tiny_books.gml --out " + path("books.el")) == 0);
    const std::string el = slurp(path("books.el"));
    CHECK(el.find("4 2 2\nRBRB\n") != std::string::npos);

    REQUIRE(run("pareto --input " + path("books.el") + " --out " + path("pareto.csv")) == 0);
    CHECK(slurp(path("pareto.csv")).find("instance,algorithm,density,balance,size\n") != std::string::npos);

    REQUIRE(run("run --input " + path("books.el") + " --out " + path("books.csv")) == 0);
    REQUIRE(run("summary --input " + path("books.csv") + " --out " + path("summary.csv")) == 0);
    CHECK(slurp(path("summary.csv")).find("algorithm,runs,unfair,percent_unfair,q1,median,q3\nSS,1,") != std::string::npos);
  }

  TEST_CASE("amazon ingestion writes one file per pair") {
    write(path("meta.jsonl"),
          "{\"asin\":\"a\",\"main_cat\":\"Books\",\"also_buy\":[\"b\"]}\n"
          "not json\n"
          "{\"asin\":\"b\",\"main_cat\":\"Music\"}\n"
          "{\"asin\":\"c\",\"main_cat\":\"Toys\",\"also_buy\":[\"a\"]}\n");
    REQUIRE(run("ingest-amazon --input " + path("meta.jsonl") + " --min-nodes 2 --out " + path("pairs")) == 0);
    const std::string index = slurp(path("pairs/pairs.csv"));
    CHECK(index.find("pair_00000.el,Books|Music,2,1,1,1\n") != std::string::npos);
    CHECK(index.find("pair_00001.el,Books|Toys,2,1,1,1\n") != std::string::npos);
    CHECK(index.find("malformed_lines: 1") != std::string::npos);
  }

  TEST_CASE("planted report has one row per seed") {
    REQUIRE(run("planted --n 120 --m 20 --d 8 --eps 0.2 --p-bg 0.01 --seeds 3 --seed 4 --out " + path("planted.csv")) == 0);
    std::istringstream in(slurp(path("planted.csv")));
    std::size_t data = 0;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line[0] != '#' && line.rfind("seed,", 0) != 0) ++data;
    }
    CHECK(data == 3);
  }
}
