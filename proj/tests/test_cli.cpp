#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#ifndef OVERLAPKIT_CLI_PATH
#error "OVERLAPKIT_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd =
      env_prefix + std::string(OVERLAPKIT_CLI_PATH) + " " + args +
      " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

double first_number(const std::string& text) {
  return std::stod(text);
}

fs::path temp_file(const char* name, const std::string& contents) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << contents;
  return p;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// x,y,value row whose coordinates match exactly as printed.
const std::string* find_row(const std::vector<std::string>& rows,
                            const std::string& prefix) {
  for (const std::string& r : rows) {
    if (r.rfind(prefix, 0) == 0) return &r;
  }
  return nullptr;
}

const char* kBadPairSpec = R"({
  "kind": "overlap-additive", "a": 1.0,
  "theta": {"family": "log-offset", "scale": 1.0, "floor": 1.5},
  "vartheta": {"family": "plateau-exp", "width": 0.5, "rate": 1.0}
})";

}  // namespace

TEST_CASE("eval prints operator values") {
  RunResult r = run_cli("eval --catalog product-pair --a 1 --x 0.5 --y 0.4");
  CHECK(r.exit_code == 0);
  CHECK(first_number(r.out) == doctest::Approx(0.2).epsilon(1e-12));

  r = run_cli("eval --catalog product-pair --a 1 --x 1 --y 1");
  CHECK(r.exit_code == 0);
  CHECK(first_number(r.out) == doctest::Approx(1.0).epsilon(1e-12));

  r = run_cli("eval --catalog hamacher-squared --a 1 --x 0.5 --y 0.5");
  CHECK(r.exit_code == 0);
  CHECK(first_number(r.out) == doctest::Approx(0.04).epsilon(1e-9));
}

TEST_CASE("eval reads point files and rejects out-of-range input") {
  fs::path pts = temp_file("overlapkit_cli_pts.txt", "0.5 0.4\n0.9 0.9\n");
  RunResult r = run_cli("eval --catalog product-pair --a 1 --points " +
                        pts.string());
  CHECK(r.exit_code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[0]) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::stod(rows[1]) == doctest::Approx(0.81).epsilon(1e-12));
  fs::remove(pts);

  r = run_cli("eval --catalog product-pair --a 1 --x 1.5 --y 0.5");
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify exit codes reflect the suite verdict") {
  CHECK(run_cli("verify --catalog product-pair --a 1 --as overlap --grid-n 51")
            .exit_code == 0);
  CHECK(run_cli("verify --catalog product-pair --a 1 --as tnorm --grid-n 51")
            .exit_code == 0);
  CHECK(run_cli("verify --catalog nonassoc-log --a 1 --as tnorm --grid-n 51")
            .exit_code == 1);
  CHECK(run_cli("verify --catalog probabilistic-sum --as grouping --grid-n 51")
            .exit_code == 0);
}

TEST_CASE("verify human output names the failing axiom") {
  RunResult r = run_cli(
      "verify --catalog lukasiewicz --as overlap --grid-n 51 --output human");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("O2: fail") != std::string::npos);
  CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("unknown catalog names exit 2, malformed input exits 3") {
  CHECK(run_cli("eval --catalog nosuch --a 1 --x 0.5 --y 0.5").exit_code == 2);

  fs::path broken = temp_file("overlapkit_cli_broken.json", "{\"kind\":");
  CHECK(run_cli("verify --spec " + broken.string()).exit_code == 3);
  fs::remove(broken);

  // Plain operators carry no generator pair to classify or decompose.
  CHECK(run_cli("classify --catalog product --grid-n 26").exit_code == 3);
  CHECK(run_cli("decompose --catalog minimum --grid-n 26").exit_code == 3);
}

TEST_CASE("pairs outside the analysis hypothesis exit 4") {
  fs::path bad = temp_file("overlapkit_cli_bad_pair.json", kBadPairSpec);
  CHECK(run_cli("decompose --spec " + bad.string() + " --grid-n 26")
            .exit_code == 4);
  CHECK(run_cli("classify --spec " + bad.string() + " --grid-n 26")
            .exit_code == 4);
  fs::remove(bad);
}

TEST_CASE("export-grid writes exact corner rows") {
  RunResult r = run_cli("export-grid --catalog product-pair --a 1 --grid-n 3");
  CHECK(r.exit_code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "x,y,value");
  CHECK(find_row(rows, "1,1,1") != nullptr);
  CHECK(find_row(rows, "0,1,0") != nullptr);

  r = run_cli("export-grid --catalog dual-product-pair --a 1 --grid-n 3");
  CHECK(r.exit_code == 0);
  rows = lines_of(r.out);
  CHECK(find_row(rows, "0,0,0") != nullptr);
  CHECK(find_row(rows, "1,0,1") != nullptr);
}

TEST_CASE("decompose exports generator CSVs") {
  fs::path dir = fs::temp_directory_path() / "overlapkit_cli_csv";
  fs::create_directories(dir);
  RunResult r = run_cli("decompose --catalog hamacher-squared --a 1 "
                        "--grid-n 26 --samples 5 --csv-dir " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"csv_dir\"") != std::string::npos);

  std::ifstream f(dir / "F.csv");
  REQUIRE(f.good());
  std::string header, row;
  std::getline(f, header);
  CHECK(header == "x,value");
  double f_half = 0.0;
  bool found = false;
  while (std::getline(f, row)) {
    auto comma = row.find(',');
    if (std::stod(row.substr(0, comma)) == 0.5) {
      f_half = std::stod(row.substr(comma + 1));
      found = true;
    }
  }
  REQUIRE(found);
  CHECK(f_half == doctest::Approx(0.25).epsilon(1e-9));

  // Strict pair: the multiplicative pieces exist alongside the inner grid.
  CHECK(fs::exists(dir / "phi.csv"));
  CHECK(fs::exists(dir / "H.csv"));
  std::ifstream inner(dir / "inner.csv");
  REQUIRE(inner.good());
  std::getline(inner, header);
  CHECK(header == "x,y,value");
  fs::remove_all(dir);
}

TEST_CASE("report JSON is byte-identical across runs and thread counts") {
  const std::string cmd =
      "classify --catalog dual-product-pair --a 1 --grid-n 26 --seed 7";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  RunResult c = run_cli(cmd, "OVERLAPKIT_THREADS=4 ");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("\"seed\": 7") != std::string::npos);

  RunResult v1 = run_cli("verify --catalog nonassoc-log --a 1 --as overlap "
                         "--grid-n 101 --seed 3");
  RunResult v2 = run_cli("verify --catalog nonassoc-log --a 1 --as overlap "
                         "--grid-n 101 --seed 3");
  CHECK(v1.exit_code == 0);
  CHECK(v1.out == v2.out);
}
