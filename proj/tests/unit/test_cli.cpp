#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nrs/cli.hpp"
#include "nrs/nrs.hpp"
#include "support.hpp"

using namespace nrs;
using namespace nrs::cli;

namespace {

const std::string kQuintic = "1 -31/16 155/128 -155/512 31/1024 -1/1024";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

test::Csv csv_of(const std::string& text) {
  std::istringstream in(text);
  return test::parse_csv(in);
}

}  // namespace

TEST_CASE("run: m=2 quintic csv round-trips the in-memory rows") {
  const auto o = call({"run", "--coeffs", kQuintic, "--m", "2", "--steps", "8", "--format", "csv"});
  CHECK(o.code == kMaxSteps);
  CHECK(o.err.find("verdict: max-steps after 8 steps") != std::string::npos);
  const auto csv = csv_of(o.out);
  CHECK(csv.header == std::vector<std::string>{"n", "J0_2", "J1_2", "J_2", "partial_sum"});
  REQUIRE(csv.rows.size() == 9);

  const auto result = run(test::quintic().cast<Float>(), 2, {.max_steps = 8});
  REQUIRE(result.rows.size() == 9);
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& row = result.rows[n];
    const auto& cells = csv.rows[n];
    REQUIRE(cells.size() == 5);
    CHECK(cells[0] == std::to_string(n));
    CHECK(cells[1] == print_scalar(row.j[0], 10));
    CHECK(cells[2] == print_scalar(row.j[1], 10));
    CHECK(cells[3] == print_scalar(row.j_total, 10));
    CHECK(cells[4] == print_scalar(row.partial_sum, 10));
  }
  CHECK(csv.rows[1][1] == "-4.659688684e-1");
  CHECK(csv.rows[1][2] == "1.285700049e0");
  CHECK(csv.rows[1][3] == "8.197311805e-1");
}

TEST_CASE("run: table layout") {
  const auto o = call({"run", "--coeffs", kQuintic, "--m", "1", "--steps", "2"});
  CHECK(o.code == kMaxSteps);
  CHECK(o.out.find("  n               J_1       partial_sum") == 0);
  CHECK(o.out.find("3.099986240e-1") != std::string::npos);
  CHECK(o.out.find("verdict: max-steps after 2 steps") != std::string::npos);
}

TEST_CASE("run: m = degree and linear input converge") {
  const auto five = call({"run", "--coeffs", kQuintic, "--m", "5", "--mode", "exact", "--format", "csv"});
  CHECK(five.code == kOk);
  const auto csv = csv_of(five.out);
  REQUIRE(csv.rows.size() == 2);
  CHECK(csv.rows[1][csv.column("partial_sum")] == "3.100000000e1");
  CHECK(csv.rows[1][csv.column("J_5")] == "0");

  const auto line = call({"run", "--coeffs", "1 -1", "--m", "1"});
  CHECK(line.code == kOk);
  CHECK(line.out.find("converged after 1 steps") != std::string::npos);
}

TEST_CASE("run: coefficient file and separators") {
  const std::string path = "cli_coeffs_test.txt";
  {
    std::ofstream f(path);
    f << "1, -31/16, 155/128\n-155/512 31/1024 -1/1024\n";
  }
  const auto from_file = call({"run", "--coeff-file", path, "--m", "3", "--steps", "1", "--format", "csv"});
  const auto inline_ = call({"run", "--coeffs", kQuintic, "--m", "3", "--steps", "1", "--format", "csv"});
  std::remove(path.c_str());
  CHECK(from_file.code == kMaxSteps);
  CHECK(from_file.out == inline_.out);
  CHECK(csv_of(from_file.out).rows[1][csv_of(from_file.out).column("J_3")] == "1.814118062e0");
}

TEST_CASE("validation errors exit 2") {
  CHECK(call({"run", "--coeffs", kQuintic}).code == kValidation);
  CHECK(call({"run", "--coeffs", kQuintic, "--m", "6"}).code == kValidation);
  CHECK(call({"run", "--coeffs", "1", "--m", "1"}).code == kValidation);
  CHECK(call({"run", "--coeffs", "1 x", "--m", "1"}).code == kValidation);
  CHECK(call({"run", "--coeffs", kQuintic, "--m", "2", "--format", "xml"}).code == kValidation);
  CHECK(call({"run", "--coeffs", "1 -0.5", "--m", "1", "--mode", "exact"}).code == kValidation);
  CHECK(call({"run", "--m", "1"}).code == kValidation);
  CHECK(call({"run", "--coeff-file", "/nonexistent/coeffs", "--m", "1"}).code == kValidation);
  CHECK(call({"frobnicate"}).code == kValidation);
  CHECK(call({"count", "--seq", "0:2"}).code == kValidation);
  CHECK(call({"run", "--coeffs", "1 0 1 1", "--m", "2"}).code == kValidation);
  CHECK(call({"run", "--coeffs", "1 1 1", "--m", "2"}).code == kOk);
  CHECK_FALSE(call({"run", "--coeffs", "1 2 3 4 5", "--m", "9"}).err.empty());
}

TEST_CASE("singular step exits 3, divergence exits 4") {
  const auto stuck = call({"run", "--coeffs", "1 -1 1/2", "--m", "1"});
  CHECK(stuck.code == kSingular);
  CHECK(stuck.out.find("verdict: failed") != std::string::npos);
  CHECK(call({"newton", "--coeffs", "1 0 1", "--steps", "3"}).code == kSingular);
  CHECK(call({"run", "--coeffs", "1 1 1", "--m", "1", "--steps", "30"}).code == kMaxSteps);
}

TEST_CASE("help exits 0") { CHECK(call({"--help"}).code == kOk); }

TEST_CASE("count") {
  const auto o = call({"count", "--seq", "-1:1,0:1,2:2"});
  CHECK(o.code == kOk);
  CHECK(o.out.find("formula: 3") != std::string::npos);
  CHECK(o.out.find("enumeration: 3") != std::string::npos);
  CHECK(o.out.find("OK") != std::string::npos);
  CHECK(call({"count", "--seq", "0:3,2:2"}).out.find("formula: 2") != std::string::npos);
}

TEST_CASE("newton: deviation from NRS(1)") {
  const auto o = call({"newton", "--coeffs", kQuintic, "--steps", "8"});
  CHECK(o.code == kOk);
  const auto at = o.out.find("max relative deviation: ");
  REQUIRE(at != std::string::npos);
  const Float dev = parse_float(o.out.substr(at + 24, o.out.find('\n', at) - at - 24));
  CHECK(dev < Float(1e-30));
}

TEST_CASE("sturmfels report") {
  const auto o = call({"sturmfels", "--coeffs", kQuintic, "--m", "1", "--grade-cap", "5"});
  CHECK(o.code == kOk);
  CHECK(o.out.find("verdict: equal") != std::string::npos);
}

TEST_CASE("xi: coefficients, jensen chain and determinism") {
  const std::vector<std::string> args{"xi", "--nmax", "100", "--jensen", "3", "--m", "2", "--format", "csv"};
  const auto first = call(args);
  CHECK(first.code == kOk);
  const auto csv = csv_of(first.out);
  REQUIRE(!csv.rows.empty());
  const Float limit = parse_float(csv.rows.back()[csv.column("partial_sum")]);
  CHECK(abs(limit - Float(120)) < Float(1e-2));
  CHECK(first.err.find("9.942392178e-1") != std::string::npos);

  const auto second = call(args);
  CHECK(second.code == first.code);
  CHECK(second.out == first.out);
  CHECK(second.err == first.err);

  const auto plain = call({"xi", "--nmax", "60", "--kmax", "3"});
  CHECK(plain.code == kOk);
  CHECK(plain.out.find("odd") != std::string::npos);
  CHECK(call({"xi", "--nmax", "4", "--kmax", "3"}).code == kValidation);
}
