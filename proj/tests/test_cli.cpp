#include <doctest.h>

#include <clocale>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "clausen/clausen.hpp"
#include "clausen/constants.hpp"
#include "cli.hpp"
#include "test_util.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"clausen_cli"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = clausen::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("format_value uses 17 significant digits") {
  using clausen::cli::format_value;
  CHECK(format_value(1.6449340668482264) == "1.6449340668482264");
  CHECK(format_value(clausen::kPi / 4.0) == "0.78539816339744828");
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(-0.5) == "-0.5");
  CHECK(format_value(std::nan("")) == "nan");
  CHECK(format_value(-std::nan("")) == "nan");
}

TEST_CASE("format_value ignores the C locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(clausen::cli::format_value(0.5) == "0.5");
  }
  std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("eval subcommand") {
  auto r = run({"eval", "--kind", "cos", "--order", "2", "--x", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.6449340668482264\n");

  r = run({"eval", "--kind", "sin", "--order", "1", "--x", "1.5707963267948966"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.78539816339744828\n");

  r = run({"eval", "--kind", "cos", "--order", "1", "--x", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "nan\n");

  r = run({"eval", "--kind", "clausen", "--order", "3", "--x", "-2.5"});
  CHECK(r.code == 0);
  CHECK(r.out == clausen::cli::format_value(clausen::clausen(3, -2.5)) + "\n");

  r = run({"eval", "--kind", "sin", "--order", "0", "--x", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "nan\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "--kind", "tan", "--order", "2", "--x", "1"}).code == 2);
  CHECK(run({"eval", "--kind", "sin", "--order", "two", "--x", "1"}).code == 2);
  CHECK(run({"eval", "--kind", "sin", "--order", "2", "--x", "abc"}).code == 2);
  CHECK(run({"eval", "--kind", "sin", "--order", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "--kind", "sin", "--order", "2", "--x", "1", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table subcommand layout") {
  const auto r = run({"table", "--kind", "sin", "--order", "2", "--from", "0", "--to",
                      "6.283185307179586", "--steps", "4"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "x,value");
  CHECK(rows[1] == "0,0");
  CHECK(rows[2].rfind("1.5707963267948966,0.91596559417721", 0) == 0);
  CHECK(rows[4].rfind("4.7123889803846897,-0.91596559417721", 0) == 0);
  CHECK(rows[5] == "6.2831853071795862,0");
}

TEST_CASE("table rows equal library calls") {
  const auto r = run({"table", "--kind", "cos", "--order", "5", "--from", "-7", "--to", "7",
                      "--steps", "97", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 99);
  double prev = -1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].find(',');
    REQUIRE(comma != std::string::npos);
    const double x = std::stod(rows[i].substr(0, comma));
    CHECK(x > prev);
    prev = x;
    CHECK(rows[i].substr(comma + 1) == clausen::cli::format_value(clausen::clausen_cos(5, x)));
  }
  CHECK(prev == 7.0);
}

TEST_CASE("table of C_4 starts at zeta(4)") {
  const auto r = run({"table", "--kind", "cos", "--order", "4", "--from", "0", "--to", "1", "--steps", "2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out)[1] == "0," + clausen::cli::format_value(clausen::zeta(4)));
}

TEST_CASE("table passes NaN cases through") {
  const auto r = run({"table", "--kind", "sin", "--order", "0", "--from", "0", "--to", "1", "--steps", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1] == "0,nan");
}

TEST_CASE("table rejects invalid grids") {
  CHECK(run({"table", "--kind", "sin", "--order", "2", "--from", "0", "--to", "1", "--steps", "1"}).code == 2);
  CHECK(run({"table", "--kind", "sin", "--order", "2", "--from", "1", "--to", "1", "--steps", "4"}).code == 2);
  CHECK(run({"table", "--kind", "sin", "--order", "2", "--from", "2", "--to", "1", "--steps", "4"}).code == 2);
  CHECK(run({"table", "--kind", "sin", "--order", "2", "--from", "0", "--to", "1", "--steps", "4",
             "--format", "json"}).code == 2);
}

TEST_CASE("table output matches the committed golden files") {
  const auto sin2 = run({"table", "--kind", "sin", "--order", "2", "--from", "0", "--to",
                         "6.283185307179586", "--steps", "64"});
  CHECK(sin2.out == read_file(CLAUSEN_GOLDEN_DIR "/table_sin2.csv"));
  const auto cos4 = run({"table", "--kind", "cos", "--order", "4", "--from", "0", "--to",
                         "6.283185307179586", "--steps", "64"});
  CHECK(cos4.out == read_file(CLAUSEN_GOLDEN_DIR "/table_cos4.csv"));
}
