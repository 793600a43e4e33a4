#include "drchi/cli.hpp"
#include "drchi/matrix_io.hpp"

#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace drchi;
using namespace drchi::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("parse_matrix") {
  CHECK(parse_matrix("2 -2 0 0; 0 0 2 -2") == to_dr({{2, -2, 0, 0}, {0, 0, 2, -2}}));
  CHECK(parse_matrix("1 -1\n2 -2\n") == to_dr({{1, -1}, {2, -2}}));
  CHECK(parse_matrix("  0 ") == to_dr({{0}}));
  try {
    parse_matrix("1 0");
    FAIL("expected RowSumError");
  } catch (const RowSumError& e) {
    CHECK(e.row() == 1);
  }
  try {
    parse_matrix("1 -1; 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("ragged") != std::string::npos);
  }
  try {
    parse_matrix("1 -1\n2 x2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("1-1"), ParseError);
  CHECK_THROWS_AS(parse_matrix("- 1"), ParseError);
  CHECK_THROWS_AS(parse_matrix("+1 -1"), ParseError);
}

TEST_CASE("parse_matrix inverts render") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = to_dr(random_dr(rng, 1 + trial % 4, 1 + trial % 6, -1000, 1000));
    CHECK(parse_matrix(render(a.entries())) == a);
  }
  BigInt huge = 1;
  huge <<= 400;
  const auto big = DRMatrix::validate(std::vector<std::vector<BigInt>>{{huge, -huge}});
  CHECK(parse_matrix(render(big.entries())) == big);
}

TEST_CASE("split_paragraphs") {
  const auto ps = split_paragraphs("0\n\n1 -1\n2 -2\n  \n\n3 -3\n");
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].text == "0");
  CHECK(ps[1].text == "1 -1\n2 -2");
  CHECK(ps[1].first_line == 3);
  CHECK(ps[2].first_line == 7);
}

TEST_CASE("cli: single method prints the bare fraction") {
  const auto r = run({"--method", "closed", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1/12\n");
  CHECK(run({"0"}).out == "-1/12\n");
  CHECK(run({"--method", "recursion", "1 -1 0"}).out == "0\n");
  CHECK(run({"--method", "rank1", "1 1 -2"}).out == "1/3\n");
}

TEST_CASE("cli: both methods with --check") {
  const auto r = run({"--method", "both", "--check", "2 -2 0 0; 0 0 2 -2"});
  CHECK(r.code == 0);
  CHECK(r.out == "closed: 5/2\nrecursion: 5/2\nagree: true\n");
}

TEST_CASE("cli: injected disagreement exits 2 and prints both values") {
  const auto r = run({"--method", "both", "--check", "--inject-fault", "2 -2 0 0; 0 0 2 -2"});
  CHECK(r.code == 2);
  CHECK(r.out == "closed: 5/2\nrecursion: 7/2\nagree: false\n");
  // without --check the disagreement is reported but not fatal
  CHECK(run({"--method", "both", "--inject-fault", "0"}).code == 0);
}

TEST_CASE("cli: input errors exit 1") {
  auto r = run({"1 0"});
  CHECK(r.code == 1);
  CHECK(r.err == "error: row 1 does not sum to zero\n");
  r = run({"1 -1; 2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ragged") != std::string::npos);
  CHECK(run({"--method", "rank1", "1 -1; 1 -1"}).code == 1);
  CHECK(run({"--method", "bogus", "0"}).code == 1);
}

TEST_CASE("cli: leading term and stdin input") {
  const auto r = run({"--leading-term"}, "1 -1 0\n0 1 -1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "closed: 0\nleading_term: -1/12\n");
}

TEST_CASE("cli: json record carries exact numerator and denominator strings") {
  const auto r = run({"--json", "--method", "both", "2 -2 0 0; 0 0 2 -2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["closed_num"] == "5");
  CHECK(j["closed_den"] == "2");
  CHECK(j["recursion"] == "5/2");
  CHECK(j["agree"] == true);
  CHECK(j["input"] == "2 -2 0 0; 0 0 2 -2");
  CHECK_FALSE(j.contains("closed_ms"));
}

TEST_CASE("cli: output is deterministic") {
  const std::vector<std::string> args{"--method", "both", "--leading-term", "--json", "3 -1 -2; 1 1 -2"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli: --stats goes to stderr") {
  const auto r = run({"--method", "both", "--stats", "2 -2 0 0; 0 0 2 -2"});
  CHECK(r.out == "closed: 5/2\nrecursion: 5/2\nagree: true\n");
  CHECK(r.err.find("cache_misses=") != std::string::npos);
}

TEST_CASE("cli: batch streams records and survives malformed entries") {
  const auto path = temp_file("drchi_cli_batch.txt", "0\n\n1 0\n\n2 -2 0 0\n0 0 2 -2\n\n1 -1; x\n\n1 1 -2\n");
  const auto r = run({"--batch", path.string(), "--method", "both"});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "[1] 0 => closed=-1/12 recursion=-1/12 agree=true\n"
        "[2] error: row 1 does not sum to zero\n"
        "[3] 2 -2 0 0; 0 0 2 -2 => closed=5/2 recursion=5/2 agree=true\n"
        "[4] error: 8:7: unexpected character 'x'\n"
        "[5] 1 1 -2 => closed=1/3 recursion=1/3 agree=true\n");

  const auto threaded = run({"--batch", path.string(), "--method", "both", "--threads", "3"});
  CHECK(threaded.out == r.out);

  const auto json = run({"--batch", path.string(), "--json"});
  std::istringstream lines(json.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["index"] == ++count);
  }
  CHECK(count == 5);
  std::filesystem::remove(path);
}

TEST_CASE("cli: missing batch file") {
  CHECK(run({"--batch", "/nonexistent/drchi.txt"}).code == 1);
}
