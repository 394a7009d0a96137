#include "cli_app.hpp"
#include "cli_matrix.hpp"
#include "emit.hpp"

#include <doctest.h>

#include <cstdlib>
#include <regex>
#include <sstream>

using namespace stabscope::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Rebuilds the CSV rows from the data attributes of an SVG plot.
std::vector<std::string> svg_rows(const std::string& svg) {
  static const std::regex line_re(
      R"re(<line class="data" x1="([^"]*)" y1="([^"]*)" x2="([^"]*)" y2="([^"]*)" data-kind="([^"]*)" data-label="([^"]*)")re");
  std::vector<std::string> rows;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    rows.push_back(m[1].str() + "," + m[2].str() + "," + m[3].str() + "," + m[4].str() + "," + m[5].str() + "," +
                   m[6].str());
  }
  return rows;
}

std::vector<std::string> csv_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == kPlotHeader);
  while (std::getline(in, line)) rows.push_back(line);
  return rows;
}

}  // namespace

TEST_CASE("documented invocations") {
  CHECK(invoke({"exc", "char", "3/2"}).out == "{\"char\":[\"2\",\"3\",\"3/2\"]}\n");
  CHECK(invoke({"classify-point", "--x", "1/2", "--y", "0", "--depth", "4"}).out == "{\"class\":\"GeoLP\"}\n");
  CHECK(invoke({"wall", "--v", "0,0,1", "--w", "1,0,0"}).out == "{\"line\":\"s=0\"}\n");
  CHECK(invoke({"wall", "--v", "1,0,0", "--w", "1,1,1/2"}).out == "{\"line\":\"q=s/2\"}\n");
}

TEST_CASE("exit codes and error stream") {
  auto unknown_verb = invoke({"frobnicate"});
  CHECK(unknown_verb.code == kExitUsage);
  CHECK(unknown_verb.err.starts_with("{\"error\":"));
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"classify-point", "--x", "1/0", "--y", "0"}).code == kExitUsage);
  CHECK(invoke({"exc", "char", "1/3"}).code == kExitUsage);
  CHECK(invoke({"curve", "emit", "--format", "png"}).code == kExitUsage);
  CHECK(invoke({"dlp", "--ch0", "0", "--ch1", "1", "--ch2", "0"}).code == kExitFailure);
  CHECK(invoke({"wall", "--v", "1,0,0", "--w", "2,0,0"}).code == kExitFailure);
  CHECK(invoke({"mutate", "left", "--triple", "0,1,3"}).code == kExitFailure);

  // A point in the gap between the intervals of 0 and 1 on Delta = 1/2.
  const std::vector<std::string> gap_point{"classify-point", "--x", "2/5", "--y", "-21/50", "--depth", "0"};
  auto lax = invoke(gap_point);
  CHECK(lax.code == kExitOk);
  CHECK(lax.out == "{\"class\":\"Unknown\",\"depth_reached\":0}\n");
  auto strict_args = gap_point;
  strict_args.push_back("--strict");
  CHECK(invoke(strict_args).code == kExitUnknown);
  CHECK(invoke({"classify-point", "--x", "2/5", "--y", "-21/50", "--depth", "12"}).out ==
        "{\"class\":\"OnExclusion\"}\n");

  auto help = invoke({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("classify-cell") != std::string::npos);
}

TEST_CASE("depth falls back to the environment") {
  const std::vector<std::string> gap_point{"classify-point", "--x", "2/5", "--y", "-21/50"};
  ::setenv("STABSCOPE_DEPTH", "0", 1);
  CHECK(invoke(gap_point).out.find("Unknown") != std::string::npos);
  auto overridden = gap_point;
  overridden.insert(overridden.end(), {"--depth", "12"});
  CHECK(invoke(overridden).out == "{\"class\":\"OnExclusion\"}\n");
  ::setenv("STABSCOPE_DEPTH", "deep", 1);
  CHECK(invoke(gap_point).code == kExitUsage);
  ::unsetenv("STABSCOPE_DEPTH");
  CHECK(invoke(gap_point).out == "{\"class\":\"OnExclusion\"}\n");
}

TEST_CASE("exact and float chart input") {
  auto exact = invoke({"classify-cell", "--triple", "adj:1", "--m", "1,1,1", "--exact-units",
                       "0:4/5,3/5;1:-3/5,-4/5;1:4/5,-3/5", "--depth", "6"});
  CHECK(exact.code == kExitOk);
  CHECK(exact.out.find("\"label\":\"GeoCell\"") != std::string::npos);
  auto floats = invoke({"classify-cell", "--triple", "0,1,2", "--m", "1,1,1", "--phi", "0.2,0.5,1.5"});
  CHECK(floats.out.find("\"label\":\"GeoCell\"") != std::string::npos);
  CHECK(invoke({"classify-cell", "--triple", "adj:1", "--m", "1,1,1", "--phi", "0.2,0.5,0.9"}).code == kExitFailure);
  CHECK(invoke({"classify-cell", "--triple", "adj:1", "--m", "1,1,1"}).code == kExitUsage);

  auto moved = invoke({"transport", "--triple", "adj:1", "--m", "1,1,1", "--exact-units",
                       "0:4/5,3/5;1:-3/5,-4/5;1:4/5,-3/5"});
  CHECK(moved.code == kExitOk);
  CHECK(moved.out.find("\"labels\":[\"0\",\"1/2\",\"1\"]") != std::string::npos);
  CHECK(moved.out.find("\"value\":{\"re\":\"-13/5\",\"im\":\"-9/5\"},\"turn\":1") != std::string::npos);
}

TEST_CASE("svg plots carry the csv data") {
  const std::vector<std::vector<std::string>> plots{
      {"curve", "emit", "--depth", "3", "--from", "-2", "--to", "2"},
      {"curve", "emit", "--depth", "0", "--from", "1/3", "--to", "1/2"},
      {"walls", "--v", "0,0,1", "--pool-depth", "0", "--window", "-2,2,-3,1"},
      {"walls", "--v", "1,0,-1", "--pool-depth", "2", "--window", "-3/2,3/2,-2,2"},
  };
  for (const auto& base : plots) {
    auto csv_args = base, svg_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    svg_args.insert(svg_args.end(), {"--format", "svg"});
    const auto csv = invoke(csv_args), svg = invoke(svg_args);
    REQUIRE(csv.code == kExitOk);
    REQUIRE(svg.code == kExitOk);
    const auto rows = csv_rows(csv.out);
    CHECK_FALSE(rows.empty());
    CHECK(svg_rows(svg.out) == rows);
    for (const char* delta : {"0", "1/2", "1"}) {
      CHECK(svg.out.find(std::string("data-delta=\"") + delta + "\"") != std::string::npos);
    }
  }
}

TEST_CASE("skyscraper walls in the plotting window") {
  auto csv = invoke({"walls", "--v", "0,0,1", "--pool-depth", "0", "--window", "-2,2,-3,1", "--format", "csv"});
  CHECK(csv_rows(csv.out) == std::vector<std::string>{"-2,-3,-2,1,wall,-2:s=-2", "-1,-3,-1,1,wall,-1:s=-1",
                                                      "0,-3,0,1,wall,0:s=0", "1,-3,1,1,wall,1:s=1",
                                                      "2,-3,2,1,wall,2:s=2"});
}

TEST_CASE("repeated invocations are byte-identical") {
  for (const auto& args : stabscope::testing::cli_matrix()) {
    const auto first = invoke(args), second = invoke(args);
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
