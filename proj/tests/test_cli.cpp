#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "slackkit/io/formats.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& input = "") {
  std::string cmd;
  if (!input.empty()) cmd = "printf '%s' '" + input + "' | ";
  cmd += std::string(SLACKKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* kSquare = "0 0\n0 1\n1 1\n1 0\n";
const char* kPrism = "0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 0 1\n1 1 0\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("square slack ideal") {
  const Run r = cli("ideal -d 2 --vertices -", kSquare);
  CHECK(r.code == 0);
  CHECK(r.out == "x0*x3*x5*x6 - x1*x2*x4*x7\n");
  // d inferred from the vertices
  CHECK(cli("ideal --vertices -", kSquare).out == r.out);
}

TEST_CASE("json vertices") {
  const Run r = cli("ideal -d 2 --vertices -", R"([["0","0"],["0","1"],["1","1"],["1","0"]])");
  CHECK(r.code == 0);
  CHECK(r.out == "x0*x3*x5*x6 - x1*x2*x4*x7\n");
}

TEST_CASE("minor counts") {
  CHECK(cli("count-minors -d 8 --rows 12 --cols 34").out == "8654457240\n");
  CHECK(cli("count-minors -d 8 --builtin perles-reduced").out == "18876\n");
}

TEST_CASE("builtins print and re-parse") {
  const Run r = cli("builtin perles-reduced");
  CHECK(r.code == 0);
  const auto s = slackkit::io::parseSymbolic(r.out);
  CHECK(s.rows() == 12);
  CHECK(s.cols() == 13);
  const Run j = cli("builtin prism --format json");
  CHECK(j.code == 0);
  CHECK(slackkit::io::parseMatrix(j.out).rows() == 6);
  CHECK(cli("builtin dodecahedron").code == 1);
}

TEST_CASE("slack matrix output re-parses") {
  const Run r = cli("slack-matrix --vertices -", kPrism);
  CHECK(r.code == 0);
  const auto m = slackkit::io::parseMatrix(r.out);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 5);
  CHECK(cli("slack-matrix --object matroid --vertices -", kSquare).code == 0);
}

TEST_CASE("prism pipeline through the CLI") {
  const Run dehom = cli("dehomogenize -d 3 --builtin prism --ones 0,1,2,3,4,5,6,8,9,10");
  CHECK(dehom.code == 0);
  CHECK(dehom.out == "x7 - 1\nx11 - 1\n");
  const Run rehom = cli("rehomogenize -d 3 --builtin prism --ones 0..6,8..10");
  CHECK(rehom.code == 0);
  CHECK(rehom.out == cli("ideal -d 3 --builtin prism").out);
  const Run scale = cli("scale --builtin prism --ones 0..6,8..10");
  CHECK(scale.code == 0);
  CHECK(scale.out.find("forest:") != std::string::npos);
}

TEST_CASE("flags and reduction") {
  CHECK(cli("contains-flag --builtin prism --columns 0,1").out == "false\n");
  const Run reduce = cli("reduce --builtin prism");
  CHECK(reduce.code == 0);
  CHECK(slackkit::io::parseSymbolic(reduce.out).cols() == 4);
}

TEST_CASE("certificate from an ideal file") {
  const Run r = cli("certificate --ideal - --variable 1",
                    R"({"nvars":2,"generators":["x0 - x1 - 1","x1^2 + x1 - 1"]})");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("kind":"irrational")") != std::string::npos);
  CHECK(r.out.find(R"("minimal_polynomial":"x1^2 + x1 - 1")") != std::string::npos);
}

TEST_CASE("gale and gale-slack") {
  const Run g = cli("gale --vertices -", kSquare);
  CHECK(g.code == 0);
  CHECK(cli("gale-slack --gale -", "1 -1 1 -1\n").code == 0);
  CHECK(cli("gale-slack --method plucker --gale -", "1 -1 1 -1\n").code == 0);
}

TEST_CASE("graphic ideal") {
  const Run r = cli("graphic-ideal --builtin square");
  CHECK(r.code == 0);
  CHECK(r.out == cli("ideal -d 2 --builtin square").out);
}

TEST_CASE("exit codes") {
  CHECK(cli("ideal -d 2 --vertices -", "1 2\n3\n").code == 2);
  CHECK(cli("ideal -d 2 --vertices -", "1 a\n3 4\n").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("ideal --no-such-flag").code == 2);
  CHECK(cli("ideal -d 2").code == 2);
  // a domain error: the points are not in convex position
  CHECK(cli("slack-matrix --vertices -", "0 0\n2 0\n0 2\n1 1\n").code == 1);
  CHECK(cli("scale --builtin square --ones 0..7").code == 1);
}

TEST_CASE("output is deterministic") {
  CHECK(cli("ideal -d 3 --builtin prism --format json").out == cli("ideal -d 3 --builtin prism --format json").out);
}

}
