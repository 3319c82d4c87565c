#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output.
Run cli(const std::string& args) {
  const std::string command = std::string("\"") + FIBCOMP_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("documented invocations") {
  auto r = cli("verify iv --order 12");
  CHECK(r.status == 0);
  CHECK(r.out == "iv N=12 A=pass[1..12] B=pass[0..12] C=pass[1..12] -> pass\n");

  r = cli("primes --spec \"parts=1,2; mod=2\" --max 5");
  CHECK(r.status == 0);
  CHECK(r.out == "2,1,1,1,1\n");

  r = cli("factor --spec \"parts=1,2; prefix=(1)\" --word \"(1,2,1)\"");
  CHECK(r.status == 0);
  CHECK(r.out == "(1,2)|(1)\n");

  r = cli("expand 0,1 1,-1,-1 -N 10");
  CHECK(r.status == 0);
  CHECK(r.out == "0,1,1,2,3,5,8,13,21,34,55\n");

  r = cli("expand --params m=3,j=1 -N 3");
  CHECK(r.status == 0);
  CHECK(r.out == "1,3,13,55\n");

  r = cli("dyck 4 --height 3");
  CHECK(r.status == 0);
  CHECK(r.out == "13\n");

  r = cli("bijection bars_dots 21112111221 --inverse");
  CHECK(r.status == 0);
  CHECK(r.out == ".o|o.|o|..o\n");

  r = cli("bfile pell -N 3");
  CHECK(r.status == 0);
  CHECK(r.out == "# A000129\n1 1\n2 2\n3 5\n");
}

TEST_CASE("exit codes") {
  auto r = cli("free-check --spec \"parts=1,2; prefix=(1,1)\" --max 10");
  CHECK(r.status == 1);
  CHECK(r.out.rfind("not free: (1,1,1,1,1)", 0) == 0);

  r = cli("free-check --spec \"parts=1,2; prefix=(1,2)\" --max 10");
  CHECK(r.status == 0);

  r = cli("factor --spec \"parts=1,2; prefix=(1,1)\" --word \"(1,1,1,1,1)\"");
  CHECK(r.status == 1);
  CHECK(r.out.find("error: not free") != std::string::npos);

  r = cli("verify iv --bogus");
  CHECK(r.status == 2);
  CHECK(r.out.find("--bogus") != std::string::npos);

  r = cli("verify nope");
  CHECK(r.status == 2);
  CHECK(r.out.find("error: unknown name") != std::string::npos);

  r = cli("primes --spec \"parts=1,2; colour=red\"");
  CHECK(r.status == 2);
  CHECK(r.out.find("error: parse error") != std::string::npos);

  r = cli("verify floor_m --params m=3 -N 2");
  CHECK(r.status == 2);

  CHECK(cli("bogus").status == 2);
  CHECK(cli("primes --spec \"parts=1,2\" --format yaml").status == 2);
}

TEST_CASE("structured output is one JSON value per line") {
  const char* invocations[] = {
      "verify iv --order 12 --format structured",
      "primes --spec \"parts=1,2; mod=2\" --max 5 --words --format structured",
      "members --spec \"parts=1,2; mod=2\" --max 2 --format structured",
      "factor --spec \"parts=1,2; prefix=(1)\" --word \"(1,2,1)\" --format structured",
      "free-check --spec \"parts=1,2; prefix=(1,1)\" --max 10 --format structured",
      "expand 0,1 1,-3,1 -N 5 --format structured",
      "dyck 6 --height 3 --format structured",
      "bijection two_part \"(2,3)\" --params p=2,q=3 --format structured",
      "identities --format structured",
  };
  for (const std::string args : invocations) {
    CAPTURE(args);
    const auto r = cli(args);
    CHECK(r.status <= 1);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      ++count;
      CHECK_NOTHROW((void)nlohmann::json::parse(line));
    }
    CHECK(count > 0);
  }

  const auto r = cli("expand 0,1 1,-1,-1 -N 200 --format structured");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"][200] == "280571172992510140037611932413038677189525");
}

TEST_CASE("output is deterministic") {
  const char* invocations[] = {
      "verify vi -N 20 --format structured",
      "primes --spec \"parts=1,2; prefix=(1,2); mod=2\" --max 8 --words",
      "free-check --spec \"parts=1,2,3; prefix=(1,2,1)\" --max 12",
      "identities",
  };
  for (const std::string args : invocations) {
    CAPTURE(args);
    CHECK(cli(args).out == cli(args).out);
  }
}
