#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "schubert/records.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(SCHUBERT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("coeff reproduces the flagship constant") {
  CliResult r = run_cli("coeff --space B:n=7 --lambda 5,3,1 --mu 5,2 --nu 6,5,4,1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4\n");

  CliResult std_form = run_cli(
      "coeff --space B:n=7 --lambda 5,3,1 --mu 5,2 --nu 6,5,4,1 "
      "--convention standard");
  CHECK(std_form.output == "4\n");
}

TEST_CASE("coeff records format") {
  CliResult r = run_cli(
      "coeff --space A:k=2,m=2 --lambda 1 --mu 1 --nu 2 --format records");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"coeff\":1,\"lambda\":[1],\"mu\":[1],\"nu\":[2],\"space\":\"A:k=2,m=2\"}\n");
}

TEST_CASE("product and pieri expansions") {
  CliResult r = run_cli("product --space A:k=2,m=2 --lambda 1 --mu 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "s(1) * s(1) = s(2) + s(1,1)\n");

  CliResult q = run_cli("pieri --space B:n=2 --p 1 --lambda 1");
  CHECK(q.exit_code == 0);
  CHECK(q.output == "t(1) * t(1) = t(2)\n");

  CliResult e = run_cli("product --space C:n=3 --lambda 1 --mu 1");
  CHECK(e.exit_code == 0);
  CHECK(e.output == "t(1) * t(1) = 2*t(2)\n");
}

TEST_CASE("argument validation exits with status 2") {
  CHECK(run_cli("coeff --space B:n=4 --lambda 3,3 --mu 1 --nu 4").exit_code == 2);
  CliResult bad_token = run_cli("coeff --space B:n=4 --lambda 3,x --mu 1 --nu 4");
  CHECK(bad_token.exit_code == 2);
  CHECK(bad_token.output.find("'x'") != std::string::npos);
  CHECK(run_cli("coeff --space Z:n=4 --lambda 1 --mu 1 --nu 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("pieri --space B:n=3 --p 9 --lambda 1").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("type D tables equal type B tables one rank down") {
  CliResult d = run_cli("table --space D:n=3");
  CliResult b = run_cli("table --space B:n=2");
  CHECK(d.exit_code == 0);
  CHECK(!d.output.empty());
  CHECK(d.output == b.output);
}

TEST_CASE("table round-trips through the record parser") {
  CliResult t = run_cli("table --space A:k=2,m=2");
  CHECK(t.exit_code == 0);
  std::string rebuilt;
  std::size_t start = 0;
  while (start < t.output.size()) {
    std::size_t end = t.output.find('\n', start);
    REQUIRE(end != std::string::npos);
    std::string line = t.output.substr(start, end - start);
    rebuilt += schubert::to_record_line(schubert::parse_record_line(line)) + "\n";
    start = end + 1;
  }
  CHECK(rebuilt == t.output);
}

TEST_CASE("verify small spaces cleanly") {
  CliResult r = run_cli("verify --space B:n=3 --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 violation(s)") != std::string::npos);
}

TEST_CASE("trace subcommands run") {
  CliResult a = run_cli("trace --space A:k=2,m=2 --mode a --lambda 1 --mu 1 --mu-tilde 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("hole") != std::string::npos);

  CliResult s = run_cli(
      "trace --space B:n=3 --mode shifted --lambda 2 --mu 1 --mu-tilde 2");
  CHECK(s.exit_code == 0);
  CHECK(s.output.find("instance") != std::string::npos);

  CHECK(run_cli("trace --space B:n=3 --mode a --lambda 2 --mu 1 --mu-tilde 2")
            .exit_code == 2);
}
