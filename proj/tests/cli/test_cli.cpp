#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(VRSEQ_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), static_cast<int>(buffer.size()), pipe)) {
    result.output += buffer.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

}  // namespace

TEST_CASE("generate reproduces the doubling table in csv") {
  const auto res =
      run_cli("generate --kind identity --horizon 9 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 11);
  CHECK(lines[0] == "n,r,b");
  CHECK(lines[1] == "0,1,1");
  CHECK(lines[2] == "1,1,1");
  CHECK(lines[3] == "2,2,2");
  CHECK(lines[10] == "9,9,256");
}

TEST_CASE("generate handles the even/odd spec") {
  const auto res = run_cli(
      "generate --kind custom_step --prefix 1,1 --slope 1 --offsets 0,-1 "
      "--horizon 9 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 11);
  CHECK(lines[10] == "9,8,213");
  CHECK(lines[9] == "8,8,107");
}

TEST_CASE("constant-1 spec emits all ones") {
  const auto res =
      run_cli("generate --kind constant --value 1 --horizon 5 --format csv");
  CHECK(res.exit_code == 0);
  for (const auto& line : lines_of(res.output)) {
    if (line == "n,r,b") continue;
    CHECK(line.substr(line.size() - 2) == ",1");
  }
}

TEST_CASE("invalid specs exit 2 with the validation message") {
  const auto res =
      run_cli("generate --kind table --values 1,1,2,5 --horizon 3");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("sublinearity violated: r(3) = 5") !=
        std::string::npos);
}

TEST_CASE("bounds on the alternating spec verifies and classifies steps") {
  const auto res = run_cli(
      "bounds --kind periodic --prefix 1,1 --cycle 2,3 --horizon 50 "
      "--format csv");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 51);
  // Row i holds index n = i. After n = 3 the cases alternate
  // sub_doubling (even n) / exact_doubling (odd n).
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::string expected =
        i % 2 == 0 ? "sub_doubling" : "exact_doubling";
    CHECK(line.substr(line.rfind(',') + 1) == expected);
  }
}

TEST_CASE("bounds random sweep reports zero violations") {
  const auto res =
      run_cli("bounds --random-specs 20 --cap 8 --horizon 80 --seed 7");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("# random-sweep seed=7 cap=8 count=20 horizon=80") !=
        std::string::npos);
  CHECK(res.output.find("# total_violations=0") != std::string::npos);
}

TEST_CASE("classify emits a json report") {
  const auto res = run_cli(
      "classify --kind constant --value 2 --horizon 300 --format json");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"class\":\"converges_to_alpha\"") !=
        std::string::npos);
  CHECK(res.output.find("\"alpha_order\":2") != std::string::npos);
  CHECK(res.output.find("1.61803398") != std::string::npos);
}

TEST_CASE("classify marks the alternating spec oscillating") {
  const auto res = run_cli(
      "classify --kind periodic --prefix 1,1 --cycle 2,3 --horizon 300 "
      "--format json");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"class\":\"oscillating\"") != std::string::npos);
}

TEST_CASE("compare: rbonacci(2) equals the fibonacci-spec terms") {
  const auto res = run_cli(
      "compare --classical rbonacci:2 --kind constant --value 2 "
      "--horizon 20 --format csv");
  CHECK(res.exit_code == 0);
  for (const auto& line : lines_of(res.output)) {
    if (line.rfind("n,", 0) == 0) continue;
    // b(n) and c(n) columns agree at every n.
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    const auto third = line.find(',', second + 1);
    CHECK(line.substr(first + 1, second - first - 1) ==
          line.substr(second + 1, third - second - 1));
  }
}

TEST_CASE("compare: hofstadter q carries decrease flags") {
  const auto res =
      run_cli("compare --classical q --horizon 20 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("16,9,<") != std::string::npos);
}

TEST_CASE("compare: conway per-n column trends toward 0.5") {
  const auto res =
      run_cli("compare --classical conway --horizon 4096 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  CHECK(lines.back().find("4096,2048,0.500000") != std::string::npos);
}

TEST_CASE("extend streams two-sided terms") {
  const auto res = run_cli(
      "extend --kind constant --value 3 --unrestricted --init 1,1,1 "
      "--back 5 --horizon 5 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  CHECK(lines[0] == "n,r,beta");
  bool saw_minus_four = false;
  for (const auto& line : lines) {
    if (line.rfind("-4,", 0) == 0) {
      CHECK(line == "-4,3,-1");
      saw_minus_four = true;
    }
  }
  CHECK(saw_minus_four);
}

TEST_CASE("extend with zero init is identically zero") {
  const auto res = run_cli(
      "extend --kind identity --init 0 --back 3 --horizon 5 --format csv");
  CHECK(res.exit_code == 0);
  for (const auto& line : lines_of(res.output)) {
    if (line == "n,r,beta") continue;
    CHECK(line.substr(line.size() - 2) == ",0");
  }
}

TEST_CASE("extend forward part matches generate") {
  const auto gen =
      run_cli("generate --kind identity --horizon 8 --format csv");
  const auto ext = run_cli(
      "extend --kind identity --init 1 --back 0 --horizon 8 --format csv");
  CHECK(gen.exit_code == 0);
  CHECK(ext.exit_code == 0);
  const auto gen_lines = lines_of(gen.output);
  const auto ext_lines = lines_of(ext.output);
  // generate: "n,r,b"; extend rows for n >= 0 carry the same values.
  for (std::size_t i = 1; i < gen_lines.size(); ++i) {
    CHECK(gen_lines[i] == ext_lines[i + 1]);  // extend has one row for n = -1
  }
}

TEST_CASE("bounds respects an explicit window") {
  const auto res = run_cli(
      "bounds --kind identity --horizon 30 --window 10:12 --format csv");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 4);  // header + n = 10, 11, 12
  CHECK(lines[1].rfind("10,10,1,", 0) == 0);
  CHECK(lines[3].rfind("12,12,1,", 0) == 0);
}

TEST_CASE("extend json stream carries explicit negative indices") {
  const auto res = run_cli(
      "extend --kind constant --value 3 --unrestricted --init 1,1,1 "
      "--back 5 --horizon 2 --format json");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("{\"n\":-4,\"r\":3,\"beta\":\"-1\"}") !=
        std::string::npos);
  CHECK(res.output.find("{\"n\":-8,") != std::string::npos);
  CHECK(res.output.find("{\"n\":0,\"r\":3,\"beta\":\"3\"}") !=
        std::string::npos);
}

TEST_CASE("identical configurations give byte-identical output") {
  const std::string cmd =
      "bounds --random-specs 5 --cap 6 --horizon 50 --seed 99 --format csv";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("json stream lines are well-formed objects") {
  const auto res =
      run_cli("generate --kind identity --horizon 5 --format json");
  CHECK(res.exit_code == 0);
  for (const auto& line : lines_of(res.output)) {
    CHECK(line.front() == '{');
    CHECK(line.back() == '}');
    CHECK(line.find("\"n\":") != std::string::npos);
    CHECK(line.find("\"b\":\"") != std::string::npos);
  }
}
