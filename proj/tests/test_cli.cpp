#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "okzar/plot.hpp"
#include "okzar/report.hpp"
#include "support.hpp"

using namespace okzar;
using namespace testsupport;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(OKZAR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(OKZAR_DATA_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / ("okzar_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

void check_numbers_round_trip(const Json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-') &&
        s.find_first_not_of("-0123456789/") == std::string::npos)
      CHECK(to_string(parse_rat(s)) == s);
  } else if (j.is_structured()) {
    for (const auto& x : j) check_numbers_round_trip(x);
  }
}

}  // namespace

TEST_CASE("chambers report") {
  Json r = cmd_chambers(fixture("incidence3"));
  CHECK(r["command"] == "chambers");
  CHECK(r["variety"] == "incidence3");
  CHECK(r["result"]["count"] == 3);
  CHECK(cmd_chambers(fixture("incidence4"))["result"]["count"] == 6);
  check_numbers_round_trip(r);
}

TEST_CASE("zariski report") {
  VarietyData v3 = fixture("incidence3"), v4 = fixture("incidence4");
  Json r = cmd_zariski(v3, "D1+D2+D3")["result"];
  CHECK(r["positive"]["D_expression"] == "D1+D2+D3");
  CHECK(r["negative"]["expression"] == "0");
  r = cmd_zariski(v3, "D2+2E2")["result"];
  CHECK(r["positive"]["D_expression"] == "D2");
  CHECK(r["negative"]["expression"] == "2E2");
  r = cmd_zariski(v4, "E2+E4")["result"];
  CHECK(r["positive"]["expression"] == "0");
  CHECK(r["negative"]["expression"] == "E2+E4");
  CHECK(r["chamber_support"] == Json::parse(R"(["E2","E4"])"));
}

TEST_CASE("nobody, hilbert and ehrhart reports") {
  VarietyData v = fixture("incidence3");
  CHECK(cmd_nobody(v, std::nullopt, std::nullopt)["result"]["body"]["rays"].size() == 7);
  CHECK(cmd_nobody(v, std::nullopt, "flag")["result"]["body"]["rays"].size() == 6);
  CHECK(cmd_nobody(v, "D1+D2+D3", std::nullopt)["result"]["body"]["vertices"].size() == 7);
  CHECK_THROWS_AS(cmd_nobody(v, std::nullopt, "missing"), Error);
  CHECK_THROWS_AS(cmd_nobody(v, "D1", "flag"), Error);

  Json h = cmd_hilbert(Document(v), std::nullopt)["result"];
  CHECK(h["generators_form_hilbert_basis"] == true);
  CHECK(h["elements"].size() == 7);
  Json hn = cmd_hilbert(parse_document(read_json_file(data("nonnormal.json"))), std::nullopt)["result"];
  CHECK(hn["generators_form_hilbert_basis"] == false);
  CHECK(hn["extra_elements"] == Json::parse(R"([["1","1"]])"));

  Json e = cmd_ehrhart(v, "D1+D2+D3")["result"];
  CHECK(e["coefficients"] == Json::parse(R"(["1","4","11/2","5/2"])"));
  CHECK(e["polynomial"] == "5/2t^3+11/2t^2+4t+1");
  check_numbers_round_trip(e);
}

TEST_CASE("plot cells") {
  VarietyData v3 = fixture("incidence3"), v4 = fixture("incidence4");
  CHECK(chamber_slices(v3, parse_hyperplane("1,1,1", 3)).size() == 3);
  CHECK(chamber_slices(v4, parse_hyperplane("1,1,1,1", 4)).size() == 6);
  auto partial = chamber_slices(v3, parse_hyperplane("1,0,0", 3));
  CHECK(partial.size() <= 3);
  CHECK_THROWS_AS(chamber_slices(v3, parse_hyperplane("0,-1,0", 3)), Error);
  CHECK_THROWS_AS(parse_hyperplane("1,1", 3), Error);
  CHECK(support_color({2, 4}) == support_color({2, 4}));
  CHECK(support_color({2}) != support_color({3}));
}

TEST_CASE("exit codes") {
  CHECK(run("validate " + data("incidence3.json")).code == 0);
  CHECK(run("chambers " + data("incidence4.json")).code == 0);
  CHECK(run("hilbert " + data("nonnormal.json")).code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate x").code == 2);
  CHECK(run("zariski " + data("incidence3.json")).code == 2);
  CHECK(run("zariski " + data("incidence3.json") + " -d \"E1-E2\"").code == 2);
  CHECK(run("nobody " + data("incidence3.json") + " --restrict nowhere").code == 2);
  CHECK(run("validate /nonexistent/file.json").code == 2);
  CHECK(run("ehrhart " + data("incidence3.json") + " --divisor \"1/2D1+1/2D3\"").code == 5);

  auto dir = scratch();
  std::ofstream(dir / "bad.json") << R"({"name":"bad","dim":2,"basis_change":[[[1,1],[0,2]],[[1]]],"restriction":[[1]]})";
  std::ofstream(dir / "garbage.json") << "{ not json";
  CHECK(run("validate " + (dir / "bad.json").string()).code == 3);
  CHECK(run("chambers " + (dir / "bad.json").string()).code == 3);
  CHECK(run("validate " + (dir / "garbage.json").string()).code == 3);
  CHECK(run("--jobs 4 validate " + data("incidence3.json")).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports and plots are deterministic") {
  for (const std::string args : {"chambers " + data("incidence4.json"), "hilbert " + data("incidence3.json"),
                                 "nobody " + data("incidence3.json") + " --divisor \"D1+D2+D3\""}) {
    CAPTURE(args);
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    check_numbers_round_trip(Json::parse(a.out));
  }
  auto dir = scratch();
  for (auto [file, h] : {std::pair{"incidence3.json", "1,1,1"}, std::pair{"incidence4.json", "1,1,1,1"}}) {
    Run a = run("plot " + data(file) + " --hyperplane " + h + " --out " + (dir / "a.svg").string());
    Run b = run("plot " + data(file) + " --hyperplane " + h + " --out " + (dir / "b.svg").string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
    if (std::string(file) == "incidence3.json") {
      CHECK(count(slurp(dir / "a.svg"), "<polygon") == 3);
    } else {
      CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
      CHECK(Json::parse(slurp(dir / "a.json"))["cells"].size() == 6);
    }
  }
  CHECK(run("plot " + data("incidence3.json") + " --hyperplane 1,0,0 --out " + (dir / "c.svg").string()).code == 0);
  CHECK(run("plot " + data("incidence3.json") + " --hyperplane 0,-1,0 --out " + (dir / "d.svg").string()).code == 2);
  std::filesystem::remove_all(dir);
}
