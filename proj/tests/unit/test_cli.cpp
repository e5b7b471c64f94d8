#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "cache.hpp"
#include "commands.hpp"
#include "hefp/errors.hpp"
#include "output.hpp"

using namespace hefp;
using namespace hefp::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hefp-unit-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HEFP_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("render formats") {
    const OutputTable t{"demo", {"a", "b"}, {{"1", "x,y"}, {"2", ""}}, {"note one"}};
    CHECK(render(t, Format::csv) == "a,b\n1,\"x,y\"\n2,\n");
    const auto j = nlohmann::json::parse(render(t, Format::json));
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "demo");
    CHECK(j["rows"][0]["b"] == "x,y");
    CHECK(j["rows"][1]["b"].is_null());
    CHECK(j["notes"][0] == "note one");
    const std::string p = render(t, Format::pretty);
    CHECK(p.find("x,y") != std::string::npos);
  }

  TEST_CASE("coefficients and exact values") {
    const auto c = cmd_coeffs(4, 30, 10);
    REQUIRE(c.rows.size() == 3);
    CHECK(c.rows[0][2] == "7/360");
    CHECK(c.rows[1][2] == "31/2520");
    CHECK_THROWS_AS(cmd_coeffs(1, 30, 10), DomainError);

    const auto e = cmd_exact({{Field::magnetic, "1"}, {Field::electric, "1"}}, 40, 12);
    REQUIRE(e.rows.size() == 2);
    CHECK(e.rows[0][3].empty());
    CHECK_FALSE(e.rows[1][3].empty());
    CHECK_THROWS_AS(cmd_exact({{Field::magnetic, "-1"}}, 40, 12), DomainError);
  }

  TEST_CASE("solve is deterministic and cached") {
    TempDir dir;
    const auto first = cmd_solve(9, 30, dir.path, std::nullopt);
    CHECK(first.rows[0][4] == "no");
    const fs::path file = first.rows[0][3];
    const std::string bytes = slurp(file);
    const auto second = cmd_solve(9, 30, dir.path, std::nullopt);
    CHECK(second.rows[0][4] == "yes");

    const fs::path other = dir.path / "again.json";
    cmd_solve(9, 30, dir.path, other);
    CHECK(slurp(other) == bytes);
    CHECK(load_solution(other).c.size() == 10);
  }

  TEST_CASE("precision rule and missing files") {
    TempDir dir;
    CHECK_THROWS_AS(cmd_solve(40, 30, dir.path, std::nullopt), PrecisionRuleError);
    CHECK_THROWS_AS(load_solution(dir.path / "absent.json"), IoError);
    CHECK_THROWS_AS(cmd_extrapolate({{Field::magnetic, "1"}}, dir.path / "absent.json", std::nullopt, 10), IoError);
  }

  TEST_CASE("comparator commands") {
    const auto p = cmd_pade(2, 2, {{Field::magnetic, "1"}}, 40, 10);
    REQUIRE(p.rows.size() == 1);
    const auto d = cmd_delta(10, std::nullopt, {{Field::electric, "1"}}, 40, 10);
    CHECK(d.rows[0][3] == "8");
    const auto d2 = cmd_delta(10, 9, {{Field::electric, "1"}}, 40, 10);
    CHECK(d2.rows[0][3] == "9");
  }

  TEST_CASE("table 1 is reproducible") {
    TableOptions opt;
    opt.id = 1;
    const std::string a = render(cmd_table(opt), Format::csv);
    CHECK(a == render(cmd_table(opt), Format::csv));
    CHECK(a.rfind("row,", 0) == 0);
  }

  TEST_CASE("full scale needs consent") {
    TableOptions opt;
    opt.id = 3;
    opt.full = true;
    CHECK_THROWS_AS(cmd_table(opt), LongJobRefused);
    CHECK(estimate_solve_seconds(1999, 2020) > estimate_solve_seconds(199, 220));
  }

  TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run_cli("coeffs --n-max 4 --digits 30") == 0);
    CHECK(run_cli("exact --beta 1 --format json") == 0);
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("exact --beta -3") == 2);
    CHECK(run_cli("table 3 --scale full") == 2);
    CHECK(run_cli("solve --moments 41 --digits 30 --cache \"" + dir.path.string() + "\"") == 3);
    CHECK(run_cli("extrapolate --beta 1 --solution \"" + (dir.path / "none.json").string() + "\"") == 1);
  }
}
