#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "wroots/cli.hpp"

#include "json.hpp"

using namespace wroots;
using namespace wroots::test;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("wroots_cli_" + std::to_string(std::rand()) + "_" +
                                       std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

const char* kCubic = R"({"coefficients": [["1","0"],["0","0"],["-1","0"],["0","0"]]})";
const char* kCubicX0 = R"({"components": [["1.74","0"],["1.75","0"],["-3.49","0"]]})";
const char* kCubicRoots = R"({"components": [["1","0"],["0","0"],["-1","0"]]})";

}  // namespace

TEST_CASE("list parsing") {
  CHECK(cli::parse_int_list("1..4") == std::vector<int>{1, 2, 3, 4});
  CHECK(cli::parse_int_list("1,4,100") == std::vector<int>{1, 4, 100});
  CHECK(cli::parse_int_list("1..3,8") == std::vector<int>{1, 2, 3, 8});
  CHECK_THROWS(cli::parse_int_list("x"));
  CHECK_THROWS(cli::parse_int_list("4..1"));

  const auto sweep = cli::parse_decimal_list("1.0..2.0:0.1");
  REQUIRE(sweep.size() == 11);
  CHECK(sweep.front() == "1.0");
  CHECK(sweep[3] == "1.3");
  CHECK(sweep.back() == "2.0");
  CHECK(cli::parse_decimal_list("1,1.1,2") == std::vector<std::string>{"1", "1.1", "2"});
  CHECK_THROWS(cli::parse_decimal_list("1..2"));
}

TEST_CASE("default digits honour the environment") {
  ::unsetenv("WROOTS_DIGITS");
  CHECK(cli::default_digits() == 64);
  ::setenv("WROOTS_DIGITS", "150", 1);
  CHECK(cli::default_digits() == 150);
  ::unsetenv("WROOTS_DIGITS");
}

TEST_CASE("usage errors exit 1") {
  const Scratch s;
  const std::string poly = s.write("cubic.json", kCubic);
  const std::string x0 = s.write("x0.json", kCubicX0);
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"frobnicate"}).code == cli::kUsage);
  CHECK(call({"solve", "--init", x0}).code == cli::kUsage);
  CHECK(call({"solve", "--poly", poly}).code == cli::kUsage);
  const Invocation both = call({"solve", "--poly", poly, "--init", x0, "--aberth", "2"});
  CHECK(both.code == cli::kUsage);
  CHECK_FALSE(both.err.empty());
  CHECK(call({"solve", "--poly", (s.dir / "missing.json").string(), "--init", x0}).code == cli::kUsage);
  CHECK(call({"gauge", "--n", "1"}).code == cli::kUsage);
  CHECK(call({"reproduce", "--example", "9"}).code == cli::kUsage);
  CHECK(call({"solve", "--poly", poly, "--init", x0, "--digits", "10"}).code == cli::kUsage);
}

TEST_CASE("solve writes the report files") {
  const Scratch s;
  const std::string poly = s.write("cubic.json", kCubic);
  const std::string x0 = s.write("x0.json", kCubicX0);
  const std::string out = (s.dir / "run").string();
  const Invocation r = call({"solve", "--poly", poly, "--init", x0, "--order", "1", "--out", out,
                             "--trajectory"});
  REQUIRE(r.code == cli::kOk);
  const std::string table = s.read("run/table.tsv");
  CHECK(table.find("1\t12\t0.029714\t1.131702\t3.311488e-2\t16\t5.496409e-26\t3.000715e-51") !=
        std::string::npos);

  const auto doc = nlohmann::json::parse(s.read("run/report.json"));
  CHECK(doc["m"] == 12);
  CHECK(doc["k_stop"] == 16);
  CHECK(doc["outcome"] == "Certified");
  // Printed epsilons are the truncation of the JSON values.
  const auto& rec = doc["records"][16];
  CHECK(format_epsilon(num(rec["epsilon"].get<std::string>(), rec["digits"].get<int>())) ==
        "5.496409e-26");
  const std::string traj = s.read("run/trajectory.csv");
  CHECK(traj.rfind("k,i,re,im\n", 0) == 0);
  CHECK(traj.find("\n0,1,") != std::string::npos);

  const Invocation again = call({"solve", "--poly", poly, "--init", x0, "--order", "1", "--out", out});
  CHECK(again.code == cli::kOk);
  CHECK(s.read("run/table.tsv") == table);
}

TEST_CASE("solve reports safeguard outcomes with exit 2") {
  const Scratch s;
  const std::string poly = s.write("cubic.json", kCubic);
  const std::string x0 = s.write("x0.json", kCubicX0);
  const Invocation r = call({"solve", "--poly", poly, "--init", x0, "--max-iters", "2", "--out",
                             (s.dir / "o").string()});
  CHECK(r.code == cli::kNumeric);
}

TEST_CASE("solve with Aberth and random starts") {
  const Scratch s;
  const std::string poly = s.write("q.json", R"({"coefficients": [["1","0"],["0","0"],["0","0"],["0","0"],["-1","0"]]})");
  CHECK(call({"solve", "--poly", poly, "--aberth", "2", "--order", "2", "--out", (s.dir / "a").string()}).code ==
        cli::kOk);
  CHECK(call({"solve", "--poly", poly, "--random", "7,2", "--out", (s.dir / "r").string()}).code == cli::kOk);
  CHECK(call({"solve", "--poly", poly, "--random", "7", "--out", (s.dir / "r").string()}).code == cli::kUsage);
}

TEST_CASE("certify exit codes") {
  const Scratch s;
  const std::string poly = s.write("cubic.json", kCubic);
  const Invocation fired = call({"certify", "--poly", poly, "--at", s.write("r.json", kCubicRoots)});
  CHECK(fired.code == cli::kOk);
  const auto doc = nlohmann::json::parse(fired.out);
  CHECK(doc["sup_bound"] == "0");
  CHECK(doc["theorem"] == "Thm32");

  CHECK(call({"certify", "--poly", poly, "--at", s.write("x0.json", kCubicX0)}).code == cli::kNotFired);
  const Invocation dup = call({"certify", "--poly", poly, "--at",
                               s.write("d.json", R"({"components": [["1","0"],["1","0"],["0","0"]]})")});
  CHECK(dup.code == cli::kNumeric);
  CHECK_FALSE(dup.err.empty());
}

TEST_CASE("gauge prints the thresholds") {
  const Invocation g = call({"gauge", "--n", "3", "--p", "inf"});
  REQUIRE(g.code == cli::kOk);
  CHECK(g.out.find("mu\t0.171572875253809902396622551581") != std::string::npos);
  CHECK(g.out.find("R\t0.197429336933032971559300287795") != std::string::npos);
  CHECK(g.out.find("radius_R_cal\t0.131336111774601376829869290852") != std::string::npos);

  const Invocation g30 = call({"gauge", "--n", "30"});
  CHECK(g30.out.find("mu\t0.024527") != std::string::npos);
  const Invocation g2 = call({"gauge", "--n", "2"});
  CHECK(g2.out.find("R\t0.280776406404415137455352463994") != std::string::npos);
}

TEST_CASE("reproduce writes the reference tables") {
  const Scratch s;
  const Invocation r = call({"reproduce", "--example", "2", "--N", "4", "--out", s.dir.string()});
  REQUIRE(r.code == cli::kOk);
  const std::string t = s.read("table3.tsv");
  CHECK(t.rfind(table_header(), 0) == 0);
  CHECK(t.find("4\t1\t0.004823\t1.040419\t6.681020e-3\t3\t1.000227e-59\t8.418384e-297") !=
        std::string::npos);

  const Invocation z = call({"reproduce", "--example", "3", "--degree", "30", "--N", "1", "--out",
                             s.dir.string()});
  REQUIRE(z.code == cli::kOk);
  CHECK(s.read("table5.tsv").find("1\t23\t0.004903\t1.193434\t1.196341e-3\t26\t") != std::string::npos);
}

TEST_CASE("batch aggregates") {
  const Scratch s;
  const std::string poly = s.write("q.json", R"({"coefficients": [["1","0"],["0","0"],["0","0"],["0","0"],["-1","0"]]})");
  const Invocation empty = call({"batch", "--poly", poly, "--count", "0", "--radius", "2"});
  CHECK(empty.code == cli::kOk);
  CHECK(nlohmann::json::parse(empty.out)["count"] == 0);

  const Invocation sweep =
      call({"batch", "--poly", poly, "--aberth-sweep", "1.0..2.0:0.5", "--order", "1..2", "--threads", "2"});
  CHECK(sweep.code == cli::kOk);
  const auto doc = nlohmann::json::parse(sweep.out);
  CHECK(doc["count"] == 6);
  CHECK(doc["certified_count"] == 6);

  const Invocation random = call({"batch", "--poly", poly, "--count", "8", "--radius", "2", "--seed", "5"});
  CHECK(random.code == cli::kOk);
  CHECK(nlohmann::json::parse(random.out)["certified_count"] == 8);
  CHECK(call({"batch", "--poly", poly, "--count", "3"}).code == cli::kUsage);
}
