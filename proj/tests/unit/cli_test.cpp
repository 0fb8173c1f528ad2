#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "rays/realslice.hpp"

using json = nlohmann::json;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rays");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = rays::cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}
}  // namespace

TEST_CASE("examples") {
  auto a = run_json({"in-r", "--t", "15/31"});
  CHECK(a == json::parse(R"({"t":"15/31","in_R":true})"));
  CHECK(run_json({"opening-sum", "--max-period", "3"})["sum"] == "131/315");
  auto t = run_json({"tau", "--c", "-1.401155", "--bits", "24"});
  CHECK(std::fabs(std::stod(t["value"].get<std::string>()) - 0.412454) < 1e-4);
  CHECK(t["certified_bits"] == 24);
}

TEST_CASE("subcommands") {
  CHECK(run_json({"in-r", "--t", "3/8"})["in_R"] == false);
  auto openings = run({"openings", "--max-period", "3"});
  REQUIRE(openings.code == 0);
  std::istringstream lines(openings.out);
  std::vector<json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[2]["theta_minus"] == "3/7");
  CHECK(rows[2]["omega_minus"] == "4/9");
  CHECK(run({"cover", "--max-period", "3"}).out == "lo,hi\n0,0\n1/3,1/3\n2/5,3/7\n4/9,1/2\n");
  CHECK(run({"ksigma-build", "--sigma", "1/4", "--level", "2"}).out == "lo,hi\n0,3/16\n5/16,11/16\n13/16,1\n");
  CHECK(run_json({"ksigma-verify", "--p", "2", "--levels", "6"})["pass"] == true);
  auto pi = run_json({"pi", "--t", "1/2"});
  CHECK(std::fabs(std::stod(pi["value"].get<std::string>()) + 2) < 1e-12);
  CHECK(run_json({"tune", "--p", "2", "--n", "1", "--t", "1/2"})["images"] == json::array({"5/12", "7/12"}));
  CHECK(run_json({"tune", "--p", "2", "--n", "1", "--t", "1/3"})["images"] == json::array({"2/5"}));
  CHECK(run_json({"psi", "--p", "2", "--n", "1", "--s", "2/5"})["psi"] == "1/3");
  CHECK(run_json({"s-c", "--t", "1/6", "--tau", "1/3"})["member"] == true);
  auto ray = run({"trace-ray", "--c", "0", "--t", "1/3", "--depth", "2"});
  CHECK(ray.out.rfind("re,im,angle_num,angle_den\n-50,86.6025", 0) == 0);
  auto rep = run({"dim-report", "--c", "-2"});
  CHECK(rep.out == "c,rho,sigma,ell,ell_prime,boxdim_estimate,flags\n-2.00000000000000000000,0.5,0,1,1,1,full-circle\n");
  auto sweep = run({"dim-report", "--sweep", "-2", "-1.9", "2"});
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 4);
  auto land = run_json({"verify-landing", "--c", "-2", "--depth", "40"});
  CHECK(land["residual"].get<double>() < 1e-6);
  auto cd = run_json({"cantor-dim", "--p", "2", "--n", "1", "--depth", "16"});
  CHECK(cd["slope"].get<double>() == doctest::Approx(0.5).epsilon(0.04));
  CHECK(cd["expected"] == 0.5);
}

TEST_CASE("random sampling follows the seed") {
  auto a = run({"--seed", "5", "in-r", "--sample", "20", "--max-den", "200"});
  auto b = run({"--seed", "5", "in-r", "--sample", "20", "--max-den", "200"});
  auto c = run({"--seed", "6", "in-r", "--sample", "20", "--max-den", "200"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  std::istringstream lines(a.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    auto j = json::parse(line);
    auto s = j["t"].get<std::string>();
    auto slash = s.find('/');
    oracle::u64 num = slash == std::string::npos ? std::stoull(s) : std::stoull(s.substr(0, slash));
    oracle::u64 den = slash == std::string::npos ? 1 : std::stoull(s.substr(slash + 1));
    CHECK(j["in_R"] == oracle::in_R(num, den));
  }
  CHECK(n == 20);
}

TEST_CASE("determinism") {
  for (std::vector<std::string> args : {std::vector<std::string>{"openings", "--max-period", "6"},
                                        {"cover", "--max-period", "7"},
                                        {"tau", "--c", "-1.77", "--bits", "40"},
                                        {"dim-report", "--c", "-1.95"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
  }
  auto one = run({"--jobs", "1", "openings", "--max-period", "8"});
  auto four = run({"--jobs", "4", "openings", "--max-period", "8"});
  CHECK(one.out == four.out);
}

TEST_CASE("exit codes") {
  auto bad_flag = run({"in-r", "--bogus", "1"});
  CHECK(bad_flag.code == 2);
  CHECK(bad_flag.err.find("--max-den") != std::string::npos);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"openings"}).code == 2);
  auto parse = run({"in-r", "--t", "abc"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("parse-error") != std::string::npos);
  CHECK(run({"pi", "--t", "3/8"}).code == 1);
  CHECK(run({"tau", "--c", "0.3", "--bits", "4"}).code == 1);
  auto undecided = run({"in-r", "--word", "0110", "--depth", "2"});
  CHECK(undecided.code == 1);
  CHECK(undecided.err.find("insufficient-precision") != std::string::npos);
  CHECK(run({"--jobs", "0", "openings", "--max-period", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
