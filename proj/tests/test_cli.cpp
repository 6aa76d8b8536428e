#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "satcore/cli.hpp"
#include "satcore/theory.hpp"

using namespace satcore;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "satcore");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("predict") {
  auto r = run({"predict", "--lambda", "1.5", "--n", "100000"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["theta"].get<double>() == theory::theta_fixed_point(1.5).theta);
  CHECK(j["core_vars"]["value"].get<double>() == theory::predict_core(1e5, 1.5).core_vars.value);
  CHECK(j["kernel_clauses"]["value"].get<double>() == theory::predict_kernel(1e5, 1.5).kernel_clauses.value);
  CHECK(j["census"]["1,1"]["C"]["value"].get<double>() == theory::predict_census(1e5, 1.5, 1, 1).C.value);

  auto w = nlohmann::json::parse(run({"predict", "--sigma", "0.3", "--n", "2000"}).out);
  CHECK(w["window_sub"]["p_unsat"].get<double>() == doctest::Approx(1.0 / 864.0));

  auto k3 = nlohmann::json::parse(run({"predict", "--k", "3", "--n", "30000"}).out);
  CHECK(k3["lambda_k"].get<double>() == doctest::Approx(2.4554075).epsilon(1e-6));
}

TEST_CASE("sat and reduce on DIMACS input") {
  auto s = run({"sat"}, "p cnf 2 2\n1 2 0\n-1 -2 0\n");
  REQUIRE(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["satisfiable"] == true);
  CHECK(j["assignment"].size() == 2);

  auto u = nlohmann::json::parse(run({"sat"}, "p cnf 1 2\n1 1 0\n-1 -1 0\n").out);
  CHECK(u["satisfiable"] == false);
  CHECK_FALSE(u.contains("assignment"));

  auto r = run({"reduce"}, "p cnf 3 3\n1 2 0\n-1 -2 0\n3 1 0\n");
  REQUIRE(r.code == 0);
  auto red = nlohmann::json::parse(r.out);
  CHECK(red["core"]["clauses"] == 2);
  CHECK(red["kernel"]["clauses"] == 0);
  CHECK(red["core"]["census"]["types"]["1,1"] == 2);
  CHECK(red["core_dimacs"].get<std::string>().rfind("p cnf 3 2", 0) == 0);

  auto c = nlohmann::json::parse(run({"census"}, "p cnf 3 3\n1 2 0\n-1 2 0\n-2 3 0\n").out);
  CHECK(c["formula"]["types"]["2,1"] == 1);
  CHECK(c["formula"]["types"]["1,0"] == 1);
}

TEST_CASE("gen output parses back") {
  auto g = run({"gen", "--n", "50", "--lambda", "1.2", "--seed", "3"});
  REQUIRE(g.code == 0);
  CHECK(g.out.rfind("p cnf 50 ", 0) == 0);
  CHECK(run({"sat"}, g.out).code == 0);
  CHECK(g.out == run({"gen", "--n", "50", "--lambda", "1.2", "--seed", "3"}).out);
  auto cl = run({"gen", "--n", "50", "--lambda", "1.2", "--model", "classical"});
  CHECK(cl.code == 0);
}

TEST_CASE("cola and simprob") {
  auto c = nlohmann::json::parse(run({"cola", "--n", "5000", "--lambda", "1.5", "--seed", "1"}).out);
  CHECK(c["lambda_C"].get<double>() < 1.5);
  CHECK(c["lambda_C_predicted"].get<double>() == doctest::Approx(0.8742174658).epsilon(1e-9));

  auto s = run({"simprob", "--census", R"({"1,1": 2})", "--trials", "3000", "--seed", "4"});
  REQUIRE(s.code == 0);
  auto sj = nlohmann::json::parse(s.out);
  CHECK(sj["p"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(0.05));
  CHECK(sj["ci"].size() == 2);
  CHECK(run({"simprob", "--census", R"({"a": 2})"}).code == 1);
}

TEST_CASE("sweep and window reports are byte-identical across runs") {
  std::vector<std::string> args{"sweep", "--experiment", "window-sub", "--sigma", "0.3", "--n", "2000",
                                "--trials", "300", "--seed", "7"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["experiment"] == "window-sub");
  CHECK(j["metrics"]["unsat"].contains("z"));

  auto w = run({"window", "--regime", "sub", "--sigma", "0.3", "--n", "2000", "--trials", "300", "--seed", "7"});
  CHECK(w.out == a.out);

  auto csv = run({"sweep", "--experiment", "core-size", "--lambda", "1.5", "--n", "1000", "--trials", "3",
                  "--format", "csv"});
  CHECK(csv.out.rfind("metric,count,", 0) == 0);
}

TEST_CASE("trajectory and output files") {
  const std::string trace = "cli_test_trace.csv";
  const std::string out = "cli_test_report.json";
  auto r = run({"sweep", "--experiment", "cutoff-traj", "--lambda", "1.5", "--n", "2000", "--trials", "2",
                "--record-trajectory", "--trace-out", trace, "--out", out});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream t(trace);
  std::string header;
  std::getline(t, header);
  CHECK(header == "step,matched,cutoff,light,heavy");
  std::ifstream o(out);
  CHECK(nlohmann::json::parse(o)["experiment"] == "cutoff-traj");
  std::remove(trace.c_str());
  std::remove(out.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"predict", "--lambda", "1.5"}).code == 1);
  CHECK(run({"sweep", "--experiment", "nope", "--lambda", "1", "--n", "10"}).code == 1);
  CHECK(run({"sweep", "--experiment", "core-size", "--lambda", "0.5", "--n", "100"}).code == 1);
  CHECK(run({"predict", "--lambda", "1.5", "--sigma", "0.2", "--n", "10"}).code == 1);
  auto bad = run({"sat"}, "p cnf 2 1\n1 5 0\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
