#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "lieconc/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"lieconc"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = lieconc::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json cli_json(std::initializer_list<const char*> args) {
  const Run r = cli(args);
  REQUIRE(r.code == 0);
  return nlohmann::ordered_json::parse(r.out);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"volume", "--series", "su", "--n", "3", "--frobnicate"}).code == 2);
  CHECK(cli({"volume", "--series", "su"}).code == 2);
  CHECK(cli({"volume", "--series", "su", "--n", "three"}).code == 2);
  CHECK(cli({"sample", "--series", "su", "--n", "4", "--r", "0.3"}).code == 2);  // no seed
  CHECK(cli({"volume", "--series", "su", "--n", "1"}).code == 1);
  CHECK(cli({"volume", "--series", "q", "--n", "3"}).code == 1);
  CHECK(cli({"curvature", "--series", "so", "--n", "2"}).code == 1);
  CHECK(cli({"sample", "--series", "su", "--n", "4", "--r", "2.0", "--seed", "1"}).code == 1);
}

TEST_CASE("volume of SU(5)") {
  const auto j = cli_json({"volume", "--series", "su", "--n", "5", "--exact", "--json"});
  CHECK(j["result"]["exact"]["text"] == "512·√5·π^14/9");
  CHECK(j["result"]["formula"] == "√5·(2π)^14/(1!·2!·3!·4!)");
  CHECK(j["result"]["exact"]["value"].get<double>() == doctest::Approx(1.1604078856415e9).epsilon(1e-12));
  CHECK_FALSE(j["result"].contains("log_value"));
  CHECK(j["provenance"]["command"] == "volume");
  CHECK(j["provenance"]["config"]["n"] == 5);
}

TEST_CASE("curvature of so(8)") {
  const auto j = cli_json({"curvature", "--series", "so", "--n", "8", "--report", "json"});
  CHECK(j["result"]["chi"].get<double>() == doctest::Approx(6.0));
  CHECK(j["table"].back()["algebra"] == "so(8)");
  CHECK(j["table"].back()["agrees"] == true);
  // su(n) is where the printed value and the computed one part ways
  const auto su = cli_json({"curvature", "--series", "su", "--n", "4", "--json"});
  CHECK(su["result"]["chi"].get<double>() == doctest::Approx(8.0));
  CHECK(su["table"].back()["agrees"] == false);
}

TEST_CASE("csv and text render the same report") {
  const Run csv = cli({"ratio", "--series", "a", "--n", "2", "--to", "4", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("n,dim_step,ratio_exponent,asymptote,quotient\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);
  const Run text = cli({"cpn", "--n", "2", "calibrate"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("result.theta_periods = [") != std::string::npos);
}

TEST_CASE("sample output is byte-identical for a fixed seed") {
  const auto args = {"sample", "--series", "su", "--n", "10", "--count", "1000", "--r", "0.5", "--seed", "7", "--json"};
  const Run a = cli(args), b = cli(args);
  const Run c = cli({"sample", "--series", "su", "--n", "10", "--count", "1000", "--r", "0.5", "--seed", "7", "--json",
                     "--workers", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j["provenance"]["seed"] == 7);
  CHECK(j["result"]["count"] == 1000);
  CHECK(j["result"]["predicted_mass"].get<double>() == doctest::Approx(0.90468).epsilon(1e-4));
  CHECK(j.dump(2) + "\n" == a.out);  // canonical form survives a round trip
  const Run d = cli({"sample", "--series", "su", "--n", "10", "--count", "1000", "--r", "0.5", "--seed", "8", "--json"});
  CHECK(d.out != a.out);
}

TEST_CASE("histogram export") {
  const std::string path = "test_cli_hist.csv";
  const Run r = cli({"sample", "--series", "usp", "--n", "2", "--count", "500", "--r", "0.5", "--seed", "3", "--hist",
                     "dist", "--bins", "10", "--hist-out", path.c_str()});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "bin_lo,bin_hi,count");
  long total = 0;
  while (std::getline(f, line)) total += std::stol(line.substr(line.rfind(',') + 1));
  CHECK(total == 500);
  std::remove(path.c_str());
}

TEST_CASE("levy table and cpn checks") {
  const auto j = cli_json({"levy", "--series", "su", "--from", "2", "--to", "10", "--json"});
  CHECK(j["table"][8]["R_i"].get<double>() == doctest::Approx(3.0));
  CHECK(j["result"]["levy"] == true);
  CHECK(j["result"]["diverges"] == true);
  const auto m = cli_json({"cpn", "--n", "2", "check-metric", "--points", "10", "--json"});
  CHECK(m["result"]["passed"] == true);
  const auto b = cli_json({"cpn", "--n", "3", "band-mass", "--eps", "0.3", "--json"});
  CHECK(b["result"]["abs_diff"].get<double>() < 1e-12);
}
