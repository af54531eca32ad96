#include "qzeta/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qzeta;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "qzeta");
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("poly") {
  const Run k2 = invoke({"poly", "--k", "2"});
  CHECK(k2.rc == 0);
  CHECK(contains(k2.out, "1 + 4z + z^2"));

  const Run k1 = invoke({"poly", "--k", "1"});
  CHECK(contains(k1.out, "P^e_0(z) = 1\n"));
  CHECK(contains(k1.out, "P^o_2(z) = 1 + z^2\n"));

  const Run k5 = invoke({"poly", "--k", "5"});
  CHECK(contains(k5.out, "1 + 19672z + 1736668z^2 + 19971304z^3 + 49441990z^4"));

  CHECK(invoke({"poly", "--k", "0"}).rc == 2);
  CHECK(invoke({"poly"}).rc == 2);
}

TEST_CASE("poly json") {
  const Run r = invoke({"poly", "--k", "3", "--format", "json"});
  REQUIRE(r.rc == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["k"] == 3);
  CHECK(doc.contains("p_odd"));
}

TEST_CASE("verify") {
  const Run ok = invoke({"verify", "--k", "2", "--order", "200"});
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "pass"));
  CHECK(invoke({"verify", "--k", "3", "--order", "400"}).rc == 0);
  CHECK(invoke({"verify", "--k", "4", "--order", "2"}).rc == 2);

  const Run js = invoke({"verify", "--k", "1,4", "--order", "60", "--format", "json"});
  REQUIRE(js.rc == 0);
  const auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 2);
  CHECK(doc[0]["t_is_zero"] == true);
  CHECK(doc[1]["t_parity"] == "even");
  CHECK(doc[1]["status"] == "pass");
}

TEST_CASE("verify output is deterministic") {
  const Run a = invoke({"verify", "--k", "5", "--order", "80", "--format", "json"});
  const Run b = invoke({"verify", "--k", "5", "--order", "80", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("count") {
  const Run r = invoke({"count", "--fourk", "4", "--n-max", "5", "--format", "csv"});
  REQUIRE(r.rc == 0);
  CHECK(contains(r.out, "\n0,1,1,1,yes\n"));
  CHECK(contains(r.out, "\n1,4,4,4,yes\n"));
  CHECK(contains(r.out, "\n2,6,6,6,yes\n"));
  CHECK(invoke({"count", "--k", "2", "--n-max", "3"}).rc == 0);
  CHECK(invoke({"count", "--fourk", "6"}).rc == 2);
  CHECK(invoke({"count"}).rc == 2);
}

TEST_CASE("limit") {
  const Run r = invoke({"limit", "--k", "1"});
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "converging"));
  CHECK_FALSE(contains(r.out, "NOT"));
  CHECK(invoke({"limit", "--k", "1", "--q-points", "1.0"}).rc == 2);

  const Run js = invoke({"limit", "--k", "2", "--q-points", "0.9,0.99", "--format", "json"});
  REQUIRE(js.rc == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["target"].get<double>() == doctest::Approx(0.5 * std::pow(3.141592653589793, 4)));
  CHECK(invoke({"limit", "--k", "2", "--kind", "qgamma"}).rc == 0);
}

TEST_CASE("bench") {
  const Run r = invoke({"bench", "--order", "64", "--format", "csv"});
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "schoolbook,1,64,"));
  CHECK(contains(r.out, "karatsuba,5,64,"));
  CHECK(invoke({"bench", "--order", "10"}).rc == 2);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "qzeta_cli_out_test.txt";
  const std::string p = path.string();
  const Run r = invoke({"poly", "--k", "2", "--out", p.c_str()});
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(contains(buf.str(), "1 + 4z + z^2"));
  std::filesystem::remove(path);
}

TEST_CASE("unknown options are usage errors") {
  CHECK(invoke({"verify", "--k", "1", "--bogus"}).rc == 2);
  CHECK(invoke({"frobnicate"}).rc == 2);
  CHECK(invoke({"verify", "--k", "1", "--format", "yaml"}).rc == 2);
}
