#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOOKLINE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("stats") {
  const Run r = run("stats --format json \"3 4 1 2 7 9 5 10 6 8 11 12\"");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["des"] == nlohmann::json::array({2, 6, 8}));
  CHECK(j["maj"] == 16);
  CHECK(j["prefix"] == "NNEENNENEENN");
  CHECK(j["partition"] == "4,4,3,3,2");
  CHECK(run("stats 1,2,3").status == 0);
}

TEST_CASE("map") {
  const Run r = run("map --chain rho,xi,psi-inv --format json 3,4,1,2,7,9,5,10,6,8,11,12");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["stages"][3]["value"] == "4,4,3,3,2");
  CHECK(j["statistic_constant"] == true);
  CHECK(run("map --chain rho 3,2,1").status == 2);
}

TEST_CASE("enumerate") {
  const Run js = run("enumerate --class i321 --n 8 --stat maj --format json");
  REQUIRE(js.status == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["matches"] == true);
  CHECK(j["rows"].size() == 17);

  const Run csv = run("enumerate --class i321 --n 4 --stat des --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out == "value,count,closed_form\n0,1,1\n1,4,4\n2,1,1\n");

  CHECK(run("enumerate --class nope --n 4").status == 2);
  CHECK(run("enumerate --class all --n 12 --backend brute").status == 2);
}

TEST_CASE("poly") {
  const Run q = run("poly --id qbinom --n 8 --j 4 --format json");
  REQUIRE(q.status == 0);
  CHECK(q.out == "{\"var\":\"q\",\"coeffs\":[1,1,2,3,5,5,7,7,8,7,7,5,5,3,2,1,1]}\n");
  CHECK(run("poly --id qbinom --n 4 --j 2").out == "1 + q + 2q^2 + q^3 + q^4\n");
  CHECK(run("poly --id apoly --n 3 --format json").out ==
        "[{\"vars\":[],\"coeff\":1},{\"vars\":[1],\"coeff\":2},{\"vars\":[2],\"coeff\":2}]\n");
  CHECK(run("poly --id limit-hd --hooks 2,6,8").out == "6\n");
  CHECK(run("poly --id qbinom --n 4").status == 2);
  CHECK(run("poly --id nothing --n 4").status == 2);
}

TEST_CASE("verify") {
  const Run r = run("verify --suite double-213 --max-n 6");
  CHECK(r.status == 0);
  CHECK(r.out.find("[known-discrepancy] double-213/closed-form-vs-enumeration n=3") != std::string::npos);
  CHECK(run("verify --suite all --max-n 8 --jobs 2 --failures-only").status == 0);
  CHECK(run("verify --suite bogus").status == 2);
  CHECK(run("verify --jobs 0").status == 2);
}

TEST_CASE("render") {
  const Run r = run("render --object partition --box 12 \"4,4,3,3,2\" --format svg");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(run("render --object partition --box 4 \"4,4\"").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("stats").status == 2);
  CHECK(run("--help").status == 0);
}
