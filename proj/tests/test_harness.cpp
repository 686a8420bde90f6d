#include <doctest.h>

#include "hookline/error.hpp"
#include "hookline/harness.hpp"
#include "hookline/json_io.hpp"
#include "hookline/render.hpp"
#include "hookline/verify.hpp"

using namespace hookline;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

const Permutation kPipelineInput = P({3, 4, 1, 2, 7, 9, 5, 10, 6, 8, 11, 12});

std::vector<std::pair<std::string, Count>> rows_of(const DistributionTable& t) {
  std::vector<std::pair<std::string, Count>> out;
  for (const auto& r : t.rows) out.emplace_back(r.key, r.count);
  return out;
}

}  // namespace

TEST_CASE("distribution tables") {
  const auto des = distribution({ClassTag::i321, 4}, Statistic::des);
  CHECK(rows_of(des) == std::vector<std::pair<std::string, Count>>{{"0", 1}, {"1", 4}, {"2", 1}});
  CHECK(des.matches);

  const auto m = distribution({ClassTag::i321, 4}, Statistic::maj);
  CHECK(rows_of(m) == std::vector<std::pair<std::string, Count>>{{"0", 1}, {"1", 1}, {"2", 2}, {"3", 1}, {"4", 1}});
  CHECK(m.matches);

  for (Statistic s : {Statistic::des, Statistic::maj, Statistic::comaj, Statistic::descent_set}) {
    const auto one = distribution({ClassTag::i321, 1}, s);
    CHECK(one.rows.size() == 1);
    CHECK(one.rows[0].count == 1);
  }

  const auto ds = distribution({ClassTag::s321, 5}, Statistic::descent_set);
  CHECK(ds.matches);
  const auto claim = distribution({ClassTag::i321_213, 4}, Statistic::maj);
  CHECK_FALSE(claim.matches);
}

TEST_CASE("map chain through the full pipeline") {
  const auto trace = map_chain(kPipelineInput, {"rho", "xi", "psi-inv"});
  REQUIRE(trace.stages.size() == 4);
  CHECK(to_string(trace.stages[1].value) == "NNEENNENEENN");
  CHECK(trace.stages[1].kind == "prefix");
  CHECK(to_string(trace.stages[2].value) == "NNEENNENEEEN");
  CHECK(trace.stages[2].kind == "grand");
  CHECK(to_string(trace.stages[3].value) == "4,4,3,3,2");
  for (const auto& st : trace.stages) CHECK(st.statistic == IndexSet{2, 6, 8});
  CHECK(trace.statistic_constant);
}

TEST_CASE("map chain edge cases") {
  const auto id = map_chain(Permutation::identity(5), split_chain("rho,xi,psi-inv"));
  CHECK(to_string(id.stages[1].value) == "NNNNN");
  CHECK(peak_set(std::get<LatticePath>(id.stages[2].value)).empty());
  CHECK(std::get<Partition>(id.stages[3].value) == Partition{});

  const auto s = map_chain(P({2, 1, 4, 3}), {"s321"});
  CHECK(std::get<LatticePath>(s.stages[1].value).length() == 8);
  CHECK(s.statistic_constant);

  const auto back = map_chain(Partition({4, 4, 3, 3, 2}), {"psi", "xi-inv", "rho-inv"}, 12);
  CHECK(std::get<Permutation>(back.stages.back().value) == kPipelineInput);

  CHECK_THROWS_AS(map_chain(P({3, 2, 1}), {"rho"}), InputError);
  CHECK_THROWS_AS(map_chain(kPipelineInput, {"psi"}), InputError);
  CHECK_THROWS_AS(map_chain(kPipelineInput, {"nope"}), InputError);
  CHECK(split_chain(" rho , xi ,psi-inv") == std::vector<std::string>{"rho", "xi", "psi-inv"});
}

TEST_CASE("statistic trace is constant for every involution, n <= 10") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate({ClassTag::i321, n})) {
      const auto t = map_chain(p, {"rho", "xi", "psi-inv", "psi", "xi-inv", "rho-inv"});
      REQUIRE(t.statistic_constant);
      REQUIRE(std::get<Permutation>(t.stages.back().value) == p);
    }
}

TEST_CASE("render") {
  RenderSpec spec;
  const std::string path = render_path(parse_path("NE"), spec);
  CHECK(path.rfind("*-o\n|\no .\n", 0) == 0);
  CHECK(path.find("peaks: {1}") != std::string::npos);

  spec.object = RenderObject::partition;
  spec.box = 12;
  const std::string diagram = render(spec, "4,4,3,3,2");
  CHECK(diagram.find("|1111..|\n|1222..|\n|123...|\n|123...|\n|12....|\n|......|") != std::string::npos);
  CHECK(diagram.find("hd: {2,6,8}") != std::string::npos);

  for (RenderObject o : {RenderObject::path, RenderObject::partition, RenderObject::tableau,
                         RenderObject::permutation_chain}) {
    RenderSpec svg;
    svg.object = o;
    svg.format = RenderFormat::svg;
    const char* input = o == RenderObject::path        ? "NNEENNENEEEN"
                        : o == RenderObject::partition ? "4,4,3,3,2"
                        : o == RenderObject::tableau   ? "1 2 5; 3 4"
                                                       : "3 4 1 2";
    const std::string out = render(svg, input);
    CHECK(out.rfind("<?xml", 0) == 0);
    CHECK(out.find("</svg>") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_render_object("cube"), InputError);
}

TEST_CASE("json shapes") {
  CHECK(to_json(QPoly({1, 1, 2, 1, 1})).dump() == R"({"var":"q","coeffs":[1,1,2,1,1]})");
  SubsetPoly a = SubsetPoly::constant(1) + SubsetPoly::monomial({1}, 2) + SubsetPoly::monomial({1, 3}, -1);
  CHECK(to_json(a).dump() == R"([{"vars":[],"coeff":1},{"vars":[1],"coeff":2},{"vars":[1,3],"coeff":-1}])");
  CHECK(subset_poly_from_json(to_json(a)) == a);
  CHECK(qpoly_from_json(to_json(QPoly({0, 3}))) == QPoly({0, 3}));
  CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"({"var":"t","coeffs":[1]})")), InputError);

  const std::string csv = to_csv(distribution({ClassTag::i321, 4}, Statistic::des));
  CHECK(csv == "value,count,closed_form\n0,1,1\n1,4,4\n2,1,1\n");
}

TEST_CASE("verify examples") {
  const auto main = verify("main-theorem", 10);
  CHECK(main.passed());
  CHECK(main.count(CheckStatus::fail) == 0);
  CHECK(main.count(CheckStatus::known_discrepancy) == 0);

  const auto d213 = verify("double-213", 6);
  CHECK(d213.passed());
  bool found = false;
  for (const auto& r : d213.records)
    if (r.status == CheckStatus::known_discrepancy && r.parameter == "n=3") {
      found = true;
      CHECK(r.expected == "1 + q + q^2");
      CHECK(r.actual == "1 + q^2");
    }
  CHECK(found);

  for (int bound : {0, 1}) CHECK(verify("all", bound).passed());
  CHECK_THROWS_AS(verify("no-such-suite"), InputError);
}

TEST_CASE("known discrepancies appear only in the registered suite") {
  const auto report = verify("all", 8);
  for (const auto& r : report.records)
    if (r.status == CheckStatus::known_discrepancy) CHECK(r.check_id.rfind("double-213/", 0) == 0);
}

TEST_CASE("verify is deterministic across worker counts") {
  const auto one = verify("all", 9, 1);
  const auto four = verify("all", 9, 4);
  REQUIRE(one.records.size() == four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].check_id == four.records[i].check_id);
    CHECK(one.records[i].parameter == four.records[i].parameter);
    CHECK(one.records[i].actual == four.records[i].actual);
    CHECK(one.records[i].status == four.records[i].status);
  }
}
