#include "hookline/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "hookline/error.hpp"

namespace hookline {

Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (Count c : p.coeffs()) coeffs.push_back(c);
  return Json{{"var", "q"}, {"coeffs", coeffs}};
}

Json to_json(const SubsetPoly& p) {
  Json out = Json::array();
  for (const auto& set : ordered_monomials(p)) out.push_back(Json{{"vars", set}, {"coeff", p.coeff(set)}});
  return out;
}

Json to_json(const DistributionTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"value", r.key}, {"count", r.count}};
    if (r.closed_form) row["closed_form"] = *r.closed_form;
    rows.push_back(row);
  }
  Json out{{"class", class_name(t.cls.tag)}, {"n", t.cls.n}, {"statistic", statistic_name(t.statistic)},
           {"rows", rows}};
  if (!t.closed_form.empty()) {
    out["closed_form"] = t.closed_form;
    out["matches"] = t.matches;
  }
  return out;
}

Json to_json(const ChainTrace& t) {
  Json stages = Json::array();
  for (const auto& s : t.stages)
    stages.push_back(Json{{"map", s.map},
                          {"kind", s.kind},
                          {"value", to_string(s.value)},
                          {"statistic", s.statistic_name},
                          {"set", s.statistic},
                          {"preserves", s.preserves}});
  return Json{{"stages", stages}, {"statistic_constant", t.statistic_constant}};
}

Json to_json(const VerificationReport& r) {
  Json records = Json::array();
  for (const auto& c : r.records)
    records.push_back(Json{{"check_id", c.check_id},
                           {"parameter", c.parameter},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"status", status_name(c.status)}});
  return Json{{"suite", r.suite},
              {"passed", r.passed()},
              {"pass", r.count(CheckStatus::pass)},
              {"fail", r.count(CheckStatus::fail)},
              {"known_discrepancy", r.count(CheckStatus::known_discrepancy)},
              {"elapsed_seconds", r.elapsed_seconds},
              {"records", records}};
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_object() || j.value("var", "") != "q" || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("expected {\"var\":\"q\",\"coeffs\":[...]}");
  return QPoly(j["coeffs"].get<std::vector<Count>>());
}

SubsetPoly subset_poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of {\"vars\":[...],\"coeff\":c}");
  SubsetPoly out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("vars") || !term.contains("coeff"))
      throw InputError("malformed subset polynomial term");
    IndexSet vars = term["vars"].get<IndexSet>();
    std::sort(vars.begin(), vars.end());
    out += SubsetPoly::monomial(vars, term["coeff"].get<Count>());
  }
  return out;
}

std::string to_csv(const DistributionTable& t) {
  std::ostringstream out;
  const bool cf = !t.closed_form.empty();
  out << "value,count" << (cf ? ",closed_form" : "") << '\n';
  for (const auto& r : t.rows) {
    const bool quote = r.key.find(',') != std::string::npos;
    out << (quote ? "\"" + r.key + "\"" : r.key) << ',' << r.count;
    if (cf) {
      out << ',';
      if (r.closed_form) out << *r.closed_form;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hookline
