#include "hookline/harness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hookline/closed_forms.hpp"
#include "hookline/error.hpp"
#include "hookline/ground_truth.hpp"
#include "hookline/subset_poly.hpp"
#include "hookline/tableau.hpp"

namespace hookline {

std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::des: return "des";
    case Statistic::maj: return "maj";
    case Statistic::comaj: return "comaj";
    case Statistic::descent_set: return "descent-set";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (Statistic s : {Statistic::des, Statistic::maj, Statistic::comaj, Statistic::descent_set})
    if (name == statistic_name(s)) return s;
  if (name == "Des" || name == "descent_set") return Statistic::descent_set;
  throw InputError("unknown statistic '" + std::string(name) + "'");
}

namespace {

std::optional<std::pair<std::string, std::vector<Count>>> scalar_closed_form(PermClass cls, Statistic stat) {
  const int n = cls.n;
  using Result = std::pair<std::string, std::vector<Count>>;
  if (stat == Statistic::des) {
    std::vector<Count> v;
    if (cls.tag == ClassTag::i321) {
      for (int k = 0; k < std::max(n, 1); ++k) v.push_back(des_count_formula(n, k));
      return Result{"C(ceil(n/2),k)*C(floor(n/2),k)", v};
    }
    if (cls.tag == ClassTag::i321_312) return Result{"binomial(n-k,k)", fibonacci_des_counts(n)};
    return std::nullopt;
  }
  if (stat == Statistic::maj) {
    switch (cls.tag) {
      case ClassTag::i321: return Result{"qbinomial(n,floor(n/2))", q_binomial(n, n / 2).coeffs()};
      case ClassTag::i321_312: return Result{"fibonacci_maj", fibonacci_maj(n).coeffs()};
      case ClassTag::i321_213:
        if (n >= 1) return Result{"(1-q^n)/(1-q) [claimed]", double213_claim(n).coeffs()};
        return std::nullopt;
      case ClassTag::s321: return Result{"A_{n,n}(q,q^2,...)", specialize(a_poly(n, n, APolyMethod::recurrence)).coeffs()};
      default: return std::nullopt;
    }
  }
  if (stat == Statistic::comaj && cls.tag == ClassTag::i123)
    return Result{"qbinomial(n,floor(n/2))", q_binomial(n, n / 2).coeffs()};
  return std::nullopt;
}

}  // namespace

DistributionTable distribution(PermClass cls, Statistic statistic, Backend backend) {
  DistributionTable table;
  table.cls = cls;
  table.statistic = statistic;

  if (statistic == Statistic::descent_set) {
    const SubsetPoly enumerated = descent_set_poly(cls, backend);
    std::optional<SubsetPoly> closed;
    if (cls.tag == ClassTag::s321) {
      SubsetPoly c;
      for (const IndexSet& s : sparse_subsets(std::max(cls.n - 1, 0))) c.add_term(to_mask(s), exact_descent_count(cls.n, s));
      closed = c;
      table.closed_form = "inclusion-exclusion over Catalan numbers";
    } else if (cls.tag == ClassTag::i321) {
      SubsetPoly c;
      for_each_in_box(BoxSpec{cls.n}, [&](const Partition& l) { c.add_term(to_mask(hook_decomposition(l)), 1); });
      closed = c;
      table.closed_form = "partitions in B_n by hook decomposition";
    }
    // Row keys: every set with a nonzero count on either side.
    std::set<SubsetPoly::Mask> masks;
    for (auto [m, c] : enumerated.terms()) masks.insert(m);
    if (closed)
      for (auto [m, c] : closed->terms()) masks.insert(m);
    SubsetPoly keys;
    for (auto m : masks) keys.add_term(m, 1);
    table.matches = closed.has_value();
    for (const IndexSet& s : ordered_monomials(keys)) {
      DistributionRow row{format_set(s), enumerated.coeff(s), std::nullopt};
      if (closed) {
        row.closed_form = closed->coeff(s);
        table.matches = table.matches && *row.closed_form == row.count;
      }
      table.rows.push_back(std::move(row));
    }
    return table;
  }

  std::vector<Count> counts;
  switch (statistic) {
    case Statistic::des: counts = des_histogram(cls, backend); break;
    case Statistic::maj: counts = maj_poly(cls, MajorStatistic::maj, backend).coeffs(); break;
    default: counts = maj_poly(cls, MajorStatistic::comaj, backend).coeffs(); break;
  }
  const auto closed = scalar_closed_form(cls, statistic);
  std::size_t rows = counts.size();
  if (closed) {
    table.closed_form = closed->first;
    rows = std::max(rows, closed->second.size());
  }
  table.matches = closed.has_value();
  for (std::size_t k = 0; k < rows; ++k) {
    DistributionRow row{std::to_string(k), k < counts.size() ? counts[k] : 0, std::nullopt};
    if (closed) {
      row.closed_form = k < closed->second.size() ? closed->second[k] : 0;
      table.matches = table.matches && *row.closed_form == row.count;
    }
    table.rows.push_back(std::move(row));
  }
  while (table.rows.size() > 1 && table.rows.back().count == 0 && table.rows.back().closed_form.value_or(0) == 0)
    table.rows.pop_back();
  return table;
}

std::vector<std::string> split_chain(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string name(text.substr(start, end - start));
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    if (!name.empty()) out.push_back(name);
    start = end + 1;
  }
  return out;
}

std::string to_string(const ChainValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

namespace {

std::string path_kind(const LatticePath& p) {
  const PathKind k = classify(p);
  if (k.is_prefix) return "prefix";
  if (k.is_grand) return "grand";
  return "path";
}

template <class T>
const T& expect_value(const ChainValue& v, const std::string& map, const char* what) {
  if (const T* x = std::get_if<T>(&v)) return *x;
  throw InputError("map '" + map + "' expects a " + what + " but the chain holds " + to_string(v));
}

}  // namespace

ChainTrace map_chain(const ChainValue& input, const std::vector<std::string>& chain, std::optional<int> box) {
  ChainTrace trace;
  int box_n = box.value_or(-1);

  // Dyck paths from the S_n(321) bijection carry Des as the peaks in their
  // first half.
  auto make_stage = [&](std::string map, ChainValue value, bool preserves, std::string kind) {
    ChainStage st{std::move(map), std::move(value), std::move(kind), "", {}, preserves};
    if (const auto* p = std::get_if<Permutation>(&st.value)) {
      st.kind = "permutation";
      st.statistic_name = "Des";
      st.statistic = descent_set(*p);
    } else if (const auto* path = std::get_if<LatticePath>(&st.value)) {
      if (st.kind.empty()) st.kind = path_kind(*path);
      st.statistic = peak_set(*path);
      st.statistic_name = "Peak";
      if (st.kind == "dyck") {
        const int n = path->length() / 2;
        std::erase_if(st.statistic, [n](int label) { return label > n - 1; });
        st.statistic_name = "Peak∩[n-1]";
      }
      box_n = path->length();
    } else {
      st.kind = "partition";
      st.statistic_name = "hd";
      st.statistic = hook_decomposition(std::get<Partition>(st.value));
    }
    return st;
  };

  const bool dyck_input = !chain.empty() && chain.front() == "s321-inv";
  trace.stages.push_back(make_stage("input", input, true, dyck_input ? "dyck" : ""));
  for (const std::string& map : chain) {
    const ChainValue& cur = trace.stages.back().value;
    ChainValue next;
    bool preserves = true;
    std::string kind;
    if (map == "rho") {
      next = rho(expect_value<Permutation>(cur, map, "permutation"));
      kind = "prefix";
    } else if (map == "rho-inv") {
      next = rho_inverse(expect_value<LatticePath>(cur, map, "path"));
    } else if (map == "xi") {
      next = xi(expect_value<LatticePath>(cur, map, "path"));
      kind = "grand";
    } else if (map == "xi-inv") {
      next = xi_inverse(expect_value<LatticePath>(cur, map, "path"));
      kind = "prefix";
    } else if (map == "psi-inv") {
      next = psi_inverse(expect_value<LatticePath>(cur, map, "path"));
    } else if (map == "psi" || map == "boundary") {
      const auto& l = expect_value<Partition>(cur, map, "partition");
      if (box_n < 0) throw InputError("map '" + map + "' needs a box size for a partition input");
      next = map == "psi" ? psi(l, BoxSpec{box_n}) : boundary_path(l, BoxSpec{box_n});
      preserves = map == "psi";
      kind = "grand";
    } else if (map == "boundary-inv") {
      next = partition_from_boundary(expect_value<LatticePath>(cur, map, "path"));
      preserves = false;
    } else if (map == "s321") {
      next = s321_to_dyck(expect_value<Permutation>(cur, map, "permutation"));
      kind = "dyck";
    } else if (map == "s321-inv") {
      next = dyck_to_s321(expect_value<LatticePath>(cur, map, "path"));
    } else if (map == "transpose") {
      next = involution_transpose(expect_value<Permutation>(cur, map, "permutation"));
      preserves = false;
    } else {
      throw InputError("unknown map '" + map + "'");
    }
    ChainStage st = make_stage(map, std::move(next), preserves, kind);
    if (preserves && st.statistic != trace.stages.back().statistic) trace.statistic_constant = false;
    trace.stages.push_back(std::move(st));
  }
  return trace;
}

}  // namespace hookline
