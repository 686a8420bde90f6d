// hookline: command-line front end for the library.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "hookline/closed_forms.hpp"
#include "hookline/error.hpp"
#include "hookline/ground_truth.hpp"
#include "hookline/harness.hpp"
#include "hookline/json_io.hpp"
#include "hookline/render.hpp"
#include "hookline/tableau.hpp"
#include "hookline/verify.hpp"

using namespace hookline;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw InputError("unsupported format '" + format + "'");
}

int run_stats(const std::string& text, const std::string& format) {
  require_format(format, {"text", "json"});
  const Permutation p = parse_permutation(text);
  const DescentProfile d = descent_profile(p);
  Json out{{"perm", to_string(p)},
           {"n", p.size()},
           {"des", d.descent_set},
           {"asc", d.ascent_set},
           {"maj", d.maj},
           {"comaj", d.comaj},
           {"involution", is_involution(p)},
           {"avoids_321", avoids_321(p)}};
  Json classes = Json::array();
  for (ClassTag tag : {ClassTag::involutions, ClassTag::i321, ClassTag::i123, ClassTag::i321_312,
                       ClassTag::i321_213, ClassTag::s321})
    if (contains(tag, p)) classes.push_back(class_name(tag));
  out["classes"] = classes;
  const TableauPair rs = rs_correspondence(p);
  out["insertion"] = to_string(rs.insertion);
  out["recording"] = to_string(rs.recording);
  if (contains(ClassTag::i321, p)) {
    const LatticePath prefix = rho(p);
    const LatticePath grand = xi(prefix);
    const Partition lambda = psi_inverse(grand);
    out["prefix"] = to_string(prefix);
    out["grand"] = to_string(grand);
    out["partition"] = to_string(lambda);
    out["hd"] = hook_decomposition(lambda);
  }
  if (contains(ClassTag::s321, p)) out["dyck"] = to_string(s321_to_dyck(p));

  if (format == "json") {
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "perm:       " << to_string(p) << '\n'
            << "n:          " << p.size() << '\n'
            << "des:        " << format_set(d.descent_set) << '\n'
            << "asc:        " << format_set(d.ascent_set) << '\n'
            << "maj:        " << d.maj << '\n'
            << "comaj:      " << d.comaj << '\n'
            << "involution: " << (is_involution(p) ? "yes" : "no") << '\n'
            << "classes:    ";
  for (std::size_t i = 0; i < classes.size(); ++i) std::cout << (i ? " " : "") << classes[i].get<std::string>();
  std::cout << '\n'
            << "P:          " << to_string(rs.insertion) << '\n'
            << "Q:          " << to_string(rs.recording) << '\n';
  for (const char* key : {"prefix", "grand", "partition", "dyck"})
    if (out.contains(key)) std::cout << std::string(key) + ":" << std::string(11 - std::string(key).size(), ' ')
                                     << out[key].get<std::string>() << '\n';
  if (out.contains("hd")) std::cout << "hd:         " << format_set(out["hd"].get<IndexSet>()) << '\n';
  return 0;
}

ChainValue parse_chain_input(const std::string& text, const std::string& kind) {
  if (kind == "perm") return parse_permutation(text);
  if (kind == "path") return parse_path(text);
  if (kind == "partition") return parse_partition(text);
  throw InputError("unknown input kind '" + kind + "'");
}

int run_map(const std::string& text, const std::string& chain, const std::string& kind, std::optional<int> box,
            const std::string& format) {
  require_format(format, {"text", "json"});
  const ChainTrace trace = map_chain(parse_chain_input(text, kind), split_chain(chain), box);
  if (format == "json") {
    std::cout << to_json(trace).dump() << '\n';
    return 0;
  }
  RenderSpec spec;
  std::cout << render_chain(trace, spec);
  return 0;
}

int run_enumerate(const std::string& cls, int n, const std::string& stat, const std::string& format,
                  const std::string& backend) {
  require_format(format, {"text", "json", "csv"});
  if (backend != "structural" && backend != "brute") throw InputError("unknown backend '" + backend + "'");
  const DistributionTable table = distribution(PermClass{parse_class(cls), n}, parse_statistic(stat),
                                               backend == "brute" ? Backend::brute : Backend::structural);
  if (format == "json") {
    std::cout << to_json(table).dump() << '\n';
  } else if (format == "csv") {
    std::cout << to_csv(table);
  } else {
    std::cout << class_name(table.cls.tag) << " n=" << n << " statistic " << statistic_name(table.statistic)
              << '\n';
    for (const auto& r : table.rows) {
      std::cout << "  " << r.key << ": " << r.count;
      if (r.closed_form) std::cout << "  (" << table.closed_form << ": " << *r.closed_form << ")";
      std::cout << '\n';
    }
    if (!table.closed_form.empty())
      std::cout << table.closed_form << ": " << (table.matches ? "matches" : "differs") << '\n';
  }
  return 0;
}

struct PolyArgs {
  std::string id;
  std::optional<int> n, j, k, m, order;
  std::string cls = "i321";
  std::string method = "recurrence";
  std::string hooks;
  std::string format = "text";
};

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw InputError(std::string("--") + name + " is required for this polynomial");
  return *v;
}

int run_poly(const PolyArgs& a) {
  require_format(a.format, {"text", "json"});
  std::optional<QPoly> q;
  std::optional<SubsetPoly> s;
  std::optional<Count> scalar;
  if (a.id == "qbinom") {
    q = q_binomial(need(a.n, "n"), need(a.j, "j"));
  } else if (a.id == "joint") {
    q = joint_des_maj(need(a.n, "n"), need(a.k, "k"));
  } else if (a.id == "fib-maj") {
    q = fibonacci_maj(need(a.n, "n"));
  } else if (a.id == "double213-claim") {
    q = double213_claim(need(a.n, "n"));
  } else if (a.id == "double213") {
    q = double213_enumerated(need(a.n, "n"));
  } else if (a.id == "maj" || a.id == "comaj") {
    q = maj_poly(PermClass{parse_class(a.cls), need(a.n, "n")},
                 a.id == "maj" ? MajorStatistic::maj : MajorStatistic::comaj);
  } else if (a.id == "apoly") {
    if (a.method != "recurrence" && a.method != "direct") throw InputError("unknown method '" + a.method + "'");
    const int n = need(a.n, "n");
    s = a_poly(n, a.m.value_or(n), a.method == "direct" ? APolyMethod::direct : APolyMethod::recurrence);
  } else if (a.id == "descent-set") {
    s = descent_set_poly(PermClass{parse_class(a.cls), need(a.n, "n")});
  } else if (a.id == "limit") {
    q = limit_joint_series(need(a.k, "k"), need(a.order, "order"));
  } else if (a.id == "limit-hd") {
    scalar = limit_hd_coefficient(parse_index_set(a.hooks));
  } else {
    throw InputError("unknown polynomial id '" + a.id + "'");
  }

  if (a.format == "json") {
    if (q) std::cout << to_json(*q).dump() << '\n';
    if (s) std::cout << to_json(*s).dump() << '\n';
    if (scalar) std::cout << Json{{"coeff", *scalar}}.dump() << '\n';
  } else {
    if (q) std::cout << to_string(*q) << '\n';
    if (s) std::cout << to_string(*s) << '\n';
    if (scalar) std::cout << *scalar << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite, std::optional<int> max_n, int jobs, const std::string& format,
               bool failures_only) {
  require_format(format, {"text", "json"});
  if (jobs < 1) throw InputError("--jobs must be positive");
  if (max_n && *max_n < 0) throw InputError("--max-n must be non-negative");
  const VerificationReport report = verify(suite, max_n, jobs);
  if (format == "json") std::cout << to_json(report).dump(2) << '\n';
  else std::cout << format_report(report, failures_only);
  return report.passed() ? 0 : kExitVerifyFailed;
}

int run_render(const std::string& text, RenderSpec spec, const std::string& object, const std::string& format,
               const std::string& chain) {
  spec.object = parse_render_object(object);
  spec.format = parse_render_format(format);
  spec.chain = split_chain(chain);
  std::cout << render(spec, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hookline: 321-avoiding involutions, lattice paths and hook decompositions"};
  app.require_subcommand(1);
  int status = 0;

  std::string perm_text, stats_format = "text";
  auto* stats = app.add_subcommand("stats", "Descent statistics and bijection images of a permutation");
  stats->add_option("perm", perm_text, "Permutation in one-line notation, e.g. \"3 4 1 2\" or 3,4,1,2")->required();
  stats->add_option("--format", stats_format, "text or json");

  std::string map_input, map_chain_text = "rho,xi,psi-inv", map_kind = "perm", map_format = "text";
  std::optional<int> map_box;
  auto* map = app.add_subcommand("map", "Push an object through a chain of bijections");
  map->add_option("value", map_input, "Permutation, path or partition")->required();
  map->add_option("--chain", map_chain_text, "Comma separated maps (rho, rho-inv, xi, xi-inv, psi, psi-inv, "
                                             "boundary, boundary-inv, s321, s321-inv, transpose)");
  map->add_option("--from", map_kind, "Input kind: perm, path or partition");
  map->add_option("--box", map_box, "n of the box B_n for a partition input");
  map->add_option("--format", map_format, "text or json");

  std::string enum_class, enum_stat = "des", enum_format = "text", enum_backend = "structural";
  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Distribution of a statistic over a permutation class");
  enumerate->add_option("--class", enum_class, "all, involutions, i321, i123, i321-312, i321-213, s321")->required();
  enumerate->add_option("--n", enum_n, "Permutation size")->required();
  enumerate->add_option("--stat", enum_stat, "des, maj, comaj or descent-set");
  enumerate->add_option("--format", enum_format, "text, json or csv");
  enumerate->add_option("--backend", enum_backend, "structural or brute");

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Closed-form or enumerated polynomial");
  poly->add_option("--id", poly_args.id,
                   "qbinom, joint, fib-maj, double213-claim, double213, maj, comaj, apoly, descent-set, limit, "
                   "limit-hd")
      ->required();
  poly->add_option("--n", poly_args.n);
  poly->add_option("--j", poly_args.j);
  poly->add_option("--k", poly_args.k);
  poly->add_option("--m", poly_args.m);
  poly->add_option("--order", poly_args.order);
  poly->add_option("--class", poly_args.cls, "Class for maj, comaj and descent-set");
  poly->add_option("--method", poly_args.method, "recurrence or direct (apoly)");
  poly->add_option("--hooks", poly_args.hooks, "Hook set for limit-hd, e.g. 2,6,8");
  poly->add_option("--format", poly_args.format, "text or json");

  std::string verify_suite = "all", verify_format = "text";
  std::optional<int> verify_max_n;
  int verify_jobs = 1;
  bool verify_failures_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify_suite, "Suite id or all");
  verify_cmd->add_option("--max-n", verify_max_n, "Size bound");
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads");
  verify_cmd->add_option("--format", verify_format, "text or json");
  verify_cmd->add_flag("--failures-only", verify_failures_only, "Print only failing records");
  auto* list = app.add_subcommand("suites", "List verification suites");

  RenderSpec render_spec;
  std::string render_input, render_object = "path", render_format = "ascii", render_chain_text = "rho,xi,psi-inv";
  bool no_peaks = false, no_shading = false, no_box = false;
  auto* render_cmd = app.add_subcommand("render", "Draw a path, partition, tableau or bijection chain");
  render_cmd->add_option("input", render_input, "Object to draw")->required();
  render_cmd->add_option("--object", render_object, "path, partition, tableau or permutation-chain");
  render_cmd->add_option("--format", render_format, "ascii or svg");
  render_cmd->add_option("--box", render_spec.box, "n of the box B_n");
  render_cmd->add_option("--chain", render_chain_text, "Maps for permutation-chain");
  render_cmd->add_flag("--no-peak-labels", no_peaks);
  render_cmd->add_flag("--no-hook-shading", no_shading);
  render_cmd->add_flag("--no-box-outline", no_box);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*stats) status = run_stats(perm_text, stats_format);
    else if (*map) status = run_map(map_input, map_chain_text, map_kind, map_box, map_format);
    else if (*enumerate) status = run_enumerate(enum_class, enum_n, enum_stat, enum_format, enum_backend);
    else if (*poly) status = run_poly(poly_args);
    else if (*verify_cmd)
      status = run_verify(verify_suite, verify_max_n, verify_jobs, verify_format, verify_failures_only);
    else if (*list) {
      for (const auto& s : suites()) std::cout << s.id << " (default bound " << s.default_bound << "): " << s.summary << '\n';
    } else if (*render_cmd) {
      render_spec.peak_labels = !no_peaks;
      render_spec.hook_shading = !no_shading;
      render_spec.box_outline = !no_box;
      status = run_render(render_input, render_spec, render_object, render_format, render_chain_text);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return status;
}
