#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "peelkit/bounds.hpp"
#include "peelkit/construction.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"
#include "peelkit/io.hpp"
#include "peelkit/peeling.hpp"
#include "peelkit/svg.hpp"
#include "peelkit/verify.hpp"

using namespace peelkit;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out;
};

Json enclosure_report(const Enclosure& e) {
  Json j;
  j["enclosure"] = enclosure_to_json(e);
  j["approx"] = approx_decimal(e.mid(), 6);
  return j;
}

void print_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it.value().is_object() && !it.value().contains("enclosure")) {
        print_text(it.value(), key, os);
      } else if (it.value().is_object()) {
        const auto& e = it.value()["enclosure"];
        os << key << ": [" << e[0].get<std::string>() << ", " << e[1].get<std::string>() << "] (approx "
           << it.value()["approx"].get<std::string>() << ")\n";
      } else {
        print_text(it.value(), key, os);
      }
    }
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Globals& g, const Json& report) {
  if (g.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    print_text(report, "", std::cout);
  }
}

int emit_error(const Globals& g, const std::string& kind, const std::string& message, int code,
               const Json& extra = Json::object()) {
  Json err{{"kind", kind}, {"message", message}, {"exit_code", code}};
  for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
  if (g.format == "json") {
    std::cout << Json{{"error", err}}.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
  return code;
}

PeelOptions peel_options() {
  PeelOptions o;
  if (const char* env = std::getenv("PEELKIT_STATE_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      o.state_budget = v;
    } catch (const std::exception&) {
      throw InputError(std::string("PEELKIT_STATE_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  return o;
}

Json sequence_json(const std::vector<std::size_t>& seq) {
  Json a = Json::array();
  for (auto i : seq) a.push_back(i);
  return a;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f) throw InputError("failed writing '" + path + "'");
}

// ------------------------------------------------------------------ commands

struct CountArgs {
  std::string input;
  bool naive = false;
  std::size_t enumerate = 0;
};

int cmd_count(const Globals& g, const CountArgs& a, Json& report) {
  const PointSetFile file = read_point_set_file(a.input);
  require_general_position(file.points);
  PeelOptions options = peel_options();
  options.enumerate = a.enumerate;
  const PeelReport r = peel_count(file.points, options);
  report["n"] = file.points.size();
  report["dim"] = file.points.dim;
  report["count"] = r.count.get_str();
  report["visited_states"] = r.visited_states;
  int code = kOk;
  if (a.naive) {
    const BigCount slow = peel_count_naive(file.points, options);
    report["naive_count"] = slow.get_str();
    report["naive_agrees"] = slow == r.count;
    if (slow != r.count) code = kVerifyFailed;
  }
  if (a.enumerate > 0) {
    Json seqs = Json::array();
    for (const auto& s : r.enumerated) seqs.push_back(sequence_json(s));
    report["sequences"] = seqs;
  }
  (void)g;
  return code;
}

struct DepthArgs {
  std::string input;
  std::string origin;
  bool oracle = false;
};

int cmd_depth(const DepthArgs& a, Json& report) {
  const PointSetFile file = read_point_set_file(a.input);
  const Point p = a.origin.empty() ? origin(file.points.dim) : parse_point(a.origin, file.points.dim);
  require_general_position(file.points.with_point(p));
  const DepthReport r = open_halfspace_depth(file.points, p);
  report["depth"] = r.depth;
  Json w = Json::array();
  for (const auto& x : r.witness) w.push_back(format_scalar(x));
  report["witness_direction"] = w;
  report["witness_verified"] = open_count(file.points, p, r.witness) == r.depth;
  int code = report["witness_verified"].get<bool>() ? kOk : kVerifyFailed;
  if (a.oracle) {
    const int o = depth_oracle(file.points, p);
    report["oracle_depth"] = o;
    report["oracle_agrees"] = o == r.depth;
    if (o != r.depth) code = kVerifyFailed;
  }
  return code;
}

struct GenerateArgs {
  std::string kind;
  int d = 2;
  int m = 1;
  std::size_t n = 0;
};

int cmd_generate(const Globals& g, const GenerateArgs& a, Json& report) {
  Json meta{{"kind", a.kind}, {"d", a.d}, {"m", a.m}, {"seed", g.seed}, {"version", kVersion}};
  PointSet points;
  report["kind"] = a.kind;
  if (a.kind == "gale") {
    points = gale_set(a.d, a.m);
    const int depth = open_halfspace_depth(points, origin(a.d)).depth;
    report["certified_depth"] = depth;
    report["certified"] = depth == a.m;
  } else if (a.kind == "base-set") {
    const BaseSet b = base_set(a.d, a.m);
    points = b.points;
    Json radii = Json::array();
    for (const auto& r : b.scaling_radii) radii.push_back(format_scalar(r));
    meta["scaling_radii"] = radii;
    report["scaling_radii"] = radii;
    const bool defends = defends_by_peeling(points, origin(a.d), a.m);
    report["certified_depth"] = open_halfspace_depth(points, origin(a.d)).depth;
    report["defends_by_peeling"] = defends;
    report["certified"] = defends;
  } else if (a.kind == "construction") {
    if (a.n == 0) throw InputError("construction needs -n >= 1");
    const CertifiedConstruction c = build_certified(a.d, a.m, a.n);
    points = c.construction.points;
    meta["n"] = a.n;
    meta["k"] = c.construction.k;
    meta["delta"] = format_scalar(c.construction.delta);
    meta["eps"] = format_scalar(c.construction.eps);
    meta["block_tree"] = block_tree_to_json(c.construction.tree);
    const ConstructionCertificate& cert = c.certificate;
    report["k"] = c.construction.k;
    report["certified_up_to"] = c.certified_up_to;
    report["certificate"] = Json{{"general_position", cert.general_position},
                                 {"outermost_only", cert.outermost_only},
                                 {"block_activity", cert.block_activity},
                                 {"lemma_bound", cert.lemma_bound},
                                 {"max_active_blocks", cert.max_active_blocks},
                                 {"allowed_active_blocks", cert.allowed_active_blocks},
                                 {"states_checked", cert.states_checked}};
    if (cert.theorem2_bound) report["certificate"]["growth_bound"] = *cert.theorem2_bound;
    if (c.certified_up_to == a.n) {
      report["count"] = cert.count.get_str();
      report["lemma_bound"] = cert.lemma_bound_value.get_str();
    }
    report["certified"] = cert.passed();
    if (!cert.passed()) report["failure"] = cert.failure;
  } else {
    throw InputError("unknown kind '" + a.kind + "' (expected gale, base-set or construction)");
  }
  report["points"] = points.size();
  if (!report["certified"].get<bool>()) return kVerifyFailed;
  if (!g.out.empty()) {
    write_point_set_file(g.out, points, meta);
    report["written"] = g.out;
  } else {
    report["file"] = point_set_to_json(points, meta);
  }
  return kOk;
}

struct BoundsArgs {
  int d = 3;
  int m = 0;
  int n = 0;
};

int cmd_bounds(const BoundsArgs& a, Json& report) {
  if (a.d < 3) throw InputError("bounds needs d >= 3");
  report["d"] = a.d;
  const int t1 = theorem1_m(a.d);
  const OptimalM opt = optimal_m(a.d, std::max(2 * (t1 + a.d), 12));
  report["theorem1_m"] = t1;
  report["optimal_m"] = opt.m_star;
  report["growth_base_at_optimal_m"] = enclosure_report(growth_base(a.d, opt.m_star));
  report["corollary_epsilon"] = enclosure_report(corollary_epsilon(a.d));
  const int m = a.m > 0 ? a.m : t1;
  report["m"] = m;
  report["defense_number"] = defense_number(a.d, m);
  const Enclosure base = growth_base(a.d, m);
  report["growth_base"] = base.exact() ? Json(format_scalar(base.lo)) : enclosure_report(base);
  report["theorem2_constant"] = enclosure_report(theorem2_constant(a.d, m));
  if (a.n > 0) report["theorem2_bound"] = enclosure_report(theorem2_bound(a.d, m, a.n));
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, Json& report) {
  const auto results = run_suite(suite, g.seed);
  Json checks = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    checks.push_back(check_to_json(r));
    ok = ok && r.passed;
  }
  report["suite"] = suite;
  report["seed"] = g.seed;
  report["passed"] = ok;
  report["checks"] = checks;
  return ok ? kOk : kVerifyFailed;
}

struct PlotArgs {
  std::string input;
  std::vector<int> axes{0, 1};
};

int cmd_plot(const Globals& g, const PlotArgs& a, Json& report) {
  if (g.out.empty()) throw InputError("plot needs --out <file.svg>");
  if (a.axes.size() != 2) throw InputError("--axes takes exactly two coordinate indices");
  const PointSetFile file = read_point_set_file(a.input);
  PlotOptions options;
  options.axis_x = a.axes[0];
  options.axis_y = a.axes[1];
  write_text_file(g.out, render_svg(file.points, options));
  report["written"] = g.out;
  report["points"] = file.points.size();
  return kOk;
}

void print_verify_text(const Json& report) {
  for (const auto& c : report["checks"]) {
    std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<std::string>() << " ["
              << c["suite"].get<std::string>() << "] " << c["name"].get<std::string>() << " -- "
              << c["anchor"].get<std::string>();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << c["seconds"].get<double>();
    std::cout << " (" << t.str() << "s)\n";
    if (!c["detail"].get<std::string>().empty()) std::cout << "    " << c["detail"].get<std::string>() << "\n";
    if (c.contains("replay")) std::cout << "    replay: " << c["replay"].dump() << "\n";
  }
  std::cout << (report["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact peeling-sequence counting and defense-number toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized suites and generators");
  app.add_option("--out", g.out, "Output path");
  app.set_version_flag("--version", kVersion);

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "Count peeling sequences of a point set");
  c_count->add_option("input", count.input, "PointSetFile (JSON)")->required();
  c_count->add_flag("--naive", count.naive, "Cross-check with naive enumeration");
  c_count->add_option("--enumerate", count.enumerate, "Also list the first k sequences");

  DepthArgs depth;
  auto* c_depth = app.add_subcommand("depth", "Open-halfspace depth of a point");
  c_depth->add_option("input", depth.input, "PointSetFile (JSON)")->required();
  c_depth->add_option("--origin", depth.origin, "Comma-separated coordinates (default: origin)");
  c_depth->add_flag("--oracle", depth.oracle, "Cross-check with the subset LP oracle");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Generate a certified point set");
  c_gen->add_option("kind", gen.kind, "gale | base-set | construction")->required();
  c_gen->add_option("-d", gen.d, "Dimension")->check(CLI::Range(1, 16));
  c_gen->add_option("-m", gen.m, "Defense parameter m")->check(CLI::Range(1, 16));
  c_gen->add_option("-n", gen.n, "Number of points (construction)");

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Evaluate the upper-bound formulas");
  c_bounds->add_option("-d", bounds.d, "Dimension (>= 3)")->required()->check(CLI::Range(1, 1000));
  c_bounds->add_option("-m", bounds.m, "Defense parameter (default: floor(d ln d))")->check(CLI::Range(1, 100000));
  c_bounds->add_option("-n", bounds.n, "Number of points for the explicit bound")->check(CLI::Range(1, 100000));

  std::string suite = "all";
  auto* c_verify = app.add_subcommand("verify", "Run a property suite");
  c_verify->add_option("suite", suite, "all | kernel | peeling | defense | construction | bounds");

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot", "Render a point set as SVG");
  c_plot->add_option("input", plot.input, "PointSetFile (JSON)")->required();
  c_plot->add_option("--axes", plot.axes, "Projection coordinate pair")->delimiter(',')->expected(2);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(g, "usage", e.what(), kInputError);
  }

  Json report;
  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*c_count) code = cmd_count(g, count, report);
    if (*c_depth) code = cmd_depth(depth, report);
    if (*c_gen) code = cmd_generate(g, gen, report);
    if (*c_bounds) code = cmd_bounds(bounds, report);
    if (*c_verify) code = cmd_verify(g, suite, report);
    if (*c_plot) code = cmd_plot(g, plot, report);
  } catch (const DegenerateError& e) {
    return emit_error(g, "degenerate", e.what(), kInputError, Json{{"subset", e.subset()}});
  } catch (const InputError& e) {
    return emit_error(g, "input", e.what(), kInputError);
  } catch (const ResourceError& e) {
    return emit_error(g, "budget", e.what(), kBudgetExceeded);
  } catch (const CertificationError& e) {
    return emit_error(g, "certification", e.what(), kVerifyFailed);
  } catch (const std::exception& e) {
    return emit_error(g, "internal", e.what(), kVerifyFailed);
  }
  report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["exit_code"] = code;
  if (*c_verify && g.format == "text") {
    print_verify_text(report);
  } else {
    emit(g, report);
  }
  return code;
}
