// Command-line front end: boundary decomposition, pair enumeration, length
// bounds and the Lagrange certificate.  JSON on stdout (12 significant
// digits), diagnostics on stderr; exit code 0 iff all checks pass.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillpair/bounds.hpp"
#include "fillpair/enumeration.hpp"
#include "fillpair/errors.hpp"
#include "fillpair/fatgraph.hpp"
#include "fillpair/hypgeom.hpp"
#include "fillpair/numeric.hpp"
#include "fillpair/quadopt.hpp"

namespace {

using nlohmann::ordered_json;

// fixed 12-significant-digit serialization for reproducible output
double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

struct Check {
  std::string name;
  bool pass;
  double measured;
  double expected;
  double tolerance;
};

struct RunReport {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
      j["checks"].push_back({{"name", c.name},
                             {"pass", c.pass},
                             {"measured", round12(c.measured)},
                             {"expected", round12(c.expected)},
                             {"tolerance", c.tolerance}});
    }
    return j;
  }
};

void add_check(RunReport& r, const std::string& name, double measured,
               double expected, double tolerance) {
  r.checks.push_back({name, std::abs(measured - expected) <= tolerance,
                      measured, expected, tolerance});
}

void add_flag_check(RunReport& r, const std::string& name, bool pass) {
  r.checks.push_back({name, pass, pass ? 1.0 : 0.0, 1.0, 0.0});
}

int emit(const RunReport& r, const std::string& format) {
  if (format == "table") {
    std::printf("== %s ==\n", r.command.c_str());
    std::printf("%s\n", r.outputs.dump(2).c_str());
    for (const auto& c : r.checks) {
      std::printf("%-44s %s  measured=%.12g expected=%.12g tol=%g\n",
                  c.name.c_str(), c.pass ? "PASS" : "FAIL", c.measured,
                  c.expected, c.tolerance);
    }
  } else {
    std::printf("%s\n", r.to_json().dump().c_str());
  }
  return r.all_pass() ? 0 : 1;
}

ordered_json config_json(const fillpair::FillingConfiguration& c) {
  ordered_json j;
  ordered_json sigma0 = ordered_json::array();
  for (const auto& cyc : c.graph.vertex_rotations())
    sigma0.push_back(fillpair::word_string(c.graph, cyc));
  j["sigma0"] = sigma0;
  ordered_json words = ordered_json::array();
  for (const auto& cyc : c.boundary)
    words.push_back(fillpair::word_string(c.graph, cyc));
  j["boundary_words"] = words;
  j["face_sizes"] = c.face_sizes;
  j["type"] = fillpair::to_string(c.type);
  j["canonical_key"] = c.canonical_key;
  return j;
}

int cmd_boundary(const std::string& input, const std::string& format) {
  fillpair::FatGraph g = [&] {
    if (input.empty() || input == "-") return fillpair::parse_fat_graph(std::cin);
    std::ifstream f(input);
    if (!f) throw fillpair::Error("cannot open file: " + input);
    return fillpair::parse_fat_graph(f);
  }();

  RunReport r;
  r.command = "boundary";
  r.inputs["file"] = input.empty() ? "-" : input;
  if (auto v = fillpair::validate(g)) {
    r.outputs["error"] = {{"invariant", v->invariant}, {"darts", v->darts}};
    add_flag_check(r, "graph valid", false);
    return emit(r, format);
  }
  const auto b = fillpair::boundary_cycles(g);
  ordered_json cycles = ordered_json::array();
  for (const auto& cyc : b.cycles)
    cycles.push_back(fillpair::word_string(g, cyc));
  r.outputs["cycles"] = cycles;
  r.outputs["face_sizes"] = b.face_sizes;
  r.outputs["euler_characteristic"] = fillpair::euler_characteristic(g);
  if (fillpair::is_connected(g)) r.outputs["genus"] = fillpair::genus(g);
  return emit(r, format);
}

int cmd_enumerate(const fillpair::SymmetryOptions& opts, bool default_flags,
                  int jobs, const std::string& format) {
  const auto configs = fillpair::enumerate_raw(jobs);
  const auto report = fillpair::classify_orbits(configs, opts);

  RunReport r;
  r.command = "enumerate";
  r.inputs = {{"shift_alpha", opts.shift_alpha},
              {"shift_beta", opts.shift_beta},
              {"reverse_curves", opts.reverse_curves},
              {"swap_curves", opts.swap_curves},
              {"mirror", opts.mirror},
              {"jobs", jobs}};

  // orbit ids keyed by canonical key order
  std::vector<std::string> keys;
  for (const auto& cls : report.classes) keys.push_back(cls.canonical_key);

  ordered_json arr = ordered_json::array();
  bool saw_6_10 = false;
  for (const auto& c : configs) {
    ordered_json j = config_json(c);
    const std::string key = fillpair::canonical_key(c, opts);
    j["orbit_id"] = static_cast<int>(
        std::find(keys.begin(), keys.end(), key) - keys.begin());
    arr.push_back(std::move(j));
    if (c.face_sizes == std::array<int, 2>{6, 10}) saw_6_10 = true;
  }
  ordered_json classes = ordered_json::array();
  for (const auto& cls : report.classes) {
    classes.push_back({{"canonical_key", cls.canonical_key},
                       {"type", fillpair::to_string(cls.type)},
                       {"member_count", cls.member_count},
                       {"representative", config_json(cls.representative)}});
  }
  r.outputs["raw_count"] = report.raw_count;
  r.outputs["class_count"] = static_cast<int>(report.classes.size());
  r.outputs["classes"] = classes;
  r.outputs["configurations"] = arr;

  add_flag_check(r, "no {6,10} configuration", !saw_6_10);
  if (default_flags) {
    add_check(r, "orbit count == 2",
              static_cast<double>(report.classes.size()), 2.0, 0.0);
  }
  return emit(r, format);
}

int cmd_bounds(const std::string& which, int f_max, const std::string& sweep,
               const std::string& format) {
  RunReport r;
  r.command = "bounds";
  r.inputs["which"] = which;

  const double expected_88 = 12.228567;
  const double expected_412 = 11.5490838;

  if (which == "88") {
    const auto m = fillpair::minimize_f8();
    const double bound = fillpair::length_bound_88();
    r.outputs["theta_star"] = round12(m.theta);
    r.outputs["perimeter_sum_min"] = round12(m.value);
    r.outputs["bound"] = round12(bound);
    add_check(r, "theta* == 0", m.theta, 0.0, 1e-8);
    add_check(r, "length bound {8,8}", bound, expected_88, 1e-6);
    if (!sweep.empty()) {
      std::ofstream out(sweep);
      if (!out) throw fillpair::Error("cannot open sweep file: " + sweep);
      fillpair::write_f8_sweep(out);
      r.outputs["sweep_file"] = sweep;
    }
  } else if (which == "412") {
    const auto sol = fillpair::minimize_objective();
    const double bound = fillpair::length_bound_412();
    r.outputs["theta_star"] = round12(sol.theta);
    r.outputs["objective"] = round12(sol.objective);
    r.outputs["x"] = round12(sol.x);
    r.outputs["l"] = round12(sol.l);
    r.outputs["theta1"] = round12(sol.theta1);
    r.outputs["theta2"] = round12(sol.theta2);
    r.outputs["bound"] = round12(bound);
    add_check(r, "theta* == acos(1/5)", sol.theta, std::acos(0.2), 1e-6);
    add_check(r, "length bound {4,12}", bound, expected_412, 1e-5);
    if (!sweep.empty()) {
      std::ofstream out(sweep);
      if (!out) throw fillpair::Error("cannot open sweep file: " + sweep);
      fillpair::write_objective_sweep(out);
      r.outputs["sweep_file"] = sweep;
    }
  } else {  // global
    const auto gb = fillpair::global_bound(f_max);
    r.inputs["f_max"] = f_max;
    ordered_json certs = ordered_json::array();
    double min_bound = std::numeric_limits<double>::infinity();
    bool all_above = true;
    for (const auto& cert : gb.certificates) {
      certs.push_back({{"f", cert.config.f},
                       {"sizes", cert.config.sizes},
                       {"case_tag", cert.config.case_tag},
                       {"merged_pair", cert.merged_pair},
                       {"bound", round12(cert.bound)},
                       {"rule_applied", cert.rule_applied}});
      min_bound = std::min(min_bound, cert.bound);
      if (cert.bound < fillpair::length_bound_412() - 1e-9) all_above = false;
    }
    r.outputs["bound"] = round12(gb.bound);
    r.outputs["certificates"] = certs;
    add_check(r, "global bound == L0", gb.bound, 6.0 * std::acosh(3.5), 1e-9);
    add_flag_check(r, "all certificates >= L0 - 1e-9", all_above);
    add_flag_check(r, "L0 < 8 acosh(1+sqrt2)",
                   gb.bound < 8.0 * std::acosh(1.0 + std::sqrt(2.0)));
  }
  return emit(r, format);
}

int cmd_verify_lagrange(const std::vector<double>& lambda_override,
                        const std::string& format) {
  const fillpair::QuadPoint p0 = fillpair::optimum_point();
  std::array<double, 4> lambda = fillpair::optimum_multipliers();
  if (!lambda_override.empty()) {
    if (lambda_override.size() != 4)
      throw fillpair::Error("--lambda needs exactly 4 values");
    std::copy(lambda_override.begin(), lambda_override.end(), lambda.begin());
  }
  const auto cert = fillpair::verify_lagrange(p0, lambda);

  RunReport r;
  r.command = "verify-lagrange";
  r.inputs["point"] = {round12(p0.x), round12(p0.l), round12(p0.theta),
                       round12(p0.theta1), round12(p0.theta2)};
  r.inputs["multipliers"] = {round12(lambda[0]), round12(lambda[1]),
                             round12(lambda[2]), round12(lambda[3])};
  r.outputs["gradient_residual"] = round12(cert.gradient_residual);
  r.outputs["constraint_residual"] = round12(cert.constraint_residual);
  add_check(r, "constraint residual <= 1e-10", cert.constraint_residual, 0.0,
            1e-10);
  add_check(r, "gradient residual <= 1e-6", cert.gradient_residual, 0.0, 1e-6);
  return emit(r, format);
}

int cmd_sweep(const std::string& which, const std::string& out_path,
              int samples, const std::string& format) {
  std::ofstream out(out_path);
  if (!out) throw fillpair::Error("cannot open sweep file: " + out_path);
  RunReport r;
  r.command = "sweep";
  r.inputs = {{"which", which}, {"out", out_path}, {"samples", samples}};
  if (which == "f8") {
    fillpair::write_f8_sweep(out, samples);
  } else {
    fillpair::write_objective_sweep(out, samples);
  }
  r.outputs["written"] = out_path;
  return emit(r, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimal filling pairs on the genus-two surface: boundary words, "
      "enumeration, length bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  auto* boundary = app.add_subcommand(
      "boundary", "boundary cycles, Euler characteristic and genus of a fat "
                  "graph file ('-' = stdin)");
  std::string input = "-";
  boundary->add_option("input", input, "fat graph text file");

  auto* enumerate = app.add_subcommand(
      "enumerate", "enumerate minimal filling pair fat graphs and classify "
                   "orbits under relabeling");
  fillpair::SymmetryOptions opts;
  bool no_shift_alpha = false, no_shift_beta = false, no_reverse = false,
       no_swap = false, mirror = false;
  int jobs = 1;
  enumerate->add_flag("--no-shift-alpha", no_shift_alpha,
                      "drop alpha index shifts from the relabeling group");
  enumerate->add_flag("--no-shift-beta", no_shift_beta,
                      "drop beta index shifts");
  enumerate->add_flag("--no-reverse-curves", no_reverse,
                      "drop curve direction reversals");
  enumerate->add_flag("--no-swap-curves", no_swap, "drop the alpha<->beta swap");
  enumerate->add_flag("--mirror", mirror,
                      "include orientation-reversing relabelings");
  enumerate->add_option("--jobs", jobs, "parallel candidate evaluation")
      ->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "length lower bounds");
  std::string which = "global";
  int f_max = 10;
  std::string sweep_file;
  bounds->add_option("--which", which, "which bound")
      ->check(CLI::IsMember({"88", "412", "global"}));
  bounds->add_option("--f-max", f_max, "max face count for global certificates");
  bounds->add_option("--sweep", sweep_file, "write the CSV sweep here");

  auto* verify = app.add_subcommand(
      "verify-lagrange", "check the Lagrange certificate at the exact optimum");
  std::vector<double> lambda_override;
  verify->add_option("--lambda", lambda_override,
                     "comma-separated multipliers overriding the exact ones")
      ->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "CSV sweep emitters");
  std::string sweep_which = "f8";
  std::string sweep_out;
  int samples = 401;
  sweep->add_option("--which", sweep_which, "f8 or objective")
      ->check(CLI::IsMember({"f8", "objective"}));
  sweep->add_option("--out", sweep_out, "output CSV path")->required();
  sweep->add_option("--samples", samples, "sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (boundary->parsed()) return cmd_boundary(input, format);
    if (enumerate->parsed()) {
      opts.shift_alpha = !no_shift_alpha;
      opts.shift_beta = !no_shift_beta;
      opts.reverse_curves = !no_reverse;
      opts.swap_curves = !no_swap;
      opts.mirror = mirror;
      const bool default_flags = !no_shift_alpha && !no_shift_beta &&
                                 !no_reverse && !no_swap && !mirror;
      return cmd_enumerate(opts, default_flags, jobs, format);
    }
    if (bounds->parsed()) return cmd_bounds(which, f_max, sweep_file, format);
    if (verify->parsed()) return cmd_verify_lagrange(lambda_override, format);
    if (sweep->parsed()) return cmd_sweep(sweep_which, sweep_out, samples, format);
  } catch (const fillpair::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const fillpair::SolverFailureError& e) {
    std::cerr << "solver failure: " << e.what() << "\n" << e.trace();
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
