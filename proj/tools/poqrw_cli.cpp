// Command-line front end: reads a walk spec from JSON and runs one analysis.
//
// Exit status: 0 success, 2 invalid spec or parameters, 3 eigenvalue condition
// fails where required, 4 numeric failure.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "poqrw/evolve.hpp"
#include "poqrw/io.hpp"
#include "poqrw/limits.hpp"
#include "poqrw/mc.hpp"
#include "poqrw/spectral.hpp"

namespace {

using namespace poqrw;
using io::json;

constexpr const char* kVersion = "0.1.0";
constexpr int kMaxTCoherent = 500;
constexpr int kMaxTDiagonal = 100000;

struct Params {
  std::string spec_path;
  std::string out_path;
  std::string summary_path;
  double k = 0;
  double nu = 0;
  int t = 10;
  int kgrid = kDefaultKGrid;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  std::optional<double> p;
  double tol = kDefaultEigTol;
  std::string basis = "standard";
  double nu_max = 3;
  int nu_count = 25;
  // presets
  std::string name = "hadamard";
  double theta = std::numbers::pi / 4;
  double preset_p = 1;
};

json param_echo(const std::string& command, const Params& p) {
  json j = {{"command", command}, {"spec", p.spec_path}, {"k", p.k},       {"nu", p.nu},
            {"t", p.t},           {"kgrid", p.kgrid},    {"samples", p.samples},
            {"seed", p.seed},     {"tol", p.tol},        {"basis", p.basis}};
  j["p_override"] = p.p ? json(*p.p) : json(nullptr);
  if (command == "clt") {
    j["nu_max"] = p.nu_max;
    j["nu_count"] = p.nu_count;
  }
  return j;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ArgumentError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

class Run {
 public:
  Run(std::string command, const Params& params)
      : command_(std::move(command)), params_(params), start_(std::chrono::steady_clock::now()) {}

  WalkSpec spec() {
    WalkSpec s = io::load_spec(params_.spec_path);
    if (params_.p) s.p = *params_.p;
    hash_ = io::spec_hash(s);
    return s;
  }

  json meta() const {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return {{"tool", "poqrw"},
            {"version", kVersion},
            {"spec_hash", hash_},
            {"params", param_echo(command_, params_)},
            {"duration_s", secs}};
  }

  void emit_json(const json& result, const std::string& path) const {
    Output out(path);
    json doc = {{"meta", meta()}, {"result", result}};
    out.stream() << std::setw(2) << doc << '\n';
  }

  void emit_json(const json& result) const { emit_json(result, params_.out_path); }

  // CSV artifacts carry their metadata as leading '#' lines.
  void csv_header(std::ostream& os) const {
    os << "# " << meta().dump() << '\n';
  }

  const Params& params() const { return params_; }

 private:
  std::string command_;
  Params params_;
  std::chrono::steady_clock::time_point start_;
  std::string hash_;
};

void require_valid_or_throw(const WalkSpec& s) { require_valid(s); }

int cmd_validate(Run& run) {
  const WalkSpec s = run.spec();
  const auto issues = validate(s);
  run.emit_json({{"valid", issues.empty()}, {"violations", issues}});
  if (!issues.empty()) {
    std::cerr << "invalid walk spec: " << issues.front() << '\n';
    return 2;
  }
  return 0;
}

int cmd_superop(Run& run) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  const auto& p = run.params();
  const auto l = superop_matrix(s, p.k, p.nu, parse_basis(p.basis));
  run.emit_json({{"k", l.k}, {"nu", l.nu}, {"basis", to_string(l.basis)},
                 {"matrix", io::matrix_to_json(l.m)}});
  return 0;
}

int cmd_spectrum(Run& run) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  run.emit_json(io::to_json(eig_condition(s, run.params().k, run.params().tol)));
  return 0;
}

int cmd_check_eig(Run& run, bool k_given) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  const auto& p = run.params();
  auto reports = condition_grid(s, p.kgrid, p.tol);
  if (k_given) reports.push_back(eig_condition(s, p.k, p.tol));
  std::stable_sort(reports.begin(), reports.end(),
                   [](const SpectralReport& a, const SpectralReport& b) { return a.k < b.k; });
  json grid = json::array();
  for (const auto& r : reports) grid.push_back(io::to_json(r));
  json result = {{"condition_holds", all_hold(reports)},
                 {"min_gap", min_gap(reports)},
                 {"reports", grid}};
  if (s.p > 0) {
    result["lift"] = io::to_json(pf_lift_check(s, p.k, {0.1, 0.25, 0.5, 0.75, 1.0}, p.tol));
  }
  run.emit_json(result);
  return 0;
}

int cmd_limit(Run& run) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  const auto& p = run.params();
  if (p.kgrid < 1) throw ArgumentError("--kgrid must be >= 1");
  std::vector<LimitReport> rows;
  std::vector<double> gaps;
  const auto d = drift(s);
  for (int j = 0; j < p.kgrid; ++j) {
    const double k = 2.0 * std::numbers::pi * j / p.kgrid;
    const auto spectral = eig_condition(s, k, p.tol);
    if (!spectral.condition_holds) {
      throw DegeneracyError("eigenvalue condition fails at k = " + std::to_string(k));
    }
    rows.push_back(limit_report(s, k));
    gaps.push_back(spectral.gap);
  }
  Output out(p.out_path);
  run.csv_header(out.stream());
  out.stream() << "# drift=" << std::setprecision(17) << d.drift << '\n';
  io::write_limit_csv(out.stream(), rows, gaps);
  return 0;
}

int cmd_evolve(Run& run) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  const auto& p = run.params();
  const bool open = s.p == 1.0;
  const int cap = open ? kMaxTDiagonal : kMaxTCoherent;
  if (p.t < 0 || p.t > cap) {
    throw ArgumentError("--t must lie in [0, " + std::to_string(cap) + "] for this spec");
  }
  const auto state = evolve(s, p.t, open ? Storage::diagonal : Storage::full);
  const auto dist = distribution(state);
  {
    Output out(p.out_path);
    run.csv_header(out.stream());
    io::write_distribution_csv(out.stream(), dist);
  }
  const json summary = {{"meta", run.meta()}, {"result", io::to_json(moments(dist), p.t)}};
  if (p.summary_path.empty()) {
    std::cerr << summary.dump() << '\n';
  } else {
    Output(p.summary_path).stream() << std::setw(2) << summary << '\n';
  }
  return 0;
}

int cmd_clt(Run& run) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  const auto& p = run.params();
  if (p.nu_count < 1) throw ArgumentError("--nu-count must be >= 1");
  if (!all_hold(condition_grid(s, p.kgrid, p.tol))) {
    throw DegeneracyError("eigenvalue condition fails on the k-grid");
  }
  std::vector<double> nus;
  for (int i = 0; i < p.nu_count; ++i) {
    nus.push_back(p.nu_count == 1 ? 0.0 : -p.nu_max + 2.0 * p.nu_max * i / (p.nu_count - 1));
  }
  run.emit_json(io::to_json(clt_check(s, p.t, nus, 2 * p.t + 2, p.kgrid)));
  return 0;
}

int cmd_mc(Run& run) {
  const WalkSpec s = run.spec();
  require_valid_or_throw(s);
  const auto& p = run.params();
  if (p.t < 0 || p.t > kMaxTCoherent) throw ArgumentError("--t must lie in [0, 500]");
  const auto e = estimate(s, {p.samples, p.t, p.seed});
  {
    Output out(p.out_path);
    run.csv_header(out.stream());
    io::write_empirical_csv(out.stream(), e.empirical);
  }
  const json summary = {
      {"meta", run.meta()},
      {"result", {{"tv_distance", e.tv_distance}, {"seed", p.seed}, {"samples", p.samples},
                  {"t", p.t}}}};
  if (p.summary_path.empty()) {
    std::cerr << summary.dump() << '\n';
  } else {
    Output(p.summary_path).stream() << std::setw(2) << summary << '\n';
  }
  return 0;
}

int cmd_presets(const Params& p) {
  const WalkSpec s = io::preset(p.name, p.theta, p.preset_p);
  Output out(p.out_path);
  out.stream() << std::setw(2) << io::spec_to_json(s) << '\n';
  return 0;
}

void add_common(CLI::App* sub, Params& p, bool needs_spec = true) {
  auto* spec = sub->add_option("--spec", p.spec_path, "Walk spec JSON file");
  if (needs_spec) spec->required();
  sub->add_option("--out", p.out_path, "Output file (default stdout)");
  sub->add_option("--k", p.k, "Momentum k");
  sub->add_option("--nu", p.nu, "Momentum offset nu");
  sub->add_option("--t", p.t, "Number of steps")->check(CLI::NonNegativeNumber);
  sub->add_option("--kgrid", p.kgrid, "k-grid size")->check(CLI::PositiveNumber);
  sub->add_option("--samples", p.samples, "Monte Carlo trajectories")->check(CLI::PositiveNumber);
  sub->add_option("--seed", p.seed, "Monte Carlo seed");
  sub->add_option("--p", p.p, "Override the decoherence p")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--tol", p.tol, "Eigenvalue tolerance")->check(CLI::Range(1e-300, 1e-3));
  sub->add_option("--basis", p.basis, "standard or gellmann")
      ->check(CLI::IsMember({"standard", "gellmann"}));
  sub->add_option("--summary", p.summary_path, "JSON summary file (evolve, mc)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partially open quantum random walks on the integer line"};
  app.require_subcommand(1);
  Params p;

  auto* validate_cmd = app.add_subcommand("validate", "Check a walk spec");
  auto* superop_cmd = app.add_subcommand("superop", "Matrix of L_{k,k+nu}");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of L_kk at one k");
  auto* check_cmd = app.add_subcommand("check-eig", "Eigenvalue condition over a k-grid");
  auto* limit_cmd = app.add_subcommand("limit", "Drift and variance sigma^2(k) over a k-grid");
  auto* evolve_cmd = app.add_subcommand("evolve", "Exact position distribution after t steps");
  auto* clt_cmd = app.add_subcommand("clt", "Compare P(nu/sqrt t, t) with the mixture limit");
  auto* mc_cmd = app.add_subcommand("mc", "Quantum-trajectory Monte Carlo");
  auto* presets_cmd = app.add_subcommand("presets", "Emit a preset walk spec");

  for (auto* sub : {validate_cmd, superop_cmd, spectrum_cmd, check_cmd, limit_cmd, evolve_cmd,
                    clt_cmd, mc_cmd}) {
    add_common(sub, p);
  }
  clt_cmd->add_option("--nu-max", p.nu_max, "nu grid spans [-nu-max, nu-max]");
  clt_cmd->add_option("--nu-count", p.nu_count, "number of nu points");
  presets_cmd->add_option("--name", p.name, "hadamard or example-n3");
  presets_cmd->add_option("--theta", p.theta, "coin angle for hadamard");
  presets_cmd->add_option("--p", p.preset_p, "decoherence p")->check(CLI::Range(0.0, 1.0));
  presets_cmd->add_option("--out", p.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (presets_cmd->parsed()) return cmd_presets(p);
    for (auto* sub : app.get_subcommands()) {
      Run run(sub->get_name(), p);
      if (sub == validate_cmd) return cmd_validate(run);
      if (sub == superop_cmd) return cmd_superop(run);
      if (sub == spectrum_cmd) return cmd_spectrum(run);
      if (sub == check_cmd) return cmd_check_eig(run, sub->count("--k") > 0);
      if (sub == limit_cmd) return cmd_limit(run);
      if (sub == evolve_cmd) return cmd_evolve(run);
      if (sub == clt_cmd) return cmd_clt(run);
      if (sub == mc_cmd) return cmd_mc(run);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
