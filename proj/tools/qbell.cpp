// qbell: evaluate, maximize, scan and sample Bell correlations of
// two-particle entangled states, and verify the classical bound from
// hidden-variable population tables. Angles are radians unless --degrees.
//
// Exit codes: 0 ok, 1 internal failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qbell/bell.hpp"
#include "qbell/localmodel.hpp"
#include "qbell/optimizer.hpp"

namespace {

using namespace qbell;

// 17 significant digits round-trip every double exactly.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Flat ordered report rendered as JSON or a two-line CSV. Key order is
// insertion order, so repeated runs emit byte-identical output.
class Report {
 public:
  using Value = std::variant<double, std::uint64_t, bool, std::string,
                             std::vector<double>>;

  void add(const std::string& key, Value value) {
    fields_.emplace_back(key, std::move(value));
  }

  std::string render_json() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += "  \"" + fields_[i].first + "\": ";
      out += render_json_value(fields_[i].second);
      if (i + 1 < fields_.size()) out += ",";
      out += "\n";
    }
    out += "}\n";
    return out;
  }

  std::string render_csv() const {
    std::string header;
    std::string row;
    for (const auto& [key, value] : fields_) {
      if (const auto* array = std::get_if<std::vector<double>>(&value)) {
        for (std::size_t i = 0; i < array->size(); ++i) {
          append_cell(header, key + "_" + std::to_string(i + 1));
          append_cell(row, format_double((*array)[i]));
        }
      } else {
        append_cell(header, key);
        append_cell(row, render_scalar(value));
      }
    }
    return header + "\n" + row + "\n";
  }

 private:
  static void append_cell(std::string& line, const std::string& cell) {
    if (!line.empty()) line += ",";
    line += cell;
  }

  static std::string render_scalar(const Value& value) {
    if (const auto* d = std::get_if<double>(&value)) return format_double(*d);
    if (const auto* u = std::get_if<std::uint64_t>(&value))
      return std::to_string(*u);
    if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
    return std::get<std::string>(value);
  }

  static std::string render_json_value(const Value& value) {
    if (const auto* s = std::get_if<std::string>(&value))
      return "\"" + *s + "\"";
    if (const auto* array = std::get_if<std::vector<double>>(&value)) {
      std::string out = "[";
      for (std::size_t i = 0; i < array->size(); ++i) {
        if (i) out += ", ";
        out += format_double((*array)[i]);
      }
      return out + "]";
    }
    return render_scalar(value);
  }

  std::vector<std::pair<std::string, Value>> fields_;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

void emit(const Report& report, const std::string& format,
          const std::string& out_path) {
  emit(format == "csv" ? report.render_csv() : report.render_json(), out_path);
}

PairFamily parse_family(const std::string& name) {
  if (name == "spin-anti") return PairFamily::SpinAntiparallel;
  if (name == "spin-par") return PairFamily::SpinParallel;
  if (name == "photon-perp") return PairFamily::PhotonPerpendicular;
  if (name == "photon-par") return PairFamily::PhotonParallel;
  throw std::invalid_argument("unknown family: " + name);
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + text);
  }
  if (used != text.size())
    throw std::invalid_argument("not a number: " + text);
  return value;
}

// Shared angle flags. --degrees converts every ingested angle, including
// xi/eta, once on the way in.
struct AngleInput {
  bool degrees = false;

  double angle(const std::string& text) const {
    const double value = parse_real(text);
    return degrees ? value * kPi / 180.0 : value;
  }

  std::pair<double, double> angle_pair(const std::string& text) const {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("expected two comma-separated values: " + text);
    return {angle(text.substr(0, comma)), angle(text.substr(comma + 1))};
  }

  Direction direction(PairFamily family, const std::string& text) const {
    if (is_photon_family(family)) {
      if (text.find(',') != std::string::npos)
        throw std::invalid_argument(
            "photon directions take a single azimuthal angle: " + text);
      return Direction::planar(angle(text));
    }
    const auto [theta, phi] = angle_pair(text);
    return Direction(theta, phi);
  }
};

struct EvalFlags {
  std::string family;
  std::string xi;
  std::string eta;
  std::string a;
  std::string b;
  std::string c;
  std::string format = "json";
  std::string out;
  AngleInput angles;
};

void add_state_flags(CLI::App* cmd, EvalFlags& flags, bool need_c) {
  cmd->add_option("--family", flags.family,
                  "spin-anti | spin-par | photon-perp | photon-par")
      ->required();
  cmd->add_option("--xi", flags.xi, "state parameter xi")->required();
  cmd->add_option("--eta", flags.eta, "state parameter eta")->required();
  cmd->add_option("--a", flags.a, "direction a: theta,phi (photon: phi)")
      ->required();
  cmd->add_option("--b", flags.b, "direction b")->required();
  if (need_c) cmd->add_option("--c", flags.c, "direction c")->required();
  cmd->add_flag("--degrees", flags.angles.degrees,
                "interpret all angle inputs as degrees");
  cmd->add_option("--out", flags.out, "write the report to a file");
}

struct ParsedConfig {
  EntangledPairState state;
  Direction a;
  Direction b;
  Direction c;
};

ParsedConfig parse_config(const EvalFlags& flags, bool need_c) {
  const PairFamily family = parse_family(flags.family);
  const EntangledPairState state(family, flags.angles.angle(flags.xi),
                                 flags.angles.angle(flags.eta));
  const Direction a = flags.angles.direction(family, flags.a);
  const Direction b = flags.angles.direction(family, flags.b);
  const Direction c = need_c ? flags.angles.direction(family, flags.c)
                             : Direction::planar(0.0);
  return {state, a, b, c};
}

void run_eval(const EvalFlags& flags) {
  const auto cfg = parse_config(flags, true);
  const auto e = qbcp(cfg.state, cfg.a, cfg.b, cfg.c);
  Report report;
  report.add("p_ab", e.p_ab);
  report.add("p_ac", e.p_ac);
  report.add("p_bc", e.p_bc);
  report.add("p_b", e.p_b);
  report.add("p_b_local", e.p_b_local);
  report.add("margin", e.margin());
  report.add("violated", e.violated);
  emit(report, flags.format, flags.out);
}

struct MaximizeFlags {
  std::string family;
  std::string fix_state;
  std::uint64_t seed = 0;
  int starts = 64;
  std::string format = "json";
  std::string out;
  AngleInput angles;
};

void run_maximize(const MaximizeFlags& flags) {
  OptimizationProblem problem;
  problem.family = parse_family(flags.family);
  if (!flags.fix_state.empty()) {
    problem.free_state = false;
    const auto [xi, eta] = flags.angles.angle_pair(flags.fix_state);
    problem.fixed_xi = xi;
    problem.fixed_eta = eta;
  }
  OptimizerConfig config;
  config.seed = flags.seed;
  config.n_starts = flags.starts;

  const auto result = maximize_qbcp(problem, config);
  const bool photon = is_photon_family(problem.family);
  Report report;
  report.add("best_value", result.best_value);
  if (!photon) report.add("theta_a", result.a.theta());
  report.add("phi_a", result.a.phi());
  if (!photon) report.add("theta_b", result.b.theta());
  report.add("phi_b", result.b.phi());
  if (!photon) report.add("theta_c", result.c.theta());
  report.add("phi_c", result.c.phi());
  report.add("xi", result.xi);
  report.add("eta", result.eta);
  report.add("starts_converged",
             static_cast<std::uint64_t>(result.starts_converged));
  report.add("evaluations", result.evaluations);
  emit(report, flags.format, flags.out);
}

struct ClassicalFlags {
  std::string table;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

void run_classical(const ClassicalFlags& flags) {
  TableKind kind;
  if (flags.table == "anti")
    kind = TableKind::Antiparallel;
  else if (flags.table == "par")
    kind = TableKind::Parallel;
  else
    throw std::invalid_argument("unknown table: " + flags.table);

  const auto result = classical_max_search(kind, flags.seed, flags.samples);
  Report report;
  report.add("max_found", result.best_value);
  report.add("witness_populations",
             std::vector<double>(result.witness.n.begin(),
                                 result.witness.n.end()));
  report.add("samples", result.samples);
  report.add("vertices_checked",
             static_cast<std::uint64_t>(result.vertices_checked));
  emit(report, flags.format, flags.out);
}

struct ScanFlags {
  EvalFlags eval;
  std::vector<std::string> params;
  std::vector<std::string> from;
  std::vector<std::string> to;
  std::vector<int> steps;
};

void run_scan(const ScanFlags& flags) {
  const std::size_t n_axes = flags.params.size();
  if (n_axes < 1 || n_axes > 2)
    throw std::invalid_argument("scan takes one or two --param axes");
  if (flags.from.size() != n_axes || flags.to.size() != n_axes ||
      flags.steps.size() != n_axes)
    throw std::invalid_argument(
        "--param, --from, --to and --steps must be given once per axis");

  const auto cfg = parse_config(flags.eval, true);
  std::vector<ScanAxis> axes;
  for (std::size_t i = 0; i < n_axes; ++i) {
    ScanAxis axis;
    axis.param = scan_parameter_from_name(flags.params[i]);
    axis.from = flags.eval.angles.angle(flags.from[i]);
    axis.to = flags.eval.angles.angle(flags.to[i]);
    axis.steps = flags.steps[i];
    axes.push_back(axis);
  }

  const auto result = landscape_scan({cfg.state, cfg.a, cfg.b, cfg.c}, axes);

  std::string text = n_axes == 1 ? "param_1,p_b" : "param_1,param_2,p_b";
  text += "\n";
  const int inner = n_axes == 2 ? axes[1].steps : 1;
  for (std::size_t row = 0; row < result.p_b.size(); ++row) {
    const int i = static_cast<int>(row) / inner;
    const int j = static_cast<int>(row) % inner;
    text += format_double(axes[0].coordinate(i));
    if (n_axes == 2) text += "," + format_double(axes[1].coordinate(j));
    text += "," + format_double(result.p_b[row]) + "\n";
  }
  emit(text, flags.eval.out);
}

struct SampleFlags {
  EvalFlags eval;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

void run_sample(const SampleFlags& flags) {
  if (flags.shots < 1)
    throw std::invalid_argument("--shots must be at least 1");
  const auto cfg = parse_config(flags.eval, false);
  const auto counts =
      sample_outcomes(cfg.state, cfg.a, cfg.b, flags.shots, flags.seed);

  Report report;
  report.add("shots", flags.shots);
  report.add("c_pp", counts.c_pp);
  report.add("c_pm", counts.c_pm);
  report.add("c_mp", counts.c_mp);
  report.add("c_mm", counts.c_mm);
  report.add("p_hat", correlation_estimate(counts, flags.shots));
  report.add("std_error",
             1.0 / std::sqrt(static_cast<double>(flags.shots)));
  report.add("p_exact", correlation(cfg.state, cfg.a, cfg.b).p_total);
  emit(report, flags.eval.format, flags.eval.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell correlations of two-particle entangled states"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"json", "csv"});

  EvalFlags eval_flags;
  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate the Bell correlation for three directions");
  add_state_flags(eval_cmd, eval_flags, true);
  eval_cmd->add_option("--format", eval_flags.format, "json | csv")
      ->check(format_check);
  eval_cmd->callback([&] { run_eval(eval_flags); });

  MaximizeFlags maximize_flags;
  auto* maximize_cmd = app.add_subcommand(
      "maximize", "search for the maximum Bell correlation");
  maximize_cmd
      ->add_option("--family", maximize_flags.family,
                   "spin-anti | spin-par | photon-perp | photon-par")
      ->required();
  maximize_cmd->add_option("--fix-state", maximize_flags.fix_state,
                           "pin the state parameters: xi,eta");
  maximize_cmd->add_option("--seed", maximize_flags.seed, "random seed");
  maximize_cmd->add_option("--starts", maximize_flags.starts,
                           "number of optimizer starts")
      ->check(CLI::PositiveNumber);
  maximize_cmd->add_flag("--degrees", maximize_flags.angles.degrees,
                         "interpret --fix-state as degrees");
  maximize_cmd->add_option("--format", maximize_flags.format, "json | csv")
      ->check(format_check);
  maximize_cmd->add_option("--out", maximize_flags.out,
                           "write the report to a file");
  maximize_cmd->callback([&] { run_maximize(maximize_flags); });

  ClassicalFlags classical_flags;
  auto* classical_cmd = app.add_subcommand(
      "classical", "verify the classical bound from population tables");
  classical_cmd
      ->add_option("--table", classical_flags.table, "anti | par")
      ->required();
  classical_cmd->add_option("--samples", classical_flags.samples,
                            "random simplex samples");
  classical_cmd->add_option("--seed", classical_flags.seed, "random seed");
  classical_cmd->add_option("--format", classical_flags.format, "json | csv")
      ->check(format_check);
  classical_cmd->add_option("--out", classical_flags.out,
                            "write the report to a file");
  classical_cmd->callback([&] { run_classical(classical_flags); });

  ScanFlags scan_flags;
  auto* scan_cmd = app.add_subcommand(
      "scan", "sweep 1 or 2 parameters and stream a CSV landscape");
  add_state_flags(scan_cmd, scan_flags.eval, true);
  scan_cmd->add_option("--param", scan_flags.params,
                       "xi | eta | theta_a | phi_a | ... (repeat for 2-D)");
  scan_cmd->add_option("--from", scan_flags.from, "axis start");
  scan_cmd->add_option("--to", scan_flags.to, "axis end");
  scan_cmd->add_option("--steps", scan_flags.steps, "grid points per axis");
  scan_cmd->callback([&] { run_scan(scan_flags); });

  SampleFlags sample_flags;
  auto* sample_cmd = app.add_subcommand(
      "sample", "draw measurement outcomes for a direction pair");
  add_state_flags(sample_cmd, sample_flags.eval, false);
  sample_cmd->add_option("--format", sample_flags.eval.format, "json | csv")
      ->check(format_check);
  sample_cmd->add_option("--shots", sample_flags.shots, "number of draws")
      ->required();
  sample_cmd->add_option("--seed", sample_flags.seed, "random seed");
  sample_cmd->callback([&] { run_sample(sample_flags); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
