#include "qbell/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbell/rng.hpp"

namespace qbell {

namespace {

constexpr double kInitialStep = 0.3;  // radians, initial simplex edge
constexpr double kJitter = 1e-6;

// Simplex coefficients: reflection, expansion, contraction, shrink.
constexpr double kAlpha = 1.0;
constexpr double kGamma = 2.0;
constexpr double kRho = 0.5;
constexpr double kSigma = 0.5;

// Flat coordinate vector <-> (state, directions). Spin layout is
// [theta_a, phi_a, theta_b, phi_b, theta_c, phi_c (, xi, eta)]; photon
// layout is [phi_a, phi_b, phi_c (, xi, eta)].
struct ParamSpace {
  PairFamily family;
  bool free_state;
  double fixed_xi;
  double fixed_eta;
  bool photon;

  int n_angles() const { return photon ? 3 : 6; }
  int dim() const { return n_angles() + (free_state ? 2 : 0); }

  // Polar dimensions live on [0, pi]; everything else is 2pi-periodic.
  bool is_polar_dim(int i) const { return !photon && i < 6 && i % 2 == 0; }

  struct Decoded {
    EntangledPairState s;
    Direction a;
    Direction b;
    Direction c;
  };

  Decoded decode(const std::vector<double>& x) const {
    const double xi = free_state ? x[n_angles()] : fixed_xi;
    const double eta = free_state ? x[n_angles() + 1] : fixed_eta;
    EntangledPairState s(family, xi, eta);
    if (photon)
      return {s, Direction::planar(x[0]), Direction::planar(x[1]),
              Direction::planar(x[2])};
    return {s, Direction(x[0], x[1]), Direction(x[2], x[3]),
            Direction(x[4], x[5])};
  }

  // Canonical (wrapped/reflected) tuple, for degenerate-start detection.
  std::array<double, 8> normalized_tuple(const std::vector<double>& x) const {
    const auto d = decode(x);
    return {d.a.theta(), d.a.phi(), d.b.theta(), d.b.phi(),
            d.c.theta(), d.c.phi(), d.s.xi(),   d.s.eta()};
  }

  double grid_coordinate(int i, int k, int res) const {
    if (is_polar_dim(i))
      return res == 1 ? 0.5 * kPi
                      : kPi * static_cast<double>(k) / (res - 1);
    return kTwoPi * static_cast<double>(k) / res;
  }

  double random_coordinate(int i, Rng& rng) const {
    return uniform_in(rng, 0.0, is_polar_dim(i) ? kPi : kTwoPi);
  }
};

struct Objective {
  const ParamSpace& space;
  std::uint64_t evaluations = 0;

  // Negated p_b so the simplex search minimizes.
  double operator()(const std::vector<double>& x) {
    ++evaluations;
    const auto d = space.decode(x);
    return -qbcp(d.s, d.a, d.b, d.c).p_b;
  }
};

struct Vertex {
  std::vector<double> x;
  double f;
};

struct NmOutcome {
  std::vector<double> x;
  double f;
  bool converged;
};

NmOutcome nelder_mead(Objective& obj, const ParamSpace& space,
                      const std::vector<double>& start, double tolerance,
                      int max_iterations) {
  const int n = static_cast<int>(start.size());
  std::vector<Vertex> simplex(n + 1);
  simplex[0].x = start;
  for (int i = 1; i <= n; ++i) {
    simplex[i].x = start;
    simplex[i].x[i - 1] += kInitialStep;
  }
  // A vertex that wraps onto an earlier one would zero the simplex volume;
  // nudge it off the symmetry axis.
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (space.normalized_tuple(simplex[i].x) ==
          space.normalized_tuple(simplex[j].x)) {
        for (double& v : simplex[i].x) v += kJitter;
        break;
      }
    }
  }
  for (auto& v : simplex) v.f = obj(v.x);

  std::vector<double> centroid(n), candidate(n);
  bool converged = false;
  for (int iter = 0; iter < max_iterations; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& u, const Vertex& v) { return u.f < v.f; });
    if (simplex[n].f - simplex[0].f <= tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) centroid[k] += simplex[i].x[k] / n;

    const auto blend = [&](double coeff) {
      for (int k = 0; k < n; ++k)
        candidate[k] = centroid[k] + coeff * (centroid[k] - simplex[n].x[k]);
    };

    blend(kAlpha);  // reflect
    const double f_reflect = obj(candidate);
    if (f_reflect < simplex[0].f) {
      std::vector<double> reflected = candidate;
      blend(kAlpha * kGamma);  // expand
      const double f_expand = obj(candidate);
      if (f_expand < f_reflect) {
        simplex[n] = {candidate, f_expand};
      } else {
        simplex[n] = {std::move(reflected), f_reflect};
      }
      continue;
    }
    if (f_reflect < simplex[n - 1].f) {
      simplex[n] = {candidate, f_reflect};
      continue;
    }

    // Contract toward the better of worst/reflected; shrink on failure.
    if (f_reflect < simplex[n].f) {
      blend(kAlpha * kRho);
      const double f_contract = obj(candidate);
      if (f_contract <= f_reflect) {
        simplex[n] = {candidate, f_contract};
        continue;
      }
    } else {
      blend(-kRho);
      const double f_contract = obj(candidate);
      if (f_contract < simplex[n].f) {
        simplex[n] = {candidate, f_contract};
        continue;
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < n; ++k)
        simplex[i].x[k] =
            simplex[0].x[k] + kSigma * (simplex[i].x[k] - simplex[0].x[k]);
      simplex[i].f = obj(simplex[i].x);
    }
  }

  std::stable_sort(simplex.begin(), simplex.end(),
                   [](const Vertex& u, const Vertex& v) { return u.f < v.f; });
  return {simplex[0].x, simplex[0].f, converged};
}

void validate_config(const OptimizerConfig& config) {
  if (config.n_starts < 1 || config.grid_resolution < 1 ||
      config.max_iterations < 1 || !(config.tolerance > 0.0))
    throw std::invalid_argument("optimizer config fields must be positive");
}

}  // namespace

OptimizationResult maximize_qbcp(const OptimizationProblem& problem,
                                 const OptimizerConfig& config) {
  validate_config(config);
  const ParamSpace space{problem.family, problem.free_state, problem.fixed_xi,
                         problem.fixed_eta, is_photon_family(problem.family)};
  const int n = space.dim();
  Objective obj{space};

  // Coarse grid pre-scan, ranked best-first (f is the negated objective).
  std::uint64_t grid_total = 1;
  for (int i = 0; i < n; ++i) grid_total *= config.grid_resolution;
  std::vector<std::pair<double, std::uint64_t>> ranked;
  ranked.reserve(grid_total);
  std::vector<double> x(n);
  for (std::uint64_t flat = 0; flat < grid_total; ++flat) {
    std::uint64_t rem = flat;
    for (int i = 0; i < n; ++i) {
      x[i] = space.grid_coordinate(i, static_cast<int>(rem % config.grid_resolution),
                                   config.grid_resolution);
      rem /= config.grid_resolution;
    }
    ranked.emplace_back(obj(x), flat);
  }
  std::sort(ranked.begin(), ranked.end());

  const int n_grid_starts = static_cast<int>(
      std::min<std::uint64_t>((config.n_starts + 1) / 2, ranked.size()));
  std::vector<std::vector<double>> starts;
  starts.reserve(config.n_starts);
  for (int sidx = 0; sidx < n_grid_starts; ++sidx) {
    std::uint64_t rem = ranked[sidx].second;
    for (int i = 0; i < n; ++i) {
      x[i] = space.grid_coordinate(i, static_cast<int>(rem % config.grid_resolution),
                                   config.grid_resolution);
      rem /= config.grid_resolution;
    }
    starts.push_back(x);
  }
  Rng rng(config.seed);
  while (static_cast<int>(starts.size()) < config.n_starts) {
    for (int i = 0; i < n; ++i) x[i] = space.random_coordinate(i, rng);
    starts.push_back(x);
  }

  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> best_x = starts[0];
  int converged_count = 0;
  for (const auto& start : starts) {
    const auto r =
        nelder_mead(obj, space, start, config.tolerance, config.max_iterations);
    if (r.converged) ++converged_count;
    if (r.f < best_f) {  // strict: ties stay with the earliest start
      best_f = r.f;
      best_x = r.x;
    }
  }

  const auto d = space.decode(best_x);
  OptimizationResult out;
  out.a = d.a;
  out.b = d.b;
  out.c = d.c;
  out.xi = d.s.xi();
  out.eta = d.s.eta();
  out.best_value = qbcp(d.s, d.a, d.b, d.c).p_b;
  out.starts_converged = converged_count;
  out.evaluations = obj.evaluations;
  return out;
}

ScanParameter scan_parameter_from_name(const std::string& name) {
  if (name == "xi") return ScanParameter::Xi;
  if (name == "eta") return ScanParameter::Eta;
  if (name == "theta_a") return ScanParameter::ThetaA;
  if (name == "phi_a") return ScanParameter::PhiA;
  if (name == "theta_b") return ScanParameter::ThetaB;
  if (name == "phi_b") return ScanParameter::PhiB;
  if (name == "theta_c") return ScanParameter::ThetaC;
  if (name == "phi_c") return ScanParameter::PhiC;
  throw std::invalid_argument("unknown scan parameter: " + name);
}

std::string to_string(ScanParameter p) {
  switch (p) {
    case ScanParameter::Xi: return "xi";
    case ScanParameter::Eta: return "eta";
    case ScanParameter::ThetaA: return "theta_a";
    case ScanParameter::PhiA: return "phi_a";
    case ScanParameter::ThetaB: return "theta_b";
    case ScanParameter::PhiB: return "phi_b";
    case ScanParameter::ThetaC: return "theta_c";
    case ScanParameter::PhiC: return "phi_c";
  }
  return "";  // unreachable
}

double ScanAxis::coordinate(int k) const {
  return from + (to - from) * (static_cast<double>(k) / steps);
}

namespace {

bool is_polar_parameter(ScanParameter p) {
  return p == ScanParameter::ThetaA || p == ScanParameter::ThetaB ||
         p == ScanParameter::ThetaC;
}

}  // namespace

LandscapeResult landscape_scan(const ScanBase& base,
                               const std::vector<ScanAxis>& axes) {
  if (axes.empty() || axes.size() > 2)
    throw std::invalid_argument("scan takes one or two axes");
  for (const auto& ax : axes) {
    if (ax.steps < 1)
      throw std::invalid_argument("scan axis needs at least one step");
    if (ax.steps > 1 && ax.from == ax.to)
      throw std::invalid_argument("empty scan range");
    if (base.state.is_photon() && is_polar_parameter(ax.param))
      throw std::invalid_argument("photon families have no polar angles");
  }
  if (axes.size() == 2 && axes[0].param == axes[1].param)
    throw std::invalid_argument("duplicate scan parameter");

  // Raw parameters in ScanParameter order.
  std::array<double, 8> raw = {base.state.xi(), base.state.eta(),
                               base.a.theta(),  base.a.phi(),
                               base.b.theta(),  base.b.phi(),
                               base.c.theta(),  base.c.phi()};
  const auto evaluate = [&](const std::array<double, 8>& r) {
    const EntangledPairState s(base.state.family(), r[0], r[1]);
    if (s.is_photon())
      return qbcp(s, Direction::planar(r[3]), Direction::planar(r[5]),
                  Direction::planar(r[7]))
          .p_b;
    return qbcp(s, Direction(r[2], r[3]), Direction(r[4], r[5]),
                Direction(r[6], r[7]))
        .p_b;
  };

  LandscapeResult out;
  out.axes = axes;
  const int outer = axes[0].steps;
  const int inner = axes.size() == 2 ? axes[1].steps : 1;
  out.p_b.reserve(static_cast<std::size_t>(outer) * inner);
  for (int i = 0; i < outer; ++i) {
    raw[static_cast<int>(axes[0].param)] = axes[0].coordinate(i);
    for (int j = 0; j < inner; ++j) {
      if (axes.size() == 2)
        raw[static_cast<int>(axes[1].param)] = axes[1].coordinate(j);
      out.p_b.push_back(evaluate(raw));
    }
  }
  return out;
}

}  // namespace qbell
