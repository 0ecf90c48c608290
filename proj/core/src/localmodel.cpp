#include "qbell/localmodel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qbell {

SignAssignment::SignAssignment(TableKind kind) {
  for (int row = 0; row < 8; ++row) {
    for (int d = 0; d < 3; ++d) {
      const int bit = (row >> (2 - d)) & 1;
      const int s = bit ? -1 : 1;
      s1_[row][d] = s;
      s2_[row][d] = kind == TableKind::Antiparallel ? -s : s;
    }
  }
}

const SignAssignment& SignAssignment::for_table(TableKind kind) {
  static const SignAssignment antiparallel{TableKind::Antiparallel};
  static const SignAssignment parallel{TableKind::Parallel};
  return kind == TableKind::Antiparallel ? antiparallel : parallel;
}

namespace {

double total_weight(const Populations& p) {
  double sum = 0.0;
  for (double w : p.n) {
    if (w < 0.0)
      throw std::invalid_argument("populations must be nonnegative");
    sum += w;
  }
  if (sum <= 0.0)
    throw std::invalid_argument("populations must not be all zero");
  return sum;
}

std::pair<int, int> settings_of(SettingPair pair) {
  switch (pair) {
    case SettingPair::AB: return {0, 1};
    case SettingPair::AC: return {0, 2};
    case SettingPair::BC: return {1, 2};
  }
  return {0, 1};  // unreachable
}

}  // namespace

double classical_correlation(const Populations& p, TableKind kind,
                             SettingPair pair) {
  const double sum = total_weight(p);
  const auto& table = SignAssignment::for_table(kind);
  const auto [x, y] = settings_of(pair);
  double num = 0.0;
  for (int row = 0; row < 8; ++row)
    num += p.n[row] * table.s1(row, x) * table.s2(row, y);
  return num / sum;
}

double classical_qbcp(const Populations& p, TableKind kind) {
  const double ab = classical_correlation(p, kind, SettingPair::AB);
  const double ac = classical_correlation(p, kind, SettingPair::AC);
  const double bc = classical_correlation(p, kind, SettingPair::BC);
  return std::abs(ab - ac) - std::abs(bc);
}

Populations PopulationSampler::next() {
  Populations p;
  double sum = 0.0;
  for (double& w : p.n) {
    w = exponential_unit(rng_);
    sum += w;
  }
  for (double& w : p.n) w /= sum;
  return p;
}

ClassicalSearchResult classical_max_search(TableKind kind, std::uint64_t seed,
                                           std::uint64_t samples) {
  ClassicalSearchResult best{-std::numeric_limits<double>::infinity(),
                             Populations{}, samples, 0};
  const auto consider = [&](const Populations& p) {
    const double value = classical_qbcp(p, kind);
    if (value > best.best_value) {
      best.best_value = value;
      best.witness = p;
    }
  };

  for (int i = 0; i < 8; ++i) {
    Populations p{};
    p.n[i] = 1.0;
    consider(p);
    ++best.vertices_checked;
  }
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      Populations p{};
      p.n[i] = 0.5;
      p.n[j] = 0.5;
      consider(p);
      ++best.vertices_checked;
    }
  }

  PopulationSampler sampler(seed);
  for (std::uint64_t k = 0; k < samples; ++k) consider(sampler.next());
  return best;
}

}  // namespace qbell
