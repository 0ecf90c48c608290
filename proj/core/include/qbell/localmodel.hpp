#pragma once

#include <array>
#include <cstdint>

#include "qbell/rng.hpp"

namespace qbell {

/// Hidden-variable population weights N_1..N_8 (n[0] holds N_1), one per
/// joint sign assignment (+/-a, +/-b, +/-c) of particle 1. Weights are
/// arbitrary nonnegative reals — every correlation is scale-invariant —
/// and correlation queries require a positive total.
struct Populations {
  std::array<double, 8> n{};
};

enum class TableKind { Antiparallel, Parallel };

enum class SettingPair { AB, AC, BC };

/// Sign table behind the population rows. Particle 1 of row i carries
/// (s_a, s_b, s_c) read off the bits of i (0 bit = +1), so row 0 is
/// (+a,+b,+c) and row 7 is (-a,-b,-c). Particle 2 carries the opposite
/// signs for the antiparallel table and identical signs for the parallel
/// one. Encoding the tables as data keeps the correlation rule generic
/// instead of 24 transcribed formulas.
class SignAssignment {
 public:
  static const SignAssignment& for_table(TableKind kind);

  /// direction: 0 = a, 1 = b, 2 = c.
  int s1(int row, int direction) const { return s1_[row][direction]; }
  int s2(int row, int direction) const { return s2_[row][direction]; }

 private:
  explicit SignAssignment(TableKind kind);

  std::array<std::array<int, 3>, 8> s1_{};
  std::array<std::array<int, 3>, 8> s2_{};
};

/// Classical correlation sum_i N_i s1_x(i) s2_y(i) / sum_i N_i with
/// particle 1 measured along the pair's first setting and particle 2 along
/// its second. Throws std::invalid_argument on a negative weight or an
/// all-zero table.
double classical_correlation(const Populations& p, TableKind kind,
                             SettingPair pair);

/// |P_c(a,b) - P_c(a,c)| - |P_c(b,c)| from the population table. Bounded
/// above by 1 for every admissible population.
double classical_qbcp(const Populations& p, TableKind kind);

/// Uniform stream over the 7-simplex: eight unit exponentials
/// (-log(1-u) of the seeded engine) normalized to unit sum. Equal seeds
/// reproduce the stream exactly.
class PopulationSampler {
 public:
  explicit PopulationSampler(std::uint64_t seed) : rng_(seed) {}

  Populations next();

 private:
  Rng rng_;
};

struct ClassicalSearchResult {
  double best_value;
  Populations witness;
  std::uint64_t samples;
  int vertices_checked;  // 8 vertices + 28 two-vertex mixtures
};

/// Maximum classical Bell correlation over the 8 vertex populations, the
/// 28 uniform two-vertex mixtures and `samples` random simplex points
/// (enumeration runs regardless of `samples`). The vertex enumeration
/// already attains the bound value 1, so best_value is 1 up to rounding
/// and the witness is an exact-equality population.
ClassicalSearchResult classical_max_search(TableKind kind, std::uint64_t seed,
                                           std::uint64_t samples = 100'000);

}  // namespace qbell
