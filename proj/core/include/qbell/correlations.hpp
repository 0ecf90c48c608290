#pragma once

#include <array>
#include <cstdint>

#include "qbell/states.hpp"

namespace qbell {

/// Dense row-major 4x4 complex matrix on the fixed product basis.
struct Matrix4c {
  std::array<Complex, 16> m{};

  Complex& operator()(int r, int c) { return m[4 * r + c]; }
  const Complex& operator()(int r, int c) const { return m[4 * r + c]; }

  Complex trace() const;
};

Matrix4c operator+(const Matrix4c& x, const Matrix4c& y);

/// |u><v| on the product basis.
Matrix4c outer(const FourVector& u, const FourVector& v);

/// <v|M|v>.
Complex expectation(const Matrix4c& M, const FourVector& v);

/// Split of the pure-state density operator rho = |psi><psi| into a local
/// part (diagonal on the fixed product basis, trace 1 — the classical
/// two-particle probabilities) and a nonlocal part (the traceless
/// interference terms between the two occupied slots). Their sum
/// reproduces rho entrywise.
struct DensitySplit {
  Matrix4c local;
  Matrix4c nonlocal;
};

DensitySplit density_split(const EntangledPairState& s);

/// Outcome product basis for a joint measurement along (a, b):
/// |1> = |+a,+b>, |2> = |+a,-b>, |3> = |-a,+b>, |4> = |-a,-b>,
/// with the h/v polarization pair taking the role of +/- for photon
/// families. Photon families require planar directions and throw
/// std::invalid_argument otherwise.
struct MeasurementBasis {
  std::array<FourVector, 4> vec;
};

MeasurementBasis measurement_basis(const EntangledPairState& s,
                                   const Direction& a, const Direction& b);

struct DiagonalProbability {
  double local;
  double nonlocal;
  double total;
};

/// rho_ii = <i|rho|i> over the four outcome-basis vectors, split by density
/// component. Totals are computed as |<i|psi>|^2, so they are nonnegative
/// by construction and sum to one.
struct DiagonalProbabilities {
  std::array<DiagonalProbability, 4> rho;
};

DiagonalProbabilities diagonal_probabilities(const EntangledPairState& s,
                                             const Direction& a,
                                             const Direction& b);

/// Outcome correlation P(a,b) = rho_11 - rho_22 - rho_33 + rho_44, split
/// into the local part (which obeys the classical bound) and the nonlocal
/// interference part (which drives violations). p_total = p_lc + p_nlc.
struct CorrelationBreakdown {
  double p_lc;
  double p_nlc;
  double p_total;
};

/// Trace-formula evaluation against the materialized density split.
CorrelationBreakdown correlation(const EntangledPairState& s,
                                 const Direction& a, const Direction& b);

/// Closed-form evaluation, dispatched by family:
///   spin antiparallel:  -cos(ta)cos(tb) + sin(2xi) sin(ta)sin(tb) cos(pa - pb + 2eta)
///   spin parallel:       cos(ta)cos(tb) + sin(2xi) sin(ta)sin(tb) cos(pa + pb + 2eta)
///   photon perpendicular: -cos(2pa)cos(2pb) + sin(2xi)cos(2eta) sin(2pa)sin(2pb)
///   photon parallel:       cos(2pa)cos(2pb) + sin(2xi)cos(2eta) sin(2pa)sin(2pb)
/// Agrees with correlation(...) to rounding error; the trace path is kept
/// as the independent cross-check.
CorrelationBreakdown correlation_closed_form_parts(const EntangledPairState& s,
                                                   const Direction& a,
                                                   const Direction& b);

double correlation_closed_form(const EntangledPairState& s, const Direction& a,
                               const Direction& b);

/// Joint outcome probabilities N(+a,+b), N(+a,-b), N(-a,+b), N(-a,-b):
/// the total diagonal probabilities in basis order. Their signed sum
/// n_pp - n_pm - n_mp + n_mm reproduces the outcome correlation.
struct NumberCorrelations {
  double n_pp;
  double n_pm;
  double n_mp;
  double n_mm;
};

NumberCorrelations number_correlations(const EntangledPairState& s,
                                       const Direction& a, const Direction& b);

struct OutcomeCounts {
  std::uint64_t c_pp;
  std::uint64_t c_pm;
  std::uint64_t c_mp;
  std::uint64_t c_mm;
};

/// Multinomial draw of `shots` joint outcomes with cell probabilities from
/// number_correlations(). Each shot maps one uniform deviate u in [0, 1)
/// to the first cell whose cumulative probability exceeds u (inverse CDF
/// over the four cells, final cell catches numerical remainder), so equal
/// seeds give equal counts on every platform. Throws std::invalid_argument
/// when shots == 0.
OutcomeCounts sample_outcomes(const EntangledPairState& s, const Direction& a,
                              const Direction& b, std::uint64_t shots,
                              std::uint64_t seed);

/// Empirical correlation (c_pp - c_pm - c_mp + c_mm) / shots.
double correlation_estimate(const OutcomeCounts& counts, std::uint64_t shots);

}  // namespace qbell
