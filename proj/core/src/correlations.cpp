#include "qbell/correlations.hpp"

#include <cmath>
#include <stdexcept>

#include "qbell/rng.hpp"

namespace qbell {

Complex Matrix4c::trace() const {
  return m[0] + m[5] + m[10] + m[15];
}

Matrix4c operator+(const Matrix4c& x, const Matrix4c& y) {
  Matrix4c out;
  for (int i = 0; i < 16; ++i) out.m[i] = x.m[i] + y.m[i];
  return out;
}

Matrix4c outer(const FourVector& u, const FourVector& v) {
  Matrix4c out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = u.amp[r] * std::conj(v.amp[c]);
  return out;
}

Complex expectation(const Matrix4c& M, const FourVector& v) {
  Complex s{0.0, 0.0};
  for (int r = 0; r < 4; ++r) {
    Complex row{0.0, 0.0};
    for (int c = 0; c < 4; ++c) row += M(r, c) * v.amp[c];
    s += std::conj(v.amp[r]) * row;
  }
  return s;
}

DensitySplit density_split(const EntangledPairState& s) {
  const auto [i1, i2] = occupied_slots(s.family());
  const double sx = std::sin(s.xi());
  const double cx = std::cos(s.xi());
  const Complex phase2{std::cos(2.0 * s.eta()), std::sin(2.0 * s.eta())};

  DensitySplit out;
  out.local(i1, i1) = sx * sx;
  out.local(i2, i2) = cx * cx;
  out.nonlocal(i1, i2) = sx * cx * phase2;
  out.nonlocal(i2, i1) = sx * cx * std::conj(phase2);
  return out;
}

MeasurementBasis measurement_basis(const EntangledPairState& s,
                                   const Direction& a, const Direction& b) {
  if (s.is_photon() && !(a.is_planar() && b.is_planar()))
    throw std::invalid_argument(
        "photon families take planar directions (theta = pi/2)");
  const auto [ap, am] = s.is_photon() ? photon_measurement_pair(a.phi())
                                      : spin_coherent_pair(a);
  const auto [bp, bm] = s.is_photon() ? photon_measurement_pair(b.phi())
                                      : spin_coherent_pair(b);
  return {{tensor(ap, bp), tensor(ap, bm), tensor(am, bp), tensor(am, bm)}};
}

DiagonalProbabilities diagonal_probabilities(const EntangledPairState& s,
                                             const Direction& a,
                                             const Direction& b) {
  const auto split = density_split(s);
  const auto basis = measurement_basis(s, a, b);
  const auto psi = state_vector(s);

  DiagonalProbabilities out;
  for (int i = 0; i < 4; ++i) {
    const auto& v = basis.vec[i];
    out.rho[i].local = expectation(split.local, v).real();
    out.rho[i].nonlocal = expectation(split.nonlocal, v).real();
    out.rho[i].total = std::norm(inner(v, psi));
  }
  return out;
}

namespace {

double signed_sum(const DiagonalProbabilities& d,
                  double DiagonalProbability::*component) {
  return d.rho[0].*component - d.rho[1].*component - d.rho[2].*component +
         d.rho[3].*component;
}

}  // namespace

CorrelationBreakdown correlation(const EntangledPairState& s,
                                 const Direction& a, const Direction& b) {
  const auto d = diagonal_probabilities(s, a, b);
  return {signed_sum(d, &DiagonalProbability::local),
          signed_sum(d, &DiagonalProbability::nonlocal),
          signed_sum(d, &DiagonalProbability::total)};
}

CorrelationBreakdown correlation_closed_form_parts(const EntangledPairState& s,
                                                   const Direction& a,
                                                   const Direction& b) {
  if (s.is_photon() && !(a.is_planar() && b.is_planar()))
    throw std::invalid_argument(
        "photon families take planar directions (theta = pi/2)");
  const double s2xi = std::sin(2.0 * s.xi());
  const double eta2 = 2.0 * s.eta();
  double lc = 0.0;
  double nlc = 0.0;
  switch (s.family()) {
    case PairFamily::SpinAntiparallel:
      lc = -std::cos(a.theta()) * std::cos(b.theta());
      nlc = s2xi * std::sin(a.theta()) * std::sin(b.theta()) *
            std::cos(a.phi() - b.phi() + eta2);
      break;
    case PairFamily::SpinParallel:
      lc = std::cos(a.theta()) * std::cos(b.theta());
      nlc = s2xi * std::sin(a.theta()) * std::sin(b.theta()) *
            std::cos(a.phi() + b.phi() + eta2);
      break;
    case PairFamily::PhotonPerpendicular:
      lc = -std::cos(2.0 * a.phi()) * std::cos(2.0 * b.phi());
      nlc = s2xi * std::cos(eta2) * std::sin(2.0 * a.phi()) *
            std::sin(2.0 * b.phi());
      break;
    case PairFamily::PhotonParallel:
      lc = std::cos(2.0 * a.phi()) * std::cos(2.0 * b.phi());
      nlc = s2xi * std::cos(eta2) * std::sin(2.0 * a.phi()) *
            std::sin(2.0 * b.phi());
      break;
  }
  return {lc, nlc, lc + nlc};
}

double correlation_closed_form(const EntangledPairState& s, const Direction& a,
                               const Direction& b) {
  return correlation_closed_form_parts(s, a, b).p_total;
}

NumberCorrelations number_correlations(const EntangledPairState& s,
                                       const Direction& a, const Direction& b) {
  const auto d = diagonal_probabilities(s, a, b);
  return {d.rho[0].total, d.rho[1].total, d.rho[2].total, d.rho[3].total};
}

OutcomeCounts sample_outcomes(const EntangledPairState& s, const Direction& a,
                              const Direction& b, std::uint64_t shots,
                              std::uint64_t seed) {
  if (shots == 0)
    throw std::invalid_argument("sample_outcomes: shots must be >= 1");

  const auto n = number_correlations(s, a, b);
  const double cum1 = n.n_pp;
  const double cum2 = cum1 + n.n_pm;
  const double cum3 = cum2 + n.n_mp;

  Rng rng(seed);
  OutcomeCounts c{};
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = uniform_unit(rng);
    if (u < cum1)
      ++c.c_pp;
    else if (u < cum2)
      ++c.c_pm;
    else if (u < cum3)
      ++c.c_mp;
    else
      ++c.c_mm;
  }
  return c;
}

double correlation_estimate(const OutcomeCounts& counts, std::uint64_t shots) {
  const double signed_count =
      static_cast<double>(counts.c_pp) - static_cast<double>(counts.c_pm) -
      static_cast<double>(counts.c_mp) + static_cast<double>(counts.c_mm);
  return signed_count / static_cast<double>(shots);
}

}  // namespace qbell
