#include "qbell/states.hpp"

#include <cmath>

namespace qbell {

namespace {

// Wrap into [0, 2pi). The guard catches the case where adding 2pi to a tiny
// negative remainder rounds up to 2pi itself.
double wrap_two_pi(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

bool is_photon_family(PairFamily family) {
  return family == PairFamily::PhotonPerpendicular ||
         family == PairFamily::PhotonParallel;
}

Direction::Direction(double theta, double phi) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > kPi) {  // reflect through the pole, azimuth turns by pi
    t = kTwoPi - t;
    phi += kPi;
  }
  theta_ = t;
  phi_ = wrap_two_pi(phi);
}

double Spinor::norm2() const {
  return std::norm(amp[0]) + std::norm(amp[1]);
}

Complex inner(const Spinor& u, const Spinor& v) {
  return std::conj(u.amp[0]) * v.amp[0] + std::conj(u.amp[1]) * v.amp[1];
}

double FourVector::norm2() const {
  double n = 0.0;
  for (const auto& a : amp) n += std::norm(a);
  return n;
}

Complex inner(const FourVector& u, const FourVector& v) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < 4; ++i) s += std::conj(u.amp[i]) * v.amp[i];
  return s;
}

FourVector tensor(const Spinor& first, const Spinor& second) {
  FourVector out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.amp[2 * i + j] = first.amp[i] * second.amp[j];
  return out;
}

EntangledPairState::EntangledPairState(PairFamily family, double xi, double eta)
    : family_(family), xi_(xi), eta_(eta) {
  const Complex phase{std::cos(eta), std::sin(eta)};
  c1_ = phase * std::sin(xi);
  c2_ = std::conj(phase) * std::cos(xi);
}

std::pair<Spinor, Spinor> spin_coherent_pair(const Direction& r) {
  const double c = std::cos(0.5 * r.theta());
  const double s = std::sin(0.5 * r.theta());
  const Complex phase{std::cos(r.phi()), std::sin(r.phi())};
  Spinor plus{{Complex{c, 0.0}, s * phase}};
  Spinor minus{{Complex{s, 0.0}, -c * phase}};
  return {plus, minus};
}

std::pair<Spinor, Spinor> photon_measurement_pair(double phi) {
  const double p = wrap_two_pi(phi);
  const double c = std::cos(p);
  const double s = std::sin(p);
  Spinor h{{Complex{c, 0.0}, Complex{s, 0.0}}};
  Spinor v{{Complex{-s, 0.0}, Complex{c, 0.0}}};
  return {h, v};
}

std::pair<int, int> occupied_slots(PairFamily family) {
  switch (family) {
    case PairFamily::SpinAntiparallel:
    case PairFamily::PhotonPerpendicular:
      return {1, 2};  // |+,->, |-,+>
    case PairFamily::SpinParallel:
    case PairFamily::PhotonParallel:
      return {0, 3};  // |+,+>, |-,->
  }
  return {1, 2};  // unreachable
}

FourVector state_vector(const EntangledPairState& s) {
  const auto [i1, i2] = occupied_slots(s.family());
  FourVector v;
  v.amp[i1] = s.c1();
  v.amp[i2] = s.c2();
  return v;
}

}  // namespace qbell
