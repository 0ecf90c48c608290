#pragma once

#include <array>
#include <complex>
#include <utility>

namespace qbell {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Absolute tolerance for normalization / hermiticity / probability checks.
// Doubles leave ~1e-15 headroom; 1e-12 absorbs accumulated rounding.
inline constexpr double kNormTolerance = 1e-12;

/// The four two-particle entangled families handled by this library.
///
/// Spin families live on the product basis {|+>,|->} x {|+>,|->} and are
/// measured along arbitrary spatial directions; photon families live on
/// {|e_x>,|e_y>} x {|e_x>,|e_y>} and are measured by in-plane polarizer
/// angles only.
enum class PairFamily {
  SpinAntiparallel,     // c1|+,-> + c2|-,+>
  SpinParallel,         // c1|+,+> + c2|-,->
  PhotonPerpendicular,  // c1|e_x,e_y> + c2|e_y,e_x>
  PhotonParallel,       // c1|e_x,e_x> + c2|e_y,e_y>
};

bool is_photon_family(PairFamily family);

/// A measurement direction with polar angle theta and azimuthal angle phi.
///
/// Construction normalizes any real input: theta is reduced mod 2pi and
/// reflected into [0, pi] (theta -> 2pi - theta together with
/// phi -> phi + pi), then phi is wrapped into [0, 2pi). Photon measurements
/// are planar; build them with planar(), which pins theta = pi/2.
class Direction {
 public:
  Direction(double theta, double phi);

  static Direction planar(double phi) { return Direction(0.5 * kPi, phi); }

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  bool is_planar() const { return theta_ == 0.5 * kPi; }

 private:
  double theta_;
  double phi_;
};

/// Amplitudes on the single-particle basis {|+>,|->} (spin) or
/// {|e_x>,|e_y>} (photon).
struct Spinor {
  std::array<Complex, 2> amp{};

  double norm2() const;
};

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const Spinor& u, const Spinor& v);

/// Amplitudes on the fixed two-particle product basis, ordered
/// {|++>, |+->, |-+>, |-->} for spins and
/// {|e_x e_x>, |e_x e_y>, |e_y e_x>, |e_y e_y>} for photons.
struct FourVector {
  std::array<Complex, 4> amp{};

  double norm2() const;
};

Complex inner(const FourVector& u, const FourVector& v);

/// Product |first> x |second> in the fixed basis order above.
FourVector tensor(const Spinor& first, const Spinor& second);

/// Entangled pair state c1|s1> + c2|s2> with coefficients
/// c1 = e^{i eta} sin(xi), c2 = e^{-i eta} cos(xi); the family selects the
/// two occupied product-basis slots. xi and eta are stored unwrapped — all
/// downstream formulas are 2pi-periodic in both.
class EntangledPairState {
 public:
  EntangledPairState(PairFamily family, double xi, double eta);

  PairFamily family() const { return family_; }
  double xi() const { return xi_; }
  double eta() const { return eta_; }
  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }
  bool is_photon() const { return is_photon_family(family_); }

 private:
  PairFamily family_;
  double xi_;
  double eta_;
  Complex c1_;
  Complex c2_;
};

/// Eigenstates (|+r>, |-r>) of the spin projection along r:
///   |+r> = cos(theta/2)|+> + e^{i phi} sin(theta/2)|->
///   |-r> = sin(theta/2)|+> - e^{i phi} cos(theta/2)|->
/// Orthonormal for every direction; together they resolve the identity.
std::pair<Spinor, Spinor> spin_coherent_pair(const Direction& r);

/// Horizontal/vertical polarization pair of a polarizer at angle phi
/// (wrapped into [0, 2pi) first):
///   |r_h> =  cos(phi)|e_x> + sin(phi)|e_y>
///   |r_v> = -sin(phi)|e_x> + cos(phi)|e_y>
std::pair<Spinor, Spinor> photon_measurement_pair(double phi);

/// Product-basis amplitudes of the state; unit norm.
FourVector state_vector(const EntangledPairState& s);

/// Indices of the (c1, c2) product-basis slots a family occupies.
std::pair<int, int> occupied_slots(PairFamily family);

}  // namespace qbell
