#include "qbell/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

BellEvaluation qbcp(const EntangledPairState& s, const Direction& a,
                    const Direction& b, const Direction& c) {
  const auto ab = correlation_closed_form_parts(s, a, b);
  const auto ac = correlation_closed_form_parts(s, a, c);
  const auto bc = correlation_closed_form_parts(s, b, c);

  BellEvaluation e;
  e.p_ab = ab.p_total;
  e.p_ac = ac.p_total;
  e.p_bc = bc.p_total;
  e.p_b = std::abs(e.p_ab - e.p_ac) - std::abs(e.p_bc);
  e.p_b_local = std::abs(ab.p_lc - ac.p_lc) - std::abs(bc.p_lc);
  e.violated = e.p_b > 1.0;
  return e;
}

bool extended_bi_local(const EntangledPairState& s, const Direction& a,
                       const Direction& b, const Direction& c) {
  return qbcp(s, a, b, c).p_b_local <= 1.0 + kNormTolerance;
}

OriginalBiCheck original_bi_check(const EntangledPairState& s,
                                  const Direction& a, const Direction& b,
                                  const Direction& c) {
  if (s.is_photon())
    throw std::invalid_argument("original_bi_check: spin families only");
  const double sign =
      s.family() == PairFamily::SpinAntiparallel ? 1.0 : -1.0;
  const auto ab = correlation_closed_form_parts(s, a, b);
  const auto ac = correlation_closed_form_parts(s, a, c);
  const auto bc = correlation_closed_form_parts(s, b, c);

  OriginalBiCheck r;
  r.lhs = 1.0 + sign * bc.p_lc;
  r.rhs = std::abs(ab.p_lc - ac.p_lc);
  r.holds = r.lhs >= r.rhs - kNormTolerance;
  return r;
}

bool bound_check(const EntangledPairState& s, const Direction& a,
                 const Direction& b, const Direction& c) {
  const double p_b = qbcp(s, a, b, c).p_b;
  return p_b >= -1.0 - kNormTolerance && p_b <= 2.0 + kNormTolerance;
}

}  // namespace qbell
