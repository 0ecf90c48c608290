#pragma once

#include "qbell/correlations.hpp"

namespace qbell {

/// One three-direction Bell evaluation.
///
/// p_b = |p_ab - p_ac| - |p_bc| over the full correlations; p_b_local is
/// the same combination over the local parts of the same three pairwise
/// evaluations and never exceeds 1. `violated` is the strict test
/// p_b > 1; margin() lets callers apply their own thresholds.
struct BellEvaluation {
  double p_ab;
  double p_ac;
  double p_bc;
  double p_b;
  double p_b_local;
  bool violated;

  double margin() const { return p_b - 1.0; }
};

BellEvaluation qbcp(const EntangledPairState& s, const Direction& a,
                    const Direction& b, const Direction& c);

/// Local-realistic bound 1 + |P_lc(b,c)| >= |P_lc(a,b) - P_lc(a,c)|,
/// i.e. p_b_local <= 1. Holds for every family, state and direction
/// triple; the comparison carries 1e-12 slack for rounding at the
/// boundary.
bool extended_bi_local(const EntangledPairState& s, const Direction& a,
                       const Direction& b, const Direction& c);

struct OriginalBiCheck {
  double lhs;
  double rhs;
  bool holds;
};

/// Sign-resolved two-spin bound 1 +/- P_lc(b,c) >= |P_lc(a,b) - P_lc(a,c)|
/// (+ for antiparallel, - for parallel). Spin families only; photon
/// families throw std::invalid_argument (extended_bi_local covers them).
OriginalBiCheck original_bi_check(const EntangledPairState& s,
                                  const Direction& a, const Direction& b,
                                  const Direction& c);

/// True iff -1 - 1e-12 <= p_b <= 2 + 1e-12.
bool bound_check(const EntangledPairState& s, const Direction& a,
                 const Direction& b, const Direction& c);

}  // namespace qbell
