#pragma once

#include "galrep/sieve.hpp"

namespace galrep {

// Factorization p_1^{e_1} ... p_s^{e_s} of the denominator of j together
// with g = gcd of the integers p_i^2 - 1 and e_i.
struct DenominatorProfile {
    Integer d = 1;  // the denominator itself
    Factorization factors;
    Integer g = 1;
};

// Requires a non-integral j; raises integral_j_error otherwise.
DenominatorProfile denominator_profile(const Rational& j,
                                       const FactorOptions& opts = {});

// S = {ell <= 13} u {ell : (ell, j) in S0} u {ell : ell | g}.
ExceptionalSet shortcut_set(const Rational& j, const FactorOptions& opts = {});

// Closed-form bounds for the largest possibly-exceptional prime when j is
// not an integer.  All ceilings are exact.
struct DenominatorBounds {
    Integer bound_g;     // max(17, g)
    Integer bound_p;     // min over p | d of max(17, ceil((p+1)/2))
    Integer bound_logd;  // max(17, ceil(log d))
};

DenominatorBounds bounds_c(const Rational& j, const FactorOptions& opts = {});

}  // namespace galrep
