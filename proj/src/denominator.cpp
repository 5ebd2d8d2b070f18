#include "galrep/denominator.hpp"

#include <algorithm>

namespace galrep {

DenominatorProfile denominator_profile(const Rational& j,
                                       const FactorOptions& opts) {
    DenominatorProfile out;
    out.d = Integer(j.get_den());
    if (out.d == 1)
        throw integral_j_error("denominator_profile: j is an integer");
    out.factors = factorize(out.d, opts);
    out.g = 0;  // gcd accumulator; gcd(0, x) = x
    for (const auto& pe : out.factors) {
        mpz_gcd(out.g.get_mpz_t(), out.g.get_mpz_t(),
                Integer(pe.p * pe.p - 1).get_mpz_t());
        mpz_gcd(out.g.get_mpz_t(), out.g.get_mpz_t(),
                Integer(pe.e).get_mpz_t());
    }
    return out;
}

ExceptionalSet shortcut_set(const Rational& j, const FactorOptions& opts) {
    DenominatorProfile prof = denominator_profile(j, opts);
    ExceptionalSet s;
    for (long ell : {2, 3, 5, 7, 11, 13}) s.add(ell, {Reason::base});
    for (const auto& [ell, j0] : s0_pairs())
        if (j == j0) s.add(ell, {Reason::s0_pair});
    for (const auto& pe : factorize(prof.g, opts))
        s.add(pe.p, {Reason::divides_g});
    return s;
}

DenominatorBounds bounds_c(const Rational& j, const FactorOptions& opts) {
    DenominatorProfile prof = denominator_profile(j, opts);
    DenominatorBounds out;
    out.bound_g = std::max(Integer(17), prof.g);
    Integer best = 0;
    for (const auto& pe : prof.factors) {
        Integer half = (pe.p + 2) / 2;  // ceil((p+1)/2)
        if (best == 0 || half < best) best = half;
    }
    out.bound_p = std::max(Integer(17), best);
    out.bound_logd = std::max(Integer(17), Integer(ceil_log(prof.d)));
    return out;
}

}  // namespace galrep
