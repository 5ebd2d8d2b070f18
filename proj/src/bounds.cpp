#include "galrep/bounds.hpp"

#include <algorithm>

namespace galrep {

namespace {

// Q = N/3 * prod_{p|N} (p+1)/(2p) as an exact rational.
Rational inner_value(const Integer& n, const Factorization& f) {
    Rational q(n, 3);
    for (const auto& pe : f) {
        q *= Rational(pe.p + 1, 2 * pe.p);
        q.canonicalize();
    }
    q.canonicalize();
    return q;
}

}  // namespace

Integer conductor_bound_for_n(const Integer& n, const FactorOptions& opts) {
    Factorization f = factorize(n, opts);
    Rational q = inner_value(n, f);
    // bound expression is 2*sqrt(Q); its ceiling is the least m with
    // m^2 >= 4 Q
    Rational fourq = 4 * q;
    Integer m = ceil_sqrt_rational(Integer(fourq.get_num()),
                                   Integer(fourq.get_den()));
    Integer out = std::max(Integer(37), m);
    // the coarse form of the same bound
    Integer coarse = std::max(Integer(37), ceil_sqrt_rational(n, 1));
    if (out > coarse) throw error("conductor_bound exceeds max(37, sqrt(N))");
    return out;
}

Integer conductor_bound(const WeierstrassModel& m, const FactorOptions& opts) {
    if (is_cm_j(m.j())) throw cm_curve_error(to_string(m.j()));
    ConductorInfo info = conductor(m, opts);
    for (const auto& ld : info.local_data)
        if (ld.reduction == Reduction::split_multiplicative ||
            ld.reduction == Reduction::nonsplit_multiplicative)
            throw multiplicative_reduction_error(to_string(ld.p));
    return conductor_bound_for_n(info.n, opts);
}

Integer sturm_prime_bound(const Integer& n, const FactorOptions& opts) {
    Factorization f = factorize(n, opts);
    Rational q = inner_value(n, f) - 1;
    Integer out;
    // floor of a rational
    mpz_fdiv_q(out.get_mpz_t(), Integer(q.get_num()).get_mpz_t(),
               Integer(q.get_den()).get_mpz_t());
    return out;
}

}  // namespace galrep
