#pragma once

#include "galrep/tate.hpp"

namespace galrep {

// max(37, ceil((2 sqrt(3)/3) * sqrt(N) * prod_{p|N} sqrt((p+1)/(2p)))) for a
// non-CM curve with no multiplicative primes; compared by squaring, no
// floating point.  Raises multiplicative_reduction_error naming the first
// offending prime.
Integer conductor_bound(const WeierstrassModel& m,
                        const FactorOptions& opts = {});

// Same expression evaluated for a bare conductor value.
Integer conductor_bound_for_n(const Integer& n, const FactorOptions& opts = {});

// floor(N/3 * prod_{p|N} (1/2 + 1/(2p)) - 1): a prime q <= this bound
// separates any two distinct weight-2 newforms of level N.  May be < 2.
Integer sturm_prime_bound(const Integer& n, const FactorOptions& opts = {});

}  // namespace galrep
