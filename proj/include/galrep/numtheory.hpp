#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "galrep/errors.hpp"

namespace galrep {

using Integer = mpz_class;
using Rational = mpq_class;

// p-adic valuation result; v_p(0) is the distinguished infinite value.
// Comparisons against finite integers are false for infinity.
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation infinity() { return Valuation{true, 0}; }
    static Valuation finite(long value) { return Valuation{false, value}; }

    bool is_infinite() const { return infinite; }
    long value() const { return v; }  // meaningful only when finite

    bool operator==(long x) const { return !infinite && v == x; }
    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool is_one_of(std::initializer_list<long> xs) const {
        if (infinite) return false;
        for (long x : xs)
            if (v == x) return true;
        return false;
    }
};

Valuation valuation(const Integer& n, const Integer& p);
Valuation valuation(const Rational& x, const Integer& p);

// Legendre symbol (a|p) for an odd prime p: 0 if p | a, else +-1.
int legendre(const Integer& a, const Integer& p);

struct PrimePower {
    Integer p;
    unsigned long e = 0;
    bool operator==(const PrimePower& o) const { return p == o.p && e == o.e; }
};

// Ordered (p strictly increasing), exponents >= 1; empty for n = 1.
using Factorization = std::vector<PrimePower>;

Integer factorization_value(const Factorization& f);

// Effort budget for exact factorization.  Exceeding it raises budget_error;
// nothing is ever silently dropped.
struct FactorOptions {
    unsigned long trial_bound = 100000;     // trial division up to this bound
    std::uint64_t rho_iterations = 1u << 26;  // total Brent-rho iteration budget
    std::size_t max_divisors = 500000;      // cap for divisor enumeration
};

// Deterministic strong-pseudoprime test (13 fixed bases), exact for
// n < 3317044064679887385961981 =~ 3.3e24; larger inputs raise budget_error.
bool is_prime(const Integer& n);

// Smallest prime strictly greater than n.
Integer next_prime(const Integer& n);

// Full factorization of n >= 1 within the effort budget.
Factorization factorize(const Integer& n, const FactorOptions& opts = {});

// All positive divisors, unsorted count-capped by opts.max_divisors.
std::vector<Integer> divisors(const Factorization& f,
                              const FactorOptions& opts = {});

// Parse "num/den" or "num" (decimal, optional sign); canonicalizes.
Rational rational_from_string(const std::string& s);

std::string to_string(const Integer& n);
std::string to_string(const Rational& x);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

// Least n >= 0 with n^2 >= num/den (num, den > 0): the ceiling of the
// square root of a rational, decided by integer arithmetic only.
Integer ceil_sqrt_rational(const Integer& num, const Integer& den);

// Ceiling of the natural logarithm of n >= 1, decided exactly by comparing
// against rational enclosures of powers of e.
long ceil_log(const Integer& n);

}  // namespace galrep
