#include "galrep/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>

namespace galrep {

Valuation valuation(const Integer& n, const Integer& p) {
    if (n == 0) return Valuation::infinity();
    mpz_class rest;
    mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Valuation::finite(static_cast<long>(v));
}

Valuation valuation(const Rational& x, const Integer& p) {
    if (x == 0) return Valuation::infinity();
    Valuation num = valuation(Integer(x.get_num()), p);
    Valuation den = valuation(Integer(x.get_den()), p);
    return Valuation::finite(num.value() - den.value());
}

int legendre(const Integer& a, const Integer& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Integer factorization_value(const Factorization& f) {
    Integer n = 1;
    for (const auto& pe : f) {
        Integer q;
        mpz_pow_ui(q.get_mpz_t(), pe.p.get_mpz_t(), pe.e);
        n *= q;
    }
    return n;
}

namespace {

// Bases {2,...,41}: strong-pseudoprime test is deterministic below this.
const Integer kDeterministicMrLimit("3317044064679887385961981");
constexpr std::array<unsigned long, 13> kMrBases = {2,  3,  5,  7,  11, 13, 17,
                                                    19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const Integer& n, const Integer& base,
                          const Integer& d, unsigned long s) {
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long b : kMrBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    if (n >= kDeterministicMrLimit)
        throw budget_error("primality test out of deterministic range: " +
                           to_string(n));
    Integer d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long b : kMrBases)
        if (miller_rabin_witness(n, Integer(b), d, s)) return false;
    return true;
}

Integer next_prime(const Integer& n) {
    Integer c = n < 2 ? Integer(2) : Integer(n + 1);
    if (c > 2 && mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += (c == 2) ? 1 : 2;
    return c;
}

namespace {

// Brent's cycle variant of the rho method.  Deterministic: the constant c
// and the start point are derived from the attempt number, never from a
// clock or global RNG.
Integer brent_rho(const Integer& n, unsigned attempt, std::uint64_t& budget) {
    const Integer c = Integer(2 * attempt + 1);
    Integer y = Integer(attempt + 2), x, q = 1, g = 1, ys;
    const unsigned long block = 128;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long m = std::min(block, r - k);
            if (budget < m) throw budget_error("factorization budget exhausted");
            budget -= m;
            for (unsigned long i = 0; i < m; ++i) {
                y = (y * y + c) % n;
                Integer diff = x - y;
                q = (q * abs(diff)) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            if (budget == 0) throw budget_error("factorization budget exhausted");
            --budget;
            ys = (ys * ys + c) % n;
            Integer diff = x - ys;
            mpz_gcd(g.get_mpz_t(), Integer(abs(diff)).get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void factor_rec(Integer n, std::vector<Integer>& primes, std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    // perfect powers first; rho cycles badly on them
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::vector<Integer> sub;
                factor_rec(root, sub, budget);
                for (unsigned long i = 0; i < k; ++i)
                    primes.insert(primes.end(), sub.begin(), sub.end());
                return;
            }
        }
    }
    for (unsigned attempt = 1; attempt <= 32; ++attempt) {
        Integer g = brent_rho(n, attempt, budget);
        if (g != 1 && g != n) {
            factor_rec(g, primes, budget);
            factor_rec(n / g, primes, budget);
            return;
        }
    }
    throw budget_error("factorization incomplete for " + to_string(n));
}

}  // namespace

Factorization factorize(const Integer& n, const FactorOptions& opts) {
    if (n < 1) throw error("factorize requires n >= 1");
    Factorization out;
    if (n == 1) return out;
    Integer rest = n;
    for (Integer p = 2; p * p <= rest && p <= opts.trial_bound;
         p = (p == 2) ? Integer(3) : Integer(p + 2)) {
        if (rest % p == 0) {
            unsigned long e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    }
    if (rest > 1) {
        std::vector<Integer> primes;
        std::uint64_t budget = opts.rho_iterations;
        factor_rec(rest, primes, budget);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.push_back({primes[i], static_cast<unsigned long>(j - i)});
            i = j;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return out;
}

std::vector<Integer> divisors(const Factorization& f, const FactorOptions& opts) {
    std::vector<Integer> out{1};
    for (const auto& pe : f) {
        std::size_t base = out.size();
        if (base * (pe.e + 1) > opts.max_divisors)
            throw budget_error("divisor enumeration too large");
        Integer q = 1;
        out.reserve(base * (pe.e + 1));
        for (unsigned long k = 1; k <= pe.e; ++k) {
            q *= pe.p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
        }
    }
    return out;
}

Rational rational_from_string(const std::string& s) {
    Rational x;
    if (x.set_str(s, 10) != 0 || Integer(x.get_den()) == 0)
        throw error("invalid rational literal: " + s);
    x.canonicalize();
    return x;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer ceil_sqrt_rational(const Integer& num, const Integer& den) {
    if (num <= 0) return 0;
    Integer q = num / den;  // floor
    Integer n;
    mpz_sqrt(n.get_mpz_t(), q.get_mpz_t());
    while (n * n * den < num) ++n;
    while (n > 0 && (n - 1) * (n - 1) * den >= num) --n;
    return n;
}

long ceil_log(const Integer& n) {
    if (n < 1) throw error("ceil_log requires n >= 1");
    if (n == 1) return 0;
    // 30-digit enclosure of e, scaled by 10^29: e_lo/scale < e < e_hi/scale.
    const Integer e_lo("271828182845904523536028747135");
    const Integer e_hi("271828182845904523536028747136");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 29);
    auto pow_int = [](const Integer& b, long ee) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(ee));
        return r;
    };
    // e^k >= n for sure, resp. e^k < n for sure
    auto certified_ge = [&](long k) {
        return pow_int(e_lo, k) >= n * pow_int(scale, k);
    };
    auto certified_lt = [&](long k) {
        return pow_int(e_hi, k) < n * pow_int(scale, k);
    };
    // float estimate, then verified integer scan from a certainly-low start
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    long k = static_cast<long>(std::log(mant) + exp2 * 0.69314718055994531) - 3;
    if (k < 0) k = 0;
    while (k > 0 && !certified_lt(k)) --k;
    for (;;) {
        ++k;
        if (certified_ge(k)) return k;
        if (!certified_lt(k))
            throw error("ceil_log: enclosure too narrow for " + to_string(n));
    }
}

}  // namespace galrep
