#pragma once

#include <optional>
#include <variant>

#include "galrep/poly.hpp"
#include "galrep/sieve.hpp"

namespace galrep {

// One-parameter rational function f(t) = numerator/denominator whose values
// are the j-invariants of a non-surjective family.
struct RationalFamily {
    std::string label;
    RationalPolynomial numerator;
    RationalPolynomial denominator;

    // exact value at t; nullopt when the denominator vanishes
    std::optional<Rational> eval(const Rational& t) const;
};

// Families printed for the mod-ell criteria (ell = 2, 3, 5, 7, 13).
const std::vector<RationalFamily>& mod_ell_families(unsigned long ell);
// Extra families for the ell-adic criteria at ell = 2 and 3.
const std::vector<RationalFamily>& ladic_families(unsigned long ell);

// Some t with fam(t) = j, found through rational root extraction and
// re-verified by exact evaluation.
std::optional<Rational> family_member(const Rational& j,
                                      const RationalFamily& fam,
                                      const FactorOptions& opts = {});

enum class SurjStatus { surjective, non_surjective, undetermined };
std::string to_string(SurjStatus s);

// Supporting evidence for a decided status.
struct CertFamily { std::string family; Rational t; };
struct CertNoFamily { std::vector<std::string> families; };  // iff criteria
struct CertExplicitJ {};
struct CertS0 {};
struct CertDenominatorShape { std::string detail; };
struct CertWitness {
    struct Entry { std::string kind; Integer p; long ap; };
    std::vector<Entry> entries;
};
struct CertXns11Point { long n = 0; };
struct CertEqualsModEll {};
using Certificate =
    std::variant<std::monostate, CertFamily, CertNoFamily, CertExplicitJ,
                 CertS0, CertDenominatorShape, CertWitness, CertXns11Point,
                 CertEqualsModEll>;

struct PrimeStatus {
    Integer ell;
    SurjStatus status = SurjStatus::undetermined;
    Certificate certificate;
};

// Point on the modular curve realization E11: y^2 + y = x^3 - x^2 - 7x + 10,
// whose rational points are an infinite cyclic group generated by (4, 5).
struct Xns11Point {
    bool infinity = true;
    Rational x, y;

    static Xns11Point O() { return {}; }
    static Xns11Point affine(Rational px, Rational py);
};

const WeierstrassModel& xns11_curve();
Xns11Point xns11_generator();
Xns11Point xns11_add(const Xns11Point& p, const Xns11Point& q);
Xns11Point xns11_negate(const Xns11Point& p);

// The degree map J; nullopt encodes the value infinity.
std::optional<Rational> xns11_J(const Xns11Point& p);

struct CertifyOptions {
    unsigned long witness_bound = 10000;
    long xns11_bound = 30;  // search |n| <= this over multiples of (4,5)
    CountingOptions counting;
    FactorOptions factor;
};

// Decision procedures, one per prime class.  Resource exhaustion inside
// root finding or factorization degrades the result to undetermined.
PrimeStatus check_mod_small(const Rational& j, unsigned long ell,
                            const CertifyOptions& opts = {});
PrimeStatus check_mod_11(const Rational& j, const CertifyOptions& opts = {});
PrimeStatus check_mod_13(const WeierstrassModel& minimal, const Integer& n_e,
                         const CertifyOptions& opts = {});
PrimeStatus certify_large(const WeierstrassModel& minimal, const Integer& n_e,
                          const Integer& ell, const CertifyOptions& opts = {});
PrimeStatus check_ladic(const Rational& j, unsigned long ell,
                        const PrimeStatus& mod_status,
                        const CertifyOptions& opts = {});

}  // namespace galrep
