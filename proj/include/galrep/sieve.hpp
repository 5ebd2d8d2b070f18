#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "galrep/f2.hpp"
#include "galrep/tate.hpp"

namespace galrep {

// Primes q feeding the quadratic-residue columns:
//   q = 2        when v_2(j) is 3, 6 or 9,
//   q odd        when v_q(j - 1728) is positive and odd.
using QList = std::vector<Integer>;

// q-list of any curve with the given minimal model (depends only on j).
QList compute_qlist(const WeierstrassModel& minimal, const FactorOptions& opts = {});
// j-only entry point; lifts through a curve with that j-invariant.
QList compute_qlist(const Rational& j, const FactorOptions& opts = {});

// Odd prime p with fiber type I0 or I0* and non-zero trace on the good
// curve E_p (E itself, or its quadratic twist by p when the type is I0*).
struct AdmissiblePrime {
    Integer p;
    bool twisted = false;  // true iff the Kodaira symbol at p is I0*
    long a = 0;            // |a_p(E_p)| > 0
};

struct SieveOptions {
    unsigned long search_cap = 10000;  // admissible primes must appear below this
    CountingOptions counting;
    FactorOptions factor;
};

// Smallest admissible prime > after for a globally minimal model.
AdmissiblePrime next_admissible(const WeierstrassModel& minimal,
                                const Integer& after,
                                const SieveOptions& opts = {});

// Why a prime belongs to the exceptional set.
struct Reason {
    enum Kind { base, s0_pair, divides_a_i, divides_g } kind = base;
    // for divides_a_i
    std::size_t row = 0;  // 1-based index i
    Integer p_i = 0;
    long a_i = 0;
};

struct ExceptionalSet {
    std::vector<Integer> primes;        // sorted ascending
    std::map<Integer, Reason> reasons;  // exactly one reason per prime

    bool contains(const Integer& ell) const { return reasons.count(ell) != 0; }
    void add(const Integer& ell, const Reason& r);
};

struct SieveRow {
    AdmissiblePrime prime;
    std::vector<std::uint8_t> alpha;  // alpha_{i,j} = 1 iff (q_j | p_i) = -1
    std::uint8_t beta = 0;            // 1 iff (-1 | p_i) = -1
};

struct SieveState {
    QList qlist;
    std::vector<SieveRow> rows;  // exactly r rows; rows 1..r-1 consistent
    std::size_t r = 0;
    std::vector<Integer> accumulated;  // primes > 13 dividing some a_i, i <= r
};

// The rank sieve: stream admissible primes, build the F_2 system row by
// row, stop at the first row count r making A_r x = b_r inconsistent.
// S = {ell <= 13} u {ell : (ell, j) in S0} u {ell > 13 : ell | a_i, i <= r}.
std::pair<ExceptionalSet, SieveState> run_sieve(const WeierstrassModel& m,
                                                const SieveOptions& opts = {});

// The four (ell, j) pairs with a rational ell-isogeny at ell = 17, 37.
bool s0_lookup(const Integer& ell, const Rational& j);
const std::vector<std::pair<Integer, Rational>>& s0_pairs();

}  // namespace galrep
