#pragma once

#include <map>
#include <string>

#include "galrep/elliptic.hpp"

namespace galrep {

// Kodaira symbol of the special fiber at p.
struct KodairaSymbol {
    enum Kind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
    Kind kind = I0;
    unsigned long n = 0;  // the index for In (n >= 1) and In* (n >= 1)

    bool operator==(const KodairaSymbol& o) const {
        return kind == o.kind && n == o.n;
    }
    std::string to_string() const;
};

enum class Reduction { good, split_multiplicative, nonsplit_multiplicative, additive };

std::string to_string(Reduction r);

struct LocalData {
    Integer p;
    KodairaSymbol kodaira;
    long v_disc_min = 0;   // valuation of the minimal discriminant at p
    long f = 0;            // conductor exponent
    Reduction reduction = Reduction::good;
};

// Tate's algorithm at p.  The input model need not be minimal at p; the
// loop rescales by u = p whenever a non-minimal stage is reached.
LocalData tate_local_data(const WeierstrassModel& m, const Integer& p);

struct ConductorInfo {
    Integer n = 1;
    Factorization factorization;         // of n
    std::vector<LocalData> local_data;   // one entry per bad prime, ascending
};

// Conductor N = prod p^{f_p} over the bad primes of the minimal model.
ConductorInfo conductor(const WeierstrassModel& m,
                        const FactorOptions& opts = {});

}  // namespace galrep
