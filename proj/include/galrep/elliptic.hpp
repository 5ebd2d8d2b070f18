#pragma once

#include <array>
#include <vector>

#include "galrep/numtheory.hpp"

namespace galrep {

// Weierstrass equation y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q
// with the standard derived quantities.  Construction rejects Delta = 0.
// Values are immutable; every operation returns a fresh model.
class WeierstrassModel {
public:
    WeierstrassModel(Rational a1, Rational a2, Rational a3, Rational a4,
                     Rational a6);

    static WeierstrassModel from_ai(const std::array<Integer, 5>& a);
    // y^2 = x^3 + A x + B
    static WeierstrassModel short_form(const Rational& A, const Rational& B);

    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }
    const Rational& a3() const { return a3_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }

    const Rational& b2() const { return b2_; }
    const Rational& b4() const { return b4_; }
    const Rational& b6() const { return b6_; }
    const Rational& b8() const { return b8_; }
    const Rational& c4() const { return c4_; }
    const Rational& c6() const { return c6_; }
    const Rational& disc() const { return disc_; }
    const Rational& j() const { return j_; }

    bool is_integral() const;
    // a-invariants of an integral model (requires is_integral()).
    std::array<Integer, 5> ai() const;

    // (u, r, s, t) change of variables x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
    WeierstrassModel transformed(const Rational& u, const Rational& r,
                                 const Rational& s, const Rational& t) const;

    bool operator==(const WeierstrassModel& o) const {
        return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ &&
               a6_ == o.a6_;
    }

    std::string to_string() const;

private:
    Rational a1_, a2_, a3_, a4_, a6_;
    Rational b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
};

// Global minimal model over Q (Laska-Kraus-Connell), normalized so that
// a1, a3 in {0,1} and a2 in {-1,0,1}.  Same j-invariant, minimal |Delta|.
WeierstrassModel minimal_model(const WeierstrassModel& m,
                               const FactorOptions& opts = {});

// Quadratic twist by a squarefree non-zero integer d; preserves j.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Integer& d,
                                 const FactorOptions& opts = {});

// Minimal model of the standard curve with the given non-CM j-invariant
// (j not 0 or 1728): y^2 = x^3 + 3j(1728-j) x + 2j(1728-j)^2, minimalized.
WeierstrassModel curve_from_j(const Rational& j,
                              const FactorOptions& opts = {});

// The thirteen rational CM j-invariants (class number one orders).
const std::vector<Integer>& cm_j_invariants();
bool is_cm_j(const Rational& j);

struct CountingOptions {
    unsigned long counting_bound = 1000000;  // largest p we will enumerate
};

// Trace of Frobenius a_p = p + 1 - #E(F_p) at a prime of good reduction,
// by exact enumeration: a character sum over x for odd p, a direct point
// loop for p = 2.  The model is minimalized internally when needed.
long ap_good(const WeierstrassModel& m, const Integer& p,
             const CountingOptions& copts = {},
             const FactorOptions& fopts = {});

}  // namespace galrep
