#include "galrep/families.hpp"

#include <algorithm>

namespace galrep {

namespace {

using P = RationalPolynomial;

P ply(std::initializer_list<long> coeffs) { return P::from_ints(coeffs); }

RationalFamily fam(std::string label, P num, P den) {
    return RationalFamily{std::move(label), std::move(num), std::move(den)};
}

std::vector<RationalFamily> build_mod2() {
    return {
        fam("256(t+1)^3/t", ply({1, 1}).pow(3) * Rational(256), ply({0, 1})),
        fam("t^2+1728", ply({1728, 0, 1}), ply({1})),
    };
}

std::vector<RationalFamily> build_mod3() {
    return {
        fam("27(t+1)(t+9)^3/t^3",
            ply({1, 1}) * ply({9, 1}).pow(3) * Rational(27),
            ply({0, 1}).pow(3)),
        fam("t^3", ply({0, 0, 0, 1}), ply({1})),
    };
}

std::vector<RationalFamily> build_mod5() {
    return {
        fam("5^3(t+1)(2t+1)^3(2t^2-3t+3)^3/(t^2+t-1)^5",
            ply({1, 1}) * ply({1, 2}).pow(3) * ply({3, -3, 2}).pow(3) *
                Rational(125),
            ply({-1, 1, 1}).pow(5)),
        fam("5^2(t^2+10t+5)^3/t^5", ply({5, 10, 1}).pow(3) * Rational(25),
            ply({0, 1}).pow(5)),
        fam("t^3(t^2+5t+40)", ply({0, 0, 0, 1}) * ply({40, 5, 1}), ply({1})),
    };
}

std::vector<RationalFamily> build_mod7() {
    return {
        fam("t(t+1)^3(t^2-5t+1)^3(t^2-5t+8)^3(t^4-5t^3+8t^2-7t+7)^3/"
            "(t^3-4t^2+3t+1)^7",
            ply({0, 1}) * ply({1, 1}).pow(3) * ply({1, -5, 1}).pow(3) *
                ply({8, -5, 1}).pow(3) * ply({7, -7, 8, -5, 1}).pow(3),
            ply({1, 3, -4, 1}).pow(7)),
        fam("64t^3(t^2+7)^3(t^2-7t+14)^3(5t^2-14t-7)^3/(t^3-7t^2+7t+7)^7",
            ply({0, 0, 0, 1}) * ply({7, 0, 1}).pow(3) *
                ply({14, -7, 1}).pow(3) * ply({-7, -14, 5}).pow(3) *
                Rational(64),
            ply({7, 7, -7, 1}).pow(7)),
        fam("(t^2+245t+2401)^3(t^2+13t+49)/t^7",
            ply({2401, 245, 1}).pow(3) * ply({49, 13, 1}),
            ply({0, 1}).pow(7)),
    };
}

std::vector<RationalFamily> build_mod13() {
    return {
        fam("(t^2+5t+13)(t^4+7t^3+20t^2+19t+1)^3/t",
            ply({13, 5, 1}) * ply({1, 19, 20, 7, 1}).pow(3), ply({0, 1})),
    };
}

std::vector<RationalFamily> build_ladic2() {
    return {
        fam("-4t^3(t+8)", ply({0, 0, 0, 1}) * ply({8, 1}) * Rational(-4),
            ply({1})),
        fam("-t^2+1728", ply({1728, 0, -1}), ply({1})),
        fam("2t^2+1728", ply({1728, 0, 2}), ply({1})),
        fam("-2t^2+1728", ply({1728, 0, -2}), ply({1})),
    };
}

std::vector<RationalFamily> build_ladic3() {
    return {
        fam("-3^7(t^2-1)^3(t^6+3t^5+6t^4+t^3-3t^2+12t+16)^3"
            "(2t^3+3t^2-3t-5)/(t^3-3t-1)^9",
            ply({-1, 0, 1}).pow(3) *
                ply({16, 12, -3, 1, 6, 3, 1}).pow(3) *
                ply({-5, -3, 3, 2}) * Rational(-2187),
            ply({-1, -3, 0, 1}).pow(9)),
    };
}

}  // namespace

std::optional<Rational> RationalFamily::eval(const Rational& t) const {
    Rational den = denominator.eval(t);
    if (den == 0) return std::nullopt;
    return numerator.eval(t) / den;
}

const std::vector<RationalFamily>& mod_ell_families(unsigned long ell) {
    static const auto m2 = build_mod2();
    static const auto m3 = build_mod3();
    static const auto m5 = build_mod5();
    static const auto m7 = build_mod7();
    static const auto m13 = build_mod13();
    switch (ell) {
        case 2: return m2;
        case 3: return m3;
        case 5: return m5;
        case 7: return m7;
        case 13: return m13;
    }
    throw error("no family table for ell = " + std::to_string(ell));
}

const std::vector<RationalFamily>& ladic_families(unsigned long ell) {
    static const auto l2 = build_ladic2();
    static const auto l3 = build_ladic3();
    switch (ell) {
        case 2: return l2;
        case 3: return l3;
    }
    throw error("no ell-adic family table for ell = " + std::to_string(ell));
}

std::optional<Rational> family_member(const Rational& j,
                                      const RationalFamily& fam,
                                      const FactorOptions& opts) {
    RationalPolynomial g = fam.numerator - fam.denominator * j;
    if (g.is_zero()) throw error("degenerate family equation");
    for (const Rational& t : rational_roots(g, opts)) {
        auto v = fam.eval(t);
        if (v && *v == j) return t;
    }
    return std::nullopt;
}

std::string to_string(SurjStatus s) {
    switch (s) {
        case SurjStatus::surjective: return "surjective";
        case SurjStatus::non_surjective: return "non_surjective";
        case SurjStatus::undetermined: return "undetermined";
    }
    return "?";
}

PrimeStatus check_mod_small(const Rational& j, unsigned long ell,
                            const CertifyOptions& opts) {
    PrimeStatus out;
    out.ell = Integer(ell);
    CertNoFamily checked;
    try {
        for (const auto& f : mod_ell_families(ell)) {
            auto t = family_member(j, f, opts.factor);
            if (t) {
                out.status = SurjStatus::non_surjective;
                out.certificate = CertFamily{f.label, *t};
                return out;
            }
            checked.families.push_back(f.label);
        }
    } catch (const budget_error&) {
        out.status = SurjStatus::undetermined;
        return out;
    }
    // the criterion is if-and-only-if, so a full miss certifies surjectivity
    out.status = SurjStatus::surjective;
    out.certificate = std::move(checked);
    return out;
}

// ---- X_ns^+(11) ------------------------------------------------------

const WeierstrassModel& xns11_curve() {
    static const WeierstrassModel e = WeierstrassModel(
        Rational(0), Rational(-1), Rational(1), Rational(-7), Rational(10));
    return e;
}

Xns11Point Xns11Point::affine(Rational px, Rational py) {
    const WeierstrassModel& e = xns11_curve();
    Rational lhs = py * py + e.a1() * px * py + e.a3() * py;
    Rational rhs = ((px + e.a2()) * px + e.a4()) * px + e.a6();
    if (lhs != rhs) throw error("point is not on the curve");
    Xns11Point p;
    p.infinity = false;
    p.x = std::move(px);
    p.y = std::move(py);
    return p;
}

Xns11Point xns11_generator() {
    return Xns11Point::affine(Rational(4), Rational(5));
}

Xns11Point xns11_negate(const Xns11Point& p) {
    if (p.infinity) return p;
    const WeierstrassModel& e = xns11_curve();
    Xns11Point q = p;
    q.y = -p.y - e.a1() * p.x - e.a3();
    return q;
}

Xns11Point xns11_add(const Xns11Point& p, const Xns11Point& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const WeierstrassModel& e = xns11_curve();
    const Rational &a1 = e.a1(), &a2 = e.a2(), &a3 = e.a3(), &a4 = e.a4(),
                   &a6 = e.a6();
    Rational lambda, nu;
    if (p.x != q.x) {
        lambda = (q.y - p.y) / (q.x - p.x);
        nu = p.y - lambda * p.x;
    } else {
        if (q.y != p.y || 2 * p.y + a1 * p.x + a3 == 0) return Xns11Point::O();
        Rational den = 2 * p.y + a1 * p.x + a3;
        lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / den;
        nu = (-p.x * p.x * p.x + a4 * p.x + 2 * a6 - a3 * p.y) / den;
    }
    Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    Rational y3 = -(lambda + a1) * x3 - nu - a3;
    Xns11Point r;
    r.infinity = false;
    r.x = x3;
    r.y = y3;
    return r;
}

std::optional<Rational> xns11_J(const Xns11Point& p) {
    if (p.infinity) throw error("J is evaluated at affine points only");
    const Rational &x = p.x, &y = p.y;
    Rational x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    Rational f1 = x2 + 3 * x - 6;
    Rational f2 = 11 * (x2 - 5) * y + (2 * x4 + 23 * x3 - 72 * x2 - 28 * x + 127);
    Rational f3 = 6 * y + 11 * x - 19;
    Rational f4 = 22 * (x - 2) * y + (5 * x3 + 17 * x2 - 112 * x + 120);
    Rational f5 = 11 * y + (2 * x2 + 17 * x - 34);
    Rational f6 = (x - 4) * y - (5 * x - 9);
    Rational num = f1 * f2 * f3 * f4;
    num = num * num * num;
    Rational den = f5 * f5;
    Rational f6p = f6;
    for (int i = 0; i < 10; ++i) f6p *= f6;  // f6^11
    den *= f6p;
    if (den == 0) return std::nullopt;
    return num / den;
}

PrimeStatus check_mod_11(const Rational& j, const CertifyOptions& opts) {
    PrimeStatus out;
    out.ell = 11;
    static const Integer j1(-121);            // -11^2
    static const Integer j2(-24729001);       // -11 * 131^3
    if (is_integral(j)) {
        if (Integer(j.get_num()) == j1 || Integer(j.get_num()) == j2) {
            out.status = SurjStatus::non_surjective;
            out.certificate = CertExplicitJ{};
        } else {
            out.status = SurjStatus::surjective;
            out.certificate = CertNoFamily{{"integral j outside {-11^2, -11*131^3}"}};
        }
        return out;
    }
    // a non-surjective mod-11 curve with non-integral j has a denominator
    // built only from primes = +-1 mod 11 with exponents divisible by 11
    try {
        for (const auto& pe : factorize(Integer(j.get_den()), opts.factor)) {
            Integer rp = pe.p % 11;
            bool p_ok = rp == 1 || rp == 10;
            bool e_ok = pe.e % 11 == 0;
            if (!p_ok || !e_ok) {
                out.status = SurjStatus::surjective;
                out.certificate = CertDenominatorShape{
                    !p_ok ? "prime " + to_string(pe.p) + " != +-1 mod 11"
                          : "exponent " + std::to_string(pe.e) +
                                " != 0 mod 11 at p = " + to_string(pe.p)};
                return out;
            }
        }
    } catch (const budget_error&) {
        out.status = SurjStatus::undetermined;
        return out;
    }
    // walk multiples n*(4,5) of the generator and compare J values
    Xns11Point g = xns11_generator();
    Xns11Point pos = Xns11Point::O();
    for (long n = 1; n <= opts.xns11_bound; ++n) {
        pos = xns11_add(pos, g);
        for (long sign : {1, -1}) {
            Xns11Point q = sign > 0 ? pos : xns11_negate(pos);
            auto val = xns11_J(q);
            if (val && *val == j) {
                out.status = SurjStatus::non_surjective;
                out.certificate = CertXns11Point{sign * n};
                return out;
            }
        }
    }
    out.status = SurjStatus::undetermined;  // beyond the search budget
    return out;
}

// ---- witness scans ---------------------------------------------------

namespace {

const std::vector<Rational>& mod13_explicit_j() {
    static const std::vector<Rational> v = [] {
        std::vector<Rational> out;
        // 2^4 * 5 * 13^4 * 17^3 / 3^13
        out.push_back(Rational(Integer(16) * 5 * 28561 * 4913,
                               Integer(1594323)));
        // -2^12 * 5^3 * 11 * 13^4 / 3^13
        out.push_back(Rational(Integer(-4096) * 125 * 11 * 28561,
                               Integer(1594323)));
        // 2^18 * 3^3 * 13^4 * 127^3 * 139^3 * 157^3 * 283^3 * 929 / (5^13 * 61^13)
        Integer num = Integer(262144) * 27 * 28561;
        for (long q : {127, 139, 157, 283}) num *= Integer(q) * q * q;
        num *= 929;
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 5, 13);
        Integer d61;
        mpz_ui_pow_ui(d61.get_mpz_t(), 61, 13);
        den *= d61;
        out.push_back(Rational(num, den));
        for (auto& r : out) r.canonicalize();
        return out;
    }();
    return v;
}

// good primes p not dividing skip, streamed in increasing order
template <typename Fn>
void scan_witnesses(const WeierstrassModel& minimal, const Integer& n_e,
                    const Integer& skip, const CertifyOptions& opts, Fn&& fn) {
    Integer p = 2;
    while (p <= opts.witness_bound) {
        if (n_e % p != 0 && skip % p != 0) {
            long ap = ap_good(minimal, p, opts.counting, opts.factor);
            if (fn(p, ap)) return;
        }
        p = next_prime(p);
    }
}

}  // namespace

PrimeStatus check_mod_13(const WeierstrassModel& minimal, const Integer& n_e,
                         const CertifyOptions& opts) {
    PrimeStatus out;
    out.ell = 13;
    const Rational& j = minimal.j();
    for (const auto& j0 : mod13_explicit_j())
        if (j == j0) {
            out.status = SurjStatus::non_surjective;
            out.certificate = CertExplicitJ{};
            return out;
        }
    try {
        for (const auto& f : mod_ell_families(13)) {
            auto t = family_member(j, f, opts.factor);
            if (t) {
                out.status = SurjStatus::non_surjective;
                out.certificate = CertFamily{f.label, *t};
                return out;
            }
        }
    } catch (const budget_error&) {
        out.status = SurjStatus::undetermined;
        return out;
    }
    // three independent Frobenius conditions, all needed
    CertWitness found;
    bool square = false, nonsquare = false, order = false;
    auto roots_x2_3x_1 = [](long v) {  // x^2 - 3x + 1 mod 13
        return (v * v - 3 * v + 1) % 13 == 0;
    };
    try {
        scan_witnesses(minimal, n_e, Integer(13), opts,
                       [&](const Integer& p, long ap) {
            long pm = mpz_get_ui(Integer(p % 13).get_mpz_t());
            long am = ((ap % 13) + 13) % 13;
            if (am != 0) {
                long disc = ((am * am - 4 * pm) % 13 + 13) % 13;
                if (disc != 0) {
                    bool is_sq = legendre(disc, 13) == 1;
                    if (is_sq && !square) {
                        square = true;
                        found.entries.push_back({"square", p, ap});
                    } else if (!is_sq && !nonsquare) {
                        nonsquare = true;
                        found.entries.push_back({"nonsquare", p, ap});
                    }
                }
            }
            // a_p^2 / p mod 13 outside {0,1,2,4} and off x^2-3x+1
            long pinv = 1;
            for (long k = 1; k < 13; ++k)
                if ((pm * k) % 13 == 1) { pinv = k; break; }
            long v = (am * am % 13) * pinv % 13;
            if (!order && v != 0 && v != 1 && v != 2 && v != 4 &&
                !roots_x2_3x_1(v)) {
                order = true;
                found.entries.push_back({"order", p, ap});
            }
            return square && nonsquare && order;
        });
    } catch (const budget_error&) {
        out.status = SurjStatus::undetermined;
        return out;
    }
    if (square && nonsquare && order) {
        out.status = SurjStatus::surjective;
        out.certificate = std::move(found);
    } else {
        out.status = SurjStatus::undetermined;
    }
    return out;
}

PrimeStatus certify_large(const WeierstrassModel& minimal, const Integer& n_e,
                          const Integer& ell, const CertifyOptions& opts) {
    PrimeStatus out;
    out.ell = ell;
    const Rational& j = minimal.j();
    if (s0_lookup(ell, j)) {
        out.status = SurjStatus::non_surjective;
        out.certificate = CertS0{};
        return out;
    }
    CertWitness found;
    try {
        scan_witnesses(minimal, n_e, ell, opts,
                       [&](const Integer& p, long ap) {
            if (ap % ell == 0) return false;
            Integer disc = Integer(ap) * ap - 4 * p;
            if (disc % ell != 0 && legendre(disc, ell) == 1) {
                found.entries.push_back({"square", p, ap});
                return true;
            }
            return false;
        });
    } catch (const budget_error&) {
        out.status = SurjStatus::undetermined;
        return out;
    }
    if (!found.entries.empty()) {
        out.status = SurjStatus::surjective;
        out.certificate = std::move(found);
    } else {
        out.status = SurjStatus::undetermined;
    }
    return out;
}

PrimeStatus check_ladic(const Rational& j, unsigned long ell,
                        const PrimeStatus& mod_status,
                        const CertifyOptions& opts) {
    PrimeStatus out;
    out.ell = Integer(ell);
    if (ell >= 5) {
        out.status = mod_status.status;
        out.certificate = CertEqualsModEll{};
        return out;
    }
    if (mod_status.status == SurjStatus::non_surjective) {
        out.status = SurjStatus::non_surjective;
        out.certificate = CertEqualsModEll{};
        return out;
    }
    try {
        for (const auto& f : ladic_families(ell)) {
            auto t = family_member(j, f, opts.factor);
            if (t) {
                out.status = SurjStatus::non_surjective;
                out.certificate = CertFamily{f.label, *t};
                return out;
            }
        }
    } catch (const budget_error&) {
        out.status = SurjStatus::undetermined;
        return out;
    }
    if (mod_status.status == SurjStatus::surjective) {
        out.status = SurjStatus::surjective;
        out.certificate = CertEqualsModEll{};
    } else {
        out.status = SurjStatus::undetermined;
    }
    return out;
}

}  // namespace galrep
