#include "galrep/tate.hpp"

namespace galrep {

std::string KodairaSymbol::to_string() const {
    switch (kind) {
        case I0: return "I0";
        case In: return "I" + std::to_string(n);
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case I0star: return "I0*";
        case Instar: return "I" + std::to_string(n) + "*";
        case IVstar: return "IV*";
        case IIIstar: return "III*";
        case IIstar: return "II*";
    }
    return "?";
}

std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::good: return "good";
        case Reduction::split_multiplicative: return "split multiplicative";
        case Reduction::nonsplit_multiplicative: return "nonsplit multiplicative";
        case Reduction::additive: return "additive";
    }
    return "?";
}

namespace {

// Working state: integral a-invariants, mutated by translations in place.
struct TateState {
    Integer a1, a2, a3, a4, a6;
    Integer b2, b4, b6, b8, c4, c6, disc;
    Integer p;

    void recompute() {
        b2 = a1 * a1 + 4 * a2;
        b4 = 2 * a4 + a1 * a3;
        b6 = a3 * a3 + 4 * a6;
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
             a4 * a4;
        c4 = b2 * b2 - 24 * b4;
        c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
        disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 +
               9 * b2 * b4 * b6;
    }

    long v(const Integer& x) const {
        if (x == 0) return 1 << 30;  // effectively infinite
        return valuation(x, p).value();
    }

    Integer mod(const Integer& x, const Integer& m) const {
        Integer r = x % m;
        if (r < 0) r += m;
        return r;
    }
    Integer modp(const Integer& x) const { return mod(x, p); }

    Integer inv_mod(const Integer& x, const Integer& m) const {
        Integer r;
        if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()))
            throw error("tate: non-invertible residue");
        return r;
    }

    // x = x' + r, y = y' + s x' + t
    void translate(const Integer& r, const Integer& s, const Integer& t) {
        Integer na1 = a1 + 2 * s;
        Integer na2 = a2 - s * a1 + 3 * r - s * s;
        Integer na3 = a3 + r * a1 + 2 * t;
        Integer na4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r -
                      2 * s * t;
        Integer na6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t -
                      r * t * a1;
        a1 = na1; a2 = na2; a3 = na3; a4 = na4; a6 = na6;
        recompute();
    }

    // u = p rescale; valid only when p^i | a_i throughout
    void rescale_down() {
        Integer p2 = p * p, p3 = p2 * p, p4 = p3 * p, p6 = p4 * p2;
        a1 /= p; a2 /= p2; a3 /= p3; a4 /= p4; a6 /= p6;
        recompute();
    }

    Integer pow(unsigned long e) const {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
        return r;
    }
};

enum class CubicRoots { distinct, double_root, triple_root };

// Root structure over F_pbar of T^3 + c2 T^2 + c1 T + c0 and the multiple
// root when there is one.  Derivative degenerates at p = 2, 3.
std::pair<CubicRoots, Integer> cubic_structure(const TateState& st,
                                               const Integer& c2,
                                               const Integer& c1,
                                               const Integer& c0) {
    const Integer& p = st.p;
    if (p == 2) {
        bool multiple = st.modp(c0 - c1 * c2) == 0;
        if (!multiple) return {CubicRoots::distinct, 0};
        bool triple = st.modp(c1 - c2) == 0 && st.modp(c0 - c2) == 0;
        return {triple ? CubicRoots::triple_root : CubicRoots::double_root,
                st.modp(c1)};
    }
    if (p == 3) {
        if (st.modp(c2) != 0) {
            Integer theta = st.modp(-c1 * st.inv_mod(st.modp(2 * c2), p));
            Integer val = ((theta + c2) * theta + c1) * theta + c0;
            if (st.modp(val) == 0) return {CubicRoots::double_root, theta};
            return {CubicRoots::distinct, 0};
        }
        if (st.modp(c1) != 0) return {CubicRoots::distinct, 0};
        return {CubicRoots::triple_root, st.modp(-c0)};
    }
    Integer d = 18 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
                4 * c1 * c1 * c1 - 27 * c0 * c0;
    if (st.modp(d) != 0) return {CubicRoots::distinct, 0};
    Integer w = st.modp(c2 * c2 - 3 * c1);
    if (w == 0) {
        Integer theta = st.modp(-c2 * st.inv_mod(3, p));
        return {CubicRoots::triple_root, theta};
    }
    Integer theta =
        st.modp((9 * c0 - c2 * c1) * st.inv_mod(st.modp(2 * w), p));
    return {CubicRoots::double_root, theta};
}

// Y^2 + c Y - d: separable over F_pbar?  Returns the double root otherwise.
std::pair<bool, Integer> quadratic_y(const TateState& st, const Integer& c,
                                     const Integer& d) {
    const Integer& p = st.p;
    if (p == 2) {
        if (st.modp(c) != 0) return {true, 0};
        return {false, st.modp(d)};
    }
    if (st.modp(c * c + 4 * d) != 0) return {true, 0};
    return {false, st.modp(-c * st.inv_mod(2, p))};
}

// a X^2 + b X + c with a a unit mod p.
std::pair<bool, Integer> quadratic_x(const TateState& st, const Integer& a,
                                     const Integer& b, const Integer& c) {
    const Integer& p = st.p;
    if (p == 2) {
        if (st.modp(b) != 0) return {true, 0};
        return {false, st.modp(c * st.inv_mod(st.modp(a), p))};
    }
    if (st.modp(b * b - 4 * a * c) != 0) return {true, 0};
    return {false, st.modp(-b * st.inv_mod(st.modp(2 * a), p))};
}

WeierstrassModel make_integral(const WeierstrassModel& m) {
    if (m.is_integral()) return m;
    Integer k = 1;
    for (const Rational* a : {&m.a1(), &m.a2(), &m.a3(), &m.a4(), &m.a6()})
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), a->get_den().get_mpz_t());
    return m.transformed(Rational(1, k), 0, 0, 0);
}

}  // namespace

LocalData tate_local_data(const WeierstrassModel& model, const Integer& p) {
    WeierstrassModel im = make_integral(model);
    TateState st;
    auto a = im.ai();
    st.a1 = a[0]; st.a2 = a[1]; st.a3 = a[2]; st.a4 = a[3]; st.a6 = a[4];
    st.p = p;
    st.recompute();

    LocalData out;
    out.p = p;

    for (;;) {
        long n = st.v(st.disc);
        if (n == 0) {
            out.kodaira = {KodairaSymbol::I0, 0};
            out.v_disc_min = 0;
            out.f = 0;
            out.reduction = Reduction::good;
            return out;
        }
        if (st.v(st.c4) == 0) {
            // nodal: type In; split exactly when -c6 is a square in Q_p
            bool split;
            if (p == 2)
                split = st.mod(-st.c6, 8) == 1;
            else
                split = legendre(-st.c6, p) == 1;
            out.kodaira = {KodairaSymbol::In, static_cast<unsigned long>(n)};
            out.v_disc_min = n;
            out.f = 1;
            out.reduction = split ? Reduction::split_multiplicative
                                  : Reduction::nonsplit_multiplicative;
            return out;
        }
        out.reduction = Reduction::additive;

        // move the singular point to (0,0): afterwards p | a3, a4, a6
        Integer r, t;
        if (p == 2) {
            r = st.modp(st.a4);
            t = st.modp(r * (1 + st.a2 + st.a4) + st.a6);
        } else if (p == 3) {
            r = st.modp(-st.b6);
            t = st.modp(st.a1 * r + st.a3);
        } else {
            r = st.modp(-st.b2 * st.inv_mod(12, p));
            t = st.modp(-(st.a1 * r + st.a3) * st.inv_mod(2, p));
        }
        st.translate(r, 0, t);

        if (st.v(st.a6) < 2) {
            out.kodaira = {KodairaSymbol::II, 0};
            out.v_disc_min = n;
            out.f = n;
            return out;
        }
        if (st.v(st.b8) < 3) {
            out.kodaira = {KodairaSymbol::III, 0};
            out.v_disc_min = n;
            out.f = n - 1;
            return out;
        }
        if (st.v(st.b6) < 3) {
            out.kodaira = {KodairaSymbol::IV, 0};
            out.v_disc_min = n;
            out.f = n - 2;
            return out;
        }

        // normalize to p | a1, a2; p^2 | a3, a4; p^3 | a6
        if (p == 2) {
            Integer s = st.modp(st.a2);
            st.translate(0, s, 0);
            Integer tau = st.mod(st.a6 / 4, 2);
            st.translate(0, 0, 2 * tau);
        } else {
            Integer s = st.modp(-st.a1 * st.inv_mod(2, p));
            st.translate(0, s, 0);
            Integer p2 = p * p;
            Integer tt = st.mod(-st.a3 * st.inv_mod(2, p2), p2);
            st.translate(0, 0, tt);
        }

        // P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) mod p
        Integer c2 = st.a2 / p, c1 = st.a4 / (p * p), c0 = st.a6 / (p * p * p);
        auto [kind, root] = cubic_structure(st, c2, c1, c0);

        if (kind == CubicRoots::distinct) {
            out.kodaira = {KodairaSymbol::I0star, 0};
            out.v_disc_min = n;
            out.f = n - 4;
            return out;
        }

        if (kind == CubicRoots::double_root) {
            st.translate(p * root, 0, 0);
            // now v(a2) = 1, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
            unsigned long k = 1;
            for (;;) {
                Integer c = st.a3 / st.pow(k + 1);
                Integer d = st.a6 / st.pow(2 * k + 2);
                auto [sep_y, y0] = quadratic_y(st, c, d);
                if (sep_y) {
                    unsigned long m = 2 * k - 1;
                    out.kodaira = {KodairaSymbol::Instar, m};
                    out.v_disc_min = n;
                    out.f = n - 4 - static_cast<long>(m);
                    return out;
                }
                st.translate(0, 0, st.pow(k + 1) * y0);
                Integer aa = st.a2 / p;
                Integer bb = st.a4 / st.pow(k + 2);
                Integer cc = st.a6 / st.pow(2 * k + 3);
                auto [sep_x, x0] = quadratic_x(st, aa, bb, cc);
                if (sep_x) {
                    unsigned long m = 2 * k;
                    out.kodaira = {KodairaSymbol::Instar, m};
                    out.v_disc_min = n;
                    out.f = n - 4 - static_cast<long>(m);
                    return out;
                }
                st.translate(st.pow(k + 1) * x0, 0, 0);
                ++k;
            }
        }

        // triple root: recenter, then walk the starred tail
        st.translate(p * root, 0, 0);
        // v(a2) >= 2, v(a4) >= 3, v(a6) >= 4
        {
            Integer c = st.a3 / (p * p);
            Integer d = st.a6 / (p * p * p * p);
            auto [sep, y0] = quadratic_y(st, c, d);
            if (sep) {
                out.kodaira = {KodairaSymbol::IVstar, 0};
                out.v_disc_min = n;
                out.f = n - 6;
                return out;
            }
            st.translate(0, 0, p * p * y0);
        }
        if (st.v(st.a4) < 4) {
            out.kodaira = {KodairaSymbol::IIIstar, 0};
            out.v_disc_min = n;
            out.f = n - 7;
            return out;
        }
        if (st.v(st.a6) < 6) {
            out.kodaira = {KodairaSymbol::IIstar, 0};
            out.v_disc_min = n;
            out.f = n - 8;
            return out;
        }
        st.rescale_down();  // model was non-minimal at p; go again
    }
}

ConductorInfo conductor(const WeierstrassModel& m, const FactorOptions& opts) {
    WeierstrassModel mm = minimal_model(m, opts);
    ConductorInfo info;
    Integer dmin = abs(Integer(mm.disc().get_num()));
    for (const auto& pe : factorize(dmin, opts)) {
        LocalData ld = tate_local_data(mm, pe.p);
        if (ld.f > 0) {
            Integer q;
            mpz_pow_ui(q.get_mpz_t(), pe.p.get_mpz_t(),
                       static_cast<unsigned long>(ld.f));
            info.n *= q;
            info.factorization.push_back({pe.p, static_cast<unsigned long>(ld.f)});
        }
        info.local_data.push_back(ld);
    }
    // no elliptic curve over Q has good reduction everywhere
    if (info.n == 1) throw error("conductor 1 is impossible over Q");
    return info;
}

}  // namespace galrep
