#include "galrep/elliptic.hpp"

#include <algorithm>

namespace galrep {

WeierstrassModel::WeierstrassModel(Rational a1, Rational a2, Rational a3,
                                   Rational a4, Rational a6)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)) {
    b2_ = a1_ * a1_ + 4 * a2_;
    b4_ = 2 * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + 4 * a6_;
    b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
          a4_ * a4_;
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ +
            9 * b2_ * b4_ * b6_;
    if (disc_ == 0)
        throw singular_curve_error("singular Weierstrass equation: " +
                                   to_string());
    j_ = c4_ * c4_ * c4_ / disc_;
}

WeierstrassModel WeierstrassModel::from_ai(const std::array<Integer, 5>& a) {
    return WeierstrassModel(Rational(a[0]), Rational(a[1]), Rational(a[2]),
                            Rational(a[3]), Rational(a[4]));
}

WeierstrassModel WeierstrassModel::short_form(const Rational& A,
                                              const Rational& B) {
    return WeierstrassModel(Rational(0), Rational(0), Rational(0), A, B);
}

bool WeierstrassModel::is_integral() const {
    return galrep::is_integral(a1_) && galrep::is_integral(a2_) &&
           galrep::is_integral(a3_) && galrep::is_integral(a4_) &&
           galrep::is_integral(a6_);
}

std::array<Integer, 5> WeierstrassModel::ai() const {
    if (!is_integral()) throw error("model is not integral: " + to_string());
    return {Integer(a1_.get_num()), Integer(a2_.get_num()),
            Integer(a3_.get_num()), Integer(a4_.get_num()),
            Integer(a6_.get_num())};
}

WeierstrassModel WeierstrassModel::transformed(const Rational& u,
                                               const Rational& r,
                                               const Rational& s,
                                               const Rational& t) const {
    if (u == 0) throw error("transformation with u = 0");
    Rational u2 = u * u, u3 = u2 * u;
    Rational na1 = (a1_ + 2 * s) / u;
    Rational na2 = (a2_ - s * a1_ + 3 * r - s * s) / u2;
    Rational na3 = (a3_ + r * a1_ + 2 * t) / u3;
    Rational na4 =
        (a4_ - s * a3_ + 2 * r * a2_ - (t + r * s) * a1_ + 3 * r * r -
         2 * s * t) /
        (u2 * u2);
    Rational na6 = (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t -
                    r * t * a1_) /
                   (u3 * u3);
    return WeierstrassModel(na1, na2, na3, na4, na6);
}

std::string WeierstrassModel::to_string() const {
    return "[" + galrep::to_string(a1_) + "," + galrep::to_string(a2_) + "," +
           galrep::to_string(a3_) + "," + galrep::to_string(a4_) + "," +
           galrep::to_string(a6_) + "]";
}

namespace {

// Scale to an integral model with the substitution u = 1/k.
WeierstrassModel integral_model(const WeierstrassModel& m) {
    if (m.is_integral()) return m;
    Integer k = 1;
    for (const Rational* a : {&m.a1(), &m.a2(), &m.a3(), &m.a4(), &m.a6()})
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), a->get_den().get_mpz_t());
    return m.transformed(Rational(1, k), 0, 0, 0);
}

// Kraus's conditions: (c4, c6) arise from an integral Weierstrass model.
bool kraus_at_2(const Integer& c4, const Integer& c6) {
    Integer r4 = c6 % 4;
    if (r4 < 0) r4 += 4;
    if (r4 == 3) return true;  // c6 = -1 mod 4
    Integer r16 = c4 % 16;
    if (r16 < 0) r16 += 16;
    if (r16 != 0) return false;
    Integer r32 = c6 % 32;
    if (r32 < 0) r32 += 32;
    return r32 == 0 || r32 == 8;
}

bool kraus_at_3(const Integer& c6) {
    if (c6 == 0) return true;
    return valuation(c6, 3).value() != 2;
}

// Standard reduced model with the given admissible invariants.
WeierstrassModel model_from_c4c6(const Integer& c4, const Integer& c6) {
    Integer b2 = (-c6) % 12;
    if (b2 < 0) b2 += 12;
    if (b2 > 6) b2 -= 12;
    Integer b4 = (b2 * b2 - c4);
    if (b4 % 24 != 0) throw error("model_from_c4c6: b4 not integral");
    b4 /= 24;
    Integer b6 = (-b2 * b2 * b2 + 36 * b2 * b4 - c6);
    if (b6 % 216 != 0) throw error("model_from_c4c6: b6 not integral");
    b6 /= 216;
    Integer a1 = b2 % 2;
    if (a1 < 0) a1 += 2;
    Integer a3 = b6 % 2;
    if (a3 < 0) a3 += 2;
    Integer a2 = b2 - a1;
    if (a2 % 4 != 0) throw error("model_from_c4c6: a2 not integral");
    a2 /= 4;
    Integer a4 = b4 - a1 * a3;
    if (a4 % 2 != 0) throw error("model_from_c4c6: a4 not integral");
    a4 /= 2;
    Integer a6 = b6 - a3;
    if (a6 % 4 != 0) throw error("model_from_c4c6: a6 not integral");
    a6 /= 4;
    WeierstrassModel out = WeierstrassModel::from_ai({a1, a2, a3, a4, a6});
    if (Rational(c4) != out.c4() || Rational(c6) != out.c6())
        throw error("model_from_c4c6: reconstruction mismatch");
    return out;
}

}  // namespace

WeierstrassModel minimal_model(const WeierstrassModel& m,
                               const FactorOptions& opts) {
    WeierstrassModel im = integral_model(m);
    Integer c4(im.c4().get_num());
    Integer c6(im.c6().get_num());

    // primes that can divide the scaling factor u divide both c4 and c6
    Integer probe;
    if (c4 == 0)
        probe = abs(c6);
    else if (c6 == 0)
        probe = abs(c4);
    else
        mpz_gcd(probe.get_mpz_t(), c4.get_mpz_t(), c6.get_mpz_t());

    Integer disc(im.disc().get_num());
    Integer u = 1;
    for (const auto& pe : factorize(probe, opts)) {
        long d4 = (c4 == 0) ? -1 : valuation(c4, pe.p).value() / 4;
        long d6 = (c6 == 0) ? -1 : valuation(c6, pe.p).value() / 6;
        long dd = valuation(disc, pe.p).value() / 12;
        long d;
        if (d4 < 0)
            d = d6;
        else if (d6 < 0)
            d = d4;
        else
            d = std::min(d4, d6);
        d = std::min(d, dd);  // the rescaled discriminant must stay integral
        if (d > 0) {
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), pe.p.get_mpz_t(),
                       static_cast<unsigned long>(d));
            u *= pk;
        }
    }
    auto scaled = [&](const Integer& uu) {
        Integer u4 = uu * uu * uu * uu;
        Integer u6 = u4 * uu * uu;
        return std::pair<Integer, Integer>(c4 / u4, c6 / u6);
    };
    auto [mc4, mc6] = scaled(u);
    if (!kraus_at_2(mc4, mc6)) {
        u /= 2;
        std::tie(mc4, mc6) = scaled(u);
    }
    if (!kraus_at_3(mc6)) {
        u /= 3;
        std::tie(mc4, mc6) = scaled(u);
    }
    return model_from_c4c6(mc4, mc6);
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Integer& d,
                                 const FactorOptions& opts) {
    if (d == 0) throw error("quadratic twist by 0");
    for (const auto& pe : factorize(abs(d), opts))
        if (pe.e > 1) throw error("quadratic twist by non-squarefree d");
    // short form y^2 = x^3 + A x + B with the same (c4, c6)
    Rational A = -m.c4() / 48;
    Rational B = -m.c6() / 864;
    Rational dd(d);
    return WeierstrassModel::short_form(A * dd * dd, B * dd * dd * dd);
}

WeierstrassModel curve_from_j(const Rational& j, const FactorOptions& opts) {
    if (j == 0 || j == 1728)
        throw cm_curve_error(to_string(j));
    Rational k = j * (1728 - j);
    WeierstrassModel raw =
        WeierstrassModel::short_form(3 * k, 2 * j * (1728 - j) * (1728 - j));
    WeierstrassModel out = minimal_model(raw, opts);
    if (out.j() != j) throw error("curve_from_j: j round-trip failed");
    return out;
}

const std::vector<Integer>& cm_j_invariants() {
    static const std::vector<Integer> table = [] {
        std::vector<Integer> t;
        for (const char* s :
             {"0", "1728", "-3375", "8000", "54000", "287496", "-32768",
              "16581375", "-884736", "-12288000", "-884736000",
              "-147197952000", "-262537412640768000"})
            t.emplace_back(s);
        return t;
    }();
    return table;
}

bool is_cm_j(const Rational& j) {
    if (!is_integral(j)) return false;
    const auto& table = cm_j_invariants();
    return std::find(table.begin(), table.end(), Integer(j.get_num())) !=
           table.end();
}

namespace {

long count_points_mod2(const std::array<Integer, 5>& a) {
    auto bit = [](const Integer& v) {
        return static_cast<unsigned>(mpz_odd_p(v.get_mpz_t()));
    };
    unsigned a1 = bit(a[0]), a2 = bit(a[1]), a3 = bit(a[2]), a4 = bit(a[3]),
             a6 = bit(a[4]);
    long n = 1;  // infinity
    for (unsigned x = 0; x < 2; ++x)
        for (unsigned y = 0; y < 2; ++y) {
            unsigned lhs = (y * y + a1 * x * y + a3 * y) & 1;
            unsigned rhs = (x * x * x + a2 * x * x + a4 * x + a6) & 1;
            if (lhs == rhs) ++n;
        }
    return n;
}

}  // namespace

long ap_good(const WeierstrassModel& m, const Integer& p,
             const CountingOptions& copts, const FactorOptions& fopts) {
    if (p > copts.counting_bound)
        throw counting_bound_error("point count requested at p = " +
                                   to_string(p) + " above bound " +
                                   std::to_string(copts.counting_bound));
    WeierstrassModel im = integral_model(m);
    if (valuation(im.disc(), p).value() != 0) {
        im = minimal_model(im, fopts);
        if (valuation(im.disc(), p).value() != 0)
            throw bad_reduction_error("bad reduction at p = " + to_string(p));
    }
    if (p == 2) return 3 - count_points_mod2(im.ai());

    // a_p = -sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6) over F_p
    unsigned long up = mpz_get_ui(p.get_mpz_t());
    auto red = [&](const Rational& v) {
        Integer r = Integer(v.get_num()) % p;
        if (r < 0) r += p;
        return mpz_get_ui(r.get_mpz_t());
    };
    unsigned long B2 = red(im.b2()), B4 = red(im.b4()), B6 = red(im.b6());
    std::vector<std::uint8_t> is_square(up, 0);
    for (unsigned long i = 0; i <= up / 2; ++i)
        is_square[(i * i) % up] = 1;
    long sum = 0;
    for (unsigned long x = 0; x < up; ++x) {
        unsigned long x2 = (x * x) % up;
        unsigned long g =
            ((4 * x2) % up * x + B2 * x2 + (2 * B4) % up * x + B6) % up;
        if (g == 0) continue;
        sum += is_square[g] ? 1 : -1;
    }
    return -sum;
}

}  // namespace galrep
