#include "galrep/poly.hpp"

#include <algorithm>
#include <set>

namespace galrep {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::from_ints(
    std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::t() {
    return RationalPolynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

const Rational& RationalPolynomial::coeff(std::size_t k) const {
    static const Rational zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

Rational RationalPolynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(
    const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(
    const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(
    const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return RationalPolynomial();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::pow(unsigned long e) const {
    RationalPolynomial acc = constant(Rational(1));
    RationalPolynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string RationalPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        Rational a = abs(c);
        if (a != 1 || k == 0) s += galrep::to_string(a);
        if (k > 0) {
            if (a != 1) s += "*";
            s += "t";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        // remainder of a by b
        RationalPolynomial r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational q = r.coeff(r.degree()) / b.coeff(b.degree());
            std::vector<Rational> shift(
                static_cast<std::size_t>(r.degree() - b.degree()), Rational(0));
            shift.push_back(q);
            r = r - b * RationalPolynomial(std::move(shift));
        }
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.coeff(a.degree()) != 1)
        a = a * (Rational(1) / a.coeff(a.degree()));
    return a;
}

std::vector<Rational> rational_roots(const RationalPolynomial& f,
                                     const FactorOptions& opts) {
    if (f.is_zero()) throw error("rational_roots: zero polynomial");
    // clear denominators to a primitive integer polynomial
    Integer lcm_den = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                c.get_den().get_mpz_t());
    std::vector<Integer> ic;
    ic.reserve(f.coeffs().size());
    Integer content = 0;
    for (const auto& c : f.coeffs()) {
        Rational v = c * Rational(lcm_den);
        ic.push_back(Integer(v.get_num()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                ic.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& v : ic) v /= content;

    std::set<Rational> roots;
    // strip powers of t: root 0
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.insert(Rational(0));
    std::vector<Integer> g(ic.begin() + low, ic.end());
    if (g.size() > 1) {
        auto eval_int = [&](const Rational& t) {
            Rational acc(0);
            for (auto it = g.rbegin(); it != g.rend(); ++it)
                acc = acc * t + Rational(*it);
            return acc;
        };
        Integer a0 = abs(g.front());
        Integer lead = abs(g.back());
        auto ds0 = divisors(factorize(a0, opts), opts);
        auto dsl = divisors(factorize(lead, opts), opts);
        if (ds0.size() * dsl.size() > opts.max_divisors)
            throw budget_error("rational_roots: candidate set too large");
        for (const Integer& p : ds0)
            for (const Integer& q : dsl) {
                Rational cand(p, q);
                cand.canonicalize();
                if (eval_int(cand) == 0) roots.insert(cand);
                cand = -cand;
                if (eval_int(cand) == 0) roots.insert(cand);
            }
    }
    return std::vector<Rational>(roots.begin(), roots.end());
}

}  // namespace galrep
