#include "galrep/sieve.hpp"

#include <algorithm>
#include <cstdlib>

namespace galrep {

QList compute_qlist(const WeierstrassModel& minimal, const FactorOptions& opts) {
    const Rational& j = minimal.j();
    if (j == 0 || j == 1728) throw cm_curve_error(to_string(j));
    QList q;
    if (valuation(j, 2).is_one_of({3, 6, 9})) q.push_back(2);
    // odd candidates divide gcd(num(j - 1728), num(D) * den(D)); for a
    // minimal model the discriminant is an integer
    Rational jm = j - 1728;
    Integer dmin(minimal.disc().get_num());
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(jm.get_num()).get_mpz_t(),
            dmin.get_mpz_t());
    for (const auto& pe : factorize(abs(g), opts)) {
        if (pe.p == 2) continue;
        Valuation v = valuation(jm, pe.p);
        if (!v.is_infinite() && v.value() > 0 && v.value() % 2 == 1)
            q.push_back(pe.p);
    }
    std::sort(q.begin(), q.end());
    return q;
}

QList compute_qlist(const Rational& j, const FactorOptions& opts) {
    return compute_qlist(curve_from_j(j, opts), opts);
}

AdmissiblePrime next_admissible(const WeierstrassModel& minimal,
                                const Integer& after,
                                const SieveOptions& opts) {
    Integer dmin = abs(Integer(minimal.disc().get_num()));
    Integer p = after < 2 ? Integer(2) : after;
    for (;;) {
        p = next_prime(p);
        if (p > opts.search_cap)
            throw search_bound_error(
                "no admissible prime below the search cap " +
                std::to_string(opts.search_cap));
        if (dmin % p != 0) {
            long a = ap_good(minimal, p, opts.counting, opts.factor);
            if (a != 0) return {p, false, std::labs(a)};
            continue;
        }
        LocalData ld = tate_local_data(minimal, p);
        if (ld.kodaira.kind != KodairaSymbol::I0star) continue;
        WeierstrassModel tw = minimal_model(
            quadratic_twist(minimal, p, opts.factor), opts.factor);
        long a = ap_good(tw, p, opts.counting, opts.factor);
        if (a != 0) return {p, true, std::labs(a)};
    }
}

void ExceptionalSet::add(const Integer& ell, const Reason& r) {
    if (reasons.count(ell)) return;  // first recorded reason wins
    reasons[ell] = r;
    primes.insert(std::lower_bound(primes.begin(), primes.end(), ell), ell);
}

std::pair<ExceptionalSet, SieveState> run_sieve(const WeierstrassModel& model,
                                                const SieveOptions& opts) {
    WeierstrassModel m = minimal_model(model, opts.factor);
    const Rational& j = m.j();
    if (is_cm_j(j)) throw cm_curve_error(to_string(j));

    ExceptionalSet s;
    for (long ell : {2, 3, 5, 7, 11, 13}) s.add(ell, {Reason::base});
    for (const auto& [ell, j0] : s0_pairs())
        if (j == j0) s.add(ell, {Reason::s0_pair});

    SieveState st;
    st.qlist = compute_qlist(m, opts.factor);
    const std::size_t d = st.qlist.size();

    F2Matrix A(0, d);
    std::vector<std::uint8_t> b;
    Integer p = 2;
    for (;;) {
        AdmissiblePrime ap = next_admissible(m, p, opts);
        p = ap.p;

        SieveRow row;
        row.prime = ap;
        row.alpha.resize(d);
        for (std::size_t jx = 0; jx < d; ++jx)
            row.alpha[jx] = legendre(st.qlist[jx], ap.p) == -1 ? 1 : 0;
        row.beta = legendre(-1, ap.p) == -1 ? 1 : 0;
        A.append_row(row.alpha);
        b.push_back(row.beta);
        st.rows.push_back(row);

        for (const auto& pe : factorize(Integer(ap.a), opts.factor))
            if (pe.p > 13) {
                st.accumulated.push_back(pe.p);
                s.add(pe.p, {Reason::divides_a_i, st.rows.size(), ap.p, ap.a});
            }

        if (!f2_is_consistent(A, b)) break;
    }
    st.r = st.rows.size();
    std::sort(st.accumulated.begin(), st.accumulated.end());
    st.accumulated.erase(
        std::unique(st.accumulated.begin(), st.accumulated.end()),
        st.accumulated.end());
    return {s, st};
}

const std::vector<std::pair<Integer, Rational>>& s0_pairs() {
    static const std::vector<std::pair<Integer, Rational>> pairs = [] {
        std::vector<std::pair<Integer, Rational>> v;
        // -17^2 * 101^3 / 2
        v.emplace_back(17, rational_from_string("-297756989/2"));
        // -17 * 373^3 / 2^17
        v.emplace_back(17, rational_from_string("-882216989/131072"));
        // -7 * 11^3
        v.emplace_back(37, rational_from_string("-9317"));
        // -7 * 137^3 * 2083^3
        v.emplace_back(37, rational_from_string("-162677523113838677"));
        return v;
    }();
    return pairs;
}

bool s0_lookup(const Integer& ell, const Rational& j) {
    for (const auto& [l, j0] : s0_pairs())
        if (l == ell && j == j0) return true;
    return false;
}

}  // namespace galrep
