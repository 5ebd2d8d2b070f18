#include "galrep/report.hpp"

#include <atomic>
#include <istream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace galrep {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool is_rational_token(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return is_integer_token(s);
    return is_integer_token(s.substr(0, slash)) &&
           is_integer_token(s.substr(slash + 1));
}

}  // namespace

CurveInput parse_curve_line(const std::string& line, std::size_t line_no) {
    std::istringstream ss(line);
    std::vector<std::string> tok;
    std::string t;
    while (ss >> t) tok.push_back(t);
    if (tok.empty()) throw parse_error(line_no, "empty record");
    CurveInput c;
    c.label = tok[0];
    if (tok.size() == 3 && tok[1] == "j") {
        if (!is_rational_token(tok[2]))
            throw parse_error(line_no, "bad j-invariant '" + tok[2] + "'");
        c.j = rational_from_string(tok[2]);
        return c;
    }
    if (tok.size() == 6) {
        std::array<Integer, 5> a;
        for (int i = 0; i < 5; ++i) {
            if (!is_integer_token(tok[i + 1]))
                throw parse_error(line_no,
                                  "bad a-invariant '" + tok[i + 1] + "'");
            a[i] = Integer(tok[i + 1]);
        }
        c.a = a;
        return c;
    }
    throw parse_error(line_no,
                      "expected 'label a1 a2 a3 a4 a6' or 'label j <value>'");
}

namespace {

template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        fn(line, line_no);
    }
}

}  // namespace

std::vector<CurveInput> parse_curves(std::istream& in) {
    std::vector<CurveInput> out;
    for_each_record(in, [&](const std::string& line, std::size_t line_no) {
        out.push_back(parse_curve_line(line, line_no));
    });
    return out;
}

std::vector<ParsedLine> parse_curves_lenient(std::istream& in) {
    std::vector<ParsedLine> out;
    for_each_record(in, [&](const std::string& line, std::size_t line_no) {
        ParsedLine pl;
        pl.line_no = line_no;
        try {
            pl.curve = parse_curve_line(line, line_no);
        } catch (const parse_error& e) {
            pl.error = e.what();
        }
        out.push_back(std::move(pl));
    });
    return out;
}

namespace {

// The working model for a record, globally minimal; j-only inputs are
// lifted through curve_from_j (any twist gives the same raw set).
WeierstrassModel working_model(const CurveInput& curve,
                               const PipelineOptions& opts) {
    if (curve.a) {
        WeierstrassModel m = WeierstrassModel::from_ai(*curve.a);
        return minimal_model(m, opts.sieve.factor);
    }
    return curve_from_j(*curve.j, opts.sieve.factor);
}

}  // namespace

ExceptionalReport exceptional_set(const CurveInput& curve,
                                  const PipelineOptions& opts) {
    WeierstrassModel m = working_model(curve, opts);
    if (is_cm_j(m.j())) throw cm_curve_error(to_string(m.j()));

    ExceptionalReport rep;
    rep.label = curve.label;
    rep.j = m.j();
    if (curve.a) rep.conductor = conductor(m, opts.sieve.factor).n;

    bool shortcut;
    switch (opts.mode) {
        case PipelineOptions::ModeSelect::force_sieve: shortcut = false; break;
        case PipelineOptions::ModeSelect::force_shortcut: shortcut = true; break;
        default: shortcut = !is_integral(rep.j); break;
    }
    if (shortcut) {
        rep.mode = PipelineMode::denominator_shortcut;
        DenominatorProfile prof = denominator_profile(rep.j, opts.sieve.factor);
        rep.g = prof.g;
        rep.raw = shortcut_set(rep.j, opts.sieve.factor);
    } else {
        rep.mode = PipelineMode::sieve;
        auto [s, st] = run_sieve(m, opts.sieve);
        rep.raw = std::move(s);
        rep.qlist = st.qlist;
        rep.d = st.qlist.size();
        rep.r = st.r;
        rep.p_r = st.rows.back().prime.p;
        rep.rows = std::move(st.rows);
    }
    return rep;
}

void refine(ExceptionalReport& rep, const CurveInput& curve,
            const PipelineOptions& opts) {
    WeierstrassModel m = working_model(curve, opts);
    Integer n_e = rep.conductor ? *rep.conductor
                                : conductor(m, opts.sieve.factor).n;
    for (const Integer& ell : rep.raw.primes) {
        PrimeStatus st;
        if (ell <= 7)
            st = check_mod_small(rep.j, mpz_get_ui(ell.get_mpz_t()),
                                 opts.certify);
        else if (ell == 11)
            st = check_mod_11(rep.j, opts.certify);
        else if (ell == 13)
            st = check_mod_13(m, n_e, opts.certify);
        else
            st = certify_large(m, n_e, ell, opts.certify);
        rep.refined.push_back(std::move(st));
    }
    if (opts.ladic) {
        for (const auto& st : rep.refined)
            rep.ladic.push_back(check_ladic(
                rep.j, mpz_get_ui(st.ell.get_mpz_t()), st, opts.certify));
    }
}

CurveOutcome process_curve(const CurveInput& curve,
                           const PipelineOptions& opts) {
    CurveOutcome out;
    out.label = curve.label;
    try {
        ExceptionalReport rep = exceptional_set(curve, opts);
        refine(rep, curve, opts);
        out.report = std::move(rep);
    } catch (const cm_curve_error& e) {
        out.error_type = "cm_rejected";
        out.error_message = e.what();
    } catch (const budget_error& e) {
        out.error_type = "resource_limit";
        out.error_message = e.what();
    } catch (const error& e) {
        out.error_type = "error";
        out.error_message = e.what();
    }
    return out;
}

std::vector<CurveOutcome> process_batch(const std::vector<CurveInput>& curves,
                                        const PipelineOptions& opts) {
    std::vector<CurveOutcome> out(curves.size());
    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < curves.size(); ++i)
            out[i] = process_curve(curves[i], opts);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= curves.size()) return;
            out[i] = process_curve(curves[i], opts);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::vector<CurveOutcome> process_lines(const std::vector<ParsedLine>& lines,
                                        const PipelineOptions& opts) {
    std::vector<CurveInput> good;
    std::vector<std::size_t> pos;
    std::vector<CurveOutcome> all(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].curve) {
            good.push_back(*lines[i].curve);
            pos.push_back(i);
        } else {
            all[i].label = "input:" + std::to_string(lines[i].line_no);
            all[i].error_type = "parse_error";
            all[i].error_message = lines[i].error;
        }
    }
    auto outcomes = process_batch(good, opts);
    for (std::size_t k = 0; k < outcomes.size(); ++k)
        all[pos[k]] = std::move(outcomes[k]);
    return all;
}

VerifySummary verify_conjecture(const std::vector<CurveOutcome>& outcomes) {
    VerifySummary sum;
    for (const auto& oc : outcomes) {
        ++sum.curves;
        if (!oc.report) {
            ++sum.failures;
            sum.offenders.push_back(oc.label + " (" + oc.error_type + ")");
            continue;
        }
        const ExceptionalReport& rep = *oc.report;
        if (rep.mode == PipelineMode::sieve)
            if (!sum.max_p_r || rep.p_r > *sum.max_p_r) sum.max_p_r = rep.p_r;
        std::vector<Integer> flagged;
        for (const auto& st : rep.refined) {
            if (st.ell <= 13) continue;
            if (st.status != SurjStatus::surjective) flagged.push_back(st.ell);
            if (st.status == SurjStatus::undetermined)
                ++sum.undetermined_over_13;
        }
        std::vector<Integer> expected;
        for (const auto& [ell, j0] : s0_pairs())
            if (rep.j == j0) expected.push_back(ell);
        if (flagged != expected)
            sum.offenders.push_back(oc.label);
    }
    return sum;
}

namespace {

const char* reason_name(Reason::Kind k) {
    switch (k) {
        case Reason::base: return "base";
        case Reason::s0_pair: return "s0_pair";
        case Reason::divides_a_i: return "divides_a_i";
        case Reason::divides_g: return "divides_g";
    }
    return "?";
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json out;
    if (std::holds_alternative<std::monostate>(c)) {
        out["kind"] = "none";
    } else if (auto* f = std::get_if<CertFamily>(&c)) {
        out["kind"] = "family";
        out["family"] = f->family;
        out["t"] = to_string(f->t);
    } else if (auto* nf = std::get_if<CertNoFamily>(&c)) {
        out["kind"] = "no_family_match";
        out["families"] = nf->families;
    } else if (std::holds_alternative<CertExplicitJ>(c)) {
        out["kind"] = "explicit_j";
    } else if (std::holds_alternative<CertS0>(c)) {
        out["kind"] = "s0_pair";
    } else if (auto* ds = std::get_if<CertDenominatorShape>(&c)) {
        out["kind"] = "denominator_shape";
        out["detail"] = ds->detail;
    } else if (auto* w = std::get_if<CertWitness>(&c)) {
        out["kind"] = "witnesses";
        ordered_json arr = ordered_json::array();
        for (const auto& e : w->entries) {
            ordered_json we;
            we["kind"] = e.kind;
            we["p"] = to_string(e.p);
            we["ap"] = e.ap;
            arr.push_back(we);
        }
        out["witnesses"] = arr;
    } else if (auto* x = std::get_if<CertXns11Point>(&c)) {
        out["kind"] = "xns11_point";
        out["n"] = x->n;
    } else if (std::holds_alternative<CertEqualsModEll>(c)) {
        out["kind"] = "equals_mod_ell";
    }
    return out;
}

ordered_json status_json(const PrimeStatus& st) {
    ordered_json out;
    out["prime"] = to_string(st.ell);
    out["status"] = to_string(st.status);
    out["certificate"] = certificate_json(st.certificate);
    return out;
}

}  // namespace

std::string report_to_json(const CurveOutcome& oc) {
    ordered_json out;
    out["schema"] = 1;
    out["label"] = oc.label;
    if (!oc.report) {
        ordered_json err;
        err["type"] = oc.error_type;
        err["message"] = oc.error_message;
        out["error"] = err;
        return out.dump();
    }
    const ExceptionalReport& rep = *oc.report;
    out["j"] = to_string(rep.j);
    if (rep.conductor) out["conductor"] = to_string(*rep.conductor);
    out["mode"] = rep.mode == PipelineMode::sieve ? "sieve"
                                                  : "denominator_shortcut";
    if (rep.mode == PipelineMode::sieve) {
        ordered_json ql = ordered_json::array();
        for (const auto& q : rep.qlist) ql.push_back(to_string(q));
        out["qlist"] = ql;
        out["d"] = rep.d;
        out["r"] = rep.r;
        out["p_r"] = to_string(rep.p_r);
        ordered_json rows = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json rj;
            rj["p"] = to_string(row.prime.p);
            rj["twisted"] = row.prime.twisted;
            rj["a"] = row.prime.a;
            std::string alpha;
            for (auto bit : row.alpha) alpha += bit ? '1' : '0';
            rj["alpha"] = alpha;
            rj["beta"] = static_cast<int>(row.beta);
            rows.push_back(rj);
        }
        out["rows"] = rows;
    } else {
        out["g"] = to_string(rep.g);
    }
    ordered_json raw = ordered_json::array();
    for (const auto& ell : rep.raw.primes) {
        ordered_json e;
        e["prime"] = to_string(ell);
        const Reason& r = rep.raw.reasons.at(ell);
        e["reason"] = reason_name(r.kind);
        if (r.kind == Reason::divides_a_i) {
            e["i"] = r.row;
            e["p_i"] = to_string(r.p_i);
            e["a_i"] = r.a_i;
        }
        raw.push_back(e);
    }
    out["raw_S"] = raw;
    ordered_json refined = ordered_json::array();
    for (const auto& st : rep.refined) refined.push_back(status_json(st));
    out["refined"] = refined;
    if (!rep.ladic.empty()) {
        ordered_json lj = ordered_json::array();
        for (const auto& st : rep.ladic) lj.push_back(status_json(st));
        out["ladic"] = lj;
    }
    return out.dump();
}

std::string summary_to_json(const VerifySummary& sum) {
    ordered_json out;
    out["schema"] = 1;
    out["curves"] = sum.curves;
    out["failures"] = sum.failures;
    out["undetermined_over_13"] = sum.undetermined_over_13;
    if (sum.max_p_r) out["max_p_r"] = to_string(*sum.max_p_r);
    out["offenders"] = sum.offenders;
    out["conjecture_holds"] = sum.ok();
    return out.dump();
}

}  // namespace galrep
