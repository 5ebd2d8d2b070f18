// galrep: exceptional-prime reports for elliptic curves over Q.
//
// Subcommands:
//   sieve     per-curve JSONL reports for an input file (or stdin)
//   verify    batch check that no unexpected prime > 13 survives refinement
//   bound     conductor-based bound calculators for a curve or a bare N
//   families  family membership tests for a given j and ell

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galrep/report.hpp"

using namespace galrep;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonFlags {
    unsigned long witness_bound = 10000;
    unsigned long counting_bound = 1000000;
    long xns11_bound = 30;
    std::string mode = "auto";
    std::string ladic = "off";
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--witness-bound", f.witness_bound,
                    "largest prime scanned for surjectivity witnesses");
    cmd->add_option("--counting-bound", f.counting_bound,
                    "largest prime allowed in exact point counts");
    cmd->add_option("--xns11-bound", f.xns11_bound,
                    "largest |n| searched over multiples of the X_ns+(11) generator");
    cmd->add_option("--mode", f.mode, "auto|sieve|shortcut")
        ->check(CLI::IsMember({"auto", "sieve", "shortcut"}));
    cmd->add_option("--ladic", f.ladic, "on|off: annotate ell-adic statuses")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--jobs", f.jobs, "worker threads for batch processing");
}

PipelineOptions make_options(const CommonFlags& f) {
    PipelineOptions opts;
    opts.certify.witness_bound = f.witness_bound;
    opts.certify.xns11_bound = f.xns11_bound;
    opts.certify.counting.counting_bound = f.counting_bound;
    opts.sieve.counting.counting_bound = f.counting_bound;
    opts.ladic = f.ladic == "on";
    opts.jobs = f.jobs;
    if (f.mode == "sieve")
        opts.mode = PipelineOptions::ModeSelect::force_sieve;
    else if (f.mode == "shortcut")
        opts.mode = PipelineOptions::ModeSelect::force_shortcut;
    return opts;
}

std::vector<ParsedLine> read_curves(const std::string& path) {
    if (path.empty() || path == "-") return parse_curves_lenient(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return parse_curves_lenient(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional-prime reports for elliptic curves over Q"};
    app.require_subcommand(1);

    std::string input_path;
    CommonFlags flags;

    auto* sieve_cmd =
        app.add_subcommand("sieve", "emit one JSON report per input curve");
    sieve_cmd->add_option("input", input_path, "curve file ('-' for stdin)");
    add_common(sieve_cmd, flags);

    auto* verify_cmd = app.add_subcommand(
        "verify", "run the pipeline and check the expected exceptional sets");
    verify_cmd->add_option("input", input_path, "curve file ('-' for stdin)");
    add_common(verify_cmd, flags);

    std::string bound_curve;
    std::string bound_n;
    auto* bound_cmd =
        app.add_subcommand("bound", "conductor-based bound calculators");
    bound_cmd->add_option("--curve", bound_curve,
                          "a-invariants 'a1 a2 a3 a4 a6'");
    bound_cmd->add_option("--conductor", bound_n, "bare conductor value N");

    std::string fam_j;
    unsigned long fam_ell = 0;
    bool fam_ladic = false;
    auto* fam_cmd =
        app.add_subcommand("families", "family membership for a j-invariant");
    fam_cmd->add_option("--j", fam_j, "j-invariant (num or num/den)")
        ->required();
    fam_cmd->add_option("--ell", fam_ell, "prime level: 2, 3, 5, 7 or 13")
        ->required();
    fam_cmd->add_flag("--ladic", fam_ladic,
                      "use the ell-adic tables (ell = 2 or 3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sieve_cmd->parsed() || verify_cmd->parsed()) {
            auto lines = read_curves(input_path);
            auto opts = make_options(flags);
            auto outcomes = process_lines(lines, opts);
            if (sieve_cmd->parsed()) {
                bool any_error = false;
                for (const auto& oc : outcomes) {
                    std::cout << report_to_json(oc) << "\n";
                    if (!oc.report) any_error = true;
                }
                return any_error ? 2 : 0;
            }
            for (const auto& oc : outcomes)
                std::cout << report_to_json(oc) << "\n";
            VerifySummary sum = verify_conjecture(outcomes);
            std::cout << summary_to_json(sum) << "\n";
            return sum.ok() ? 0 : 2;
        }
        if (bound_cmd->parsed()) {
            if (bound_curve.empty() && bound_n.empty())
                throw std::runtime_error("bound: give --curve or --conductor");
            ordered_json out;
            out["schema"] = 1;
            if (!bound_curve.empty()) {
                CurveInput c = parse_curve_line("E " + bound_curve);
                if (!c.a) throw std::runtime_error("bound: need 5 a-invariants");
                WeierstrassModel m =
                    minimal_model(WeierstrassModel::from_ai(*c.a));
                ConductorInfo info = conductor(m);
                out["conductor"] = to_string(info.n);
                try {
                    out["conductor_bound"] = to_string(conductor_bound(m));
                } catch (const multiplicative_reduction_error& e) {
                    out["conductor_bound_error"] = e.what();
                }
                out["sturm_prime_bound"] = to_string(sturm_prime_bound(info.n));
            } else {
                Integer n(bound_n);
                if (n < 1) throw std::runtime_error("bound: N must be >= 1");
                out["conductor"] = to_string(n);
                out["conductor_bound"] = to_string(conductor_bound_for_n(n));
                out["sturm_prime_bound"] = to_string(sturm_prime_bound(n));
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (fam_cmd->parsed()) {
            Rational j = rational_from_string(fam_j);
            const auto& table =
                fam_ladic ? ladic_families(fam_ell) : mod_ell_families(fam_ell);
            ordered_json out;
            out["schema"] = 1;
            out["j"] = to_string(j);
            out["ell"] = fam_ell;
            out["ladic"] = fam_ladic;
            ordered_json arr = ordered_json::array();
            for (const auto& f : table) {
                ordered_json e;
                e["family"] = f.label;
                auto t = family_member(j, f);
                e["member"] = t.has_value();
                if (t) e["t"] = to_string(*t);
                arr.push_back(e);
            }
            out["families"] = arr;
            std::cout << out.dump() << "\n";
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
