#pragma once

#include <iosfwd>
#include <optional>

#include "galrep/bounds.hpp"
#include "galrep/denominator.hpp"
#include "galrep/families.hpp"

namespace galrep {

// One input record: either integral a-invariants or a bare j-invariant.
struct CurveInput {
    std::string label;
    std::optional<std::array<Integer, 5>> a;  // a1 a2 a3 a4 a6
    std::optional<Rational> j;
};

// Lines look like
//   label a1 a2 a3 a4 a6
//   label j <num>/<den>
//   label j <num>
// with '#' starting a comment.  Raises parse_error with the line number.
std::vector<CurveInput> parse_curves(std::istream& in);
CurveInput parse_curve_line(const std::string& line, std::size_t line_no = 0);

// Isolation-friendly variant: malformed records are returned as error
// entries instead of aborting the whole batch.
struct ParsedLine {
    std::size_t line_no = 0;
    std::optional<CurveInput> curve;
    std::string error;  // set when curve is absent
};
std::vector<ParsedLine> parse_curves_lenient(std::istream& in);

enum class PipelineMode { sieve, denominator_shortcut };

struct PipelineOptions {
    enum class ModeSelect { automatic, force_sieve, force_shortcut };
    ModeSelect mode = ModeSelect::automatic;
    bool ladic = false;
    CertifyOptions certify;
    SieveOptions sieve;
    unsigned jobs = 1;
};

struct ExceptionalReport {
    std::string label;
    Rational j;
    std::optional<Integer> conductor;  // only for a-invariant inputs
    PipelineMode mode = PipelineMode::sieve;
    ExceptionalSet raw;
    // sieve diagnostics
    QList qlist;
    std::size_t d = 0;
    std::size_t r = 0;
    Integer p_r;
    std::vector<SieveRow> rows;
    // shortcut diagnostics
    Integer g;
    // refinement, one status per prime of raw, plus optional l-adic notes
    std::vector<PrimeStatus> refined;
    std::vector<PrimeStatus> ladic;
};

// Raw stage: the denominator shortcut for non-integral j, the sieve
// otherwise.  j-only inputs run through a curve with that j-invariant.
ExceptionalReport exceptional_set(const CurveInput& curve,
                                  const PipelineOptions& opts = {});

// Per-prime refinement of every member of raw.
void refine(ExceptionalReport& report, const CurveInput& curve,
            const PipelineOptions& opts = {});

// A processed curve or its failure; failures never abort a batch.
struct CurveOutcome {
    std::string label;
    std::optional<ExceptionalReport> report;
    std::string error_type;  // non-empty on failure
    std::string error_message;
};

CurveOutcome process_curve(const CurveInput& curve,
                           const PipelineOptions& opts = {});

// Ordered, deterministic batch run over a worker pool.
std::vector<CurveOutcome> process_batch(const std::vector<CurveInput>& curves,
                                        const PipelineOptions& opts = {});

// Same, starting from leniently parsed lines: malformed records turn into
// parse_error outcomes in place and never abort the batch.
std::vector<CurveOutcome> process_lines(const std::vector<ParsedLine>& lines,
                                        const PipelineOptions& opts = {});

struct VerifySummary {
    std::size_t curves = 0;
    std::size_t failures = 0;
    std::size_t undetermined_over_13 = 0;
    std::optional<Integer> max_p_r;
    std::vector<std::string> offenders;  // labels with unexpected primes
    bool ok() const { return failures == 0 && offenders.empty(); }
};

// For every refined report the primes ell > 13 with status != surjective
// must be empty, or exactly {17} / {37} when (ell, j) is an S0 pair.
VerifySummary verify_conjecture(const std::vector<CurveOutcome>& outcomes);

// Stable single-line JSON serializations.
std::string report_to_json(const CurveOutcome& outcome);
std::string summary_to_json(const VerifySummary& summary);

}  // namespace galrep
