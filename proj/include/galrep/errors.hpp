#pragma once

#include <stdexcept>
#include <string>

namespace galrep {

// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact computation ran out of its configured effort budget
// (factorization, primality beyond the deterministic range, divisor
// enumeration).  Callers must degrade to "undetermined", never guess.
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

// Discriminant vanished: the Weierstrass equation is singular.
struct singular_curve_error : error {
    explicit singular_curve_error(const std::string& msg) : error(msg) {}
};

// Input curve has complex multiplication; the whole pipeline assumes non-CM.
struct cm_curve_error : error {
    std::string j;
    explicit cm_curve_error(std::string j_value)
        : error("curve has complex multiplication, j = " + j_value),
          j(std::move(j_value)) {}
};

// A point count was requested at a prime above the configured bound.
struct counting_bound_error : error {
    explicit counting_bound_error(const std::string& msg) : error(msg) {}
};

// The admissible-prime stream hit its search cap without finding a prime.
struct search_bound_error : error {
    explicit search_bound_error(const std::string& msg) : error(msg) {}
};

// Operation requires good reduction at p but the curve is bad there.
struct bad_reduction_error : error {
    explicit bad_reduction_error(const std::string& msg) : error(msg) {}
};

// Conductor-based bound requested for a curve with a multiplicative prime.
struct multiplicative_reduction_error : error {
    std::string p;
    explicit multiplicative_reduction_error(std::string prime)
        : error("curve has multiplicative reduction at p = " + prime),
          p(std::move(prime)) {}
};

// Denominator shortcut requested for an integral j-invariant.
struct integral_j_error : error {
    explicit integral_j_error(const std::string& msg) : error(msg) {}
};

// Malformed input line; carries the 1-based line number.
struct parse_error : error {
    std::size_t line;
    parse_error(std::size_t line_no, const std::string& msg)
        : error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace galrep
