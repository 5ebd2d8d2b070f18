#pragma once

#include <string>
#include <vector>

#include "galrep/numtheory.hpp"

namespace galrep {

// Univariate polynomial over Q, coefficient at index k is the t^k term.
// Trailing zero coefficients are stripped; the zero polynomial is empty.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    // Convenience: integer coefficient list, constant term first.
    static RationalPolynomial from_ints(std::initializer_list<long> coeffs);
    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial t();  // the monomial t

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& t) const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& c) const;
    RationalPolynomial pow(unsigned long e) const;

    bool operator==(const RationalPolynomial& o) const {
        return coeffs_ == o.coeffs_;
    }

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

// Monic gcd over Q (Euclidean algorithm); gcd(0,0) = 0.
RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b);

// All rational roots of a non-zero polynomial, sorted ascending, each listed
// once (multiplicity collapsed).  Clears denominators, strips powers of t,
// then tests +-(divisor of constant)/(divisor of leading) candidates built
// from exact factorizations; every returned root re-verifies f(r) = 0.
// Raises budget_error when a coefficient factorization exceeds its budget.
std::vector<Rational> rational_roots(const RationalPolynomial& f,
                                     const FactorOptions& opts = {});

}  // namespace galrep
