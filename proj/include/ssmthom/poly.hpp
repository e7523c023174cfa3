#ifndef SSMTHOM_POLY_HPP
#define SSMTHOM_POLY_HPP

#include <map>
#include <span>
#include <vector>

#include "ssmthom/rational.hpp"
#include "ssmthom/ring.hpp"

namespace ssmthom {

// Exponent vector, one entry per ring variable.
using Exponents = std::vector<int>;

// Term key: (total weighted degree, exponents). The degree is redundant but
// keeping it in the key makes the graded order cheap and graded slicing easy.
using TermKey = std::pair<int, Exponents>;

// Canonical term order: ascending total degree, then descending lex on the
// exponent vector (earlier variables weigh more). Iteration over a Poly's
// terms is therefore deterministic and matches the printed order.
struct TermLess {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.first != b.first) return a.first < b.first;
        return b.second < a.second;
    }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed ring context. Never stores zero coefficients.
class Poly {
public:
    using TermMap = std::map<TermKey, Rational, TermLess>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(const RingPtr& ring, const Rational& c);
    static Poly variable(const RingPtr& ring, VarId v, int exp = 1);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree of a monomial in this ring's grading.
    int degree_of(const Exponents& e) const;

    // Highest/lowest total degree present; -1 for the zero polynomial.
    int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }
    int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.first; }
    bool is_homogeneous() const { return max_degree() == min_degree(); }

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;

    // Adds c * x^e (accumulating; removes the term if it cancels).
    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int k) const;

    // Sum of the terms of total degree exactly d / at most d.
    Poly graded_part(int d) const;
    Poly truncate(int max_deg) const;

private:
    RingPtr ring_;
    TermMap terms_;
};

// Product discarding every term of total degree above max_deg.
Poly mul_truncated(const Poly& a, const Poly& b, int max_deg);

// Maps each variable of p into the target ring: bound variables are replaced
// by their binding (a polynomial over target), unbound ones carry over to the
// target variable of the same name. Missing carry-over is a substitution
// error.
Poly substitute(const Poly& p, const RingPtr& target, const std::map<VarId, Poly>& bindings);

// Power series division: the truncation to total degree max_deg of num/den.
// den must have an invertible degree-0 part, i.e. a nonzero constant term and
// no other degree-0 monomials.
Poly series_quotient(const Poly& num, const Poly& den, int max_deg);

}  // namespace ssmthom

#endif
