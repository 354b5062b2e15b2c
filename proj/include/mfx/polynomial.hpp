#pragma once

#include <string>
#include <vector>

#include "mfx/ring.hpp"

namespace mfx {

struct Term {
    Monomial m;
    Scalar c;
};

// Immutable multivariate polynomial in canonical form: terms sorted
// descending by the ring's monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long long n);
    static Polynomial variable(const RingPtr& ring, std::size_t i);
    static Polynomial monomial(const RingPtr& ring, Monomial m, const Scalar& c);
    // Normalizes: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t nterms() const { return terms_.size(); }

    const Term& lead() const;
    std::uint64_t total_degree() const;  // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial shifted(const Monomial& m, const Scalar& c) const;  // c*x^m*this
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Tiny expression parser for tests, the catalog and human input:
// rational coefficients, named variables, +, -, *, ^ and parentheses.
Polynomial parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace mfx
