#pragma once

#include "hallforge/exactnum/rational.hpp"

#include <map>
#include <string>

namespace hallforge {

/// Laurent polynomial in q with rational coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) { add_term(0, Rational(c)); }
    LaurentPoly(int c) { add_term(0, Rational(c)); }
    LaurentPoly(const Rational& c) { add_term(0, c); }

    static LaurentPoly monomial(const Rational& c, int e);
    static LaurentPoly q() { return monomial(Rational(1), 1); }
    static LaurentPoly q_pow(int e) { return monomial(Rational(1), e); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rational coeff(int e) const;
    int min_exp() const;
    int max_exp() const;

    void add_term(int e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(int e) const;

    /// Exact quotient. Throws std::domain_error if b is zero or does not divide *this.
    LaurentPoly exact_div(const LaurentPoly& b) const;

    /// Evaluation at q = q_value.
    Rational specialize(const Rational& q_value) const;

    /// p(q^k): substitutes a power of q for q.
    LaurentPoly substitute_power(int k) const;

    /// Rendering "c0 + c1*q + c2*q^2", exponents increasing.
    std::string to_string() const;

private:
    Terms terms_;
};

Rational specialize(const LaurentPoly& p, const Rational& q_value);

} // namespace hallforge
