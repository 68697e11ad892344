#pragma once

#include "hallforge/exactnum/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace hallforge {

/// Rational function q^shift * N(q) / prod_k Phi_k(q)^{e_k} with cyclotomic denominators.
///
/// Every denominator that occurs in the q-calculus checks ([n]_q!, q^j - 1, |GL(n,q)|,
/// Hall numbers divided by automorphism orders) is a product of cyclotomic polynomials
/// and a power of q, so this form is closed under the operations we need and has a
/// canonical representative: N(0) != 0 and no Phi_k in the denominator divides N.
/// Division by an element whose numerator is not of that shape throws std::domain_error.
class QFraction {
public:
    using Poly = std::vector<Rational>;

    QFraction() = default;
    QFraction(long c);
    QFraction(int c) : QFraction(static_cast<long>(c)) {}
    QFraction(const Rational& c);
    QFraction(const LaurentPoly& p);

    static QFraction q() { return QFraction(LaurentPoly::q()); }
    static QFraction q_pow(int e) { return QFraction(LaurentPoly::q_pow(e)); }

    bool is_zero() const { return num_.empty(); }
    bool is_laurent() const { return den_.empty(); }
    LaurentPoly to_laurent() const;
    LaurentPoly numerator() const;
    LaurentPoly denominator() const;

    QFraction& operator+=(const QFraction& o);
    QFraction& operator-=(const QFraction& o);
    QFraction& operator*=(const QFraction& o);
    QFraction& operator/=(const QFraction& o);
    friend QFraction operator+(QFraction a, const QFraction& b) { return a += b; }
    friend QFraction operator-(QFraction a, const QFraction& b) { return a -= b; }
    friend QFraction operator*(QFraction a, const QFraction& b) { return a *= b; }
    friend QFraction operator/(QFraction a, const QFraction& b) { return a /= b; }
    QFraction operator-() const;
    friend bool operator==(const QFraction& a, const QFraction& b)
    {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    QFraction pow(int e) const;
    Rational specialize(const Rational& q_value) const;
    std::string to_string() const;

    /// Cyclotomic polynomial Phi_n as a dense coefficient vector.
    static const Poly& cyclotomic(int n);

private:
    void normalize();

    int shift_ = 0;
    Poly num_;
    std::map<int, int> den_;
};

} // namespace hallforge
