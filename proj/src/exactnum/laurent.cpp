#include "hallforge/exactnum/laurent.hpp"

#include <stdexcept>

namespace hallforge {

LaurentPoly LaurentPoly::monomial(const Rational& c, int e)
{
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

Rational LaurentPoly::coeff(int e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const
{
    if (terms_.empty())
        throw std::domain_error("LaurentPoly: zero has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const
{
    if (terms_.empty())
        throw std::domain_error("LaurentPoly: zero has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const
{
    if (e < 0) {
        if (!is_monomial())
            throw std::domain_error("LaurentPoly: negative power of a non-monomial");
        const auto& [x, c] = *terms_.begin();
        return monomial(c.pow(e), x * e);
    }
    LaurentPoly r(1), b = *this;
    while (e > 0) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const
{
    if (b.is_zero())
        throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero())
        return {};
    // Long division from the top exponent down.
    LaurentPoly rem = *this, quot;
    const int bmax = b.max_exp();
    const int bmin = b.min_exp();
    const int lowest = min_exp() - bmin;
    const Rational& lead = b.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        int shift = rem.max_exp() - bmax;
        if (shift < lowest)
            throw std::domain_error("LaurentPoly: inexact division");
        Rational c = rem.terms_.rbegin()->second / lead;
        quot.add_term(shift, c);
        for (const auto& [e, bc] : b.terms_)
            rem.add_term(e + shift, -(c * bc));
    }
    return quot;
}

Rational LaurentPoly::specialize(const Rational& q_value) const
{
    if (q_value.is_zero())
        throw std::domain_error("LaurentPoly: specialization at q = 0");
    Rational r;
    for (const auto& [e, c] : terms_)
        r += c * q_value.pow(e);
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.add_term(e * k, c);
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += c.to_string();
        if (e == 1)
            s += "*q";
        else if (e != 0)
            s += "*q^" + std::to_string(e);
    }
    return s;
}

Rational specialize(const LaurentPoly& p, const Rational& q_value) { return p.specialize(q_value); }

} // namespace hallforge
