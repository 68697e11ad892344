#pragma once

#include "hallforge/caps.hpp"
#include "hallforge/check.hpp"
#include "hallforge/exactnum/qfraction.hpp"
#include "hallforge/exactnum/rational.hpp"
#include "hallforge/jordansym/partition.hpp"
#include "hallforge/qcalc/qnumbers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hallforge::jordansym {

using Exponents = std::vector<int>;

/// Symmetric polynomial in x_1..x_n, stored monomial by monomial. Symmetry is checked on construction.
template <class K>
class SymPoly {
public:
    using Terms = std::map<Exponents, K>;

    explicit SymPoly(int n_vars) : n_(n_vars) {}
    SymPoly(int n_vars, Terms terms) : n_(n_vars), terms_(std::move(terms))
    {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
        for (const auto& [e, c] : terms_)
            if (static_cast<int>(e.size()) != n_)
                throw std::invalid_argument("exponent vector of the wrong length");
        check_symmetric();
    }

    int n_vars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coeff(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    /// Coefficient of the monomial symmetric function m_lambda.
    K coeff(const Partition& lambda) const
    {
        if (lambda.length() > n_)
            return K(0);
        Exponents e = lambda.parts();
        e.resize(static_cast<size_t>(n_), 0);
        return coeff(e);
    }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) { return combine(a, b, K(1)); }
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) { return combine(a, b, K(-1)); }
    friend SymPoly operator*(const K& s, const SymPoly& a)
    {
        Terms t;
        for (const auto& [e, c] : a.terms_)
            t.emplace(e, s * c);
        return SymPoly(a.n_, std::move(t));
    }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b)
    {
        same_vars(a, b);
        Terms t;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                auto [it, ins] = t.try_emplace(std::move(e), ca * cb);
                if (!ins)
                    it->second += ca * cb;
            }
        return SymPoly(a.n_, std::move(t));
    }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    K evaluate(const std::vector<K>& x) const
    {
        if (static_cast<int>(x.size()) != n_)
            throw std::invalid_argument("wrong number of arguments");
        K out(0);
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (int i = 0; i < n_; ++i)
                term *= x[i].pow(e[i]);
            out += term;
        }
        return out;
    }

    /// Expansion in the monomial symmetric basis, e.g. "2*m(1,1) + m(2)"; "0" when empty.
    std::string to_string() const
    {
        std::vector<std::string> parts = m_terms(terms_.size());
        if (parts.empty())
            return "0";
        std::string out;
        for (const auto& s : parts)
            out += (out.empty() ? "" : " + ") + s;
        return out;
    }

    /// Up to `limit` entries "c*m(lambda)".
    std::vector<std::string> m_terms(size_t limit) const
    {
        std::vector<std::string> out;
        for (auto it = terms_.rbegin(); it != terms_.rend() && out.size() < limit; ++it) {
            if (!std::is_sorted(it->first.begin(), it->first.end(), std::greater<>()))
                continue;
            const std::string c = it->second.to_string();
            out.push_back((c == "1" ? "" : "(" + c + ")*") + "m" + Partition::from_parts(it->first).to_string());
        }
        return out;
    }

private:
    int n_;
    Terms terms_;

    static void same_vars(const SymPoly& a, const SymPoly& b)
    {
        if (a.n_ != b.n_)
            throw std::invalid_argument("symmetric polynomials in different numbers of variables");
    }

    static SymPoly combine(const SymPoly& a, const SymPoly& b, const K& sign)
    {
        same_vars(a, b);
        Terms t = a.terms_;
        for (const auto& [e, c] : b.terms_) {
            auto [it, ins] = t.try_emplace(e, sign * c);
            if (!ins)
                it->second += sign * c;
        }
        return SymPoly(a.n_, std::move(t));
    }

    void check_symmetric() const
    {
        for (const auto& [e, c] : terms_) {
            Exponents s = e;
            std::sort(s.begin(), s.end());
            do {
                auto it = terms_.find(s);
                if (it == terms_.end() || !(it->second == c))
                    throw std::invalid_argument("polynomial is not symmetric");
            } while (std::next_permutation(s.begin(), s.end()));
        }
    }
};

template <class K>
SymPoly<K> monomial_symmetric(const Partition& lambda, int n)
{
    typename SymPoly<K>::Terms t;
    if (lambda.length() <= n) {
        Exponents e = lambda.parts();
        e.resize(static_cast<size_t>(n), 0);
        std::sort(e.begin(), e.end());
        do
            t.emplace(e, K(1));
        while (std::next_permutation(e.begin(), e.end()));
    }
    return SymPoly<K>(n, std::move(t));
}

template <class K>
SymPoly<K> elementary(int r, int n)
{
    return monomial_symmetric<K>(column(r), n);
}

template <class K>
SymPoly<K> complete(int r, int n)
{
    SymPoly<K> out(n);
    for (const Partition& l : partitions_of(r))
        out = out + monomial_symmetric<K>(l, n);
    return out;
}

/// Integer polynomial in t, ascending coefficients.
using IntPoly = std::vector<long>;

/// Coefficients c_mu(t) with sum_sigma sgn(sigma) sigma(x^lambda prod_{i<j} (x_i - t x_j)) = sum_mu c_mu a_{mu+delta}.
/// Keys are mu padded to n entries.
std::map<Exponents, IntPoly> antisymmetrized(const Partition& lambda, int n);
/// s_mu(x_1..x_n) in monomials, integer coefficients.
const std::map<Exponents, long>& schur_monomials(const Exponents& mu, int n);

template <class K>
K eval_int_poly(const IntPoly& f, const K& t)
{
    K out(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        out = out * t + K(*it);
    return out;
}

/// P_lambda(x_1..x_n; t) = prod_{i>=0} [m_i]_t!^{-1} sum_{sigma in S_n} sigma(x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j)),
/// lambda padded with m_0 = n - length zeros. The sum is the antisymmetrization of the numerator over the
/// Vandermonde determinant, a combination of Schur polynomials.
template <class K>
SymPoly<K> hall_littlewood(const Partition& lambda, int n, const K& t)
{
    caps::require(n <= caps::hall_littlewood_vars(), "Hall-Littlewood symmetrization over " + std::to_string(n) +
                                                         " variables exceeds the cap");
    if (lambda.length() > n)
        throw std::invalid_argument("P" + lambda.to_string() + " needs at least " + std::to_string(lambda.length()) +
                                    " variables");
    K v = qcalc::q_factorial_at(n - lambda.length(), t);
    for (int i = 1; i <= lambda.largest(); ++i)
        v *= qcalc::q_factorial_at(lambda.multiplicity(i), t);
    typename SymPoly<K>::Terms terms;
    for (const auto& [mu, c] : antisymmetrized(lambda, n)) {
        const K coef = eval_int_poly(c, t) / v;
        if (coef.is_zero())
            continue;
        for (const auto& [e, k] : schur_monomials(mu, n)) {
            auto [it, ins] = terms.try_emplace(e, coef * K(k));
            if (!ins)
                it->second += coef * K(k);
        }
    }
    return SymPoly<K>(n, std::move(terms));
}

/// Phi([I_lambda]) = q^{-n(lambda)} P_lambda(x; q^{-1}) at q = p; zero when lambda has more than n parts.
SymPoly<Rational> phi_image(const Partition& lambda, int n, int p);

/// sum_{lambda |- r} q^{n(lambda)} P_lambda(x; q) = h_r in n variables, symbolic in q.
CheckOutcome hl_identity_check(int r, int n);
/// Phi([I_mu]) Phi([I_nu]) = sum_lambda F^lambda_{mu,nu} Phi([I_lambda]) in n variables at q = p.
CheckOutcome phi_hom_check(const Partition& mu, const Partition& nu, int n, int p);
/// sum_{s=0}^r prod_{j<=s} (1 - q^j)^{-1} sum_{lambda |- r-s} |Aut I_lambda|^{-1} = 0 for r > 0, in Q(q).
CheckOutcome alt_sum_identity_check(int r);

} // namespace hallforge::jordansym
