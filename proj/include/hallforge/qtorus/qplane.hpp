#pragma once

#include "hallforge/qcalc/qseries.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hallforge::qtorus {

/// Truncated series sum c_{mn} x0^m x1^n in normal order, with x1 x0 = q^e x0 x1.
/// Terms of total degree above the truncation are dropped.
template <class K>
class QPlaneSeries {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, K>;

    QPlaneSeries(K q, int e, int truncation) : q_(std::move(q)), e_(e), trunc_(truncation)
    {
        if (truncation < 0)
            throw std::invalid_argument("truncation must be non-negative");
    }

    static QPlaneSeries monomial(const QPlaneSeries& ctx, int m, int n, const K& c = K(1))
    {
        QPlaneSeries r = ctx.empty_like();
        r.add(m, n, c);
        return r;
    }

    QPlaneSeries empty_like() const { return QPlaneSeries(q_, e_, trunc_); }
    QPlaneSeries one() const { return monomial(*this, 0, 0); }
    QPlaneSeries x0() const { return monomial(*this, 1, 0); }
    QPlaneSeries x1() const { return monomial(*this, 0, 1); }

    const K& q() const { return q_; }
    int relation_exponent() const { return e_; }
    int truncation() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coeff(int m, int n) const
    {
        auto it = terms_.find({m, n});
        return it == terms_.end() ? K(0) : it->second;
    }

    void add(int m, int n, const K& c)
    {
        if (m < 0 || n < 0)
            throw std::invalid_argument("negative exponent in the quantum plane");
        if (m + n > trunc_ || c.is_zero())
            return;
        auto [it, ins] = terms_.try_emplace({m, n}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    QPlaneSeries& operator+=(const QPlaneSeries& o)
    {
        same_ring(o);
        for (const auto& [k, c] : o.terms_)
            add(k.first, k.second, c);
        return *this;
    }
    QPlaneSeries& operator-=(const QPlaneSeries& o)
    {
        same_ring(o);
        for (const auto& [k, c] : o.terms_)
            add(k.first, k.second, -c);
        return *this;
    }
    friend QPlaneSeries operator+(QPlaneSeries a, const QPlaneSeries& b) { return a += b; }
    friend QPlaneSeries operator-(QPlaneSeries a, const QPlaneSeries& b) { return a -= b; }
    friend QPlaneSeries operator*(const K& s, const QPlaneSeries& a)
    {
        QPlaneSeries r = a.empty_like();
        for (const auto& [k, c] : a.terms_)
            r.add(k.first, k.second, s * c);
        return r;
    }

    /// (x0^a x1^b)(x0^c x1^d) = q^{e b c} x0^{a+c} x1^{b+d}.
    friend QPlaneSeries operator*(const QPlaneSeries& a, const QPlaneSeries& b)
    {
        a.same_ring(b);
        QPlaneSeries r = a.empty_like();
        std::map<long, K> qpow;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                if (ka.first + ka.second + kb.first + kb.second > a.trunc_)
                    continue;
                const long ex = static_cast<long>(a.e_) * ka.second * kb.first;
                auto it = qpow.find(ex);
                if (it == qpow.end())
                    it = qpow.emplace(ex, a.q_.pow(static_cast<int>(ex))).first;
                r.add(ka.first + kb.first, ka.second + kb.second, it->second * ca * cb);
            }
        return r;
    }

    friend bool operator==(const QPlaneSeries& a, const QPlaneSeries& b)
    {
        return a.e_ == b.e_ && a.trunc_ == b.trunc_ && a.q_ == b.q_ && a.terms_ == b.terms_;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    QPlaneSeries inverse() const
    {
        const K c0 = coeff(0, 0);
        if (c0.is_zero())
            throw std::domain_error("series without constant term is not invertible");
        // f = c0 (1 - g), f^{-1} = c0^{-1} sum g^k.
        QPlaneSeries g = one() - (K(1) / c0) * *this;
        QPlaneSeries sum = one(), pw = one();
        for (int k = 1; k <= trunc_; ++k) {
            pw = pw * g;
            if (pw.is_zero())
                break;
            sum += pw;
        }
        return (K(1) / c0) * sum;
    }

    /// sum_k f_k arg^k. arg must have zero constant term.
    QPlaneSeries substitute_into(const qcalc::QSeries<K>& f) const
    {
        if (!coeff(0, 0).is_zero())
            throw std::invalid_argument("substitution needs an argument without constant term");
        if (f.order() < trunc_)
            throw std::invalid_argument("series order is below the truncation");
        QPlaneSeries r = empty_like(), pw = one();
        for (int k = 0; k <= trunc_; ++k) {
            if (k > 0)
                pw = pw * *this;
            if (pw.is_zero())
                break;
            r += f[k] * pw;
        }
        return r;
    }

    /// Lowest total degree with a nonzero term, or -1 for zero.
    int lowest_degree() const
    {
        int best = -1;
        for (const auto& [k, c] : terms_)
            if (best < 0 || k.first + k.second < best)
                best = k.first + k.second;
        return best;
    }

    QPlaneSeries degree_part(int d) const
    {
        QPlaneSeries r = empty_like();
        for (const auto& [k, c] : terms_)
            if (k.first + k.second == d)
                r.add(k.first, k.second, c);
        return r;
    }

    /// Up to `limit` entries "c*x0^m x1^n", lowest degree first.
    std::vector<std::string> term_strings(size_t limit) const
    {
        std::vector<std::pair<Key, const K*>> order;
        for (const auto& [k, c] : terms_)
            order.push_back({k, &c});
        std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
            return x.first.first + x.first.second < y.first.first + y.first.second;
        });
        std::vector<std::string> out;
        for (const auto& [k, c] : order) {
            if (out.size() >= limit)
                break;
            out.push_back("(" + c->to_string() + ")*" + monomial_string(k.first, k.second));
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& t : term_strings(terms_.size()))
            s += (s.empty() ? "" : " + ") + t;
        return s;
    }

private:
    K q_;
    int e_;
    int trunc_;
    Terms terms_;

    void same_ring(const QPlaneSeries& o) const
    {
        if (e_ != o.e_ || trunc_ != o.trunc_ || !(q_ == o.q_))
            throw std::invalid_argument("quantum plane series over different rings");
    }

    static std::string monomial_string(int m, int n)
    {
        std::string s;
        if (m)
            s += "x0" + (m > 1 ? "^" + std::to_string(m) : std::string());
        if (n)
            s += std::string(s.empty() ? "" : " ") + "x1" + (n > 1 ? "^" + std::to_string(n) : std::string());
        return s.empty() ? "1" : s;
    }
};

/// E_q(arg) = exp_q(arg / (q - 1)), truncated with arg.
template <class K>
QPlaneSeries<K> dilog_E(const K& q_param, const QPlaneSeries<K>& arg)
{
    if (!arg.coeff(0, 0).is_zero())
        throw std::invalid_argument("the dilogarithm argument must have zero constant term");
    return arg.substitute_into(qcalc::exp_q(arg.truncation(), q_param).scale_arg(K(1) / (q_param - K(1))));
}

} // namespace hallforge::qtorus
