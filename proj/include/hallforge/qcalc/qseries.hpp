#pragma once

#include "hallforge/qcalc/qnumbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hallforge::qcalc {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N over a coefficient field K.
template <class K>
class QSeries {
public:
    explicit QSeries(int order = 0) : c_(static_cast<size_t>(check_order(order)) + 1, K(0)) {}
    QSeries(int order, std::vector<K> coeffs) : QSeries(order)
    {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
            c_[i] = std::move(coeffs[i]);
    }

    static QSeries one(int order)
    {
        QSeries s(order);
        s.c_[0] = K(1);
        return s;
    }
    /// The series c * x.
    static QSeries variable(int order, const K& c = K(1))
    {
        QSeries s(order);
        if (order >= 1)
            s.c_[1] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const K& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    K& operator[](int i) { return c_.at(static_cast<size_t>(i)); }
    const std::vector<K>& coefficients() const { return c_; }

    /// Drops coefficients above the new order.
    QSeries truncate(int order) const
    {
        if (order > this->order())
            throw std::invalid_argument("QSeries: cannot raise truncation order");
        return QSeries(order, std::vector<K>(c_.begin(), c_.begin() + order + 1));
    }

    QSeries& operator+=(const QSeries& o)
    {
        same_order(o);
        for (size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    QSeries& operator-=(const QSeries& o)
    {
        same_order(o);
        for (size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        a.same_order(b);
        QSeries r(a.order());
        const size_t n = a.c_.size();
        for (size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (size_t j = 0; i + j < n; ++j)
                if (!b.c_[j].is_zero())
                    r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend QSeries operator*(const K& s, QSeries a)
    {
        for (auto& c : a.c_)
            c *= s;
        return a;
    }
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

    /// Multiplicative inverse; the constant term must be invertible.
    QSeries inverse() const
    {
        if (c_[0].is_zero())
            throw std::domain_error("QSeries: constant term is not invertible");
        QSeries r(order());
        const K inv0 = K(1) / c_[0];
        r.c_[0] = inv0;
        for (size_t n = 1; n < c_.size(); ++n) {
            K acc(0);
            for (size_t k = 1; k <= n; ++k)
                if (!c_[k].is_zero())
                    acc += c_[k] * r.c_[n - k];
            r.c_[n] = -(acc * inv0);
        }
        return r;
    }

    /// f(c x).
    QSeries scale_arg(const K& c) const
    {
        QSeries r = *this;
        K p(1);
        for (auto& x : r.c_) {
            x *= p;
            p *= c;
        }
        return r;
    }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (!x.is_zero())
                return false;
        return true;
    }

private:
    static int check_order(int order)
    {
        if (order < 0)
            throw std::invalid_argument("QSeries: negative truncation order");
        return order;
    }
    void same_order(const QSeries& o) const
    {
        if (o.order() != order())
            throw std::invalid_argument("QSeries: truncation orders differ");
    }

    std::vector<K> c_;
};

/// The divided q-derivative D^{(j)}: x^a -> qbinom(a, j) x^{a-j}. Output order drops by j.
template <class K>
QSeries<K> q_derivative(const QSeries<K>& f, int j, const K& q)
{
    if (j < 0 || j > f.order())
        throw std::invalid_argument("q_derivative: j exceeds the truncation order");
    QSeries<K> r(f.order() - j);
    for (int a = j; a <= f.order(); ++a)
        if (!f[a].is_zero())
            r[a - j] = q_binomial_at(a, j, q) * f[a];
    return r;
}

/// exp_q(x) = sum x^n / [n]_q!.
template <class K>
QSeries<K> exp_q(int order, const K& q)
{
    QSeries<K> s(order);
    K fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            fact *= q_int_at(n, q);
        s[n] = K(1) / fact;
    }
    return s;
}

/// Phi_nu(t, q) from its product form.
template <class K>
QSeries<K> phi_nu(int nu, int order, const K& q)
{
    auto one = QSeries<K>::one(order);
    QSeries<K> r = one;
    const K qm1 = q - K(1);
    if (nu >= 0) {
        for (int r_ = 0; r_ < nu; ++r_)
            r = r * (one + QSeries<K>::variable(order, q.pow(r_) * qm1));
    } else {
        for (int r_ = 1; r_ <= -nu; ++r_)
            r = r * (one + QSeries<K>::variable(order, q.pow(-r_) * qm1)).inverse();
    }
    return r;
}

template <class K>
bool check_q_leibniz(const QSeries<K>& f, const QSeries<K>& g, int j, const K& q)
{
    const int n = f.order();
    if (g.order() != n)
        throw std::invalid_argument("check_q_leibniz: truncation orders differ");
    const QSeries<K> lhs = q_derivative(f * g, j, q);
    QSeries<K> rhs(n - j);
    for (int s = 0; s <= j; ++s) {
        QSeries<K> a = q_derivative(f, j - s, q).scale_arg(q.pow(s)).truncate(n - j);
        QSeries<K> b = q_derivative(g, s, q).truncate(n - j);
        rhs += a * b;
    }
    return lhs == rhs;
}

template <class K>
bool check_phi_definition(int nu, int order, const K& q)
{
    const auto e = exp_q<K>(order, q);
    return e.inverse() * e.scale_arg(q.pow(nu)) == phi_nu<K>(nu, order, q);
}

/// Both product/sum expansions: prod_{r<=n}(1+q^r t) and prod_{r<=n} 1/(1-q^r t).
template <class K>
bool check_well_known(int n, int order, const K& q)
{
    auto one = QSeries<K>::one(order);
    QSeries<K> prod_plus = one, prod_minus = one;
    for (int r = 0; r <= n; ++r) {
        prod_plus = prod_plus * (one + QSeries<K>::variable(order, q.pow(r)));
        prod_minus = prod_minus * (one - QSeries<K>::variable(order, q.pow(r))).inverse();
    }
    QSeries<K> sum_plus(order), sum_minus(order);
    for (int s = 0; s <= order; ++s) {
        sum_plus[s] = q.pow(static_cast<int>(binom2(s))) * q_binomial_at(n + 1, s, q);
        sum_minus[s] = q_binomial_at(s + n, s, q);
    }
    return prod_plus == sum_plus && prod_minus == sum_minus;
}

} // namespace hallforge::qcalc
