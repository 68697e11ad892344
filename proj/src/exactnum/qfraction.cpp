#include "hallforge/exactnum/qfraction.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hallforge {

namespace {

using Poly = QFraction::Poly;

void trim(Poly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly add(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

Poly shift_up(const Poly& a, int k)
{
    if (a.empty() || k == 0)
        return a;
    Poly r(static_cast<size_t>(k), Rational(0));
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

// Divides a by the monic polynomial m if the division is exact.
bool try_divide_monic(const Poly& a, const Poly& m, Poly& quot)
{
    if (a.size() < m.size())
        return false;
    Poly rem = a;
    const size_t dm = m.size() - 1;
    quot.assign(a.size() - dm, Rational(0));
    for (size_t i = a.size(); i-- > dm;) {
        const Rational c = rem[i];
        if (c.is_zero())
            continue;
        quot[i - dm] = c;
        for (size_t j = 0; j <= dm; ++j)
            if (!m[j].is_zero())
                rem[i - dm + j] -= c * m[j];
    }
    for (size_t i = 0; i < dm; ++i)
        if (!rem[i].is_zero())
            return false;
    trim(quot);
    return true;
}

Poly power(const Poly& p, int e)
{
    Poly r{Rational(1)};
    for (int i = 0; i < e; ++i)
        r = mul(r, p);
    return r;
}

int phi_degree(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    if (n > 1)
        result -= result / n;
    return result;
}

} // namespace

const QFraction::Poly& QFraction::cyclotomic(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Poly>> cache;
    if (n < 1)
        throw std::invalid_argument("cyclotomic: index must be positive");
    {
        std::lock_guard lk(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return *it->second;
    }
    // q^n - 1 divided by Phi_d for the proper divisors d of n.
    Poly p(static_cast<size_t>(n) + 1, Rational(0));
    p[0] = Rational(-1);
    p[n] = Rational(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) {
            Poly quot;
            if (!try_divide_monic(p, cyclotomic(d), quot))
                throw std::logic_error("cyclotomic: inexact division");
            p = std::move(quot);
        }
    std::lock_guard lk(mu);
    auto [it, inserted] = cache.try_emplace(n, std::make_unique<Poly>(std::move(p)));
    return *it->second;
}

QFraction::QFraction(long c)
{
    if (c != 0)
        num_.push_back(Rational(c));
}

QFraction::QFraction(const Rational& c)
{
    if (!c.is_zero())
        num_.push_back(c);
}

QFraction::QFraction(const LaurentPoly& p)
{
    if (p.is_zero())
        return;
    shift_ = p.min_exp();
    num_.assign(static_cast<size_t>(p.max_exp() - shift_) + 1, Rational(0));
    for (const auto& [e, c] : p.terms())
        num_[static_cast<size_t>(e - shift_)] = c;
}

void QFraction::normalize()
{
    trim(num_);
    if (num_.empty()) {
        shift_ = 0;
        den_.clear();
        return;
    }
    size_t low = 0;
    while (num_[low].is_zero())
        ++low;
    if (low > 0) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(low));
        shift_ += static_cast<int>(low);
    }
    for (auto it = den_.begin(); it != den_.end();) {
        const Poly& phi = cyclotomic(it->first);
        Poly quot;
        while (it->second > 0 && try_divide_monic(num_, phi, quot)) {
            num_ = std::move(quot);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

LaurentPoly QFraction::numerator() const
{
    LaurentPoly p;
    for (size_t i = 0; i < num_.size(); ++i)
        p.add_term(static_cast<int>(i) + shift_, num_[i]);
    return p;
}

LaurentPoly QFraction::denominator() const
{
    LaurentPoly d(1);
    for (const auto& [k, e] : den_) {
        const Poly& phi = cyclotomic(k);
        LaurentPoly f;
        for (size_t i = 0; i < phi.size(); ++i)
            f.add_term(static_cast<int>(i), phi[i]);
        d *= f.pow(e);
    }
    return d;
}

LaurentPoly QFraction::to_laurent() const
{
    if (!den_.empty())
        throw std::domain_error("QFraction: not a Laurent polynomial");
    return numerator();
}

QFraction& QFraction::operator+=(const QFraction& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    std::map<int, int> common = den_;
    for (const auto& [k, e] : o.den_)
        common[k] = std::max(common[k], e);
    auto lift = [&](const QFraction& f) {
        Poly n = f.num_;
        for (const auto& [k, e] : common) {
            auto it = f.den_.find(k);
            int have = it == f.den_.end() ? 0 : it->second;
            if (e > have)
                n = mul(n, power(cyclotomic(k), e - have));
        }
        return n;
    };
    const int s = std::min(shift_, o.shift_);
    Poly a = shift_up(lift(*this), shift_ - s);
    Poly b = shift_up(lift(o), o.shift_ - s);
    num_ = add(a, b);
    shift_ = s;
    den_ = std::move(common);
    normalize();
    return *this;
}

QFraction QFraction::operator-() const
{
    QFraction r = *this;
    for (auto& c : r.num_)
        c = -c;
    return r;
}

QFraction& QFraction::operator-=(const QFraction& o) { return *this += -o; }

QFraction& QFraction::operator*=(const QFraction& o)
{
    if (is_zero() || o.is_zero()) {
        *this = QFraction();
        return *this;
    }
    num_ = mul(num_, o.num_);
    shift_ += o.shift_;
    for (const auto& [k, e] : o.den_)
        den_[k] += e;
    normalize();
    return *this;
}

QFraction& QFraction::operator/=(const QFraction& o)
{
    if (o.is_zero())
        throw std::domain_error("QFraction: division by zero");
    // Factor the divisor's numerator into cyclotomic polynomials and a constant.
    Poly rest = o.num_;
    std::map<int, int> factors;
    const int bound = 6 * static_cast<int>(rest.size()) + 6;
    for (int k = 1; k <= bound && rest.size() > 1; ++k) {
        if (phi_degree(k) > static_cast<int>(rest.size()) - 1)
            continue;
        Poly quot;
        while (rest.size() > 1 && try_divide_monic(rest, cyclotomic(k), quot)) {
            rest = std::move(quot);
            ++factors[k];
        }
    }
    if (rest.size() != 1)
        throw std::domain_error("QFraction: divisor is not a product of cyclotomic factors");
    const Rational c = rest[0];
    Poly newnum = num_;
    for (auto& x : newnum)
        x /= c;
    for (const auto& [k, e] : o.den_)
        newnum = mul(newnum, power(cyclotomic(k), e));
    num_ = std::move(newnum);
    shift_ -= o.shift_;
    for (const auto& [k, e] : factors)
        den_[k] += e;
    normalize();
    return *this;
}

QFraction QFraction::pow(int e) const
{
    if (e < 0)
        return QFraction(1) / pow(-e);
    QFraction r(1), b = *this;
    while (e > 0) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational QFraction::specialize(const Rational& q_value) const
{
    Rational d = denominator().specialize(q_value);
    if (d.is_zero())
        throw std::domain_error("QFraction: pole at the specialization point");
    return numerator().specialize(q_value) / d;
}

std::string QFraction::to_string() const
{
    if (den_.empty())
        return numerator().to_string();
    return "(" + numerator().to_string() + ")/(" + denominator().to_string() + ")";
}

} // namespace hallforge
