#pragma once

#include "hallforge/hallcore/category.hpp"
#include "hallforge/qcalc/qseries.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hallforge::hallcore {

/// Finite sum of basis classes with coefficients in K. Zero coefficients are never stored.
template <class K>
struct HallElement {
    std::map<Multiplicities, K> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Multiplicities& m, const K& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    K coeff(const Multiplicities& m) const
    {
        auto it = terms.find(m);
        return it == terms.end() ? K(0) : it->second;
    }

    HallElement& operator+=(const HallElement& o)
    {
        for (const auto& [m, c] : o.terms)
            add(m, c);
        return *this;
    }
    HallElement& operator-=(const HallElement& o)
    {
        for (const auto& [m, c] : o.terms)
            add(m, -c);
        return *this;
    }
    friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
    friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
    friend HallElement operator*(const K& s, const HallElement& a)
    {
        HallElement r;
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : a.terms)
            r.terms.emplace(m, s * c);
        return r;
    }
    HallElement operator-() const { return K(-1) * *this; }
    friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms == b.terms; }
};

/// Sparse element of the N-fold tensor power, keyed by one class per factor.
template <class K, size_t N>
struct MultiTensor {
    std::map<std::array<Multiplicities, N>, K> terms;

    void add(const std::array<Multiplicities, N>& key, const K& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }
    MultiTensor& operator-=(const MultiTensor& o)
    {
        for (const auto& [k, c] : o.terms)
            add(k, -c);
        return *this;
    }
    friend MultiTensor operator-(MultiTensor a, const MultiTensor& b) { return a -= b; }
    friend bool operator==(const MultiTensor& a, const MultiTensor& b) { return a.terms == b.terms; }
};

template <class K>
using TensorElement = MultiTensor<K, 2>;

/// The Hall algebra of a category, truncated to dimension vectors <= a componentwise bound.
template <class D>
class HallAlgebra {
public:
    using K = typename D::value_type;
    using Elem = HallElement<K>;
    using Tensor = TensorElement<K>;

    HallAlgebra(std::shared_ptr<const FinitaryCategory<D>> cat, DimVec truncation)
        : cat_(std::move(cat)), trunc_(std::move(truncation)), cache_(std::make_shared<Cache>())
    {
        if (static_cast<int>(trunc_.size()) != cat_->rank())
            throw std::invalid_argument("truncation has the wrong length for " + cat_->name());
    }

    const FinitaryCategory<D>& category() const { return *cat_; }
    std::shared_ptr<const FinitaryCategory<D>> category_ptr() const { return cat_; }
    const DimVec& truncation() const { return trunc_; }
    K q() const { return cat_->q(); }
    K q_pow(int e) const { return cat_->domain().lift(LaurentPoly::q_pow(e)); }

    bool fits(const DimVec& d) const
    {
        for (size_t v = 0; v < d.size(); ++v)
            if (d[v] > trunc_[v])
                return false;
        return true;
    }

    int max_total_degree() const
    {
        int s = 0;
        for (int x : trunc_)
            s += x;
        return s;
    }

    /// All dimension vectors <= truncation, in lexicographic order.
    std::vector<DimVec> degrees() const
    {
        std::vector<DimVec> out;
        DimVec d(trunc_.size(), 0);
        while (true) {
            out.push_back(d);
            size_t v = d.size();
            while (v > 0) {
                --v;
                if (++d[v] <= trunc_[v])
                    break;
                d[v] = 0;
                if (v == 0) {
                    v = d.size() + 1;
                    break;
                }
            }
            if (v == d.size() + 1 || d.empty())
                break;
        }
        return out;
    }

    std::vector<Multiplicities> classes() const
    {
        std::vector<Multiplicities> out;
        for (const auto& d : degrees())
            for (auto& m : cat_->classes_of_dim(d))
                out.push_back(std::move(m));
        return out;
    }

    Elem zero() const { return {}; }
    Elem one() const { return basis(cat_->zero_class()); }
    Elem basis(const Multiplicities& m, const K& c = K(1)) const
    {
        Elem e;
        if (fits(cat_->dim_of(m)))
            e.add(m, c);
        return e;
    }
    Elem basis_of(const std::string& expr) const { return basis(cat_->parse(expr)); }

    Elem mul(const Elem& x, const Elem& y) const
    {
        Elem r;
        for (const auto& [m, a] : x.terms) {
            const DimVec dm = cat_->dim_of(m);
            for (const auto& [n, b] : y.terms) {
                DimVec d = cat_->dim_of(n);
                for (size_t v = 0; v < d.size(); ++v)
                    d[v] += dm[v];
                if (!fits(d))
                    continue;
                auto table = product_table(d);
                auto it = table->find({m, n});
                if (it == table->end())
                    continue;
                const K ab = a * b;
                for (const auto& [k, f] : it->second)
                    r.add(k, ab * f);
            }
        }
        return r;
    }

    Elem mul(const std::vector<Elem>& factors) const
    {
        Elem r = one();
        for (const auto& f : factors)
            r = mul(r, f);
        return r;
    }

    Elem power(const Elem& x, int n) const
    {
        Elem r = one();
        for (int i = 0; i < n && !r.is_zero(); ++i)
            r = mul(r, x);
        return r;
    }

    /// Inverse of c[0] + (positive degree), by the truncated geometric series.
    Elem inverse(const Elem& x) const
    {
        const K c0 = x.coeff(cat_->zero_class());
        if (c0.is_zero())
            throw std::domain_error("HallAlgebra::inverse: constant term is zero");
        const K inv0 = K(1) / c0;
        Elem u = inv0 * x - one(); // positive degree part
        Elem term = one(), sum = one();
        const Elem minus_u = -u;
        for (int i = 0; i < max_total_degree() + 1; ++i) {
            term = mul(term, minus_u);
            if (term.is_zero())
                break;
            sum += term;
        }
        return inv0 * sum;
    }

    /// x^{-1} y x y^{-1}.
    Elem commutator(const Elem& x, const Elem& y) const { return mul({inverse(x), y, x, inverse(y)}); }

    /// Sum of all classes whose indecomposable summands satisfy `keep`.
    Elem exp_where(const std::function<bool(int)>& keep) const
    {
        Elem r;
        for (const auto& m : classes()) {
            bool ok = true;
            for (int i = 0; i < cat_->num_indecomposables() && ok; ++i)
                ok = m[i] == 0 || keep(i);
            if (ok)
                r.add(m, K(1));
        }
        return r;
    }
    Elem exp_all() const
    {
        return exp_where([](int) { return true; });
    }
    /// exp_q([X_i]) as the sum of the classes X_i^{a}.
    Elem exp_of(int i) const
    {
        return exp_where([i](int j) { return j == i; });
    }

    /// Semisimple classes with coefficient prod_S (-1)^{[M:S]} |End S|^{binom([M:S], 2)}.
    Elem reineke_inverse() const
    {
        Elem r;
        for (const auto& m : classes()) {
            if (!cat_->is_semisimple(m))
                continue;
            K c(1);
            for (int i = 0; i < cat_->num_indecomposables(); ++i)
                if (m[i]) {
                    c = c * q_pow(static_cast<int>(qcalc::binom2(m[i])));
                    if (m[i] % 2)
                        c = -c;
                }
            r.add(m, c);
        }
        return r;
    }

    /// sum_k f_k x^k, cut off once the powers of x leave the truncation.
    Elem eval_series(const Elem& x, const qcalc::QSeries<K>& f) const
    {
        Elem r, pw = one();
        for (int k = 0; k <= f.order(); ++k) {
            if (k > 0)
                pw = mul(pw, x);
            if (pw.is_zero())
                break;
            if (!f[k].is_zero())
                r += f[k] * pw;
        }
        return r;
    }

    Elem degree_part(const Elem& x, const DimVec& d) const
    {
        Elem r;
        for (const auto& [m, c] : x.terms)
            if (cat_->dim_of(m) == d)
                r.terms.emplace(m, c);
        return r;
    }

    std::vector<std::string> support(const Elem& x, size_t limit = 10) const
    {
        std::vector<std::string> out;
        for (const auto& [m, c] : x.terms) {
            if (out.size() >= limit)
                break;
            out.push_back(cat_->format(m) + ": " + hallforge::to_string(c));
        }
        return out;
    }

    std::string to_string(const Elem& x) const
    {
        if (x.is_zero())
            return "0";
        std::string s;
        for (const auto& [m, c] : x.terms) {
            if (!s.empty())
                s += " + ";
            s += "(" + hallforge::to_string(c) + ")[" + cat_->format(m) + "]";
        }
        return s;
    }

    // ---- coproduct ----

    /// Delta([C]) = sum q^{<A,B>} |Aut A||Aut B|/|Aut C| F^C_{A,B} [A] (x) [B].
    Tensor coproduct(const Elem& x) const
    {
        Tensor r;
        for (const auto& [c, coef] : x.terms) {
            const K autc = cat_->aut(c);
            for (const auto& t : cat_->subquotients(c)) {
                const K w = q_pow(cat_->hom_minus_ext(t.quotient, t.sub)) * cat_->aut(t.quotient) *
                            cat_->aut(t.sub) / autc * t.count;
                r.add({t.quotient, t.sub}, coef * w);
            }
        }
        return r;
    }

    Tensor tensor(const Elem& a, const Elem& b) const
    {
        Tensor r;
        for (const auto& [m, x] : a.terms)
            for (const auto& [n, y] : b.terms)
                if (fits(sum_dims(m, n)))
                    r.add({m, n}, x * y);
        return r;
    }

    /// (a (x) b)(a' (x) b') = q^{<|a'|,|b|>} aa' (x) bb', truncated on the total degree.
    Tensor tensor_mul(const Tensor& x, const Tensor& y) const
    {
        Tensor r;
        for (const auto& [k1, c1] : x.terms)
            for (const auto& [k2, c2] : y.terms) {
                DimVec total = sum_dims(k1[0], k1[1]);
                DimVec more = sum_dims(k2[0], k2[1]);
                for (size_t v = 0; v < total.size(); ++v)
                    total[v] += more[v];
                if (!fits(total))
                    continue;
                const K twist = q_pow(cat_->euler(cat_->dim_of(k2[0]), cat_->dim_of(k1[1])));
                Elem left = mul(basis(k1[0]), basis(k2[0]));
                Elem right = mul(basis(k1[1]), basis(k2[1]));
                const K c = c1 * c2 * twist;
                for (const auto& [a, u] : left.terms)
                    for (const auto& [b, v] : right.terms)
                        r.add({a, b}, c * u * v);
            }
        return r;
    }

    std::vector<std::string> tensor_support(const Tensor& x, size_t limit = 10) const
    {
        std::vector<std::string> out;
        for (const auto& [k, c] : x.terms) {
            if (out.size() >= limit)
                break;
            out.push_back(cat_->format(k[0]) + " (x) " + cat_->format(k[1]) + ": " + hallforge::to_string(c));
        }
        return out;
    }

    DimVec sum_dims(const Multiplicities& a, const Multiplicities& b) const
    {
        DimVec d = cat_->dim_of(a), e = cat_->dim_of(b);
        for (size_t v = 0; v < d.size(); ++v)
            d[v] += e[v];
        return d;
    }

private:
    using Table = std::map<std::pair<Multiplicities, Multiplicities>, std::vector<std::pair<Multiplicities, K>>>;
    struct Cache {
        std::mutex mu;
        std::map<DimVec, std::shared_ptr<const Table>> tables;
    };

    // Structure constants for every K of degree d, keyed by (M, N). Built outside the lock;
    // a concurrent duplicate build is harmless because the first insert wins.
    std::shared_ptr<const Table> product_table(const DimVec& d) const
    {
        {
            std::lock_guard lk(cache_->mu);
            auto it = cache_->tables.find(d);
            if (it != cache_->tables.end())
                return it->second;
        }
        auto t = std::make_shared<Table>();
        for (const auto& k : cat_->classes_of_dim(d))
            for (const auto& s : cat_->subquotients(k))
                (*t)[{s.quotient, s.sub}].emplace_back(k, s.count);
        std::lock_guard lk(cache_->mu);
        return cache_->tables.emplace(d, std::move(t)).first->second;
    }

    std::shared_ptr<const FinitaryCategory<D>> cat_;
    DimVec trunc_;
    std::shared_ptr<Cache> cache_;
};

} // namespace hallforge::hallcore
