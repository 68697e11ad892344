#pragma once

#include "hallforge/exactnum/scalar.hpp"
#include "hallforge/qcalc/qnumbers.hpp"
#include "hallforge/repfield/quiver.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace hallforge::hallcore {

using repfield::DimVec;
using repfield::Multiplicities;

/// F^K_{M,N} for one fixed K: the quotient class M, the subobject class N, the count.
template <class K>
struct SubquotientTerm {
    Multiplicities quotient;
    Multiplicities sub;
    K count;
};

/// A finitary category presented by a finite list of indecomposables X_0, ..., X_{n-1}.
/// Isomorphism classes are multiplicity vectors over that list. Every X_i here has End = F_q
/// when it is a brick, and Hom/Ext dimensions are over that field.
template <class D>
class FinitaryCategory {
public:
    using K = typename D::value_type;
    virtual ~FinitaryCategory() = default;

    virtual std::string name() const = 0;
    virtual const D& domain() const = 0;
    /// Number of simples; dimension vectors have this length.
    virtual int rank() const = 0;
    virtual int num_indecomposables() const = 0;
    virtual std::string label(int i) const = 0;
    virtual DimVec dim(int i) const = 0;
    /// Index of the simple at position v of the source order.
    virtual int simple_index(int v) const = 0;
    virtual int hom(int i, int j) const = 0;
    virtual int ext(int i, int j) const = 0;
    virtual bool hereditary() const = 0;
    virtual K aut(const Multiplicities& m) const = 0;
    /// Every (M, N, F^K_{M,N}) with F nonzero.
    virtual std::vector<SubquotientTerm<K>> subquotients(const Multiplicities& k) const = 0;

    K q() const { return domain().q(); }

    int index_of(const std::string& l) const
    {
        for (int i = 0; i < num_indecomposables(); ++i)
            if (label(i) == l)
                return i;
        throw std::invalid_argument("unknown indecomposable '" + l + "'");
    }

    Multiplicities unit(int i) const
    {
        Multiplicities m(static_cast<size_t>(num_indecomposables()), 0);
        m[i] = 1;
        return m;
    }

    Multiplicities zero_class() const { return Multiplicities(static_cast<size_t>(num_indecomposables()), 0); }

    DimVec dim_of(const Multiplicities& m) const
    {
        DimVec d(static_cast<size_t>(rank()), 0);
        for (int i = 0; i < num_indecomposables(); ++i)
            if (m[i]) {
                DimVec e = dim(i);
                for (int v = 0; v < rank(); ++v)
                    d[v] += m[i] * e[v];
            }
        return d;
    }

    bool is_simple(int i) const
    {
        DimVec e = dim(i);
        int total = 0;
        for (int x : e)
            total += x;
        return total == 1;
    }

    bool is_semisimple(const Multiplicities& m) const
    {
        for (int i = 0; i < num_indecomposables(); ++i)
            if (m[i] && !is_simple(i))
                return false;
        return true;
    }

    /// dim Hom(M, N) - dim Ext^1(M, N) for classes.
    int hom_minus_ext(const Multiplicities& m, const Multiplicities& n) const
    {
        int s = 0;
        for (int i = 0; i < num_indecomposables(); ++i)
            for (int j = 0; j < num_indecomposables(); ++j)
                if (m[i] && n[j])
                    s += m[i] * n[j] * (hom(i, j) - ext(i, j));
        return s;
    }

    int class_hom(const Multiplicities& m, const Multiplicities& n) const
    {
        int s = 0;
        for (int i = 0; i < num_indecomposables(); ++i)
            for (int j = 0; j < num_indecomposables(); ++j)
                s += m[i] * n[j] * hom(i, j);
        return s;
    }

    int class_ext(const Multiplicities& m, const Multiplicities& n) const
    {
        int s = 0;
        for (int i = 0; i < num_indecomposables(); ++i)
            for (int j = 0; j < num_indecomposables(); ++j)
                s += m[i] * n[j] * ext(i, j);
        return s;
    }

    /// Euler form on dimension vectors, from the simples. Meaningful for hereditary categories.
    int euler(const DimVec& a, const DimVec& b) const
    {
        int s = 0;
        for (int v = 0; v < rank(); ++v)
            for (int w = 0; w < rank(); ++w) {
                if (!a[v] || !b[w])
                    continue;
                int i = simple_index(v), j = simple_index(w);
                s += a[v] * b[w] * (hom(i, j) - ext(i, j));
            }
        return s;
    }

    std::string format(const Multiplicities& m) const
    {
        std::string out;
        for (int i = 0; i < num_indecomposables(); ++i) {
            if (!m[i])
                continue;
            if (!out.empty())
                out += "+";
            out += label(i);
            if (m[i] > 1)
                out += "^" + std::to_string(m[i]);
        }
        return out.empty() ? "0" : out;
    }

    Multiplicities parse(const std::string& text) const
    {
        Multiplicities m = zero_class();
        std::string s;
        for (char c : text)
            if (c != ' ')
                s += c;
        if (s == "0")
            return m;
        size_t start = 0;
        while (start <= s.size()) {
            size_t plus = s.find('+', start);
            std::string tok = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            if (tok.empty())
                throw std::invalid_argument("malformed class expression '" + text + "'");
            auto caret = tok.find('^');
            int mult = 1;
            if (caret != std::string::npos) {
                std::string e = tok.substr(caret + 1);
                if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw std::invalid_argument("bad multiplicity in '" + tok + "'");
                mult = std::stoi(e);
            }
            m[index_of(tok.substr(0, caret))] += mult;
            if (plus == std::string::npos)
                break;
            start = plus + 1;
        }
        return m;
    }

    /// All classes of the given dimension vector.
    virtual std::vector<Multiplicities> classes_of_dim(const DimVec& d) const
    {
        const int n = num_indecomposables();
        std::vector<DimVec> dims;
        for (int i = 0; i < n; ++i)
            dims.push_back(dim(i));
        std::vector<Multiplicities> out;
        Multiplicities m(static_cast<size_t>(n), 0);
        DimVec rest = d;
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }))
                    out.push_back(m);
                return;
            }
            int cap = 1 << 20;
            for (int v = 0; v < rank(); ++v)
                if (dims[i][v] > 0)
                    cap = std::min(cap, rest[v] / dims[i][v]);
            for (int k = 0; k <= cap; ++k) {
                m[i] = k;
                for (int v = 0; v < rank(); ++v)
                    rest[v] -= k * dims[i][v];
                self(self, i + 1);
                for (int v = 0; v < rank(); ++v)
                    rest[v] += k * dims[i][v];
            }
            m[i] = 0;
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Representations of a bound quiver over F_p, with brute-force Hall numbers. q is specialized to p.
class QuiverCategory : public FinitaryCategory<Specialized> {
public:
    QuiverCategory(std::string name, repfield::IndecomposableTable table);

    std::string name() const override { return name_; }
    const Specialized& domain() const override { return domain_; }
    int rank() const override { return table_.spec().num_vertices(); }
    int num_indecomposables() const override { return table_.size(); }
    std::string label(int i) const override { return table_.entry(i).label; }
    DimVec dim(int i) const override { return table_.entry(i).dim; }
    int simple_index(int v) const override { return simple_.at(static_cast<size_t>(v)); }
    int hom(int i, int j) const override { return table_.hom(i, j); }
    int ext(int i, int j) const override { return table_.ext(i, j); }
    bool hereditary() const override { return table_.spec().hereditary(); }
    Rational aut(const Multiplicities& m) const override;
    std::vector<SubquotientTerm<Rational>> subquotients(const Multiplicities& k) const override;

    const repfield::IndecomposableTable& table() const { return table_; }

private:
    std::string name_;
    repfield::IndecomposableTable table_;
    Specialized domain_;
    std::vector<int> simple_;
};

/// Finite-dimensional vector spaces over F_q: one indecomposable k, F^{k^{a+b}}_{k^a,k^b} = [a+b choose b]_q.
/// Closed forms make the symbolic domain available here.
template <class D>
class VectorSpaceCategory : public FinitaryCategory<D> {
public:
    using K = typename D::value_type;
    explicit VectorSpaceCategory(D domain) : domain_(std::move(domain)) {}

    std::string name() const override { return "single_vertex"; }
    const D& domain() const override { return domain_; }
    int rank() const override { return 1; }
    int num_indecomposables() const override { return 1; }
    std::string label(int) const override { return "k"; }
    DimVec dim(int) const override { return {1}; }
    int simple_index(int) const override { return 0; }
    int hom(int, int) const override { return 1; }
    int ext(int, int) const override { return 0; }
    bool hereditary() const override { return true; }
    K aut(const Multiplicities& m) const override { return domain_.lift(qcalc::gl_order(m[0])); }
    std::vector<SubquotientTerm<K>> subquotients(const Multiplicities& k) const override
    {
        std::vector<SubquotientTerm<K>> out;
        for (int b = 0; b <= k[0]; ++b)
            out.push_back({{k[0] - b}, {b}, domain_.lift(qcalc::q_binomial(k[0], b))});
        return out;
    }

private:
    D domain_;
};

} // namespace hallforge::hallcore
