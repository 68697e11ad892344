#include "hallforge/rootcox/rootcox.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hallforge::rootcox {

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_q(const IntMatrix& m)
{
    QMatrix r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (long x : m[i])
            r[i].emplace_back(x);
    return r;
}

QMatrix q_inverse(QMatrix a)
{
    const size_t n = a.size();
    QMatrix inv(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const mpq_class piv = a[c][c];
        for (size_t k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (size_t r = 0; r < n; ++r)
            if (r != c && a[r][c] != 0) {
                const mpq_class f = a[r][c];
                for (size_t k = 0; k < n; ++k) {
                    a[r][k] -= f * a[c][k];
                    inv[r][k] -= f * inv[c][k];
                }
            }
    }
    return inv;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b)
{
    QMatrix r(a.size(), std::vector<mpq_class>(b.empty() ? 0 : b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

IntMatrix to_int(const QMatrix& m, const char* what)
{
    IntMatrix r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) {
            if (x.get_den() != 1)
                throw std::invalid_argument(std::string(what) + " is not integral");
            r[i].push_back(x.get_num().get_si());
        }
    return r;
}

IntMatrix transpose(const IntMatrix& m)
{
    IntMatrix t(m.empty() ? 0 : m[0].size(), std::vector<long>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

// Leading principal minors of the symmetrized form all positive.
bool symmetric_form_positive_definite(const ValuedGraphSpec& s)
{
    const int n = s.rank();
    QMatrix a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = s.euler[i][j] + s.euler[j][i];
    for (int c = 0; c < n; ++c) {
        if (a[c][c] <= 0)
            return false;
        for (int r = c + 1; r < n; ++r) {
            const mpq_class f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    return true;
}

} // namespace

void ValuedGraphSpec::validate() const
{
    const int n = rank();
    if (n == 0)
        throw std::invalid_argument("valued graph has rank 0");
    if (static_cast<int>(euler.size()) != n)
        throw std::invalid_argument("Euler matrix has the wrong number of rows");
    if (!names.empty() && static_cast<int>(names.size()) != n)
        throw std::invalid_argument("names do not match the rank");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(euler[i].size()) != n)
            throw std::invalid_argument("Euler matrix is not square");
        if (d[i] <= 0 || euler[i][i] != d[i])
            throw std::invalid_argument("diagonal of the Euler matrix must equal d_i > 0");
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (i > j && euler[i][j] != 0)
                throw std::invalid_argument("Euler matrix is not upper triangular: the order is not a source order");
            if (euler[i][j] > 0)
                throw std::invalid_argument("off-diagonal Euler entries must be <= 0");
            if (euler[i][j] % d[i] != 0 || euler[i][j] % d[j] != 0)
                throw std::invalid_argument("off-diagonal Euler entries must be divisible by d_i and d_j");
        }
    }
}

long ValuedGraphSpec::form(const DimVector& x, const DimVector& y) const
{
    long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += x[i] * euler[i][j] * y[j];
    return s;
}

ValuedGraphSpec ValuedGraphSpec::rank2(long a0, long a1, long d0, long d1)
{
    if (a0 <= 0 || a1 <= 0 || d0 <= 0 || d1 <= 0)
        throw std::invalid_argument("rank-2 parameters must be positive");
    if (a0 * d0 != a1 * d1)
        throw std::invalid_argument("rank-2 valuation needs a0*d0 == a1*d1");
    ValuedGraphSpec s;
    s.names = {"1", "0"};
    s.d = {d1, d0};
    s.euler = {{d1, -a0 * d0}, {0, d0}};
    s.validate();
    return s;
}

ValuedGraphSpec ValuedGraphSpec::from_quiver(const repfield::QuiverSpec& q)
{
    if (!q.hereditary())
        throw std::invalid_argument("from_quiver: quiver has relations");
    q.validate();
    ValuedGraphSpec s;
    s.names = q.vertices;
    const int n = q.num_vertices();
    s.d.assign(static_cast<size_t>(n), 1);
    s.euler.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        s.euler[i][i] = 1;
    for (const auto& a : q.arrows)
        s.euler[a.source][a.target] -= 1;
    s.validate();
    return s;
}

ValuedGraphSpec ValuedGraphSpec::from_json(const nlohmann::json& j)
{
    if (j.contains("a0"))
        return rank2(j.at("a0").get<long>(), j.at("a1").get<long>(), j.value("d0", 1L), j.value("d1", 1L));
    ValuedGraphSpec s;
    const int r = j.at("rank").get<int>();
    s.d = j.at("d").get<std::vector<long>>();
    s.euler = j.at("euler").get<IntMatrix>();
    if (j.contains("names"))
        s.names = j.at("names").get<std::vector<std::string>>();
    if (s.rank() != r)
        throw std::invalid_argument("rank does not match the length of d");
    s.validate();
    return s;
}

IntMatrix coxeter_matrix(const ValuedGraphSpec& spec)
{
    spec.validate();
    QMatrix c = to_q(spec.euler);
    QMatrix m = q_mul(q_inverse(c), to_q(transpose(spec.euler)));
    for (auto& row : m)
        for (auto& x : row)
            x = -x;
    return to_int(m, "Coxeter matrix");
}

DimVector apply(const IntMatrix& m, const DimVector& x)
{
    DimVector y(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            y[i] += m[i][j] * x[j];
    return y;
}

IntMatrix inverse_integral(const IntMatrix& m) { return to_int(q_inverse(to_q(m)), "inverse"); }

GammaBases gamma_bases(const ValuedGraphSpec& spec)
{
    spec.validate();
    const int n = spec.rank();
    // (gamma_{-i}, alpha_j) = d_i delta_ij  <=>  C^T gamma_{-i} = d_i e_i;  C gamma_i = d_i e_i.
    const QMatrix ct_inv = q_inverse(to_q(transpose(spec.euler)));
    const QMatrix c_inv = q_inverse(to_q(spec.euler));
    GammaBases g;
    for (int i = 0; i < n; ++i) {
        QMatrix e(n, std::vector<mpq_class>(1, 0));
        e[i][0] = spec.d[i];
        auto col = [&](const QMatrix& inv) {
            QMatrix v = q_mul(inv, e);
            DimVector out;
            for (const auto& row : v) {
                if (row[0].get_den() != 1)
                    throw std::invalid_argument("gamma vector is not integral");
                out.push_back(row[0].get_num().get_si());
            }
            return out;
        };
        g.minus.push_back(col(ct_inv));
        g.plus.push_back(col(c_inv));
    }
    return g;
}

bool in_positive_cone(const DimVector& x)
{
    return std::all_of(x.begin(), x.end(), [](long v) { return v >= 0; }) &&
           std::any_of(x.begin(), x.end(), [](long v) { return v > 0; });
}

bool in_negative_cone(const DimVector& x)
{
    DimVector y = x;
    for (auto& v : y)
        v = -v;
    return in_positive_cone(y);
}

GammaOrbits gamma_orbits(const ValuedGraphSpec& spec, int depth)
{
    const IntMatrix c = coxeter_matrix(spec);
    const IntMatrix c_inv = inverse_integral(c);
    const GammaBases g = gamma_bases(spec);
    GammaOrbits out;
    for (int i = 0; i < spec.rank(); ++i) {
        DimVector v = g.minus[i];
        int k = 0;
        for (; k <= depth && in_positive_cone(v); ++k) {
            out.minus.push_back({-1, i, k, v});
            v = rootcox::apply(c_inv, v);
        }
        if (k > depth)
            out.terminated = false;
        v = g.plus[i];
        k = 0;
        for (; k <= depth && in_positive_cone(v); ++k) {
            out.plus.push_back({1, i, k, v});
            v = rootcox::apply(c, v);
        }
        if (k > depth)
            out.terminated = false;
    }
    return out;
}

std::vector<DimVector> beta_sequence(long a0, long a1, int n_min, int n_max)
{
    if (n_min > n_max)
        return {};
    auto a = [&](long n) { return ((n % 2) + 2) % 2 == 0 ? a0 : a1; };
    std::map<int, DimVector> beta{{0, {1, 0}}, {-1, {0, -1}}};
    for (int n = 0; n < n_max; ++n) { // beta_{n+1} = a_n beta_n - beta_{n-1}
        const auto &b = beta.at(n), &p = beta.at(n - 1);
        beta[n + 1] = {a(n) * b[0] - p[0], a(n) * b[1] - p[1]};
    }
    for (int n = -1; n - 1 >= n_min; --n) { // beta_{n-1} = a_n beta_n - beta_{n+1}
        const auto &b = beta.at(n), &p = beta.at(n + 1);
        beta[n - 1] = {a(n) * b[0] - p[0], a(n) * b[1] - p[1]};
    }
    std::vector<DimVector> out;
    for (int n = n_min; n <= n_max; ++n)
        out.push_back(beta.at(n));
    return out;
}

Rational chebyshev_u(int n, const Rational& x)
{
    Rational prev(0), cur(1); // U_{-1}, U_0
    if (n >= 0) {
        for (int k = 0; k < n; ++k) {
            Rational next = Rational(2) * x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // Walk down: U_{m-1} = 2x U_m - U_{m+1}.
    Rational up = cur, here = prev; // U_0, U_{-1}
    for (int m = -1; m > n; --m) {
        Rational next = Rational(2) * x * here - up;
        up = here;
        here = next;
    }
    return here;
}

std::pair<Rational, Rational> chebyshev_lambda_mu(int n, long t)
{
    const Rational x = Rational(t, 2) - Rational(1);
    return {chebyshev_u(n - 1, x), chebyshev_u(n, x) + chebyshev_u(n - 1, x)};
}

namespace {
long floor_div2(long r) { return r >= 0 ? r / 2 : -((-r + 1) / 2); }
long as_long(const Rational& r)
{
    if (r.denominator() != 1)
        throw std::logic_error("Chebyshev value is not an integer");
    return r.numerator().get_si();
}
} // namespace

DimVector beta_closed_form(long a0, long a1, int r)
{
    const long t = a0 * a1;
    const int next = ((r + 1) % 2 + 2) % 2, self = (r % 2 + 2) % 2;
    const long a_next = next == 0 ? a0 : a1;
    const long lam = as_long(chebyshev_lambda_mu(static_cast<int>(floor_div2(r + 1)), t).first);
    const long mu = as_long(chebyshev_lambda_mu(static_cast<int>(floor_div2(r)), t).second);
    DimVector out{0, 0};
    out[next] += a_next * lam;
    out[self] += mu;
    return out;
}

std::pair<long, long> preproj_dims(const ValuedGraphSpec& spec, int i, int k, int j, int r)
{
    if (r < k)
        throw std::invalid_argument("preproj_dims needs r >= k");
    const IntMatrix c = coxeter_matrix(spec);
    const GammaBases g = gamma_bases(spec);
    auto power = [&](DimVector v, int e) { // c^e v, e <= 0 here
        const IntMatrix m = e < 0 ? inverse_integral(c) : c;
        for (int s = 0; s < std::abs(e); ++s)
            v = rootcox::apply(m, v);
        return v;
    };
    const long hom = spec.form(g.minus[i], power(g.minus[j], k - r));
    const long ext = r > k ? spec.form(g.minus[i], power(g.minus[j], k + 1 - r)) : 0;
    return {hom, ext};
}

std::string to_string(TypeVerdict v)
{
    switch (v) {
    case TypeVerdict::finite:
        return "finite";
    case TypeVerdict::infinite:
        return "infinite";
    case TypeVerdict::undecided:
        return "undecided";
    }
    return "undecided";
}

TypeVerdict classify_type(const ValuedGraphSpec& spec, int depth)
{
    const GammaOrbits o = gamma_orbits(spec, depth);
    if (o.terminated) {
        std::set<DimVector> minus, plus;
        for (const auto& e : o.minus)
            minus.insert(e.vec);
        for (const auto& e : o.plus)
            plus.insert(e.vec);
        return minus == plus ? TypeVerdict::finite : TypeVerdict::infinite;
    }
    // An unterminated orbit is conclusive only when the symmetrized form is not positive definite.
    return symmetric_form_positive_definite(spec) ? TypeVerdict::undecided : TypeVerdict::infinite;
}

bool finite_type_test(const ValuedGraphSpec& spec, int depth) { return classify_type(spec, depth) == TypeVerdict::finite; }

std::vector<GammaElement> normal_order(std::vector<GammaElement> elements)
{
    std::stable_sort(elements.begin(), elements.end(), [](const GammaElement& a, const GammaElement& b) {
        if (a.sign != b.sign)
            throw std::invalid_argument("normal_order: mixed Gamma_- and Gamma_+ elements");
        if (a.sign < 0) {
            if (a.level != b.level)
                return a.level < b.level;
            return a.index > b.index;
        }
        if (a.level != b.level)
            return a.level < b.level;
        return a.index < b.index;
    });
    return elements;
}

std::string format(const DimVector& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace hallforge::rootcox
