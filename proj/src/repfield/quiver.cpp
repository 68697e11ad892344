#include "hallforge/repfield/quiver.hpp"

#include "hallforge/caps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallforge::repfield {

int QuiverSpec::vertex_index(const std::string& v) const
{
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i] == v)
            return i;
    throw std::invalid_argument("unknown vertex '" + v + "'");
}

int QuiverSpec::arrow_index(const std::string& label) const
{
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label)
            return static_cast<int>(i);
    throw std::invalid_argument("unknown arrow '" + label + "'");
}

void QuiverSpec::validate() const
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (vertices.empty())
        throw std::invalid_argument("quiver has no vertices");
    const int nv = num_vertices();
    for (const auto& a : arrows) {
        if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
            throw std::invalid_argument("arrow '" + a.label + "' has an endpoint outside the vertex list");
        if (a.source >= a.target)
            throw std::invalid_argument("arrow '" + a.label + "' breaks the source order of the vertex list");
    }
    for (const auto& rel : relations) {
        if (rel.empty())
            throw std::invalid_argument("empty relation");
        int start = -1, end = -1;
        for (const auto& term : rel) {
            if (term.path.empty())
                throw std::invalid_argument("relation term with an empty path");
            for (int a : term.path)
                if (a < 0 || a >= static_cast<int>(arrows.size()))
                    throw std::invalid_argument("relation refers to an unknown arrow");
            for (size_t i = 0; i + 1 < term.path.size(); ++i)
                if (arrows[term.path[i]].target != arrows[term.path[i + 1]].source)
                    throw std::invalid_argument("relation path is not composable");
            int s = arrows[term.path.front()].source, t = arrows[term.path.back()].target;
            if (start < 0) {
                start = s;
                end = t;
            } else if (s != start || t != end) {
                throw std::invalid_argument("relation terms have different endpoints");
            }
        }
    }
}

int QuiverSpec::euler(const DimVec& a, const DimVec& b) const
{
    int r = 0;
    for (int v = 0; v < num_vertices(); ++v)
        r += a[v] * b[v];
    for (const auto& ar : arrows)
        r -= a[ar.source] * b[ar.target];
    return r;
}

int Representation::total_dim() const
{
    int s = 0;
    for (int d : dims)
        s += d;
    return s;
}

void check_shape(const QuiverSpec& spec, const Representation& r)
{
    if (static_cast<int>(r.dims.size()) != spec.num_vertices())
        throw std::invalid_argument("representation has the wrong number of vertices");
    if (r.maps.size() != spec.arrows.size())
        throw std::invalid_argument("representation has the wrong number of arrow maps");
    for (size_t a = 0; a < spec.arrows.size(); ++a) {
        const auto& ar = spec.arrows[a];
        if (r.maps[a].rows != r.dims[ar.target] || r.maps[a].cols != r.dims[ar.source])
            throw std::invalid_argument("map for arrow '" + ar.label + "' has the wrong shape");
    }
}

Representation zero_representation(const QuiverSpec& spec)
{
    Representation r;
    r.dims.assign(static_cast<size_t>(spec.num_vertices()), 0);
    r.maps.assign(spec.arrows.size(), FpMatrix());
    return r;
}

Representation direct_sum(const Representation& x, const Representation& y)
{
    Representation r;
    r.dims.resize(x.dims.size());
    for (size_t v = 0; v < x.dims.size(); ++v)
        r.dims[v] = x.dims[v] + y.dims[v];
    for (size_t a = 0; a < x.maps.size(); ++a) {
        const FpMatrix& A = x.maps[a];
        const FpMatrix& B = y.maps[a];
        FpMatrix m(A.rows + B.rows, A.cols + B.cols);
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j)
                m(i, j) = A(i, j);
        for (int i = 0; i < B.rows; ++i)
            for (int j = 0; j < B.cols; ++j)
                m(A.rows + i, A.cols + j) = B(i, j);
        r.maps.push_back(std::move(m));
    }
    return r;
}

FpMatrix evaluate_path(const QuiverSpec& spec, const Representation& r, const std::vector<int>& path)
{
    FpMatrix m = FpMatrix::identity(r.dims[spec.arrows[path.front()].source]);
    for (int a : path)
        m = mul(r.maps[a], m, spec.p);
    return m;
}

bool satisfies_relations(const QuiverSpec& spec, const Representation& r)
{
    for (const auto& rel : spec.relations) {
        const auto& first = rel.front().path;
        FpMatrix acc(r.dims[spec.arrows[first.back()].target], r.dims[spec.arrows[first.front()].source]);
        for (const auto& term : rel) {
            FpMatrix m = evaluate_path(spec, r, term.path);
            for (size_t i = 0; i < acc.a.size(); ++i)
                acc.a[i] = ((acc.a[i] + term.coefficient * m.a[i]) % spec.p + spec.p) % spec.p;
        }
        if (!acc.is_zero())
            return false;
    }
    return true;
}

Representation conjugate(const QuiverSpec& spec, const Representation& r, const std::vector<FpMatrix>& g)
{
    Representation out = r;
    for (size_t a = 0; a < spec.arrows.size(); ++a) {
        const auto& ar = spec.arrows[a];
        out.maps[a] = mul(mul(g[ar.target], r.maps[a], spec.p), inverse(g[ar.source], spec.p), spec.p);
    }
    return out;
}

FpMatrix intertwiner_map(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    const int nv = spec.num_vertices();
    std::vector<int> off(static_cast<size_t>(nv) + 1, 0);
    for (int v = 0; v < nv; ++v)
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    int rows = 0;
    for (const auto& ar : spec.arrows)
        rows += n.dims[ar.target] * m.dims[ar.source];
    FpMatrix d(rows, off[nv]);
    const int p = spec.p;
    int row = 0;
    for (size_t a = 0; a < spec.arrows.size(); ++a) {
        const int s = spec.arrows[a].source, t = spec.arrows[a].target;
        const FpMatrix& Na = n.maps[a];
        const FpMatrix& Ma = m.maps[a];
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j, ++row) {
                // (N_a f_s)(i,j) = sum_k N_a(i,k) f_s(k,j)
                for (int k = 0; k < n.dims[s]; ++k) {
                    int col = off[s] + k * m.dims[s] + j;
                    d(row, col) = (d(row, col) + Na(i, k)) % p;
                }
                // (f_t M_a)(i,j) = sum_k f_t(i,k) M_a(k,j)
                for (int k = 0; k < m.dims[t]; ++k) {
                    int col = off[t] + i * m.dims[t] + k;
                    d(row, col) = (d(row, col) - Ma(k, j) + p) % p;
                }
            }
    }
    return d;
}

int hom_dim(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    FpMatrix d = intertwiner_map(spec, m, n);
    return d.cols - rank(d, spec.p);
}

FpMatrix hom_basis(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    return nullspace(intertwiner_map(spec, m, n), spec.p);
}

namespace {

// Cocycle coordinates zeta_a(i,j) in the row order of intertwiner_map, placed in the
// upper-right block of E = [[N, zeta], [0, M]].
struct CocycleSlot {
    int arrow, row, col;
};

std::vector<CocycleSlot> cocycle_slots(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    std::vector<CocycleSlot> slots;
    for (size_t a = 0; a < spec.arrows.size(); ++a) {
        const int s = spec.arrows[a].source, t = spec.arrows[a].target;
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j)
                slots.push_back({static_cast<int>(a), i, n.dims[s] + j});
    }
    return slots;
}

// Relations evaluated on E_zeta are linear in zeta (one zeta factor per path); one column per slot.
FpMatrix relation_constraints(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    auto slots = cocycle_slots(spec, m, n);
    const Representation base = direct_sum(n, m);
    std::vector<std::vector<int>> cols;
    for (const auto& sl : slots) {
        Representation e = base;
        e.maps[sl.arrow](sl.row, sl.col) = 1;
        std::vector<int> col;
        for (const auto& rel : spec.relations) {
            const int s = spec.arrows[rel.front().path.front()].source;
            const int t = spec.arrows[rel.front().path.back()].target;
            FpMatrix acc(e.dims[t], e.dims[s]);
            for (const auto& term : rel) {
                FpMatrix x = evaluate_path(spec, e, term.path);
                for (size_t i = 0; i < acc.a.size(); ++i)
                    acc.a[i] = ((acc.a[i] + term.coefficient * x.a[i]) % spec.p + spec.p) % spec.p;
            }
            for (int i = 0; i < n.dims[t]; ++i)
                for (int j = 0; j < m.dims[s]; ++j)
                    col.push_back(acc(i, n.dims[s] + j));
        }
        cols.push_back(std::move(col));
    }
    const int rows = cols.empty() ? 0 : static_cast<int>(cols.front().size());
    FpMatrix c(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i)
            c(i, static_cast<int>(j)) = cols[j][i];
    return c;
}

int ext_from(const QuiverSpec& spec, const Representation& m, const Representation& n, const FpMatrix& delta)
{
    int cocycles = delta.rows;
    if (!spec.hereditary())
        cocycles -= rank(relation_constraints(spec, m, n), spec.p);
    return cocycles - rank(delta, spec.p);
}

} // namespace

int ext_dim_cocycle(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    return ext_from(spec, m, n, intertwiner_map(spec, m, n));
}

int ext_dim_euler(const QuiverSpec& spec, const Representation& m, const Representation& n)
{
    if (!spec.hereditary())
        throw std::logic_error("ext_dim_euler: Euler form route needs a hereditary quiver");
    return hom_dim(spec, m, n) - spec.euler(m.dims, n.dims);
}

mpz_class gl_order(int n, int p)
{
    mpz_class r = 1, pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    mpz_class pk = 1;
    for (int k = 0; k < n; ++k) {
        r *= pn - pk;
        pk *= p;
    }
    return r;
}

mpz_class aut_order_bruteforce(const QuiverSpec& spec, const Representation& m)
{
    const int p = spec.p;
    FpMatrix basis = hom_basis(spec, m, m);
    const int d = basis.rows;
    caps::require(d <= caps::brute_force_dim(p),
                  "End dimension " + std::to_string(d) + " exceeds the brute-force cap");
    const int nv = spec.num_vertices();
    std::vector<int> off(static_cast<size_t>(nv) + 1, 0);
    for (int v = 0; v < nv; ++v)
        off[v + 1] = off[v] + m.dims[v] * m.dims[v];

    std::vector<int> cur(static_cast<size_t>(basis.cols), 0);
    std::vector<int> digits(static_cast<size_t>(d), 0);
    std::vector<FpMatrix> blocks;
    for (int v = 0; v < nv; ++v)
        blocks.emplace_back(m.dims[v], m.dims[v]);
    mpz_class count = 0;
    while (true) {
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            std::copy(cur.begin() + off[v], cur.begin() + off[v + 1], blocks[v].a.begin());
            ok = rank(blocks[v], p) == m.dims[v];
        }
        if (ok)
            ++count;
        // Odometer step: each digit that moves adds its basis vector once (mod p).
        int i = 0;
        for (; i < d; ++i) {
            for (int c = 0; c < basis.cols; ++c)
                cur[c] = (cur[c] + basis(i, c)) % p;
            if (++digits[i] < p)
                break;
            digits[i] = 0;
        }
        if (i == d)
            break;
    }
    return count;
}

IndecomposableTable::IndecomposableTable(QuiverSpec spec, std::vector<Indecomposable> entries)
    : spec_(std::move(spec)), entries_(std::move(entries))
{
    spec_.validate();
    for (const auto& e : entries_) {
        check_shape(spec_, e.rep);
        if (e.rep.dims != e.dim)
            throw std::invalid_argument("indecomposable '" + e.label + "' has inconsistent dimension vector");
        if (!satisfies_relations(spec_, e.rep))
            throw std::invalid_argument("indecomposable '" + e.label + "' violates a relation");
    }
    const int n = size();
    hom_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    ext_ = hom_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FpMatrix d = intertwiner_map(spec_, entries_[i].rep, entries_[j].rep);
            hom_[i][j] = d.cols - rank(d, spec_.p);
            ext_[i][j] = ext_from(spec_, entries_[i].rep, entries_[j].rep, d);
        }
}

int IndecomposableTable::index_of(const std::string& label) const
{
    for (int i = 0; i < size(); ++i)
        if (entries_[i].label == label)
            return i;
    throw std::invalid_argument("unknown indecomposable '" + label + "'");
}

DimVec IndecomposableTable::dim_of(const Multiplicities& m) const
{
    DimVec d(static_cast<size_t>(spec_.num_vertices()), 0);
    for (int i = 0; i < size(); ++i)
        for (int v = 0; v < spec_.num_vertices(); ++v)
            d[v] += m[i] * entries_[i].dim[v];
    return d;
}

Representation IndecomposableTable::realize(const Multiplicities& m) const
{
    Representation r = zero_representation(spec_);
    for (int i = 0; i < size(); ++i)
        for (int k = 0; k < m[i]; ++k)
            r = direct_sum(r, entries_[i].rep);
    return r;
}

Multiplicities IndecomposableTable::unit(int i) const
{
    Multiplicities m(static_cast<size_t>(size()), 0);
    m[i] = 1;
    return m;
}

namespace {

// Inverse of a square integer matrix over Q; empty result if singular.
std::vector<std::vector<mpq_class>> rational_inverse(const std::vector<std::vector<int>>& h)
{
    const size_t n = h.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            a[i][j] = h[i][j];
        a[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == n)
            return {};
        std::swap(a[piv], a[c]);
        mpq_class inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            mpq_class f = a[r][c];
            for (size_t k = 0; k < 2 * n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

} // namespace

Multiplicities IndecomposableTable::decompose(const Representation& x) const
{
    check_shape(spec_, x);
    const int n = size();
    auto attempt = [&](const std::vector<int>& idx) -> std::optional<Multiplicities> {
        std::shared_ptr<const std::vector<std::vector<mpq_class>>> solver;
        {
            std::lock_guard lk(solvers_->mu);
            auto it = solvers_->inverses.find(idx);
            if (it != solvers_->inverses.end())
                solver = it->second;
        }
        if (!solver) {
            std::vector<std::vector<int>> h(idx.size(), std::vector<int>(idx.size()));
            for (size_t a = 0; a < idx.size(); ++a)
                for (size_t b = 0; b < idx.size(); ++b)
                    h[a][b] = hom_[idx[a]][idx[b]];
            solver = std::make_shared<const std::vector<std::vector<mpq_class>>>(rational_inverse(h));
            std::lock_guard lk(solvers_->mu);
            solvers_->inverses.emplace(idx, solver);
        }
        if (solver->empty() && !idx.empty())
            return std::nullopt;
        // b_i = dim Hom(X_i, X) = sum_j hom(X_i, X_j) m_j
        std::vector<int> b(idx.size());
        for (size_t a = 0; a < idx.size(); ++a)
            b[a] = hom_dim(spec_, entries_[idx[a]].rep, x);
        Multiplicities m(static_cast<size_t>(n), 0);
        for (size_t a = 0; a < idx.size(); ++a) {
            mpq_class s = 0;
            for (size_t c = 0; c < idx.size(); ++c)
                s += (*solver)[a][c] * b[c];
            if (s.get_den() != 1 || s < 0)
                return std::nullopt;
            m[idx[a]] = static_cast<int>(s.get_num().get_si());
        }
        if (dim_of(m) != x.dims)
            return std::nullopt;
        return m;
    };

    // Only indecomposables whose dimension vector fits inside x can occur as summands.
    std::vector<int> fit;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int v = 0; v < spec_.num_vertices(); ++v)
            ok = ok && entries_[i].dim[v] <= x.dims[v];
        if (ok)
            fit.push_back(i);
    }
    if (auto m = attempt(fit))
        return *m;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        all[i] = i;
    if (auto m = attempt(all))
        return *m;
    throw std::logic_error("decompose: representation is not a sum of the listed indecomposables");
}

std::string IndecomposableTable::format(const Multiplicities& m) const
{
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        out += entries_[i].label;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "0" : out;
}

Multiplicities IndecomposableTable::parse(const std::string& text) const
{
    Multiplicities m(static_cast<size_t>(size()), 0);
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t')
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty class expression");
    if (s == "0")
        return m;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok.empty())
            throw std::invalid_argument("malformed class expression '" + text + "'");
        int mult = 1;
        auto caret = tok.find('^');
        std::string label = tok.substr(0, caret);
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("bad multiplicity in '" + tok + "'");
            mult = std::stoi(e);
        }
        m[index_of(label)] += mult;
    }
    return m;
}

std::optional<mpz_class> IndecomposableTable::aut_order_formula(const Multiplicities& m) const
{
    const int n = size();
    long end_dim = 0, diag = 0;
    for (int i = 0; i < n; ++i) {
        if (m[i] == 0)
            continue;
        if (hom_[i][i] != 1)
            return std::nullopt;
        for (int j = 0; j < i; ++j)
            if (m[j] > 0 && hom_[i][j] > 0 && hom_[j][i] > 0)
                return std::nullopt;
        diag += static_cast<long>(m[i]) * m[i];
        for (int j = 0; j < n; ++j)
            end_dim += static_cast<long>(m[i]) * m[j] * hom_[i][j];
    }
    mpz_class r = 1;
    for (int i = 0; i < n; ++i)
        if (m[i] > 0)
            r *= gl_order(m[i], spec_.p);
    mpz_class rad;
    mpz_ui_pow_ui(rad.get_mpz_t(), static_cast<unsigned long>(spec_.p), static_cast<unsigned long>(end_dim - diag));
    return r * rad;
}

mpz_class IndecomposableTable::aut_order(const Multiplicities& m) const
{
    long end_dim = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            end_dim += static_cast<long>(m[i]) * m[j] * hom_[i][j];
    if (end_dim <= caps::brute_force_dim(spec_.p))
        return aut_order_bruteforce(spec_, realize(m));
    if (auto f = aut_order_formula(m))
        return *f;
    throw CapExceeded("automorphism group of " + format(m) + " is beyond the brute-force cap");
}

std::vector<Multiplicities> classes_of_dim(const IndecomposableTable& t, const DimVec& d)
{
    const int n = t.size();
    const int nv = t.spec().num_vertices();
    std::vector<Multiplicities> out;
    Multiplicities m(static_cast<size_t>(n), 0);
    DimVec rest = d;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }))
                out.push_back(m);
            return;
        }
        const DimVec& e = t.entry(i).dim;
        int cap = 1 << 20;
        for (int v = 0; v < nv; ++v)
            if (e[v] > 0)
                cap = std::min(cap, rest[v] / e[v]);
        for (int k = 0; k <= cap; ++k) {
            m[i] = k;
            for (int v = 0; v < nv; ++v)
                rest[v] -= k * e[v];
            self(self, i + 1);
            for (int v = 0; v < nv; ++v)
                rest[v] += k * e[v];
        }
        m[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long ext_classes_with_middle(const IndecomposableTable& t, const Multiplicities& m, const Multiplicities& n,
                             const Multiplicities& k)
{
    const QuiverSpec& spec = t.spec();
    if (!spec.hereditary())
        throw std::logic_error("ext_classes_with_middle: needs a hereditary quiver");
    const int p = spec.p;
    Representation M = t.realize(m), N = t.realize(n);
    {
        DimVec dk = t.dim_of(k), dm = t.dim_of(m), dn = t.dim_of(n);
        for (size_t v = 0; v < dk.size(); ++v)
            if (dk[v] != dm[v] + dn[v])
                return 0;
    }
    FpMatrix delta = intertwiner_map(spec, M, N);
    const int z = delta.rows;
    caps::require(z <= caps::brute_force_dim(p),
                  "cocycle space dimension " + std::to_string(z) + " exceeds the brute-force cap");

    // E_zeta has E_a = [[N_a, zeta_a], [0, M_a]] with zeta_a : M_s -> N_t.
    Representation E = direct_sum(N, M);
    const auto slots = cocycle_slots(spec, M, N);
    std::vector<int> digits(static_cast<size_t>(z), 0);
    long hits = 0;
    while (true) {
        for (int i = 0; i < z; ++i)
            E.maps[slots[i].arrow](slots[i].row, slots[i].col) = digits[i];
        if (t.decompose(E) == k)
            ++hits;
        int i = 0;
        while (i < z && ++digits[i] == p)
            digits[i++] = 0;
        if (i == z)
            break;
    }
    long boundary = 1;
    for (int r = rank(delta, p); r > 0; --r)
        boundary *= p;
    if (hits % boundary != 0)
        throw std::logic_error("ext_classes_with_middle: cocycle count not divisible by coboundaries");
    return hits / boundary;
}

namespace {

struct Subspace {
    const FpMatrix* basis;
    std::vector<int> pivots;
    std::vector<int> free;
};

std::vector<Subspace> subspace_list(int n, int p)
{
    std::vector<Subspace> out;
    for (const auto& b : all_subspaces(n, p)) {
        Subspace s{&b, {}, {}};
        std::vector<bool> is_piv(static_cast<size_t>(n), false);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < n; ++c)
                if (b(r, c) != 0) {
                    s.pivots.push_back(c);
                    is_piv[c] = true;
                    break;
                }
        for (int c = 0; c < n; ++c)
            if (!is_piv[c])
                s.free.push_back(c);
        out.push_back(std::move(s));
    }
    return out;
}

// Reduce w modulo the row space of an RREF basis.
void reduce(std::vector<int>& w, const Subspace& u, int p)
{
    for (size_t r = 0; r < u.pivots.size(); ++r) {
        int c = w[u.pivots[r]];
        if (c == 0)
            continue;
        for (int j = 0; j < u.basis->cols; ++j)
            w[j] = ((w[j] - c * (*u.basis)(static_cast<int>(r), j)) % p + p) % p;
    }
}

std::vector<int> apply(const FpMatrix& a, const std::vector<int>& x, int p)
{
    std::vector<int> y(static_cast<size_t>(a.rows), 0);
    for (int i = 0; i < a.rows; ++i) {
        int s = 0;
        for (int j = 0; j < a.cols; ++j)
            s += a(i, j) * x[j];
        y[i] = s % p;
    }
    return y;
}

std::vector<int> serialize(const Representation& r)
{
    std::vector<int> key(r.dims);
    for (const auto& m : r.maps)
        key.insert(key.end(), m.a.begin(), m.a.end());
    return key;
}

} // namespace

SubquotientCensus census(const IndecomposableTable& t, const Representation& k)
{
    const QuiverSpec& spec = t.spec();
    const int p = spec.p;
    const int nv = spec.num_vertices();
    check_shape(spec, k);
    caps::require(k.total_dim() <= caps::subspace_total_dim(p),
                  "total dimension " + std::to_string(k.total_dim()) + " exceeds the subspace enumeration cap");

    std::vector<std::vector<Subspace>> lists;
    for (int v = 0; v < nv; ++v)
        lists.push_back(subspace_list(k.dims[v], p));
    // Arrows to test once both endpoints are chosen.
    std::vector<std::vector<int>> closing(static_cast<size_t>(nv));
    for (size_t a = 0; a < spec.arrows.size(); ++a)
        closing[std::max(spec.arrows[a].source, spec.arrows[a].target)].push_back(static_cast<int>(a));

    std::map<std::vector<int>, Multiplicities> memo;
    auto classify = [&](const Representation& r) {
        auto key = serialize(r);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        Multiplicities m = t.decompose(r);
        memo.emplace(std::move(key), m);
        return m;
    };

    SubquotientCensus out;
    std::vector<const Subspace*> pick(static_cast<size_t>(nv), nullptr);

    auto invariant = [&](int a) {
        const int s = spec.arrows[a].source, tg = spec.arrows[a].target;
        const Subspace& us = *pick[s];
        for (int r = 0; r < us.basis->rows; ++r) {
            std::vector<int> row(us.basis->a.begin() + static_cast<long>(r) * us.basis->cols,
                                 us.basis->a.begin() + static_cast<long>(r + 1) * us.basis->cols);
            std::vector<int> w = apply(k.maps[a], row, p);
            reduce(w, *pick[tg], p);
            for (int x : w)
                if (x != 0)
                    return false;
        }
        return true;
    };

    auto leaf = [&]() {
        Representation sub, quot;
        for (int v = 0; v < nv; ++v) {
            sub.dims.push_back(static_cast<int>(pick[v]->pivots.size()));
            quot.dims.push_back(static_cast<int>(pick[v]->free.size()));
        }
        for (size_t a = 0; a < spec.arrows.size(); ++a) {
            const int s = spec.arrows[a].source, tg = spec.arrows[a].target;
            const Subspace& us = *pick[s];
            const Subspace& ut = *pick[tg];
            FpMatrix ms(sub.dims[tg], sub.dims[s]);
            for (int j = 0; j < sub.dims[s]; ++j) {
                std::vector<int> row(us.basis->a.begin() + static_cast<long>(j) * us.basis->cols,
                                     us.basis->a.begin() + static_cast<long>(j + 1) * us.basis->cols);
                std::vector<int> w = apply(k.maps[a], row, p);
                for (int i = 0; i < sub.dims[tg]; ++i)
                    ms(i, j) = w[ut.pivots[i]];
            }
            FpMatrix mq(quot.dims[tg], quot.dims[s]);
            for (int j = 0; j < quot.dims[s]; ++j) {
                std::vector<int> w(static_cast<size_t>(k.dims[tg]));
                for (int i = 0; i < k.dims[tg]; ++i)
                    w[i] = k.maps[a](i, us.free[j]);
                reduce(w, ut, p);
                for (int i = 0; i < quot.dims[tg]; ++i)
                    mq(i, j) = w[ut.free[i]];
            }
            sub.maps.push_back(std::move(ms));
            quot.maps.push_back(std::move(mq));
        }
        ++out.counts[{classify(quot), classify(sub)}];
        ++out.by_sub_dim[sub.dims];
        ++out.total;
    };

    auto dfs = [&](auto&& self, int v) -> void {
        if (v == nv) {
            leaf();
            return;
        }
        for (const auto& s : lists[v]) {
            pick[v] = &s;
            bool ok = true;
            for (int a : closing[v])
                if (!(ok = invariant(a)))
                    break;
            if (ok)
                self(self, v + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

long hall_number(const IndecomposableTable& t, const Multiplicities& m, const Multiplicities& n,
                 const Representation& k)
{
    SubquotientCensus c = census(t, k);
    auto it = c.counts.find({m, n});
    return it == c.counts.end() ? 0 : it->second;
}

bool riedtmann_check(const IndecomposableTable& t, const Multiplicities& m, const Multiplicities& n,
                     const Multiplicities& k)
{
    const QuiverSpec& spec = t.spec();
    Representation M = t.realize(m), N = t.realize(n);
    mpz_class f = hall_number(t, m, n, t.realize(k));
    mpz_class e = ext_classes_with_middle(t, m, n, k);
    mpz_class hom;
    mpz_ui_pow_ui(hom.get_mpz_t(), static_cast<unsigned long>(spec.p),
                  static_cast<unsigned long>(hom_dim(spec, M, N)));
    return f * t.aut_order(m) * t.aut_order(n) * hom == e * t.aut_order(k);
}

} // namespace hallforge::repfield
