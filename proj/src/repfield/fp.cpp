#include "hallforge/repfield/fp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hallforge::repfield {

FpMatrix::FpMatrix(int r, int c, std::vector<int> entries, int p) : rows(r), cols(c), a(std::move(entries))
{
    if (a.size() != static_cast<size_t>(r) * static_cast<size_t>(c))
        throw std::invalid_argument("FpMatrix: entry count does not match shape");
    for (auto& x : a)
        x = ((x % p) + p) % p;
}

FpMatrix FpMatrix::identity(int n)
{
    FpMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool FpMatrix::is_zero() const
{
    for (int x : a)
        if (x != 0)
            return false;
    return true;
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

int inv_mod(int a, int p)
{
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        throw std::domain_error("inv_mod: zero has no inverse");
    int t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int qq = r / nr;
        int tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    return t < 0 ? t + p : t;
}

FpMatrix mul(const FpMatrix& x, const FpMatrix& y, int p)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("FpMatrix mul: shape mismatch");
    FpMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r(i, j) = (r(i, j) + v * y(k, j)) % p;
        }
    return r;
}

FpMatrix add(const FpMatrix& x, const FpMatrix& y, int p)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("FpMatrix add: shape mismatch");
    FpMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i)
        r.a[i] = (r.a[i] + y.a[i]) % p;
    return r;
}

FpMatrix sub(const FpMatrix& x, const FpMatrix& y, int p)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("FpMatrix sub: shape mismatch");
    FpMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i)
        r.a[i] = (r.a[i] - y.a[i] + p) % p;
    return r;
}

FpMatrix transpose(const FpMatrix& x)
{
    FpMatrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            r(j, i) = x(i, j);
    return r;
}

std::vector<int> rref(FpMatrix& m, int p)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m(piv, c), m(row, c));
        int inv = inv_mod(m(row, col), p);
        for (int c = 0; c < m.cols; ++c)
            m(row, c) = (m(row, c) * inv) % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            int f = m(r, col);
            for (int c = 0; c < m.cols; ++c)
                m(r, c) = ((m(r, c) - f * m(row, c)) % p + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(FpMatrix m, int p) { return static_cast<int>(rref(m, p).size()); }

FpMatrix nullspace(const FpMatrix& m, int p)
{
    FpMatrix r = m;
    std::vector<int> pivots = rref(r, p);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : pivots)
        is_pivot[c] = true;
    FpMatrix basis(m.cols - static_cast<int>(pivots.size()), m.cols);
    int b = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        basis(b, free) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            basis(b, pivots[i]) = (p - r(static_cast<int>(i), free)) % p;
        ++b;
    }
    return basis;
}

bool is_invertible(const FpMatrix& m, int p)
{
    return m.rows == m.cols && rank(m, p) == m.rows;
}

FpMatrix inverse(const FpMatrix& m, int p)
{
    if (m.rows != m.cols)
        throw std::domain_error("FpMatrix inverse: not square");
    const int n = m.rows;
    FpMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv = rref(aug, p);
    if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] >= n))
        throw std::domain_error("FpMatrix inverse: singular");
    FpMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r(i, j) = aug(i, n + j);
    return r;
}

namespace {

// Enumerate RREF k x n matrices: choose pivot columns, fill the free entries right of each pivot.
void rref_matrices(int n, int k, int p, std::vector<FpMatrix>& out)
{
    std::vector<int> piv(static_cast<size_t>(k));
    auto fill = [&](auto&& self, int idx, int start) -> void {
        if (idx == k) {
            std::vector<std::pair<int, int>> free_cells;
            for (int i = 0; i < k; ++i)
                for (int c = piv[i] + 1; c < n; ++c) {
                    bool pivot_col = false;
                    for (int j = 0; j < k; ++j)
                        pivot_col = pivot_col || piv[j] == c;
                    if (!pivot_col)
                        free_cells.emplace_back(i, c);
                }
            FpMatrix m(k, n);
            for (int i = 0; i < k; ++i)
                m(i, piv[i]) = 1;
            const size_t nf = free_cells.size();
            std::vector<int> digits(nf, 0);
            while (true) {
                for (size_t f = 0; f < nf; ++f)
                    m(free_cells[f].first, free_cells[f].second) = digits[f];
                out.push_back(m);
                size_t f = 0;
                while (f < nf && ++digits[f] == p)
                    digits[f++] = 0;
                if (f == nf)
                    break;
            }
            return;
        }
        for (int c = start; c <= n - (k - idx); ++c) {
            piv[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    fill(fill, 0, 0);
}

} // namespace

const std::vector<FpMatrix>& all_subspaces(int n, int p)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<FpMatrix>>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[{n, p}];
    if (!slot) {
        auto v = std::make_unique<std::vector<FpMatrix>>();
        for (int k = 0; k <= n; ++k)
            rref_matrices(n, k, p, *v);
        slot = std::move(v);
    }
    return *slot;
}

} // namespace hallforge::repfield
