#pragma once

#include "hallforge/exactnum/laurent.hpp"

#include <vector>

namespace hallforge::qcalc {

inline long binom2(long n) { return n * (n - 1) / 2; }

/// [n]_q = 1 + q + ... + q^{n-1}; zero for n = 0.
LaurentPoly q_int(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
LaurentPoly q_factorial(int n);
/// Gaussian binomial; zero outside 0 <= k <= n.
LaurentPoly q_binomial(int n, int k);
/// |GL(n, F_q)| = prod_{j<n} (q^n - q^j).
LaurentPoly gl_order(int n);

/// The same quantities evaluated in an arbitrary coefficient field at a given q.
template <class K>
K q_int_at(int n, const K& q)
{
    K r(0), p(1);
    for (int i = 0; i < n; ++i) {
        r += p;
        p *= q;
    }
    return r;
}

template <class K>
K q_factorial_at(int n, const K& q)
{
    K r(1);
    for (int i = 1; i <= n; ++i)
        r *= q_int_at(i, q);
    return r;
}

template <class K>
K q_binomial_at(int n, int k, const K& q)
{
    if (k < 0 || k > n)
        return K(0);
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<K> row{K(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<K> next(static_cast<size_t>(m) + 1, K(0));
        K qk(1);
        for (int j = 0; j <= m; ++j) {
            if (j > 0)
                next[j] += row[j - 1];
            if (j < m)
                next[j] += qk * row[j];
            qk *= q;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

} // namespace hallforge::qcalc
