#include "hallforge/jordansym/sympoly.hpp"

#include "hallforge/hallcore/identities.hpp"
#include "hallforge/jordansym/jordan.hpp"

#include <mutex>

namespace hallforge::jordansym {

namespace {

void add_into(IntPoly& a, const IntPoly& b, long sign, size_t shift)
{
    if (a.size() < b.size() + shift)
        a.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i + shift] += sign * b[i];
}

bool int_poly_zero(const IntPoly& f)
{
    return std::all_of(f.begin(), f.end(), [](long c) { return c == 0; });
}

// prod_{i<j} (x_i - t x_j) in n variables.
const std::map<Exponents, IntPoly>& twist_product(int n)
{
    static std::mutex mu;
    static std::map<int, std::map<Exponents, IntPoly>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::map<Exponents, IntPoly> cur{{Exponents(static_cast<size_t>(n), 0), IntPoly{1}}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::map<Exponents, IntPoly> next;
            for (const auto& [e, f] : cur) {
                Exponents a = e, b = e;
                ++a[i];
                ++b[j];
                add_into(next[a], f, 1, 0);
                add_into(next[b], f, -1, 1);
            }
            std::erase_if(next, [](const auto& kv) { return int_poly_zero(kv.second); });
            cur = std::move(next);
        }
    return cache.emplace(n, std::move(cur)).first->second;
}

} // namespace

std::map<Exponents, IntPoly> antisymmetrized(const Partition& lambda, int n)
{
    Exponents lam = lambda.parts();
    lam.resize(static_cast<size_t>(n), 0);
    std::map<Exponents, IntPoly> out;
    for (const auto& [beta, g] : twist_product(n)) {
        Exponents alpha(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            alpha[i] = lam[i] + beta[i];
        long sign = 1;
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (alpha[i] == alpha[j]) {
                    distinct = false;
                    break;
                }
                if (alpha[i] < alpha[j])
                    sign = -sign;
            }
        if (!distinct)
            continue;
        std::sort(alpha.begin(), alpha.end(), std::greater<>());
        for (int i = 0; i < n; ++i)
            alpha[i] -= n - 1 - i;
        add_into(out[alpha], g, sign, 0);
    }
    std::erase_if(out, [](const auto& kv) { return int_poly_zero(kv.second); });
    return out;
}

const std::map<Exponents, long>& schur_monomials(const Exponents& mu_in, int n)
{
    static std::mutex mtx;
    static std::map<std::pair<Exponents, int>, std::map<Exponents, long>> cache;
    Exponents mu = mu_in;
    while (!mu.empty() && mu.back() == 0)
        mu.pop_back();
    std::lock_guard lock(mtx);
    // s_mu(x_1..x_n) = sum over horizontal strips mu/nu of x_n^{|mu/nu|} s_nu(x_1..x_{n-1}).
    auto rec = [&](auto&& self, const Exponents& m, int k) -> const std::map<Exponents, long>& {
        auto key = std::make_pair(m, k);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        std::map<Exponents, long> out;
        if (k == 0) {
            if (m.empty())
                out[{}] = 1;
        } else if (static_cast<int>(m.size()) <= k) {
            int total = 0;
            for (int x : m)
                total += x;
            Exponents nu(m.size(), 0);
            auto pick = [&](auto&& pick_self, size_t i) -> void {
                if (i == m.size()) {
                    Exponents trimmed = nu;
                    while (!trimmed.empty() && trimmed.back() == 0)
                        trimmed.pop_back();
                    if (static_cast<int>(trimmed.size()) > k - 1)
                        return;
                    int rest = total;
                    for (int x : trimmed)
                        rest -= x;
                    for (const auto& [e, c] : self(self, trimmed, k - 1)) {
                        Exponents full = e;
                        full.push_back(rest);
                        out[full] += c;
                    }
                    return;
                }
                const int lo = i + 1 < m.size() ? m[i + 1] : 0;
                for (int v = lo; v <= m[i]; ++v) {
                    nu[i] = v;
                    pick_self(pick_self, i + 1);
                }
            };
            pick(pick, 0);
        }
        return cache.emplace(key, std::move(out)).first->second;
    };
    return rec(rec, mu, n);
}

SymPoly<Rational> phi_image(const Partition& lambda, int n, int p)
{
    if (lambda.length() > n)
        return SymPoly<Rational>(n);
    const Rational q(p);
    return q.pow(-n_of_lambda(lambda)) * hall_littlewood(lambda, n, q.inverse());
}

CheckOutcome hl_identity_check(int r, int n)
{
    return hallcore::detail::guarded([&] {
        const QFraction q = QFraction::q();
        SymPoly<QFraction> lhs(n);
        for (const Partition& l : partitions_of(r))
            if (l.length() <= n)
                lhs = lhs + QFraction::q_pow(static_cast<int>(n_of_lambda(l))) * hall_littlewood(l, n, q);
        const auto diff = lhs - complete<QFraction>(r, n);
        return CheckOutcome::from(diff.is_zero(), "r=" + std::to_string(r) + ", " + std::to_string(n) + " variables",
                                  diff.m_terms(10));
    });
}

CheckOutcome phi_hom_check(const Partition& mu, const Partition& nu, int n, int p)
{
    return hallcore::detail::guarded([&] {
        const auto lhs = phi_image(mu, n, p) * phi_image(nu, n, p);
        SymPoly<Rational> rhs(n);
        for (const Partition& l : partitions_of(mu.size() + nu.size())) {
            const long f = hall_number_jordan(mu, nu, l, p);
            if (f)
                rhs = rhs + Rational(f) * phi_image(l, n, p);
        }
        const auto diff = lhs - rhs;
        return CheckOutcome::from(diff.is_zero(), mu.to_string() + "*" + nu.to_string() + " at p=" + std::to_string(p),
                                  diff.m_terms(10));
    });
}

CheckOutcome alt_sum_identity_check(int r)
{
    if (r <= 0)
        throw std::invalid_argument("the alternating sum vanishes only for r > 0");
    QFraction total(0), prefix(1);
    for (int s = 0; s <= r; ++s) {
        if (s > 0)
            prefix /= QFraction(1) - QFraction::q_pow(s);
        QFraction inner(0);
        for (const Partition& l : partitions_of(r - s))
            inner += QFraction(1) / QFraction(aut_order_jordan(l));
        total += prefix * inner;
    }
    return CheckOutcome::from(total.is_zero(), "r=" + std::to_string(r),
                              total.is_zero() ? std::vector<std::string>{} : std::vector{total.to_string()});
}

} // namespace hallforge::jordansym
