#include "hallforge/jordansym/jordan.hpp"

#include "hallforge/caps.hpp"
#include "hallforge/hallcore/identities.hpp"
#include "hallforge/qcalc/qnumbers.hpp"

#include <stdexcept>

namespace hallforge::jordansym {

using repfield::rank;

namespace {

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b)
{
    FpMatrix out(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), out.a.begin());
    std::copy(b.a.begin(), b.a.end(), out.a.begin() + static_cast<long>(a.a.size()));
    return out;
}

// Matrix of f -> target * f - f * source on n x m matrices f, flattened row-major; one column per basis f.
FpMatrix commutator_map(const FpMatrix& target, const FpMatrix& source, int p)
{
    const int n = target.rows, m = source.rows;
    FpMatrix out(n * m, n * m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            FpMatrix f(n, m);
            f(a, b) = 1;
            FpMatrix d = repfield::sub(repfield::mul(target, f, p), repfield::mul(f, source, p), p);
            for (int k = 0; k < n * m; ++k)
                out(k, a * m + b) = d.a[static_cast<size_t>(k)];
        }
    return out;
}

// Gaussian elimination on a scratch copy; no allocation in the inner loop of the unit count.
bool invertible_in_place(std::vector<int>& w, int n, int p)
{
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (w[r * n + c]) {
                piv = r;
                break;
            }
        if (piv < 0)
            return false;
        if (piv != c)
            for (int k = 0; k < n; ++k)
                std::swap(w[c * n + k], w[piv * n + k]);
        const int inv = repfield::inv_mod(w[c * n + c], p);
        for (int r = c + 1; r < n; ++r) {
            if (!w[r * n + c])
                continue;
            const int f = (w[r * n + c] * inv) % p;
            for (int k = c; k < n; ++k)
                w[r * n + k] = ((w[r * n + k] - f * w[c * n + k]) % p + p) % p;
        }
    }
    return true;
}

std::vector<FpMatrix> transposed_powers(const FpMatrix& j, int p)
{
    std::vector<FpMatrix> out{FpMatrix::identity(j.rows)};
    for (int k = 1; k <= j.rows; ++k)
        out.push_back(repfield::mul(out.back(), repfield::transpose(j), p));
    return out;
}

} // namespace

FpMatrix jordan_matrix(const Partition& lambda, int p)
{
    const int n = lambda.size();
    FpMatrix j(n, n);
    int off = 0;
    for (int k : lambda.parts()) {
        for (int i = 1; i < k; ++i)
            j(off + i - 1, off + i) = 1 % p;
        off += k;
    }
    return j;
}

Partition partition_from_ranks(const std::vector<int>& ranks)
{
    // ranks[k-1] - ranks[k] parts have size >= k.
    std::vector<int> at_least;
    for (size_t k = 1; k < ranks.size(); ++k)
        at_least.push_back(ranks[k - 1] - ranks[k]);
    std::vector<int> counts(at_least.size(), 0);
    for (size_t k = 0; k < at_least.size(); ++k) {
        counts[k] = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
        if (counts[k] < 0)
            throw std::invalid_argument("rank sequence is not that of a nilpotent operator");
    }
    return Partition::from_multiplicities(counts);
}

Partition jordan_type(const FpMatrix& a, int p)
{
    if (a.rows != a.cols)
        throw std::invalid_argument("jordan_type needs a square matrix");
    std::vector<int> ranks{a.rows};
    FpMatrix pw = a;
    while (ranks.back() > 0) {
        int r = rank(pw, p);
        if (r == ranks.back())
            throw std::invalid_argument("matrix is not nilpotent");
        ranks.push_back(r);
        pw = repfield::mul(pw, a, p);
    }
    return partition_from_ranks(ranks);
}

LaurentPoly aut_order_jordan(const Partition& lambda)
{
    const std::vector<int> a = lambda.multiplicities();
    long e = 0;
    LaurentPoly out(1);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < a.size(); ++j)
            e += static_cast<long>(std::min(i, j) + 1 - (i == j ? 1 : 0)) * a[i] * a[j];
        out *= qcalc::gl_order(a[i]);
    }
    return out * LaurentPoly::q_pow(static_cast<int>(e));
}

mpz_class aut_order_jordan_bruteforce(const Partition& lambda, int p)
{
    const FpMatrix j = jordan_matrix(lambda, p);
    const int n = j.rows;
    const FpMatrix basis = repfield::nullspace(commutator_map(j, j, p), p);
    const int d = basis.rows;
    caps::require(d <= caps::jordan_end_dim(p),
                  "End(I" + lambda.to_string() + ") has dimension " + std::to_string(d) + ", beyond the cap");
    std::vector<int> cur(static_cast<size_t>(n) * n, 0), scratch(cur.size());
    std::vector<int> digits(static_cast<size_t>(d), 0);
    mpz_class count = 0;
    while (true) {
        scratch = cur;
        if (invertible_in_place(scratch, n, p))
            ++count;
        int i = 0;
        for (; i < d; ++i) {
            for (int c = 0; c < n * n; ++c)
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

JordanCensus census_jordan(const Partition& lambda, int p)
{
    const int n = lambda.size();
    caps::require(n <= caps::jordan_size(p),
                  "Jordan type " + lambda.to_string() + " exceeds the size cap at p=" + std::to_string(p));
    JordanCensus out;
    if (n == 0) {
        out[{Partition(), Partition()}] = 1;
        return out;
    }
    const FpMatrix j = jordan_matrix(lambda, p);
    const std::vector<FpMatrix> powt = transposed_powers(j, p);
    for (const FpMatrix& s : repfield::all_subspaces(n, p)) {
        const int d = s.rows;
        if (d > 0 && rank(vstack(s, repfield::mul(s, powt[1], p)), p) != d)
            continue;
        std::vector<int> sub{d}, quo{n - d};
        for (int k = 1; sub.back() > 0 || quo.back() > 0; ++k) {
            sub.push_back(d == 0 ? 0 : rank(repfield::mul(s, powt[k], p), p));
            quo.push_back(rank(d == 0 ? powt[k] : vstack(powt[k], s), p) - d);
        }
        ++out[{partition_from_ranks(quo), partition_from_ranks(sub)}];
    }
    return out;
}

long hall_number_jordan(const Partition& mu, const Partition& nu, const Partition& lambda, int p)
{
    if (mu.size() + nu.size() != lambda.size())
        return 0;
    const JordanCensus c = census_jordan(lambda, p);
    auto it = c.find({mu, nu});
    return it == c.end() ? 0 : it->second;
}

int hom_dim_jordan(const Partition& mu, const Partition& nu, int p)
{
    const int m = mu.size(), n = nu.size();
    if (!m || !n)
        return 0;
    return n * m - rank(commutator_map(jordan_matrix(nu, p), jordan_matrix(mu, p), p), p);
}

int ext_dim_jordan(const Partition& mu, const Partition& nu, int p)
{
    // Every f in Hom_k(I_mu, I_nu) is a cocycle; coboundaries are the image of the commutator map.
    const int m = mu.size(), n = nu.size();
    if (!m || !n)
        return 0;
    const int cocycles = n * m;
    return cocycles - rank(commutator_map(jordan_matrix(nu, p), jordan_matrix(mu, p), p), p);
}

std::map<Partition, Rational> ext_middle_counts(const Partition& mu, const Partition& nu, int p)
{
    const int m = mu.size(), n = nu.size();
    caps::require(n * m <= caps::brute_force_dim(p), "cocycle space of dimension " + std::to_string(n * m) +
                                                         " exceeds the brute-force cap");
    const FpMatrix jn = jordan_matrix(nu, p), jm = jordan_matrix(mu, p);
    const int boundary_rank = (n && m) ? rank(commutator_map(jn, jm, p), p) : 0;
    // E = [[J_nu, z], [0, J_mu]]: sub I_nu, quotient I_mu.
    FpMatrix e(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            e(i, k) = jn(i, k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            e(n + i, n + k) = jm(i, k);
    std::map<Partition, long> counts;
    std::vector<int> z(static_cast<size_t>(n) * m, 0);
    while (true) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k)
                e(i, n + k) = z[static_cast<size_t>(i) * m + k];
        ++counts[jordan_type(e, p)];
        size_t i = 0;
        for (; i < z.size(); ++i) {
            if (++z[i] < p)
                break;
            z[i] = 0;
        }
        if (i == z.size())
            break;
    }
    std::map<Partition, Rational> out;
    const Rational scale = Rational(p).pow(boundary_rank);
    for (const auto& [l, c] : counts)
        out[l] = Rational(c) / scale;
    return out;
}

JordanCategory::JordanCategory(int p, int max_part) : p_(p), max_part_(max_part), domain_{Rational(p)}
{
    if (!repfield::is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (max_part < 1)
        throw std::invalid_argument("max_part must be positive");
}

Partition JordanCategory::partition_of(const hallcore::Multiplicities& m) const
{
    return Partition::from_multiplicities(m);
}

hallcore::Multiplicities JordanCategory::class_of(const Partition& lambda) const
{
    if (lambda.largest() > max_part_)
        throw std::invalid_argument("partition " + lambda.to_string() + " has a part beyond " +
                                    std::to_string(max_part_));
    return lambda.multiplicities(max_part_);
}

Rational JordanCategory::aut(const hallcore::Multiplicities& m) const
{
    return aut_order_jordan(partition_of(m)).specialize(Rational(p_));
}

std::vector<hallcore::SubquotientTerm<Rational>> JordanCategory::subquotients(const hallcore::Multiplicities& k) const
{
    std::vector<hallcore::SubquotientTerm<Rational>> out;
    for (const auto& [key, c] : census_jordan(partition_of(k), p_))
        out.push_back({class_of(key.first), class_of(key.second), Rational(c)});
    return out;
}

namespace {

hallcore::HallAlgebra<Specialized> jordan_algebra(int order, int p)
{
    auto cat = std::make_shared<JordanCategory>(p, std::max(order, 1));
    return hallcore::HallAlgebra<Specialized>(cat, {order});
}

} // namespace

CheckOutcome steinitz_inverse_check(int order, int p)
{
    return hallcore::detail::guarded([&] {
        const auto alg = jordan_algebra(order, p);
        const auto& cat = static_cast<const JordanCategory&>(alg.category());
        hallcore::HallElement<Rational> s;
        for (int r = 0; r <= order; ++r) {
            Rational c = alg.q_pow(static_cast<int>(qcalc::binom2(r)));
            s.add(cat.class_of(column(r)), r % 2 ? -c : c);
        }
        const auto e = alg.exp_all();
        return combine({{"Exp*S", hallcore::detail::compare(alg, alg.mul(e, s), alg.one())},
                        {"S*Exp", hallcore::detail::compare(alg, alg.mul(s, e), alg.one())}});
    });
}

CheckOutcome inverse_support_check(int order, int p)
{
    return hallcore::detail::guarded([&] {
        const auto alg = jordan_algebra(order, p);
        const auto inv = alg.inverse(alg.exp_all());
        std::vector<std::string> bad;
        for (const auto& [m, c] : inv.terms)
            if (!alg.category().is_semisimple(m) && bad.size() < 10)
                bad.push_back(alg.category().format(m) + ": " + c.to_string());
        return CheckOutcome::from(bad.empty(), std::to_string(inv.terms.size()) + " terms", bad);
    });
}

CheckOutcome commutativity_check(int max_size, int p)
{
    return hallcore::detail::guarded([&] {
        std::vector<std::string> bad;
        int triples = 0;
        for (int n = 0; n <= max_size; ++n)
            for (const Partition& l : partitions_of(n)) {
                const JordanCensus c = census_jordan(l, p);
                for (const auto& [key, count] : c) {
                    ++triples;
                    auto it = c.find({key.second, key.first});
                    long swapped = it == c.end() ? 0 : it->second;
                    if (swapped != count && bad.size() < 10)
                        bad.push_back("F^" + l.to_string() + "_" + key.first.to_string() + "," +
                                      key.second.to_string() + " = " + std::to_string(count) + " vs " +
                                      std::to_string(swapped));
                }
            }
        return CheckOutcome::from(bad.empty(), std::to_string(triples) + " nonzero Hall numbers", bad);
    });
}

CheckOutcome riedtmann_jordan_check(int max_size, int p)
{
    return hallcore::detail::guarded([&] {
        const Rational q(p);
        auto aut = [&](const Partition& l) { return aut_order_jordan(l).specialize(q); };
        std::vector<std::string> bad;
        int triples = 0;
        for (int n = 0; n <= max_size; ++n) {
            std::map<Partition, JordanCensus> census;
            for (const Partition& l : partitions_of(n))
                census[l] = census_jordan(l, p);
            for (int a = 0; a <= n; ++a)
                for (const Partition& mu : partitions_of(a))
                    for (const Partition& nu : partitions_of(n - a)) {
                        const auto ext = ext_middle_counts(mu, nu, p);
                        const Rational hom = q.pow(hom_dim_jordan(mu, nu, p));
                        for (const auto& [l, c] : census) {
                            ++triples;
                            auto it = c.find({mu, nu});
                            const Rational f(it == c.end() ? 0L : it->second);
                            auto ex = ext.find(l);
                            const Rational e = ex == ext.end() ? Rational(0) : ex->second;
                            if (f * aut(mu) * aut(nu) * hom != e * aut(l) && bad.size() < 10)
                                bad.push_back(mu.to_string() + "," + nu.to_string() + " -> " + l.to_string());
                        }
                    }
        }
        return CheckOutcome::from(bad.empty(), std::to_string(triples) + " triples", bad);
    });
}

CheckOutcome aut_closed_form_check(int max_size, int p)
{
    return hallcore::detail::guarded([&] {
        std::vector<std::string> bad;
        for (int n = 1; n <= max_size; ++n)
            for (const Partition& l : partitions_of(n)) {
                const Rational closed = aut_order_jordan(l).specialize(Rational(p));
                const Rational brute(aut_order_jordan_bruteforce(l, p));
                if (closed != brute && bad.size() < 10)
                    bad.push_back(l.to_string() + ": " + closed.to_string() + " vs " + brute.to_string());
            }
        return CheckOutcome::from(bad.empty(), "", bad);
    });
}

} // namespace hallforge::jordansym
