#include "hallforge/qtorus/qtorus.hpp"

#include "hallforge/hallcore/identities.hpp"
#include "hallforge/jordansym/jordan.hpp"
#include "hallforge/qcalc/qnumbers.hpp"

namespace hallforge::qtorus {

using qcalc::binom2;

void TorusParams::validate() const
{
    if (a0 <= 0 || a1 <= 0 || d0 <= 0 || d1 <= 0)
        throw std::invalid_argument("torus parameters must be positive");
    if (a0 * d0 != a1 * d1)
        throw std::invalid_argument("torus parameters violate a0*d0 = a1*d1");
}

std::string TorusParams::to_string() const
{
    return "a0=" + std::to_string(a0) + " a1=" + std::to_string(a1) + " d0=" + std::to_string(d0) +
           " d1=" + std::to_string(d1);
}

int default_dilog_truncation(const TorusParams& t) { return t.a0 * t.a1 == 1 ? 10 : 8; }

std::pair<QPlaneSeries<QFraction>, QPlaneSeries<QFraction>> dilog_sides(const TorusParams& t, int truncation)
{
    t.validate();
    const long case_ = t.a0 * t.a1;
    if (case_ < 1 || case_ > 3)
        throw std::invalid_argument("the dilogarithm identity is stated for a0*a1 in {1, 2, 3}");
    const QFraction q0 = QFraction::q_pow(static_cast<int>(t.d0));
    const QFraction q1 = QFraction::q_pow(static_cast<int>(t.d1));
    const QFraction p0 = q0.pow(static_cast<int>(binom2(t.a0)));
    const QFraction p1 = q1.pow(static_cast<int>(binom2(t.a1)));
    const QPlaneSeries<QFraction> ctx(QFraction::q(), t.relation_exponent(), truncation);
    auto mono = [&](int m, int n, const QFraction& c) { return QPlaneSeries<QFraction>::monomial(ctx, m, n, c); };
    const int a0 = static_cast<int>(t.a0), a1 = static_cast<int>(t.a1);

    const auto e0 = dilog_E(q0, ctx.x0());
    const auto e1 = dilog_E(q1, ctx.x1());
    const auto lhs = e0.inverse() * e1 * e0 * e1.inverse();

    QPlaneSeries<QFraction> rhs = ctx.one();
    if (case_ == 1) {
        rhs = dilog_E(q1, mono(1, 1, QFraction(1)));
    } else if (case_ == 2) {
        rhs = dilog_E(q1, mono(a0, 1, p0)) * dilog_E(q0, mono(1, a1, p1));
    } else {
        rhs = dilog_E(q1, mono(a0, 1, p0)) * dilog_E(q0, mono(2, a1, q0 * p1)) * dilog_E(q1, mono(a0, 2, p0 * q1)) *
              dilog_E(q0, mono(1, a1, p1));
    }
    return {lhs, rhs};
}

namespace {

CheckOutcome compare_series(const QPlaneSeries<QFraction>& lhs, const QPlaneSeries<QFraction>& rhs,
                            const std::string& what)
{
    const auto diff = lhs - rhs;
    if (diff.is_zero())
        return CheckOutcome::pass(what + ", total degree <= " + std::to_string(lhs.truncation()));
    const int d = diff.lowest_degree();
    return CheckOutcome::fail(what + ": first difference in total degree " + std::to_string(d),
                              diff.degree_part(d).term_strings(10));
}

} // namespace

CheckOutcome dilog_identity_check(const TorusParams& t, int truncation)
{
    const auto [lhs, rhs] = dilog_sides(t, truncation);
    return compare_series(lhs, rhs, t.to_string());
}

CheckOutcome pentagon_rearranged_check(int truncation)
{
    const QFraction q = QFraction::q();
    const QPlaneSeries<QFraction> ctx(q, 1, truncation);
    const auto e0 = dilog_E(q, ctx.x0());
    const auto e1 = dilog_E(q, ctx.x1());
    const auto e01 = dilog_E(q, QPlaneSeries<QFraction>::monomial(ctx, 1, 1));
    return compare_series(e1 * e0, e0 * e01 * e1, "pentagon");
}

CheckOutcome jordan_gl_identity_check(int order)
{
    using S = qcalc::QSeries<QFraction>;
    const QFraction q = QFraction::q();
    S a(order), b(order);
    for (int r = 0; r <= order; ++r) {
        for (const auto& l : jordansym::partitions_of(r))
            a[r] += QFraction(1) / QFraction(jordansym::aut_order_jordan(l));
        QFraction c = q.pow(static_cast<int>(binom2(r))) / QFraction(qcalc::gl_order(r));
        b[r] = r % 2 ? -c : c;
    }
    const S prod = a * b;
    std::vector<std::string> bad;
    for (int r = 0; r <= order; ++r)
        if (!(prod[r] == QFraction(r == 0 ? 1 : 0)))
            bad.push_back("t^" + std::to_string(r) + ": " + prod[r].to_string());
    return CheckOutcome::from(bad.empty(), "degree <= " + std::to_string(order), bad);
}

namespace {

struct RankTwoForm {
    int e00, e01, e10, e11;
};

RankTwoForm rank_two_form(const SpecAlgebra& alg)
{
    const auto& cat = alg.category();
    if (cat.rank() != 2)
        throw std::invalid_argument("the quantum plane needs a rank-2 category");
    // position 0 = S_1, position 1 = S_0
    const hallcore::DimVec a0{0, 1}, a1{1, 0};
    return {cat.euler(a0, a0), cat.euler(a0, a1), cat.euler(a1, a0), cat.euler(a1, a1)};
}

} // namespace

QPlaneSeries<Rational> integrate(const SpecAlgebra& alg, const hallcore::HallElement<Rational>& x)
{
    const RankTwoForm f = rank_two_form(alg);
    int total = 0;
    for (int t : alg.truncation())
        total += t;
    QPlaneSeries<Rational> out(alg.q(), f.e01 - f.e10, total);
    for (const auto& [m, c] : x.terms) {
        const hallcore::DimVec d = alg.category().dim_of(m);
        const int a = d[1], b = d[0];
        const long ex = f.e00 * binom2(a) + f.e11 * binom2(b) + static_cast<long>(f.e01) * a * b;
        out.add(a, b, c * alg.q().pow(ex) / alg.category().aut(m));
    }
    return out;
}

qcalc::QSeries<Rational> integrate_rank1(const SpecAlgebra& alg, const hallcore::HallElement<Rational>& x)
{
    const auto& cat = alg.category();
    if (cat.rank() != 1)
        throw std::invalid_argument("integrate_rank1 needs a rank-1 category");
    const int e = cat.euler({1}, {1});
    qcalc::QSeries<Rational> out(alg.truncation()[0]);
    for (const auto& [m, c] : x.terms) {
        const int n = cat.dim_of(m)[0];
        out[n] += c * alg.q().pow(e * binom2(n)) / cat.aut(m);
    }
    return out;
}

CheckOutcome integrate_hom_check(const SpecAlgebra& alg)
{
    return hallcore::detail::guarded([&] {
        const auto cls = alg.classes();
        std::vector<std::string> bad;
        int pairs = 0;
        const auto& tr = alg.truncation();
        for (const auto& m : cls)
            for (const auto& n : cls) {
                const auto bm = alg.basis(m), bn = alg.basis(n);
                const auto prod = alg.mul(bm, bn);
                bool ok;
                if (alg.category().rank() == 1) {
                    auto lhs = integrate_rank1(alg, prod);
                    auto rhs = integrate_rank1(alg, bm) * integrate_rank1(alg, bn);
                    ok = lhs == rhs;
                } else {
                    auto lhs = integrate(alg, prod);
                    auto full = integrate(alg, bm) * integrate(alg, bn);
                    auto rhs = lhs.empty_like();
                    for (const auto& [k, c] : full.terms())
                        if (k.first <= tr[1] && k.second <= tr[0])
                            rhs.add(k.first, k.second, c);
                    ok = lhs == rhs;
                }
                ++pairs;
                if (!ok && bad.size() < 10)
                    bad.push_back(alg.category().format(m) + " * " + alg.category().format(n));
            }
        return CheckOutcome::from(bad.empty(), std::to_string(pairs) + " basis pairs", bad);
    });
}

} // namespace hallforge::qtorus
