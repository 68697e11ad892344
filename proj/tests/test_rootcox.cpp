#include "hallforge/hallcore/identities.hpp"
#include "hallforge/repfield/builders.hpp"
#include "hallforge/rootcox/rootcox.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hallforge;
using namespace hallforge::rootcox;

namespace {

ValuedGraphSpec a_n(int n) { return ValuedGraphSpec::from_quiver(repfield::type_a(n, 2).spec()); }

ValuedGraphSpec d4()
{
    ValuedGraphSpec s;
    s.d = {1, 1, 1, 1};
    s.euler = {{1, -1, -1, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    return s;
}

std::set<DimVector> vecs(const std::vector<GammaElement>& es)
{
    std::set<DimVector> out;
    for (const auto& e : es)
        out.insert(e.vec);
    return out;
}

// Smallest k <= bound with c^k = 1, or 0.
int coxeter_order(const IntMatrix& c, int bound)
{
    const int n = static_cast<int>(c.size());
    IntMatrix id(n, std::vector<long>(n, 0)), p = id;
    for (int i = 0; i < n; ++i)
        id[i][i] = p[i][i] = 1;
    for (int k = 1; k <= bound; ++k) {
        IntMatrix next(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    next[i][j] += c[i][l] * p[l][j];
        p = next;
        if (p == id)
            return k;
    }
    return 0;
}

// Position in a rank-2 spec (ordered 1, 0) of P_r, and its level.
std::pair<int, int> rank2_slot(int r) { return {r % 2 == 0 ? 1 : 0, r / 2}; }

} // namespace

TEST(Coxeter, RankOne)
{
    ValuedGraphSpec s;
    s.d = {2};
    s.euler = {{2}};
    EXPECT_EQ(coxeter_matrix(s), (IntMatrix{{-1}}));
    auto o = gamma_orbits(s);
    EXPECT_EQ(vecs(o.minus), (std::set<DimVector>{{1}}));
    EXPECT_EQ(vecs(o.plus), (std::set<DimVector>{{1}}));
}

TEST(Coxeter, SendsProjectivesToMinusInjectives)
{
    for (const auto& s : {a_n(2), a_n(3), a_n(4), d4(), ValuedGraphSpec::rank2(2, 1, 1, 2),
                          ValuedGraphSpec::rank2(1, 3, 3, 1), ValuedGraphSpec::rank2(2, 2, 1, 1)}) {
        const IntMatrix c = coxeter_matrix(s);
        const GammaBases g = gamma_bases(s);
        for (int i = 0; i < s.rank(); ++i) {
            DimVector neg = g.plus[i];
            for (auto& x : neg)
                x = -x;
            EXPECT_EQ(rootcox::apply(c, g.minus[i]), neg);
            EXPECT_TRUE(in_positive_cone(g.minus[i]));
            EXPECT_TRUE(in_positive_cone(g.plus[i]));
            for (int j = 0; j < s.rank(); ++j) {
                DimVector aj(static_cast<size_t>(s.rank()), 0);
                aj[j] = 1;
                EXPECT_EQ(s.form(g.minus[i], aj), i == j ? s.d[i] : 0);
                EXPECT_EQ(s.form(aj, g.plus[i]), i == j ? s.d[i] : 0);
            }
        }
    }
}

TEST(Coxeter, GammaBasesA2)
{
    // Positions: 0 is vertex "1" (source), 1 is vertex "0" (sink).
    auto s = a_n(2);
    auto g = gamma_bases(s);
    EXPECT_EQ(g.minus[1], (DimVector{0, 1})); // P_0 = S_0
    EXPECT_EQ(g.minus[0], (DimVector{1, 1})); // P_1 = E
    EXPECT_EQ(g.plus[0], (DimVector{1, 0}));  // I_1 = S_1
    EXPECT_EQ(g.plus[1], (DimVector{1, 1}));
    // Both lists are lattice bases.
    for (const auto& basis : {g.minus, g.plus}) {
        IntMatrix m = {basis[0], basis[1]};
        EXPECT_EQ(std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]), 1);
    }
}

TEST(Coxeter, FiniteOrderIffFiniteType)
{
    for (const auto& s : {a_n(1), a_n(2), a_n(3), a_n(4), d4(), ValuedGraphSpec::rank2(1, 1, 1, 1),
                          ValuedGraphSpec::rank2(2, 1, 1, 2), ValuedGraphSpec::rank2(3, 1, 1, 3)}) {
        EXPECT_TRUE(finite_type_test(s));
        EXPECT_GT(coxeter_order(coxeter_matrix(s), 60), 0);
    }
    for (const auto& s : {ValuedGraphSpec::rank2(2, 2, 1, 1), ValuedGraphSpec::rank2(4, 1, 1, 4),
                          ValuedGraphSpec::rank2(3, 2, 2, 3)}) {
        EXPECT_FALSE(finite_type_test(s, 30));
        EXPECT_EQ(classify_type(s, 30), TypeVerdict::infinite);
        EXPECT_EQ(coxeter_order(coxeter_matrix(s), 60), 0);
    }
}

TEST(Gamma, OrbitsA2)
{
    auto o = gamma_orbits(a_n(2));
    EXPECT_TRUE(o.terminated);
    const std::set<DimVector> expected{{0, 1}, {1, 1}, {1, 0}};
    EXPECT_EQ(vecs(o.minus), expected);
    EXPECT_EQ(vecs(o.plus), expected);
}

TEST(Gamma, KroneckerOrbitsAreDisjoint)
{
    auto o = gamma_orbits(ValuedGraphSpec::rank2(2, 2, 1, 1), 20);
    EXPECT_FALSE(o.terminated);
    auto m = vecs(o.minus), p = vecs(o.plus);
    for (const auto& v : m)
        EXPECT_FALSE(p.count(v)) << format(v);
    EXPECT_EQ(o.minus.size(), 42u);
}

TEST(Gamma, CountsMatchPositiveRoots)
{
    // Number of indecomposables: A_n has n(n+1)/2, D4 has 12; B2/C2 have 4, G2 has 6.
    EXPECT_EQ(vecs(gamma_orbits(a_n(3)).minus).size(), 6u);
    EXPECT_EQ(vecs(gamma_orbits(a_n(4)).minus).size(), 10u);
    EXPECT_EQ(vecs(gamma_orbits(d4()).minus).size(), 12u);
    EXPECT_EQ(vecs(gamma_orbits(ValuedGraphSpec::rank2(2, 1, 1, 2)).minus).size(), 4u);
    EXPECT_EQ(vecs(gamma_orbits(ValuedGraphSpec::rank2(3, 1, 1, 3)).minus).size(), 6u);
}

TEST(Beta, Sequence)
{
    auto b = beta_sequence(1, 1, -1, 3);
    EXPECT_EQ(b[0], (DimVector{0, -1}));
    EXPECT_EQ(b[1], (DimVector{1, 0}));
    EXPECT_EQ(b[2], (DimVector{1, 1}));
    EXPECT_EQ(b[3], (DimVector{0, 1}));
    EXPECT_EQ(b[4], (DimVector{-1, 0}));
    auto k = beta_sequence(2, 2, 0, 20);
    EXPECT_EQ(k[2], (DimVector{3, 2}));
    for (const auto& v : k)
        EXPECT_TRUE(in_positive_cone(v)) << format(v);
}

TEST(Beta, Chebyshev)
{
    for (long t : {1L, 2L, 5L}) {
        auto [l0, m0] = chebyshev_lambda_mu(0, t);
        EXPECT_EQ(l0, Rational(0));
        EXPECT_EQ(m0, Rational(1));
        auto [l1, m1] = chebyshev_lambda_mu(1, t);
        EXPECT_EQ(l1, Rational(1));
        EXPECT_EQ(m1, Rational(t - 1));
    }
    // Backward extension satisfies the same recursion.
    const Rational x(3, 4);
    for (int n = -6; n <= 6; ++n)
        EXPECT_EQ(chebyshev_u(n + 1, x), Rational(2) * x * chebyshev_u(n, x) - chebyshev_u(n - 1, x)) << n;
}

TEST(Beta, ClosedFormMatchesRecursion)
{
    const std::vector<std::pair<long, long>> pairs{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2},
                                                   {1, 4}, {4, 1}, {2, 3}, {3, 2}, {1, 6}, {6, 1}};
    for (auto [a0, a1] : pairs) {
        auto seq = beta_sequence(a0, a1, -12, 12);
        for (int r = -12; r <= 12; ++r)
            EXPECT_EQ(beta_closed_form(a0, a1, r), seq[r + 12]) << a0 << "," << a1 << " r=" << r;
    }
}

// beta_r (r >= 0, while positive) are the preprojective classes and -beta_r (r < 0) the preinjective ones.
TEST(Beta, MatchesGammaOrbits)
{
    struct P {
        long a0, a1, d0, d1;
    };
    for (auto [a0, a1, d0, d1] : {P{1, 1, 1, 1}, P{2, 1, 1, 2}, P{1, 2, 2, 1}, P{3, 1, 1, 3}, P{2, 2, 1, 1}}) {
        auto s = ValuedGraphSpec::rank2(a0, a1, d0, d1);
        auto o = gamma_orbits(s, 10);
        auto to_spec = [](const DimVector& b) { return DimVector{b[1], b[0]}; }; // (alpha_0, alpha_1) -> positions
        std::set<DimVector> pre, inj;
        auto seq = beta_sequence(a0, a1, -30, 30);
        for (int r = 0; r <= 30 && in_positive_cone(seq[r + 30]); ++r)
            pre.insert(to_spec(seq[r + 30]));
        for (int r = -1; r >= -30 && in_negative_cone(seq[r + 30]); --r) {
            DimVector v = to_spec(seq[r + 30]);
            for (auto& x : v)
                x = -x;
            inj.insert(v);
        }
        if (o.terminated) {
            EXPECT_EQ(vecs(o.minus), pre);
            EXPECT_EQ(vecs(o.plus), inj);
        } else {
            for (const auto& v : vecs(o.minus))
                EXPECT_TRUE(pre.count(v)) << format(v);
            for (const auto& v : vecs(o.plus))
                EXPECT_TRUE(inj.count(v)) << format(v);
        }
    }
}

TEST(Preproj, Diagonal)
{
    for (const auto& s : {a_n(3), ValuedGraphSpec::rank2(2, 1, 1, 2)})
        for (int i = 0; i < s.rank(); ++i)
            EXPECT_EQ(preproj_dims(s, i, 0, i, 0), (std::pair<long, long>{s.d[i], 0}));
    EXPECT_THROW(preproj_dims(a_n(2), 0, 1, 0, 0), std::invalid_argument);
}

// Cross-check against Hom/Ext computed on explicit representations.
TEST(Preproj, MatchesRepresentations)
{
    for (int n : {2, 3, 4}) {
        auto t = repfield::type_a(n, 2);
        auto s = ValuedGraphSpec::from_quiver(t.spec());
        auto o = gamma_orbits(s);
        auto find = [&](const DimVector& v) {
            for (int i = 0; i < t.size(); ++i)
                if (DimVector(t.entry(i).dim.begin(), t.entry(i).dim.end()) == v)
                    return i;
            return -1;
        };
        for (const auto& a : o.minus)
            for (const auto& b : o.minus) {
                if (b.level < a.level)
                    continue;
                const int x = find(a.vec), y = find(b.vec);
                ASSERT_GE(x, 0);
                ASSERT_GE(y, 0);
                auto [h, e] = preproj_dims(s, a.index, a.level, b.index, b.level);
                EXPECT_EQ(h, t.hom(x, y));
                EXPECT_EQ(e, t.ext(y, x));
            }
    }
}

TEST(Preproj, ChebyshevTable)
{
    struct P {
        long a0, a1, d0, d1;
    };
    for (auto [a0, a1, d0, d1] : {P{2, 1, 1, 2}, P{1, 2, 2, 1}, P{3, 1, 1, 3}, P{2, 2, 1, 1}, P{1, 1, 1, 1}}) {
        auto s = ValuedGraphSpec::rank2(a0, a1, d0, d1);
        auto o = gamma_orbits(s, 8);
        std::set<std::pair<int, int>> present;
        for (const auto& e : o.minus)
            present.insert({e.index, e.level});
        const long t = a0 * a1;
        auto a = [&](int r) { return r % 2 == 0 ? a0 : a1; };
        auto d = [&](int r) { return r % 2 == 0 ? d0 : d1; };
        auto as_long = [](const Rational& x) { return x.numerator().get_si(); };
        for (int r = 0; r <= 12; ++r)
            for (int q = r; q <= 12; ++q) {
                auto pr = rank2_slot(r), ps = rank2_slot(q);
                if (!present.count(pr) || !present.count(ps))
                    continue;
                auto [h, e] = preproj_dims(s, pr.first, pr.second, ps.first, ps.second);
                if ((q - r) % 2 == 0) {
                    EXPECT_EQ(h, d(r) * as_long(chebyshev_lambda_mu((q - r) / 2, t).second)) << r << " " << q;
                    if (q > r)
                        EXPECT_EQ(e, d(r) * as_long(chebyshev_lambda_mu((q - r) / 2 - 1, t).second)) << r << " " << q;
                } else {
                    EXPECT_EQ(h, d(r) * a(r) * as_long(chebyshev_lambda_mu((q + 1 - r) / 2, t).first)) << r << " " << q;
                    EXPECT_EQ(e, d(r) * a(r) * as_long(chebyshev_lambda_mu((q - r - 1) / 2, t).first)) << r << " " << q;
                }
            }
    }
}

TEST(NormalOrder, A2)
{
    auto o = gamma_orbits(a_n(2));
    auto ord = normal_order(o.minus);
    ASSERT_EQ(ord.size(), 3u);
    EXPECT_EQ(ord[0].vec, (DimVector{0, 1}));
    EXPECT_EQ(ord[1].vec, (DimVector{1, 1}));
    EXPECT_EQ(ord[2].vec, (DimVector{1, 0}));
    std::vector<GammaElement> one{o.minus[0]};
    EXPECT_EQ(normal_order(one).size(), 1u);
}

TEST(NormalOrder, DirectedOnRepresentations)
{
    for (int n : {3, 4}) {
        auto t = repfield::type_a(n, 3);
        auto s = ValuedGraphSpec::from_quiver(t.spec());
        auto o = gamma_orbits(s);
        auto find = [&](const DimVector& v) {
            for (int i = 0; i < t.size(); ++i)
                if (DimVector(t.entry(i).dim.begin(), t.entry(i).dim.end()) == v)
                    return i;
            return -1;
        };
        for (const auto& list : {normal_order(o.minus)}) {
            for (size_t a = 0; a < list.size(); ++a)
                for (size_t b = a + 1; b < list.size(); ++b) {
                    const int x = find(list[a].vec), y = find(list[b].vec);
                    EXPECT_EQ(t.ext(x, y), 0);
                    EXPECT_EQ(t.hom(y, x), 0);
                }
        }
        auto plus = normal_order(o.plus);
        for (size_t a = 0; a < plus.size(); ++a)
            for (size_t b = a + 1; b < plus.size(); ++b) {
                const int x = find(plus[a].vec), y = find(plus[b].vec);
                EXPECT_EQ(t.ext(y, x), 0);
                EXPECT_EQ(t.hom(x, y), 0);
            }
    }
}

// Exp is the ordered product over Gamma_- in normal order, and the reverse-ordered product over Gamma_+.
TEST(NormalOrder, FactorizesExp)
{
    for (int n : {2, 3}) {
        auto t = repfield::type_a(n, 2);
        auto s = ValuedGraphSpec::from_quiver(t.spec());
        auto o = gamma_orbits(s);
        auto alg = hallcore::HallAlgebra<Specialized>(std::make_shared<hallcore::QuiverCategory>("a", t),
                                                      repfield::DimVec(static_cast<size_t>(n), 2));
        auto index = [&](const GammaElement& g) {
            for (int i = 0; i < t.size(); ++i)
                if (DimVector(t.entry(i).dim.begin(), t.entry(i).dim.end()) == g.vec)
                    return i;
            return -1;
        };
        std::vector<int> minus, plus;
        for (const auto& g : normal_order(o.minus))
            minus.push_back(index(g));
        for (const auto& g : normal_order(o.plus))
            plus.insert(plus.begin(), index(g));
        std::vector<int> simples;
        for (int v = 0; v < n; ++v)
            simples.push_back(alg.category().simple_index(v));
        EXPECT_TRUE(hallcore::exp_product_identity(alg, minus, simples).passed());
        EXPECT_TRUE(hallcore::exp_product_identity(alg, plus, simples).passed());
    }
}

TEST(Spec, JsonAndValidation)
{
    auto s = ValuedGraphSpec::from_json(nlohmann::json{{"a0", 2}, {"a1", 1}, {"d0", 1}, {"d1", 2}});
    EXPECT_EQ(s.euler, (IntMatrix{{2, -2}, {0, 1}}));
    auto g = ValuedGraphSpec::from_json(nlohmann::json::parse(R"({"rank":2,"d":[1,1],"euler":[[1,-1],[0,1]]})"));
    EXPECT_EQ(coxeter_matrix(g), coxeter_matrix(a_n(2)));
    EXPECT_THROW(ValuedGraphSpec::rank2(2, 1, 1, 1), std::invalid_argument);
    EXPECT_THROW(ValuedGraphSpec::from_json(nlohmann::json::parse(R"({"rank":2,"d":[1,1],"euler":[[1,0],[-1,1]]})")),
                 std::invalid_argument);
    EXPECT_THROW(ValuedGraphSpec::from_json(nlohmann::json::parse(R"({"rank":2,"d":[2,1],"euler":[[2,-1],[0,1]]})")),
                 std::invalid_argument);
}

// The Gamma_+ order read with larger levels first does not factorize Exp on A2.
TEST(NormalOrder, LevelDescendingPlusOrderFails)
{
    auto t = repfield::type_a(2, 2);
    auto alg = hallcore::HallAlgebra<Specialized>(std::make_shared<hallcore::QuiverCategory>("a", t), {2, 2});
    const auto& c = alg.category();
    const int s0 = c.index_of("S_0"), s1 = c.index_of("S_1"), e = c.index_of("E_10");
    // S_0 = c(gamma_{S_1}) has level 1. Level-descending order: S_0, S_1, E; neither direction works.
    EXPECT_FALSE(hallcore::exp_product_identity(alg, {e, s1, s0}, {s1, s0}).passed());
    EXPECT_FALSE(hallcore::exp_product_identity(alg, {s0, s1, e}, {s1, s0}).passed());
    EXPECT_TRUE(hallcore::exp_product_identity(alg, {s0, e, s1}, {s1, s0}).passed());
}
