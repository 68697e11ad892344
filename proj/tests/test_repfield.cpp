#include "hallforge/caps.hpp"
#include "hallforge/qcalc/qnumbers.hpp"
#include "hallforge/repfield/builders.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hallforge;
using namespace hallforge::repfield;

namespace {

Multiplicities cls(const IndecomposableTable& t, const std::string& s) { return t.parse(s); }

Representation rep(const IndecomposableTable& t, const std::string& s) { return t.realize(t.parse(s)); }

// Every tuple of arrow matrices of dimension d satisfying the relations, counted directly.
long count_representations(const QuiverSpec& spec, const DimVec& d)
{
    Representation r;
    r.dims = d;
    int cells = 0;
    for (const auto& a : spec.arrows) {
        r.maps.emplace_back(d[a.target], d[a.source]);
        cells += d[a.target] * d[a.source];
    }
    std::vector<int> digits(static_cast<size_t>(cells), 0);
    long count = 0;
    while (true) {
        int c = 0;
        for (auto& m : r.maps)
            for (auto& x : m.a)
                x = digits[c++];
        if (satisfies_relations(spec, r))
            ++count;
        int i = 0;
        while (i < cells && ++digits[i] == spec.p)
            digits[i++] = 0;
        if (i == cells)
            break;
    }
    return count;
}

// |GL(n, p)| by counting invertible n x n matrices.
long count_invertible(int n, int p)
{
    const int cells = n * n;
    std::vector<int> digits(static_cast<size_t>(cells), 0);
    long count = 0;
    while (true) {
        if (is_invertible(FpMatrix(n, n, digits, p), p))
            ++count;
        int i = 0;
        while (i < cells && ++digits[i] == p)
            digits[i++] = 0;
        if (i == cells)
            break;
    }
    return count;
}

FpMatrix random_invertible(int n, int p, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(0, p - 1);
    while (true) {
        FpMatrix m(n, n);
        for (auto& x : m.a)
            x = dist(rng);
        if (is_invertible(m, p))
            return m;
    }
}

std::vector<DimVec> dims_up_to(int nv, int bound)
{
    std::vector<DimVec> out;
    DimVec d(static_cast<size_t>(nv), 0);
    while (true) {
        out.push_back(d);
        int v = 0;
        while (v < nv && ++d[v] > bound)
            d[v++] = 0;
        if (v == nv)
            break;
    }
    return out;
}

} // namespace

TEST(Fp, RrefAndNullspace)
{
    FpMatrix m(2, 3, {1, 2, 0, 2, 4, 1}, 3);
    EXPECT_EQ(rank(m, 3), 2);
    FpMatrix ns = nullspace(m, 3);
    ASSERT_EQ(ns.rows, 1);
    FpMatrix v = transpose(ns);
    EXPECT_TRUE(mul(m, v, 3).is_zero());
}

TEST(Fp, InverseRoundTrip)
{
    std::mt19937 rng(7);
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 4; ++n) {
            FpMatrix g = random_invertible(n, p, rng);
            EXPECT_EQ(mul(g, inverse(g, p), p), FpMatrix::identity(n));
        }
}

TEST(Fp, SubspaceCountsMatchGaussianBinomials)
{
    for (int p : {2, 3})
        for (int n = 0; n <= 4; ++n) {
            long expected = 0;
            for (int k = 0; k <= n; ++k)
                expected += qcalc::q_binomial(n, k).specialize(Rational(p)).to_long();
            EXPECT_EQ(static_cast<long>(all_subspaces(n, p).size()), expected) << "n=" << n << " p=" << p;
        }
}

TEST(Quiver, SourceOrderIsValidated)
{
    QuiverSpec spec;
    spec.vertices = {"0", "1"};
    spec.arrows = {{1, 0, "a"}};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.arrows = {{0, 1, "a"}};
    spec.p = 4;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.p = 5;
    EXPECT_NO_THROW(spec.validate());
}

TEST(Quiver, RelationEndpointsAreValidated)
{
    QuiverSpec spec = comm_square(2).spec();
    spec.relations = {{{1, {1, 3}}, {-1, {0}}}};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.relations = {{{1, {0, 3}}}};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Quiver, A2HomValues)
{
    auto t = type_a(2, 2);
    const auto& s = t.spec();
    EXPECT_EQ(s.vertices, (std::vector<std::string>{"1", "0"}));
    // E = (k -1-> k). S_0 sits at the sink, so it is the socle of E and S_1 is the top:
    // f : E -> S_0 needs f_0 * 1 = 0, while f : E -> S_1 is free at vertex 1.
    EXPECT_EQ(hom_dim(s, rep(t, "E_10"), rep(t, "S_0")), 0);
    EXPECT_EQ(hom_dim(s, rep(t, "S_0"), rep(t, "E_10")), 1);
    EXPECT_EQ(hom_dim(s, rep(t, "E_10"), rep(t, "S_1")), 1);
    EXPECT_EQ(hom_dim(s, rep(t, "S_1"), rep(t, "E_10")), 0);
    for (const char* x : {"S_0", "S_1", "E_10"})
        EXPECT_EQ(hom_dim(s, rep(t, x), rep(t, x)), 1);
    EXPECT_EQ(hom_dim(s, rep(t, "S_0"), rep(t, "S_1")), 0);
}

TEST(Quiver, A2ExtValues)
{
    auto t = type_a(2, 3);
    const auto& s = t.spec();
    EXPECT_EQ(ext_dim_cocycle(s, rep(t, "S_0"), rep(t, "S_1")), 0);
    EXPECT_EQ(ext_dim_cocycle(s, rep(t, "S_1"), rep(t, "S_0")), 1);
    EXPECT_EQ(ext_dim_cocycle(s, rep(t, "E_10"), rep(t, "E_10")), 0);
    EXPECT_EQ(ext_dim_euler(s, rep(t, "S_1"), rep(t, "S_0")), 1);
}

TEST(Quiver, EulerAndCocycleExtAgree)
{
    for (int n = 1; n <= 4; ++n)
        for (int p : {2, 3}) {
            auto t = type_a(n, p);
            for (int i = 0; i < t.size(); ++i)
                for (int j = 0; j < t.size(); ++j) {
                    const auto& a = t.entry(i).rep;
                    const auto& b = t.entry(j).rep;
                    EXPECT_EQ(ext_dim_cocycle(t.spec(), a, b), ext_dim_euler(t.spec(), a, b));
                    EXPECT_EQ(t.ext(i, j), ext_dim_euler(t.spec(), a, b));
                }
        }
}

TEST(Quiver, EulerExtRejectsBoundQuiver)
{
    auto t = comm_square(2);
    EXPECT_THROW(ext_dim_euler(t.spec(), t.entry(0).rep, t.entry(1).rep), std::logic_error);
}

TEST(Quiver, CommSquareExtUsesTheRelation)
{
    // The relation is a second syzygy: it must not create Ext^1 between non-adjacent vertices.
    auto t = comm_square(2);
    const int s1 = t.index_of("E_1"), s4 = t.index_of("E_4"), s2 = t.index_of("E_2");
    EXPECT_EQ(t.ext(s1, s4), 0);
    EXPECT_EQ(t.ext(s1, s2), 1);
    EXPECT_EQ(t.ext(s4, s1), 0);
    const int e123 = t.index_of("E_123");
    EXPECT_EQ(t.ext(e123, s4), ext_dim_cocycle(t.spec(), t.entry(e123).rep, t.entry(s4).rep));
}

TEST(Quiver, AutOrders)
{
    for (int p : {2, 3, 5}) {
        auto t = type_a(2, p);
        EXPECT_EQ(t.aut_order(cls(t, "S_0")), p - 1);
        EXPECT_EQ(t.aut_order(cls(t, "S_0+S_1")), (p - 1) * (p - 1));
    }
    auto v = single_vertex(2);
    EXPECT_EQ(v.aut_order(cls(v, "k^2")), 6);
}

TEST(Quiver, AutBruteForceMatchesCountedGl)
{
    for (int p : {2, 3})
        for (int n = 1; n <= (p == 2 ? 3 : 2); ++n) {
            auto v = single_vertex(p);
            Multiplicities m{n};
            mpz_class counted = count_invertible(n, p);
            EXPECT_EQ(aut_order_bruteforce(v.spec(), v.realize(m)), counted);
            EXPECT_EQ(gl_order(n, p), counted);
        }
}

TEST(Quiver, AutFormulaAgreesWithBruteForce)
{
    for (int p : {2, 3}) {
        auto t = type_a(2, p);
        for (const auto& d : dims_up_to(2, 2))
            for (const auto& m : classes_of_dim(t, d)) {
                auto f = t.aut_order_formula(m);
                ASSERT_TRUE(f.has_value()) << t.format(m);
                EXPECT_EQ(*f, aut_order_bruteforce(t.spec(), t.realize(m))) << t.format(m) << " p=" << p;
            }
    }
    auto sq = comm_square(2);
    for (const auto& d : dims_up_to(4, 1))
        for (const auto& m : classes_of_dim(sq, d))
            if (auto f = sq.aut_order_formula(m))
                EXPECT_EQ(*f, aut_order_bruteforce(sq.spec(), sq.realize(m))) << sq.format(m);
}

TEST(Quiver, AutCapIsEnforced)
{
    auto v = single_vertex(3);
    EXPECT_THROW(aut_order_bruteforce(v.spec(), v.realize({4})), CapExceeded);
}

TEST(Quiver, FormatAndParse)
{
    auto t = type_a(2, 2);
    Multiplicities m = t.parse("S_0^2 + E_10");
    EXPECT_EQ(t.format(m), "S_0^2+E_10");
    EXPECT_EQ(t.format(t.parse("0")), "0");
    EXPECT_THROW(t.parse("S_7"), std::invalid_argument);
    EXPECT_THROW(t.parse("S_0^"), std::invalid_argument);
    EXPECT_THROW(t.parse("S_0++S_1"), std::invalid_argument);
}

TEST(Quiver, DecomposeBasics)
{
    auto t = type_a(2, 2);
    for (int i = 0; i < t.size(); ++i)
        EXPECT_EQ(t.decompose(t.entry(i).rep), t.unit(i));
    Representation split;
    split.dims = {1, 1};
    split.maps = {FpMatrix(1, 1)};
    EXPECT_EQ(t.format(t.decompose(split)), "S_0+S_1");
}

TEST(Quiver, DecomposeRoundTrip)
{
    std::mt19937 rng(2024);
    std::vector<IndecomposableTable> tables;
    tables.push_back(single_vertex(3));
    tables.push_back(type_a(2, 2));
    tables.push_back(type_a(3, 3));
    tables.push_back(type_a(4, 2));
    tables.push_back(comm_square(2));
    tables.push_back(comm_square(3));
    for (const auto& t : tables) {
        const int p = t.spec().p;
        for (int trial = 0; trial < 100; ++trial) {
            Multiplicities m(static_cast<size_t>(t.size()), 0);
            std::uniform_int_distribution<int> pick(0, t.size() - 1);
            const int parts = 1 + trial % 3;
            for (int k = 0; k < parts; ++k)
                ++m[pick(rng)];
            Representation x = t.realize(m);
            std::vector<FpMatrix> g;
            for (int d : x.dims)
                g.push_back(random_invertible(d, p, rng));
            EXPECT_EQ(t.decompose(conjugate(t.spec(), x, g)), m) << t.format(m);
        }
    }
}

TEST(Quiver, HomMatrixInvertibleAndDimsDistinct)
{
    for (const auto& t : {type_a(3, 2), comm_square(2), single_vertex(2)}) {
        for (int i = 0; i < t.size(); ++i)
            for (int j = i + 1; j < t.size(); ++j)
                EXPECT_NE(t.entry(i).dim, t.entry(j).dim);
        // Decompose falls back to the full matrix; an invertible matrix recovers every unit.
        for (int i = 0; i < t.size(); ++i)
            EXPECT_EQ(t.decompose(t.entry(i).rep), t.unit(i));
    }
}

// Mass formula: sum over classes of |GL_d| / |Aut M| = number of representations of dim d.
// Checks that the fixture tables are complete.
TEST(Quiver, TablesAreComplete)
{
    struct Case {
        IndecomposableTable t;
        int bound;
    };
    std::vector<Case> cases = {{type_a(2, 2), 2}, {type_a(2, 3), 2}, {type_a(3, 2), 1},
                               {comm_square(2), 1}, {comm_square(3), 1}, {single_vertex(2), 3}};
    for (const auto& c : cases) {
        const QuiverSpec& s = c.t.spec();
        for (const auto& d : dims_up_to(s.num_vertices(), c.bound)) {
            mpz_class gl = 1;
            for (int x : d)
                gl *= gl_order(x, s.p);
            mpq_class mass = 0;
            for (const auto& m : classes_of_dim(c.t, d))
                mass += mpq_class(gl) / c.t.aut_order(m);
            EXPECT_EQ(mass, count_representations(s, d)) << "p=" << s.p;
        }
    }
    // (1,2,2,1) on the square: catches a missing non-thin module in the middle.
    auto sq = comm_square(2);
    DimVec d{1, 2, 2, 1};
    mpz_class gl = gl_order(2, 2) * gl_order(2, 2);
    mpq_class mass = 0;
    for (const auto& m : classes_of_dim(sq, d))
        mass += mpq_class(gl) / sq.aut_order(m);
    EXPECT_EQ(mass, count_representations(sq.spec(), d));
}

TEST(Hall, SingleVertexCounts)
{
    auto v = single_vertex(2);
    EXPECT_EQ(hall_number(v, {1}, {1}, v.realize({2})), 3);
    for (int p : {2, 3}) {
        auto w = single_vertex(p);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 4; ++b) {
                long expected = qcalc::q_binomial(a + b, b).specialize(Rational(p)).to_long();
                EXPECT_EQ(hall_number(w, {a}, {b}, w.realize({a + b})), expected);
            }
    }
}

TEST(Hall, A2Examples)
{
    auto t = type_a(2, 2);
    const auto e = rep(t, "E_10");
    EXPECT_EQ(hall_number(t, cls(t, "S_1"), cls(t, "S_0"), e), 1);
    EXPECT_EQ(hall_number(t, cls(t, "S_0"), cls(t, "S_1"), e), 0);
    for (const char* x : {"S_0", "E_10", "S_0+S_1", "S_1^2+E_10"})
        EXPECT_EQ(hall_number(t, cls(t, x), cls(t, "0"), rep(t, x)), 1);
    EXPECT_EQ(hall_number(t, cls(t, "S_1"), cls(t, "S_1"), e), 0);
}

TEST(Hall, ExtClassExamples)
{
    auto v = single_vertex(2);
    EXPECT_EQ(ext_classes_with_middle(v, {1}, {1}, {2}), 1);
    auto t = type_a(2, 2);
    EXPECT_EQ(ext_classes_with_middle(t, cls(t, "S_1"), cls(t, "S_0"), cls(t, "E_10")), 1);
    EXPECT_EQ(ext_classes_with_middle(t, cls(t, "S_1"), cls(t, "S_0"), cls(t, "S_0+S_1")), 1);
    auto t3 = type_a(2, 3);
    EXPECT_EQ(ext_classes_with_middle(t3, cls(t3, "S_1"), cls(t3, "S_0"), cls(t3, "E_10")), 2);
    EXPECT_THROW(ext_classes_with_middle(comm_square(2), {0}, {0}, {0}), std::logic_error);
}

TEST(Hall, PartitionProperty)
{
    // For a semisimple K the invariant subspace tuples are all subspace tuples.
    for (int p : {2, 3}) {
        auto t = type_a(2, p);
        auto k = rep(t, "S_0^2+S_1");
        SubquotientCensus c = census(t, k);
        for (const auto& [d, n] : c.by_sub_dim) {
            long expected = qcalc::q_binomial(2, d[1]).specialize(Rational(p)).to_long() *
                            qcalc::q_binomial(1, d[0]).specialize(Rational(p)).to_long();
            EXPECT_EQ(n, expected);
        }
        long summed = 0;
        for (const auto& [key, n] : c.counts)
            summed += n;
        EXPECT_EQ(summed, c.total);
    }
    // Summing F over all classes of each dimension reproduces the per-dimension totals.
    auto t = type_a(3, 2);
    auto k = rep(t, "E_21+E_10+S_1");
    SubquotientCensus c = census(t, k);
    std::map<DimVec, long> from_classes;
    for (const auto& [key, n] : c.counts)
        from_classes[t.dim_of(key.second)] += n;
    EXPECT_EQ(from_classes, c.by_sub_dim);
}

TEST(Hall, RiedtmannExhaustiveA2)
{
    for (int p : {2, 3}) {
        auto t = type_a(2, p);
        int checked = 0;
        const int bound = p == 2 ? 4 : 3;
        for (const auto& dk : dims_up_to(2, bound)) {
            if (dk[0] + dk[1] > bound)
                continue;
            for (const auto& dn : dims_up_to(2, bound)) {
                if (dn[0] > dk[0] || dn[1] > dk[1])
                    continue;
                DimVec dm{dk[0] - dn[0], dk[1] - dn[1]};
                for (const auto& k : classes_of_dim(t, dk))
                    for (const auto& m : classes_of_dim(t, dm))
                        for (const auto& n : classes_of_dim(t, dn)) {
                            EXPECT_TRUE(riedtmann_check(t, m, n, k))
                                << t.format(m) << " " << t.format(n) << " " << t.format(k);
                            ++checked;
                        }
            }
        }
        EXPECT_GT(checked, 50);
    }
}

TEST(Hall, SplitProductWhenHomAndExtVanish)
{
    // Hom(N,M) = 0 = Ext^1(M,N): the only extension is split and F^{M+N}_{M,N} = 1.
    auto t = type_a(3, 2);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            if (t.hom(j, i) != 0 || t.ext(i, j) != 0)
                continue;
            Multiplicities sum = t.unit(i);
            ++sum[j];
            EXPECT_EQ(hall_number(t, t.unit(i), t.unit(j), t.realize(sum)), 1);
        }
}

TEST(Hall, CensusCapIsEnforced)
{
    auto v = single_vertex(5);
    EXPECT_THROW(census(v, v.realize({7})), CapExceeded);
}

TEST(Json, RoundTrip)
{
    for (const auto& t : {type_a(3, 3), comm_square(2)}) {
        auto j = table_to_json(t);
        auto back = table_from_json(j);
        ASSERT_EQ(back.size(), t.size());
        for (int i = 0; i < t.size(); ++i) {
            EXPECT_EQ(back.entry(i).label, t.entry(i).label);
            EXPECT_EQ(back.entry(i).rep, t.entry(i).rep);
        }
        EXPECT_EQ(back.hom_matrix(), t.hom_matrix());
    }
}

TEST(Json, RejectsBadInput)
{
    auto j = table_to_json(type_a(2, 2));
    auto bad = j;
    bad["p"] = 6;
    EXPECT_THROW(table_from_json(bad), std::invalid_argument);
    bad = j;
    bad["indecomposables"][1]["matrices"]["a10"] = {{1, 1}};
    EXPECT_THROW(table_from_json(bad), std::invalid_argument);
    bad = j;
    bad["quiver"]["arrows"][0] = {"0", "1", "a10"};
    EXPECT_THROW(table_from_json(bad), std::invalid_argument);
}
