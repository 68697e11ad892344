#pragma once

#include "hallforge/repfield/fp.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hallforge::repfield {

using DimVec = std::vector<int>;
/// An isomorphism class, as multiplicities over the entries of an IndecomposableTable.
using Multiplicities = std::vector<int>;

struct Arrow {
    int source = 0;
    int target = 0;
    std::string label;
};

/// One term of a relation: coefficient times a path, arrows listed in traversal order.
struct PathTerm {
    int coefficient = 1;
    std::vector<int> path;
};
using Relation = std::vector<PathTerm>;

struct QuiverSpec {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    int p = 2;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& v) const;
    int arrow_index(const std::string& label) const;
    bool hereditary() const { return relations.empty(); }

    /// Checks p prime, arrow endpoints, relation paths composable with common endpoints,
    /// and that the vertex order is a source order (every arrow goes from an earlier vertex
    /// to a later one, so Ext^1(S_j, S_i) = 0 for i < j).
    void validate() const;

    /// <a, b> = sum_v a_v b_v - sum_{arrows s->t} a_s b_t (Euler form of the path algebra).
    int euler(const DimVec& a, const DimVec& b) const;
};

struct Representation {
    DimVec dims;
    std::vector<FpMatrix> maps; // maps[a] has shape dims[target] x dims[source]

    int total_dim() const;
    friend bool operator==(const Representation&, const Representation&) = default;
};

void check_shape(const QuiverSpec& spec, const Representation& r);
Representation zero_representation(const QuiverSpec& spec);
Representation direct_sum(const Representation& a, const Representation& b);
/// Matrix of a path (arrows in traversal order) acting on r.
FpMatrix evaluate_path(const QuiverSpec& spec, const Representation& r, const std::vector<int>& path);
bool satisfies_relations(const QuiverSpec& spec, const Representation& r);
/// Applies the base change g_v at each vertex: maps[a] -> g_t maps[a] g_s^{-1}.
Representation conjugate(const QuiverSpec& spec, const Representation& r, const std::vector<FpMatrix>& g);

/// The linear map f -> (N_a f_s - f_t M_a)_a from sum_v Hom(M_v,N_v) to sum_a Hom(M_s,N_t).
/// Its kernel is Hom(M,N); relation-compatible cocycles modulo its image give Ext^1(M,N).
FpMatrix intertwiner_map(const QuiverSpec& spec, const Representation& m, const Representation& n);

int hom_dim(const QuiverSpec& spec, const Representation& m, const Representation& n);
/// Basis of Hom(M,N) as flattened tuples (f_v row-major, vertices in order), one per row.
FpMatrix hom_basis(const QuiverSpec& spec, const Representation& m, const Representation& n);
/// dim Ext^1 from cocycles (relation-compatible) modulo coboundaries.
int ext_dim_cocycle(const QuiverSpec& spec, const Representation& m, const Representation& n);
/// dim Ext^1 as hom_dim - Euler form. Hereditary quivers only.
int ext_dim_euler(const QuiverSpec& spec, const Representation& m, const Representation& n);

/// |Aut M| by enumerating End(M). Subject to the brute-force cap.
mpz_class aut_order_bruteforce(const QuiverSpec& spec, const Representation& m);
mpz_class gl_order(int n, int p);

struct Indecomposable {
    std::string label;
    DimVec dim;
    Representation rep;
};

/// Complete list of indecomposables for a scenario, with the Hom fingerprint matrix.
class IndecomposableTable {
public:
    IndecomposableTable(QuiverSpec spec, std::vector<Indecomposable> entries);

    const QuiverSpec& spec() const { return spec_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const Indecomposable& entry(int i) const { return entries_.at(static_cast<size_t>(i)); }
    int index_of(const std::string& label) const;
    /// dim Hom(X_i, X_j).
    int hom(int i, int j) const { return hom_[i][j]; }
    /// dim Ext^1(X_i, X_j), cocycle path.
    int ext(int i, int j) const { return ext_[i][j]; }
    const std::vector<std::vector<int>>& hom_matrix() const { return hom_; }

    DimVec dim_of(const Multiplicities& m) const;
    Representation realize(const Multiplicities& m) const;
    Multiplicities decompose(const Representation& x) const;
    Multiplicities unit(int i) const;

    /// "S_0^2+E_10"; "0" for the zero class.
    std::string format(const Multiplicities& m) const;
    Multiplicities parse(const std::string& text) const;

    /// |Aut| = prod |GL(m_i, p)| * p^(dim End - sum m_i^2). Applies when every summand has
    /// End = F_p and Homs between distinct summand types go one way only.
    std::optional<mpz_class> aut_order_formula(const Multiplicities& m) const;
    /// Brute force when within the cap, formula otherwise.
    mpz_class aut_order(const Multiplicities& m) const;

private:
    QuiverSpec spec_;
    std::vector<Indecomposable> entries_;
    std::vector<std::vector<int>> hom_;
    std::vector<std::vector<int>> ext_;
    struct SolverCache {
        std::mutex mu;
        std::map<std::vector<int>, std::shared_ptr<const std::vector<std::vector<mpq_class>>>> inverses;
    };
    std::shared_ptr<SolverCache> solvers_ = std::make_shared<SolverCache>();
};

/// All classes with the given dimension vector, in lexicographic order of multiplicities.
std::vector<Multiplicities> classes_of_dim(const IndecomposableTable& t, const DimVec& d);

/// |Ext^1(M,N)_K|: cocycle classes whose middle term is isomorphic to K. Hereditary only.
long ext_classes_with_middle(const IndecomposableTable& t, const Multiplicities& m, const Multiplicities& n,
                             const Multiplicities& k);

/// All subrepresentations U of K tallied by (class of K/U, class of U).
struct SubquotientCensus {
    std::map<std::pair<Multiplicities, Multiplicities>, long> counts;
    std::map<DimVec, long> by_sub_dim;
    long total = 0;
};
SubquotientCensus census(const IndecomposableTable& t, const Representation& k);

/// F^K_{MN}: subobjects U of K with U = N and K/U = M.
long hall_number(const IndecomposableTable& t, const Multiplicities& m, const Multiplicities& n,
                 const Representation& k);

/// F^K_{MN} |Aut M| |Aut N| |Hom(M,N)| == |Ext^1(M,N)_K| |Aut K|.
bool riedtmann_check(const IndecomposableTable& t, const Multiplicities& m, const Multiplicities& n,
                     const Multiplicities& k);

} // namespace hallforge::repfield
