#pragma once

#include "hallforge/check.hpp"
#include "hallforge/exactnum/laurent.hpp"
#include "hallforge/hallcore/category.hpp"
#include "hallforge/jordansym/partition.hpp"
#include "hallforge/repfield/fp.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>

namespace hallforge::jordansym {

using repfield::FpMatrix;

/// I_lambda = k[x]/x^{lambda_1} + ... as a nilpotent operator on F_p^{|lambda|} in Jordan form.
FpMatrix jordan_matrix(const Partition& lambda, int p);
/// Jordan type of a nilpotent matrix from the ranks of its powers; throws if not nilpotent.
Partition jordan_type(const FpMatrix& a, int p);
/// The partition with rank sequence ranks[k] = rank of x^k, ranks[0] = dimension.
Partition partition_from_ranks(const std::vector<int>& ranks);

/// q^{sum_{i,j} (min(i,j) - delta_ij) a_i a_j} prod_i |GL(a_i, q)| for lambda = (1^{a_1} 2^{a_2} ...).
LaurentPoly aut_order_jordan(const Partition& lambda);
/// Units of End(I_lambda) counted one by one; capped by caps::jordan_end_dim.
mpz_class aut_order_jordan_bruteforce(const Partition& lambda, int p);

/// (quotient type, sub type) -> number of invariant subspaces U of I_lambda with U = sub, I_lambda/U = quotient.
using JordanCensus = std::map<std::pair<Partition, Partition>, long>;
/// Capped by caps::jordan_size on |lambda|.
JordanCensus census_jordan(const Partition& lambda, int p);
/// F^lambda_{mu,nu}: invariant subspaces of type nu with quotient of type mu.
long hall_number_jordan(const Partition& mu, const Partition& nu, const Partition& lambda, int p);

/// dim Hom(I_mu, I_nu) and dim Ext^1(I_mu, I_nu) from the map f -> x f - f x on Hom_k.
int hom_dim_jordan(const Partition& mu, const Partition& nu, int p);
int ext_dim_jordan(const Partition& mu, const Partition& nu, int p);
/// |Ext^1(I_mu, I_nu)_L| for every middle term L, from an enumeration of the cocycles.
std::map<Partition, Rational> ext_middle_counts(const Partition& mu, const Partition& nu, int p);

/// Nilpotent k[x]-modules over F_p with Jordan blocks of size at most max_part; q specialized to p.
class JordanCategory : public hallcore::FinitaryCategory<Specialized> {
public:
    JordanCategory(int p, int max_part);

    std::string name() const override { return "jordan"; }
    const Specialized& domain() const override { return domain_; }
    int rank() const override { return 1; }
    int num_indecomposables() const override { return max_part_; }
    std::string label(int i) const override { return "I_" + std::to_string(i + 1); }
    hallcore::DimVec dim(int i) const override { return {i + 1}; }
    int simple_index(int) const override { return 0; }
    int hom(int i, int j) const override { return std::min(i, j) + 1; }
    int ext(int i, int j) const override { return std::min(i, j) + 1; }
    bool hereditary() const override { return true; }
    Rational aut(const hallcore::Multiplicities& m) const override;
    std::vector<hallcore::SubquotientTerm<Rational>> subquotients(const hallcore::Multiplicities& k) const override;

    int p() const { return p_; }
    Partition partition_of(const hallcore::Multiplicities& m) const;
    hallcore::Multiplicities class_of(const Partition& lambda) const;

private:
    int p_;
    int max_part_;
    Specialized domain_;
};

/// Exp * sum_r (-1)^r q^{binom(r,2)} [I_(1^r)] = [0] = the same product reversed, up to length `order`.
CheckOutcome steinitz_inverse_check(int order, int p);
/// Exp^{-1}, computed as a geometric series, has support on the classes (1^r) only.
CheckOutcome inverse_support_check(int order, int p);
/// F^lambda_{mu,nu} = F^lambda_{nu,mu} for |lambda| <= max_size.
CheckOutcome commutativity_check(int max_size, int p);
/// F^L_{MN} |Aut M| |Aut N| |Hom(M,N)| = |Ext^1(M,N)_L| |Aut L| for |L| <= max_size.
CheckOutcome riedtmann_jordan_check(int max_size, int p);
/// Closed-form |Aut I_lambda| against the unit count, |lambda| <= max_size.
CheckOutcome aut_closed_form_check(int max_size, int p);

} // namespace hallforge::jordansym
