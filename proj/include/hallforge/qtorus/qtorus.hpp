#pragma once

#include "hallforge/check.hpp"
#include "hallforge/exactnum/qfraction.hpp"
#include "hallforge/hallcore/hall_algebra.hpp"
#include "hallforge/qtorus/qplane.hpp"

namespace hallforge::qtorus {

/// Rank-2 data: a_0, a_1 and symmetrizers d_0, d_1 with a_0 d_0 = a_1 d_1; q_i = q^{d_i}.
struct TorusParams {
    long a0 = 1, a1 = 1, d0 = 1, d1 = 1;

    void validate() const;
    int relation_exponent() const { return static_cast<int>(a0 * a1); }
    std::string to_string() const;
};

/// Default truncation: total degree 10 when a_0 a_1 = 1, 8 otherwise.
int default_dilog_truncation(const TorusParams& t);

/// Left and right sides of [E_{q_0}(x_0), E_{q_1}(x_1)] = ... with [x, y] = x^{-1} y x y^{-1}, symbolic in q.
/// Throws std::invalid_argument unless a_0 a_1 is 1, 2 or 3.
std::pair<QPlaneSeries<QFraction>, QPlaneSeries<QFraction>> dilog_sides(const TorusParams& t, int truncation);
/// Compares the two sides; a failure names the lowest degree where they differ.
CheckOutcome dilog_identity_check(const TorusParams& t, int truncation);
/// E_q(x_1) E_q(x_0) = E_q(x_0) E_q(x_0 x_1) E_q(x_1) with x_1 x_0 = q x_0 x_1.
CheckOutcome pentagon_rearranged_check(int truncation);

/// (sum_r t^r sum_{lambda |- r} a_lambda(q)^{-1}) (sum_s (-1)^s q^{binom(s,2)} t^s / |GL(s,q)|) = 1 up to t^order.
CheckOutcome jordan_gl_identity_check(int order);

using SpecAlgebra = hallcore::HallAlgebra<Specialized>;

/// Rank 2: [M] -> t^{|M|}/|Aut M| written in the basis x_0^a x_1^b, x_i = t^{alpha_i}. Position 0 of the
/// source order is S_1 and position 1 is S_0. The relation exponent is <a0,a1> - <a1,a0> from the Euler form.
QPlaneSeries<Rational> integrate(const SpecAlgebra& alg, const hallcore::HallElement<Rational>& x);
/// Rank 1: [M] -> q^{<a,a> binom(n,2)} x^n / |Aut M| for M of length n.
qcalc::QSeries<Rational> integrate_rank1(const SpecAlgebra& alg, const hallcore::HallElement<Rational>& x);
/// Integration of products equals the product of integrals, for all pairs of basis classes, inside the truncation.
CheckOutcome integrate_hom_check(const SpecAlgebra& alg);

} // namespace hallforge::qtorus
