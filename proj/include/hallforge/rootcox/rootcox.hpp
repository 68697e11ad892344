#pragma once

#include "hallforge/exactnum/rational.hpp"
#include "hallforge/repfield/quiver.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hallforge::rootcox {

using DimVector = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

/// Valued graph data: symbol dims d_i and the Euler matrix C_ij = (alpha_i, alpha_j) in source order.
struct ValuedGraphSpec {
    std::vector<std::string> names;
    std::vector<long> d;
    IntMatrix euler;

    int rank() const { return static_cast<int>(d.size()); }
    /// C_ii = d_i > 0, C_ij = 0 below the diagonal, off-diagonal entries divisible by d_i and d_j.
    void validate() const;
    long form(const DimVector& x, const DimVector& y) const;

    /// Rank 2, vertices ordered (1, 0) with Ext^1(S_1, S_0) of dimension a_0 over End S_0 and a_1 over End S_1.
    static ValuedGraphSpec rank2(long a0, long a1, long d0, long d1);
    static ValuedGraphSpec from_quiver(const repfield::QuiverSpec& q);
    /// {"rank", "d", "euler"} or the rank-2 shorthand {"a0", "a1", "d0", "d1"}.
    static ValuedGraphSpec from_json(const nlohmann::json& j);
};

IntMatrix coxeter_matrix(const ValuedGraphSpec& spec);
DimVector apply(const IntMatrix& m, const DimVector& x);
IntMatrix inverse_integral(const IntMatrix& m);

struct GammaBases {
    std::vector<DimVector> minus; // gamma_{-i}: classes of the indecomposable projectives
    std::vector<DimVector> plus;  // gamma_i: classes of the indecomposable injectives
};
GammaBases gamma_bases(const ValuedGraphSpec& spec);

bool in_positive_cone(const DimVector& x);
bool in_negative_cone(const DimVector& x);

/// gamma_{-i,-k} = c^{-k}(gamma_{-i}) (sign = -1) or gamma_{i,k} = c^k(gamma_i) (sign = +1).
struct GammaElement {
    int sign = -1;
    int index = 0;
    int level = 0;
    DimVector vec;
};

struct GammaOrbits {
    std::vector<GammaElement> minus;
    std::vector<GammaElement> plus;
    /// Every orbit left K_0^+ before the depth bound.
    bool terminated = true;
};
GammaOrbits gamma_orbits(const ValuedGraphSpec& spec, int depth = 50);

/// beta_0 = alpha_0, beta_{-1} = -alpha_1, beta_{n+1} + beta_{n-1} = a_n beta_n with a_n = a_{n mod 2}.
/// Vectors are (coefficient of alpha_0, coefficient of alpha_1).
std::vector<DimVector> beta_sequence(long a0, long a1, int n_min, int n_max);

/// U_n(x) for every integer n, extending U_{-1} = 0, U_0 = 1 in both directions.
Rational chebyshev_u(int n, const Rational& x);
/// (lambda_n(t), mu_n(t)) = (U_{n-1}(t/2-1), U_n(t/2-1) + U_{n-1}(t/2-1)).
std::pair<Rational, Rational> chebyshev_lambda_mu(int n, long t);
/// beta_r from the Chebyshev closed form, same coordinates as beta_sequence.
DimVector beta_closed_form(long a0, long a1, int r);

/// (dim Hom(E_{-i,-k}, E_{-j,-r}), dim Ext^1(E_{-j,-r}, E_{-i,-k})) from the Euler form; r >= k.
/// The Ext entry is zero when r = k.
std::pair<long, long> preproj_dims(const ValuedGraphSpec& spec, int i, int k, int j, int r);

enum class TypeVerdict { finite, infinite, undecided };
std::string to_string(TypeVerdict v);
/// finite: orbits terminate and Gamma_+ = Gamma_-. infinite: an orbit reached the depth bound and the
/// symmetrized Euler form is not positive definite. undecided: depth reached on a definite form.
TypeVerdict classify_type(const ValuedGraphSpec& spec, int depth = 50);
bool finite_type_test(const ValuedGraphSpec& spec, int depth = 50);

/// Gamma_-: by level, then larger index first. Gamma_+: by level, then smaller index first, so that
/// M before N implies Ext^1(N, M) = 0 = Hom(M, N); Exp_+ is the product in the reverse of this order.
std::vector<GammaElement> normal_order(std::vector<GammaElement> elements);

std::string format(const DimVector& v);

} // namespace hallforge::rootcox
