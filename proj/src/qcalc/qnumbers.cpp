#include "hallforge/qcalc/qnumbers.hpp"

#include <vector>

namespace hallforge::qcalc {

LaurentPoly q_int(int n)
{
    LaurentPoly r;
    for (int i = 0; i < n; ++i)
        r.add_term(i, Rational(1));
    return r;
}

LaurentPoly q_factorial(int n)
{
    LaurentPoly r(1);
    for (int i = 1; i <= n; ++i)
        r *= q_int(i);
    return r;
}

LaurentPoly q_binomial(int n, int k)
{
    if (k < 0 || k > n)
        return {};
    return q_binomial_at<LaurentPoly>(n, k, LaurentPoly::q());
}

LaurentPoly gl_order(int n)
{
    LaurentPoly r(1);
    for (int j = 0; j < n; ++j)
        r *= LaurentPoly::q_pow(n) - LaurentPoly::q_pow(j);
    return r;
}

} // namespace hallforge::qcalc
