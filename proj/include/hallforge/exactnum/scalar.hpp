#pragma once

#include "hallforge/exactnum/laurent.hpp"
#include "hallforge/exactnum/qfraction.hpp"
#include "hallforge/exactnum/rational.hpp"

#include <string>
#include <variant>

namespace hallforge {

/// Either a specialized value or a Laurent polynomial in q. Mixed arithmetic is rejected.
using Scalar = std::variant<Rational, LaurentPoly>;

enum class ArithOp { add, sub, mul, div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Rational specialize(const Scalar& s, const Rational& q_value);
std::string to_string(const Scalar& s);

/// Coefficient domain for computations at a fixed numeric value of q.
struct Specialized {
    using value_type = Rational;
    Rational q_value;

    value_type lift(const LaurentPoly& p) const { return p.specialize(q_value); }
    value_type q() const { return q_value; }
    std::string mode() const { return "specialized q=" + q_value.to_string(); }
};

/// Coefficient domain for computations symbolic in q.
struct Symbolic {
    using value_type = QFraction;

    value_type lift(const LaurentPoly& p) const { return QFraction(p); }
    value_type q() const { return QFraction::q(); }
    std::string mode() const { return "symbolic"; }
};

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const QFraction& f) { return f.to_string(); }

} // namespace hallforge
