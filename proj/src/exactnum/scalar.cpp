#include "hallforge/exactnum/scalar.hpp"

#include <stdexcept>

namespace hallforge {

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op)
{
    if (a.index() != b.index())
        throw std::invalid_argument("scalar_arith: mixed Rational/LaurentPoly operands; specialize first");
    if (const auto* x = std::get_if<Rational>(&a)) {
        const auto& y = std::get<Rational>(b);
        switch (op) {
        case ArithOp::add: return *x + y;
        case ArithOp::sub: return *x - y;
        case ArithOp::mul: return *x * y;
        case ArithOp::div: return *x / y;
        }
    }
    const auto& x = std::get<LaurentPoly>(a);
    const auto& y = std::get<LaurentPoly>(b);
    switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x.exact_div(y);
    }
    throw std::logic_error("scalar_arith: unknown operation");
}

Rational specialize(const Scalar& s, const Rational& q_value)
{
    if (const auto* r = std::get_if<Rational>(&s))
        return *r;
    return std::get<LaurentPoly>(s).specialize(q_value);
}

std::string to_string(const Scalar& s)
{
    if (const auto* r = std::get_if<Rational>(&s))
        return r->to_string();
    return std::get<LaurentPoly>(s).to_string();
}

} // namespace hallforge
