#include "hallforge/exactnum/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hallforge;

namespace {

LaurentPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> nterms(0, 4), exps(-3, 4), coef(-5, 5), den(1, 3);
    LaurentPoly p;
    for (int i = nterms(rng); i > 0; --i)
        p.add_term(exps(rng), Rational(coef(rng), den(rng)));
    return p;
}

const LaurentPoly q = LaurentPoly::q();

} // namespace

TEST(Rational, ArithmeticAndNormalForm)
{
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
}

TEST(LaurentPoly, Examples)
{
    EXPECT_EQ((q - 1) * (q + 1), q * q - 1);
    EXPECT_EQ((q * q - 1).exact_div(q - 1), q + 1);
    EXPECT_THROW((q * q + 1).exact_div(q - 1), std::domain_error);
    EXPECT_THROW(q.exact_div(LaurentPoly()), std::domain_error);
    EXPECT_EQ((q.pow(3) + q.pow(-1)).exact_div(LaurentPoly::q_pow(-1)), q.pow(4) + 1);
    EXPECT_EQ((1 + q + q * q).specialize(2), Rational(7));
    EXPECT_EQ(LaurentPoly::q_pow(-1).specialize(2), Rational(1, 2));
    EXPECT_EQ(LaurentPoly::q_pow(3).specialize(3), Rational(27));
    EXPECT_THROW(q.specialize(0), std::domain_error);
}

TEST(LaurentPoly, LongDivisionAgainstMultiplication)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero())
            continue;
        EXPECT_EQ((a * b).exact_div(b), a);
    }
}

TEST(LaurentPoly, Rendering)
{
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    LaurentPoly p = 2 * q * q - LaurentPoly::q_pow(-1) + LaurentPoly(Rational(1, 2));
    EXPECT_EQ(p.to_string(), "-1*q^-1 + 1/2 + 2*q^2");
    EXPECT_EQ((1 + q).to_string(), "1 + 1*q");
}

TEST(LaurentPoly, RingAxiomsOnRandomTriples)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(LaurentPoly, SpecializeIsRingHomomorphism)
{
    std::mt19937 rng(8);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        for (Rational v : {Rational(2), Rational(3), Rational(-1, 2)}) {
            EXPECT_EQ((a * b).specialize(v), a.specialize(v) * b.specialize(v));
            EXPECT_EQ((a + b).specialize(v), a.specialize(v) + b.specialize(v));
        }
    }
}

TEST(Scalar, ArithAndMixingRejected)
{
    Scalar a = Rational(1, 2), b = Rational(1, 3);
    EXPECT_EQ(std::get<Rational>(scalar_arith(a, b, ArithOp::add)), Rational(5, 6));
    Scalar p = q * q - 1, d = q - 1;
    EXPECT_EQ(std::get<LaurentPoly>(scalar_arith(p, d, ArithOp::div)), q + 1);
    EXPECT_THROW(scalar_arith(a, p, ArithOp::mul), std::invalid_argument);
    EXPECT_THROW(scalar_arith(a, Scalar(Rational(0)), ArithOp::div), std::domain_error);
    EXPECT_THROW(scalar_arith(Scalar(q * q + 1), d, ArithOp::div), std::domain_error);
    EXPECT_EQ(specialize(p, Rational(3)), Rational(8));
    EXPECT_EQ(to_string(p), "-1 + 1*q^2");
}

TEST(QFraction, CyclotomicPolynomials)
{
    // Phi_6 = q^2 - q + 1, Phi_12 = q^4 - q^2 + 1.
    EXPECT_EQ(QFraction::cyclotomic(6), (QFraction::Poly{Rational(1), Rational(-1), Rational(1)}));
    EXPECT_EQ(QFraction::cyclotomic(12),
              (QFraction::Poly{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)}));
}

TEST(QFraction, CanonicalCancellation)
{
    QFraction a = QFraction(q * q - 1) / QFraction(q - 1);
    EXPECT_TRUE(a.is_laurent());
    EXPECT_EQ(a.to_laurent(), q + 1);
    QFraction half = QFraction(1) / QFraction(q + 1) + QFraction(q) / QFraction(q + 1);
    EXPECT_EQ(half, QFraction(1));
    QFraction z = QFraction(1) / QFraction(q - 1) + QFraction(1) / QFraction(1 - q);
    EXPECT_TRUE(z.is_zero());
    EXPECT_THROW(QFraction(1) / QFraction(q - 2), std::domain_error);
}

TEST(QFraction, FieldAxiomsAgreeWithSpecialization)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> k(1, 6);
    for (int i = 0; i < 60; ++i) {
        QFraction a = QFraction(random_poly(rng)) / QFraction(LaurentPoly::q_pow(k(rng)) - 1);
        QFraction b = QFraction(random_poly(rng)) / QFraction(LaurentPoly::q_pow(k(rng)) + 1);
        QFraction c = QFraction(random_poly(rng));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        for (Rational v : {Rational(2), Rational(5)}) {
            EXPECT_EQ((a * b + c).specialize(v), a.specialize(v) * b.specialize(v) + c.specialize(v));
        }
    }
}
