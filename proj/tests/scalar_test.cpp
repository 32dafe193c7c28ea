#include <gtest/gtest.h>

#include <random>

#include "hopfkit/scalar.hpp"

using namespace hopfkit;

namespace {

const Field& Q() { return Field::get(FieldSpec::rational()); }
const Field& Cyc(int n) { return Field::get(FieldSpec::cyclotomic(n)); }

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Scalar s = f.zero();
    Scalar zk = f.one();
    for (int k = 0; k < std::max(1, f.degree()); ++k) {
        s += f.from_rational(coef(rng), den(rng)) * zk;
        if (f.spec().kind == FieldKind::cyclotomic) zk *= f.root();
    }
    return s;
}

// x^k mod x^6 + x^3 + 1 by schoolbook long division on plain integers.
std::vector<long> phi9_power(int k) {
    std::vector<long> p(static_cast<std::size_t>(k) + 1, 0);
    p[static_cast<std::size_t>(k)] = 1;
    for (int d = k; d >= 6; --d) {
        const long c = p[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        p[static_cast<std::size_t>(d)] = 0;
        p[static_cast<std::size_t>(d - 3)] -= c;
        p[static_cast<std::size_t>(d - 6)] -= c;
    }
    p.resize(6, 0);
    return p;
}

std::string poly_literal(const std::vector<long>& p) {
    std::string s = "0";
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) s += " + (" + std::to_string(p[i]) + ")*z^" + std::to_string(i);
    return s;
}

}  // namespace

TEST(Field, RationalHasZeroAndOne) {
    EXPECT_TRUE(Q().zero().is_zero());
    EXPECT_TRUE(Q().one().is_one());
    EXPECT_FALSE(Q().one() == Q().zero());
}

TEST(Field, CyclotomicThreeRootSatisfiesPhi3) {
    const Field& f = Cyc(3);
    const Scalar z = f.root();
    EXPECT_TRUE((z * z + z + f.one()).is_zero());
    EXPECT_TRUE((z * z.pow(2)).is_one());
}

TEST(Field, InvalidSpecsRejected) {
    EXPECT_THROW(Field::get(FieldSpec::prime(4)), std::invalid_argument);
    EXPECT_THROW(Field::get(FieldSpec::cyclotomic(0)), std::invalid_argument);
    EXPECT_THROW(FieldSpec::parse("quaternion"), std::invalid_argument);
}

TEST(Scalar, RationalInverse) {
    EXPECT_EQ(Q().from_rational(2, 3).inv(), Q().from_rational(3, 2));
    EXPECT_THROW(Q().zero().inv(), std::domain_error);
}

TEST(Scalar, PrimeFieldArithmetic) {
    const Field& f = Field::get(FieldSpec::prime(7));
    EXPECT_EQ(f.from_int(3).inv(), f.from_int(5));
    EXPECT_EQ(f.from_int(-1), f.from_int(6));
    EXPECT_TRUE((f.from_int(4) + f.from_int(3)).is_zero());
}

TEST(Scalar, FieldMismatchThrows) {
    EXPECT_THROW((void)(Cyc(3).root() + Cyc(5).root()), std::invalid_argument);
}

TEST(Scalar, Zeta9PowersAgainstLongDivision) {
    const Field& f = Cyc(9);
    const Scalar z = f.root();
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(z.pow(k), f.parse(poly_literal(phi9_power(k)))) << "k=" << k;
    EXPECT_TRUE(z.pow(9).is_one());
    for (int k = 1; k < 9; ++k) EXPECT_FALSE(z.pow(k).is_one()) << "k=" << k;
}

TEST(Scalar, RootHasExactOrder) {
    for (int n : {1, 2, 3, 4, 5, 6, 7, 9, 12}) {
        const Field& f = Cyc(n);
        EXPECT_TRUE(f.root().pow(n).is_one()) << n;
        for (int k = 1; k < n; ++k) EXPECT_FALSE(f.root().pow(k).is_one()) << n << " " << k;
    }
}

TEST(Scalar, LiteralGrammar) {
    const Field& f = Cyc(3);
    const Scalar z = f.root();
    EXPECT_EQ(f.parse("1/2*z^2 - z + 3"), f.from_rational(1, 2) * z * z - z + f.from_int(3));
    EXPECT_EQ(f.parse("-7/14"), f.from_rational(-1, 2));
    EXPECT_THROW(f.parse("1/0"), std::exception);
    EXPECT_THROW(f.parse("2*w"), std::exception);
}

class FieldAxioms : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(FieldAxioms, RandomTriples) {
    const Field& f = Field::get(GetParam());
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Scalar a = random_scalar(f, rng);
        const Scalar b = random_scalar(f, rng);
        const Scalar c = random_scalar(f, rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
        // Printing and re-parsing is the identity on canonical forms.
        EXPECT_EQ(f.parse(a.to_string()), a);
        EXPECT_EQ(f.parse(f.parse(a.to_string()).to_string()).to_string(), a.to_string());
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(FieldSpec::rational(), FieldSpec::prime(101), FieldSpec::cyclotomic(3),
                                           FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(9),
                                           FieldSpec::cyclotomic(12)));

TEST(Integer, PromotesPastTheInlineRange) {
    Integer a(Integer::kSmallMax);
    Integer b = a + Integer(1);
    EXPECT_EQ(b.to_string(), "4611686018427387904");
    EXPECT_EQ((b - Integer(1)).to_string(), a.to_string());
    Integer big = b * b;
    EXPECT_EQ(big.to_string(), "21267647932558653966460912964485513216");
    EXPECT_EQ(divexact(big, b).to_string(), b.to_string());
}
