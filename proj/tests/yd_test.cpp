#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "hopfkit/yd.hpp"

using namespace hopfkit;

namespace {

std::vector<std::string> small_hopf() {
    return {"group_algebra(n=2)", "group_algebra(cayley=" + corpus::s3_cayley() + ")", "taft(n=3)",
            "dual_of(of=taft(n=3))", "k_power(d=1,n=3)"};
}

SparseVec el(const HopfAlgebra& h, const std::string& label) {
    auto i = h.index_of(label);
    if (!i) throw std::invalid_argument("no basis element " + label);
    return h.basis_vec(*i);
}

NatAlgebra nat_of(const ComodulePtr& l) { return nat_algebra(regular_bimodule_algebra(l)); }

struct Verdicts {
    bool yd = false;
    std::size_t rank = 0;
    bool nondegenerate = false;
    std::optional<bool> frobenius;
    std::optional<bool> coproduct_yd;
    bool commutative = false;
    std::optional<bool> symmetric;
    bool operator==(const Verdicts&) const = default;
};

Verdicts verdicts(const FrobeniusFormReport& r) {
    return {r.yd_morphism, r.pairing_rank, r.nondegenerate, r.frobenius_axioms, r.coproduct_yd_morphism, r.commutative,
            r.symmetric};
}

}  // namespace

class YDProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(YDProperties, StandardModulesVerify) {
    const HopfPtr h = builtin_hopf(GetParam());
    for (const YDModule& m : {trivial_yd(h), adjoint_yd(h), coadjoint_yd(h)}) {
        const CheckList r = verify_yd(m);
        EXPECT_TRUE(r.ok()) << r.first_failure();
        EXPECT_EQ(verify_yd(m, Exec::serial).ok(), r.ok());
    }
}

TEST_P(YDProperties, BraidingHexagons) {
    const HopfPtr h = builtin_hopf(GetParam());
    const YDModule a = adjoint_yd(h);
    const YDModule c = coadjoint_yd(h);
    const YDModule t = trivial_yd(h);
    for (const auto& [x, y, z] : {std::tuple{a, c, t}, std::tuple{t, a, c}, std::tuple{c, t, a}}) {
        const CheckList r = verify_hexagons(x, y, z);
        EXPECT_TRUE(r.ok()) << r.first_failure();
    }
    EXPECT_TRUE(invert(braiding(a, c)).has_value());
    // The braiding is a YD morphism X (x) Y -> Y (x) X.
    std::string w;
    EXPECT_TRUE(is_yd_morphism(yd_tensor(a, c), yd_tensor(c, a), braiding(a, c), &w)) << w;
}

TEST_P(YDProperties, DualZigZags) {
    const HopfPtr h = builtin_hopf(GetParam());
    for (const YDModule& m : {adjoint_yd(h), coadjoint_yd(h)}) {
        for (DualSide side : {DualSide::right, DualSide::left}) {
            const YDDual d = yd_dual(m, side);
            EXPECT_TRUE(d.checks.ok()) << d.checks.first_failure();
            EXPECT_TRUE(verify_yd(d.dual).ok());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Builtins, YDProperties, ::testing::ValuesIn(small_hopf()),
                         [](const auto& info) { return corpus::test_name(info.param); });

TEST(YD, TrivialBraidingIsTheSwap) {
    const HopfPtr h = taft(3);
    const YDModule a = adjoint_yd(h);
    EXPECT_EQ(braiding(trivial_yd(h), a), swap_matrix(h->field(), 1, a.dim));
}

TEST(YD, IdentityIsAMorphismAndGarbageIsNot) {
    const YDModule a = adjoint_yd(taft(3));
    EXPECT_TRUE(is_yd_morphism(a, a, Matrix::identity(a.hopf->field(), a.dim)));
    const Matrix s = a.hopf->antipode_matrix();
    EXPECT_FALSE(is_yd_morphism(a, a, s));
}

TEST(YD, BrokenCoactionFailsCompatibility) {
    const HopfPtr h = taft(3);
    YDModule m = coadjoint_yd(h);
    m.coaction = adjoint_yd(h).coaction;
    EXPECT_FALSE(verify_yd(m).ok());
}

TEST(YD, PivotOnTaft) {
    const HopfPtr h = taft(3);
    ASSERT_TRUE(verify_pivotal(*h, el(*h, "K")));
    const YDPivot p = yd_pivot(adjoint_yd(h), el(*h, "K"));
    EXPECT_TRUE(p.checks.ok()) << p.checks.first_failure();
    EXPECT_TRUE(invert(p.map).has_value());
}

TEST(TSpace, TrivialCoefficientsGiveTheDualSpace) {
    for (const std::string& desc : small_hopf()) {
        const HopfPtr h = builtin_hopf(desc);
        const TSpace t = t_space(regular_bimodule(trivial_comodule(h)));
        EXPECT_EQ(t.module.dim, h->dim()) << desc;
        EXPECT_TRUE(t.checks.ok()) << t.checks.first_failure();
        EXPECT_TRUE(verify_yd(t.module).ok()) << desc;
    }
}

TEST(Nat, GroupAlgebraWithTrivialCoefficients) {
    const HopfPtr h = builtin_hopf("group_algebra(n=2)");
    const NatAlgebra a = nat_of(trivial_comodule(h));
    EXPECT_EQ(a.algebra.module.dim, 2u);
    EXPECT_TRUE(a.checks.ok()) << a.checks.first_failure();
    EXPECT_TRUE(verify_yd_algebra(a.algebra).ok());
    EXPECT_TRUE(is_commutative(a.algebra));
    FormKind resolved{};
    const auto form = canonical_form(a, FormKind::automatic, &resolved);
    ASSERT_TRUE(form.has_value());
    EXPECT_EQ(resolved, FormKind::right_integral);
    const FrobeniusFormReport r = frobenius_form_check(a.algebra, *form, h->one());
    EXPECT_TRUE(r.yd_morphism);
    EXPECT_TRUE(r.nondegenerate);
    EXPECT_EQ(r.frobenius_axioms, std::optional<bool>(true));
    EXPECT_EQ(r.symmetric, std::optional<bool>(true));
}

TEST(Nat, ConvolutionProductOnTheDual) {
    // (f.g)(h) = f(h_1) g(h_2): on kZ2 the delta functions are orthogonal idempotents.
    const HopfPtr h = builtin_hopf("group_algebra(n=2)");
    const NatAlgebra a = nat_of(trivial_comodule(h));
    const Field& f = h->field();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Vec ci = zero_vec(f, 2), cj = zero_vec(f, 2);
            ci[i] = f.one();
            cj[j] = f.one();
            const SparseVec prod = a.algebra.mul(to_sparse(ci), to_sparse(cj));
            for (std::size_t g = 0; g < 2; ++g) {
                const SparseVec lhs = a.space.value(to_dense(prod, f, 2), h->basis_vec(g));
                const SparseVec fi = a.space.value(ci, h->basis_vec(g));
                const SparseVec fj = a.space.value(cj, h->basis_vec(g));
                const Scalar expect = (fi.empty() ? f.zero() : fi[0].coeff) * (fj.empty() ? f.zero() : fj[0].coeff);
                EXPECT_EQ(lhs.empty() ? f.zero() : lhs[0].coeff, expect);
            }
        }
}

TEST(Nat, TaftIntegralFormIsNotAYDMorphism) {
    const HopfPtr h = taft(3);
    const NatAlgebra a = nat_of(trivial_comodule(h));
    EXPECT_EQ(a.algebra.module.dim, 9u);
    const auto form = canonical_form(a, FormKind::integral);
    ASSERT_TRUE(form.has_value());
    const FrobeniusFormReport r = frobenius_form_check(a.algebra, *form);
    EXPECT_FALSE(r.yd_morphism);
    EXPECT_EQ(r.pairing_rank, 9u);
}

TEST(Nat, RegularCoefficientsUseTheCointegral) {
    const HopfPtr h = builtin_hopf("group_algebra(n=2)");
    const NatAlgebra a = nat_of(regular_comodule(h));
    FormKind resolved{};
    ASSERT_TRUE(canonical_form(a, FormKind::automatic, &resolved).has_value());
    EXPECT_EQ(resolved, FormKind::cointegral);
    EXPECT_FALSE(canonical_form(a, FormKind::integral).has_value());
    EXPECT_TRUE(verify_yd_algebra(a.algebra).ok());
}

TEST(Nat, EndomorphismAlgebraOfADirectSum) {
    const ComodulePtr l = trivial_comodule(builtin_hopf("group_algebra(n=2)"));
    const BimodulePtr p = regular_bimodule(l);
    const LeftDual d = left_dual(*direct_sum(*p, *p));
    const BimoduleAlgebra e = endomorphism_algebra(d);
    EXPECT_EQ(e.object->dim(), 4u);
    const NatAlgebra a = nat_algebra(e);
    EXPECT_TRUE(a.checks.ok()) << a.checks.first_failure();
    EXPECT_EQ(a.algebra.module.dim, 8u);
    EXPECT_TRUE(verify_yd_algebra(a.algebra).ok());
}

// Rescaling the form by a nonzero scalar leaves every verdict unchanged.
TEST(FormRescaling, VerdictsAreInvariant) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    struct Setup {
        HopfPtr h;
        ComodulePtr l;
        FormKind kind;
        std::optional<SparseVec> pivot;
    };
    const HopfPtr z2 = builtin_hopf("group_algebra(n=2)");
    const HopfPtr t = taft(3);
    const HopfPtr s3 = builtin_hopf("group_algebra(cayley=" + corpus::s3_cayley() + ")");
    const std::vector<Setup> setups{{z2, trivial_comodule(z2), FormKind::right_integral, z2->one()},
                                    {z2, regular_comodule(z2), FormKind::cointegral, z2->one()},
                                    {t, trivial_comodule(t), FormKind::integral, std::nullopt},
                                    {t, trivial_comodule(t), FormKind::right_integral, el(*t, "K")},
                                    {s3, trivial_comodule(s3), FormKind::right_integral, s3->one()}};
    for (const Setup& s : setups) {
        const NatAlgebra a = nat_of(s.l);
        const auto form = canonical_form(a, s.kind);
        ASSERT_TRUE(form.has_value());
        const Verdicts base = verdicts(frobenius_form_check(a.algebra, *form, s.pivot));
        for (int trial = 0; trial < 3; ++trial) {
            int p = 0;
            while (p == 0) p = num(rng);
            Scalar c = s.h->field().from_rational(p, den(rng));
            if (s.h->field().spec().kind == FieldKind::cyclotomic) c *= s.h->field().root();
            Vec scaled_form = *form;
            for (auto& x : scaled_form) x *= c;
            EXPECT_EQ(verdicts(frobenius_form_check(a.algebra, scaled_form, s.pivot)), base);
        }
    }
}
