#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hopfkit/comodule.hpp"

using namespace hopfkit;

namespace {

bool invertible_in(const ComoduleAlgebra& l, const SparseVec& a) { return invert(l.left_mult(a)).has_value(); }

}  // namespace

class ComoduleProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(ComoduleProperties, RegularAndTrivialVerify) {
    const HopfPtr h = builtin_hopf(GetParam());
    EXPECT_TRUE(verify_comodule_algebra(*regular_comodule(h)).ok());
    EXPECT_TRUE(verify_comodule_algebra(*trivial_comodule(h)).ok());
    EXPECT_EQ(verify_comodule_algebra(*regular_comodule(h), Exec::serial).ok(),
              verify_comodule_algebra(*regular_comodule(h), Exec::parallel).ok());
}

INSTANTIATE_TEST_SUITE_P(Builtins, ComoduleProperties, ::testing::ValuesIn(corpus::hopf_descriptors()),
                         [](const auto& info) { return corpus::test_name(info.param); });

TEST(Comodule, BrokenCoactionIsRejected) {
    ComoduleData d = regular_comodule(taft(3))->data();
    std::swap(d.coaction[1], d.coaction[2]);
    const ComodulePtr bad = ComoduleAlgebra::unchecked(d);
    EXPECT_FALSE(verify_comodule_algebra(*bad).ok());
    EXPECT_THROW(ComoduleAlgebra::create(d), VerificationError);
}

TEST(Comodule, PushforwardAlongInclusionIsAComoduleAlgebra) {
    const MapPtr f = subalg_K_power(3, 1);
    const ComodulePtr l = pushforward_coaction(*regular_comodule(f->source()), *f);
    EXPECT_EQ(l->hopf(), f->target());
    EXPECT_TRUE(verify_comodule_algebra(*l).ok());
}

TEST(FFrobenius, GroupOfKHasElementProportionalToK) {
    const MapPtr f = subalg_K_power(3, 1);
    const ComodulePtr l = regular_comodule(f->source());
    const FFrobeniusResult r = f_frobenius_element(*f, *l);
    ASSERT_TRUE(r.exists);
    EXPECT_EQ(r.kernel_dim, 1u);
    EXPECT_TRUE(r.prefilter_applicable);
    EXPECT_TRUE(r.prefilter_g_in_image);
    // K^{-2} = K at n = 3: a single basis term on K.
    ASSERT_EQ(r.element.size(), 1u);
    EXPECT_EQ(l->label(r.element[0].index), "K");
    EXPECT_TRUE(invertible_in(*l, r.element));
    EXPECT_TRUE(check_f_frobenius(*f, *l, r.element).ok());
    EXPECT_TRUE(r.checks.ok()) << r.checks.first_failure();
}

TEST(FFrobenius, NonElementsFailTheDefiningEquations) {
    const MapPtr f = subalg_K_power(3, 1);
    const ComodulePtr l = regular_comodule(f->source());
    EXPECT_FALSE(check_f_frobenius(*f, *l, l->unit()).ok());
    EXPECT_FALSE(check_f_frobenius(*f, *l, l->basis_vec(2)).ok());
}

TEST(FFrobenius, AbsentWhenGrouplikeMissesTheImage) {
    const MapPtr f = subalg_K_power(3, 3);
    const FFrobeniusResult r = f_frobenius_element(*f, *regular_comodule(f->source()));
    EXPECT_FALSE(r.exists);
    EXPECT_EQ(r.kernel_dim, 0u);
    EXPECT_TRUE(r.prefilter_applicable);
    EXPECT_FALSE(r.prefilter_g_in_image);
    EXPECT_TRUE(r.element.empty());
}

TEST(FFrobenius, IdentityOnGroupAlgebraUsesTheUnit) {
    const MapPtr f = builtin_map("identity_map(of=group_algebra(n=2))");
    const ComodulePtr l = regular_comodule(f->source());
    const FFrobeniusResult r = f_frobenius_element(*f, *l);
    ASSERT_TRUE(r.exists);
    EXPECT_TRUE(invertible_in(*l, r.element));
    EXPECT_TRUE(check_f_frobenius(*f, *l, r.element).ok());
}

TEST(FFrobenius, SearchIsDeterministicInTheSeed) {
    const MapPtr f = subalg_K_power(3, 1);
    const ComodulePtr l = regular_comodule(f->source());
    FFrobeniusOptions a;
    a.seed = 17;
    FFrobeniusOptions b = a;
    b.exec = Exec::serial;
    EXPECT_EQ(f_frobenius_element(*f, *l, a).element, f_frobenius_element(*f, *l, b).element);
}
