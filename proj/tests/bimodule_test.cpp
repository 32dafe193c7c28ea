#include <gtest/gtest.h>

#include "hopfkit/bimodule.hpp"
#include "hopfkit/builtins.hpp"

using namespace hopfkit;

namespace {

struct Case {
    std::string name;
    ComodulePtr algebra;
};

std::vector<Case> cases() {
    return {{"k_over_Z2", trivial_comodule(builtin_hopf("group_algebra(n=2)"))},
            {"Z2_regular", regular_comodule(builtin_hopf("group_algebra(n=2)"))},
            {"k_over_taft3", trivial_comodule(taft(3))},
            {"taft3_regular", regular_comodule(taft(3))},
            {"K_group_regular", regular_comodule(k_power(3, 1))}};
}

}  // namespace

class BimoduleProperties : public ::testing::TestWithParam<Case> {};

TEST_P(BimoduleProperties, RegularBimoduleVerifies) {
    const BimodulePtr p = regular_bimodule(GetParam().algebra);
    EXPECT_TRUE(verify_bimodule(*p).ok()) << verify_bimodule(*p).first_failure();
    EXPECT_TRUE(verify_bimodule(*direct_sum(*p, *p)).ok());
}

TEST_P(BimoduleProperties, TensorWithLIsP) {
    const BimodulePtr p = regular_bimodule(GetParam().algebra);
    const BimodulePtr pp = direct_sum(*p, *p);
    const TensorOverL t = tensor_over_L(*pp, *p);
    EXPECT_EQ(t.module->dim(), pp->dim());
    EXPECT_TRUE(verify_bimodule(*t.module).ok());
    EXPECT_EQ(t.relation_rank + t.module->dim(), pp->dim() * p->dim());
}

// Zig-zag identities for the left dual, plus ev and coev being morphisms.
TEST_P(BimoduleProperties, LeftDualZigZags) {
    const BimodulePtr p = regular_bimodule(GetParam().algebra);
    for (const BimodulePtr& q : {p, direct_sum(*p, *p)}) {
        const LeftDual d = left_dual(*q);
        EXPECT_TRUE(d.checks.ok()) << d.checks.first_failure();
        EXPECT_TRUE(d.zigzag_p.is_identity());
        EXPECT_TRUE(d.zigzag_dual.is_identity());
        EXPECT_EQ(d.dual->dim(), q->dim());
        EXPECT_EQ(d.maps.dim(), q->dim());
        EXPECT_TRUE(verify_bimodule(*d.dual).ok());
        // Dual basis: sum_i b^i(p) > b_i = p on every basis element.
        for (std::size_t x = 0; x < q->dim(); ++x) {
            const SparseVec px = unit_sparse(x, q->field());
            SparseVec acc;
            for (std::size_t i = 0; i < d.basis.elements.size(); ++i)
                acc = axpy(acc, q->field().one(), q->act_left(evaluate_map(*q, d.basis.functionals[i], px), d.basis.elements[i]));
            EXPECT_EQ(acc, px);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Algebras, BimoduleProperties, ::testing::ValuesIn(cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Bimodule, LeftLinearMapsOfLAreRightMultiplications) {
    const ComodulePtr l = regular_comodule(taft(3));
    const BimodulePtr p = regular_bimodule(l);
    EXPECT_EQ(left_linear_maps(*p).dim(), l->dim());
}

TEST(Bimodule, BrokenRightActionIsRejected) {
    BimoduleData d = regular_bimodule(regular_comodule(taft(3)))->data();
    std::swap(d.right[1], d.right[4]);
    EXPECT_FALSE(verify_bimodule(*HLBimodule::unchecked(d)).ok());
    EXPECT_THROW(HLBimodule::create(d), VerificationError);
}

TEST(Bimodule, TensorOverFieldIsTheOrdinaryTensorProduct) {
    const BimodulePtr k = regular_bimodule(trivial_comodule(taft(3)));
    const BimodulePtr kk = direct_sum(*k, *k);
    const BimodulePtr k3 = direct_sum(*kk, *k);
    const TensorOverL t = tensor_over_L(*kk, *k3);
    EXPECT_EQ(t.module->dim(), 6u);
    EXPECT_EQ(t.relation_rank, 0u);
}
