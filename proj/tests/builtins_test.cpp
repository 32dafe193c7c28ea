#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace hopfkit;

class BuiltinHopf : public ::testing::TestWithParam<std::string> {};

// Every generated algebra passes the full (not generator-reduced) check.
TEST_P(BuiltinHopf, FullAxiomCheck) {
    const HopfPtr h = builtin_hopf(GetParam());
    const CheckList r = verify_axioms_uncached(*h, {VerifyMode::full, Exec::parallel});
    EXPECT_TRUE(r.ok()) << r.first_failure();
    EXPECT_EQ(resolve_mode(*h, VerifyMode::full), VerifyMode::full);
}

TEST_P(BuiltinHopf, GeneratedModeAgreesWithFull) {
    const HopfPtr h = builtin_hopf(GetParam());
    EXPECT_EQ(verify_axioms_uncached(*h, {VerifyMode::generated, Exec::serial}).ok(),
              verify_axioms_uncached(*h, {VerifyMode::full, Exec::serial}).ok());
}

TEST_P(BuiltinHopf, DescriptorIsRegistered) {
    const HopfPtr h = builtin_hopf(GetParam());
    const auto d = builtin_descriptor(h.get());
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(builtin_hopf(*d), h);
}

INSTANTIATE_TEST_SUITE_P(Corpus, BuiltinHopf, ::testing::ValuesIn(corpus::hopf_descriptors()),
                         [](const auto& info) { return corpus::test_name(info.param); });

TEST(Builtins, Dimensions) {
    for (int n : {3, 5}) EXPECT_EQ(taft(n)->dim(), static_cast<std::size_t>(n * n));
    EXPECT_EQ(uqsl2(3)->dim(), 27u);
    EXPECT_EQ(k_power(9, 3)->dim(), 3u);
    EXPECT_EQ(k_power(9, 1)->dim(), 9u);
    EXPECT_EQ(base_field_hopf(Field::get(FieldSpec::rational()))->dim(), 1u);
    EXPECT_EQ(builtin_hopf("group_algebra(cayley=" + corpus::s3_cayley() + ")")->dim(), 6u);
}

TEST(Builtins, InvalidParametersAreRejected) {
    EXPECT_THROW(uqsl2(4), std::invalid_argument);
    EXPECT_THROW(uqsl2(1), std::invalid_argument);
    EXPECT_THROW(subalg_K_power(9, 2), std::invalid_argument);
    EXPECT_THROW(taft(1), std::invalid_argument);
    EXPECT_THROW(builtin("group_algebra(cayley=0 1;0 1)"), std::invalid_argument);
    EXPECT_THROW(builtin("no_such_thing(n=3)"), std::invalid_argument);
    EXPECT_THROW(builtin("taft(n=x)"), std::invalid_argument);
    EXPECT_THROW(builtin("uqsl2()"), std::invalid_argument);
    EXPECT_THROW(builtin_map("taft(n=3)"), std::invalid_argument);
}

TEST(Builtins, DescriptorsCanonicalize) {
    EXPECT_EQ(parse_descriptor(" taft( which_root = 2 , n=3 ) ").canonical(), "taft(n=3,which_root=2)");
    const Descriptor d = parse_descriptor("dual_of(of=taft(n=3))");
    EXPECT_EQ(d.name, "dual_of");
    EXPECT_EQ(d.params.at("of"), "taft(n=3)");
    EXPECT_EQ(builtin_hopf("taft(n=3)"), builtin_hopf("taft(which_root=2,n=3)"));
}

TEST(Builtins, InclusionsAreInjective) {
    for (const MapPtr& f : {inclusion_taft(3), subalg_K_power(3, 1), subalg_K_power(9, 3), unit_map(taft(3))})
        EXPECT_EQ(f->rank(), f->source()->dim());
}

TEST(Builtins, GroupAlgebraIntegralIsTheSum) {
    const HopfPtr h = builtin_hopf("group_algebra(n=2)");
    const Vec one = oracle::dense(*h, h->one(), 2);
    EXPECT_TRUE(one[0].is_one());
    EXPECT_TRUE(check_grouplike(*h, h->basis_vec(1)));
}

TEST(Builtins, WhichRootIsRecorded) {
    const HopfPtr t = taft(3, 1);
    EXPECT_EQ(t->metadata().at("which_root"), "1");
    EXPECT_NE(t->content_hash(), taft(3)->content_hash());
}

TEST(Builtins, NamesListIsComplete) {
    const auto names = builtin_names();
    for (const char* n : {"group_algebra", "dual_of", "taft", "uqsl2", "subalg_K_power", "unit_map", "counit_map",
                          "inclusion_taft", "regular_comodule"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}
