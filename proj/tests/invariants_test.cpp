#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hopfkit/invariants.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

SparseVec el(const HopfAlgebra& h, const std::string& label) {
    auto i = h.index_of(label);
    if (!i) throw std::invalid_argument("no basis element " + label);
    return h.basis_vec(*i);
}

Scalar pair(const Vec& a, const Vec& b) {
    Scalar s = a.at(0).field()->zero();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec times(const Vec& v, const Scalar& c) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

}  // namespace

class InvariantProperties : public ::testing::TestWithParam<std::string> {};

// One-dimensional kernels, nonzero pairing, and each defining identity
// checked on every basis element with the dense oracle.
TEST_P(InvariantProperties, DefiningIdentitiesHold) {
    const HopfPtr h = builtin_hopf(GetParam());
    const InvariantBundle& b = invariants(*h);
    const std::size_t n = h->dim();
    const Field& f = h->field();
    EXPECT_EQ(b.integral_kernel_dim, 1u);
    EXPECT_EQ(b.cointegral_kernel_dim, 1u);
    EXPECT_TRUE(pair(b.cointegral, b.integral).is_one());
    EXPECT_TRUE(b.checks.ok()) << b.checks.first_failure();

    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = oracle::basis(*h, i);
        EXPECT_EQ(oracle::mul(*h, ei, b.integral), times(b.integral, h->counit(i))) << "left integral at " << i;
        EXPECT_EQ(oracle::mul(*h, b.integral, ei), times(b.integral, b.alpha[i])) << "modular function at " << i;
        const Vec d = oracle::delta(*h, ei);
        Vec co(n, f.zero());
        Vec gl(n, f.zero());
        for (std::size_t p = 0; p < n * n; ++p) {
            co[p % n] += d[p] * b.cointegral[p / n];
            gl[p / n] += d[p] * b.cointegral[p % n];
        }
        const Vec one = oracle::dense(*h, h->unit(), n);
        EXPECT_EQ(co, times(one, b.cointegral[i])) << "right cointegral at " << i;
        EXPECT_EQ(gl, times(oracle::dense(*h, b.g, n), b.cointegral[i])) << "distinguished grouplike at " << i;
    }
    EXPECT_TRUE(is_character(*h, b.alpha));
    EXPECT_TRUE(check_grouplike(*h, b.g));
    EXPECT_EQ(convolve(*h, b.alpha_bar, b.alpha), h->data().counit);
    EXPECT_EQ(b.unimodular, b.alpha == h->data().counit);
    EXPECT_EQ(b.dual_unimodular, b.g == h->one());
    std::string w;
    EXPECT_TRUE(verify_radford(h, b, &w)) << w;
}

TEST_P(InvariantProperties, SerialAndParallelAgree) {
    const HopfPtr h = builtin_hopf(GetParam());
    std::size_t ks = 0, kp = 0;
    EXPECT_EQ(left_integral(*h, &ks, Exec::serial), left_integral(*h, &kp, Exec::parallel));
    EXPECT_EQ(ks, kp);
    EXPECT_EQ(right_cointegral(*h, nullptr, Exec::serial), right_cointegral(*h, nullptr, Exec::parallel));
}

INSTANTIATE_TEST_SUITE_P(Builtins, InvariantProperties, ::testing::ValuesIn(corpus::hopf_descriptors()),
                         [](const auto& info) { return corpus::test_name(info.param); });

TEST(Invariants, GroupAlgebraIntegralIsTheSumOfElements) {
    const HopfPtr h = builtin_hopf("group_algebra(n=2)");
    const Vec& l = invariants(*h).integral;
    EXPECT_EQ(l[0], l[1]);
    EXPECT_FALSE(l[0].is_zero());
    EXPECT_TRUE(invariants(*h).unimodular);
    EXPECT_TRUE(invariants(*h).dual_unimodular);
}

TEST(Invariants, Uqsl2ThreeIsUnimodularWithGrouplikeKSquared) {
    const HopfPtr u = uqsl2(3);
    const InvariantBundle& b = invariants(*u);
    EXPECT_TRUE(b.unimodular);
    EXPECT_EQ(b.g, el(*u, "K^2"));
    EXPECT_FALSE(b.dual_unimodular);
    std::string w;
    EXPECT_TRUE(verify_pivotal(*u, el(*u, "K"), &w)) << w;
    EXPECT_FALSE(verify_pivotal(*u, u->one()));
}

TEST(Invariants, TaftModularFunctionIsAPrimitiveCubeRoot) {
    const HopfPtr t = taft(3);
    const InvariantBundle& b = invariants(*t);
    const Scalar a = b.alpha[*t->index_of("K")];
    EXPECT_FALSE(a.is_one());
    EXPECT_TRUE(a.pow(3).is_one());
    EXPECT_FALSE(b.unimodular);
    // Exponent is recorded; the sign convention depends on presentation.
    const int e = root_exponent(a);
    EXPECT_TRUE(e == 1 || e == 2) << e;
}

TEST(Invariants, TaftIsSelfDualUpToUnimodularity) {
    const InvariantBundle& t = invariants(*taft(3));
    const InvariantBundle& d = invariants(*builtin_hopf("dual_of(of=taft(n=3))"));
    EXPECT_FALSE(t.unimodular);
    EXPECT_FALSE(t.dual_unimodular);
    EXPECT_FALSE(d.unimodular);
    EXPECT_FALSE(d.dual_unimodular);
}

TEST(Invariants, DualSwapsUnimodularities) {
    const InvariantBundle& u = invariants(*uqsl2(3));
    const InvariantBundle& d = invariants(*builtin_hopf("dual_of(of=uqsl2(n=3))"));
    EXPECT_EQ(u.unimodular, d.dual_unimodular);
    EXPECT_EQ(u.dual_unimodular, d.unimodular);
}

TEST(Invariants, RootExponent) {
    const Field& f = Field::get(FieldSpec::cyclotomic(9));
    EXPECT_EQ(root_exponent(f.root().pow(4)), 4);
    EXPECT_EQ(root_exponent(f.one()), 0);
    EXPECT_EQ(root_exponent(f.from_int(2)), -1);
}
