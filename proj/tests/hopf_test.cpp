#include <gtest/gtest.h>

#include "hopfkit/builtins.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

const Field& Q() { return Field::get(FieldSpec::rational()); }

HopfPtr z2() { return cyclic_group_algebra(2, Q()); }

SparseVec el(const HopfAlgebra& h, const std::string& label) {
    auto i = h.index_of(label);
    if (!i) throw std::invalid_argument("no basis element " + label);
    return h.basis_vec(*i);
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
    const HopfData& x = a.data();
    const HopfData& y = b.data();
    return x.dim == y.dim && x.mult == y.mult && x.unit == y.unit && x.comult == y.comult && x.counit == y.counit &&
           x.antipode == y.antipode;
}

}  // namespace

TEST(VerifyAxioms, GroupAlgebraPasses) {
    const CheckList r = verify_axioms(*z2());
    EXPECT_TRUE(r.ok()) << r.first_failure();
    EXPECT_EQ(oracle::check_algebra_and_antipode(*z2()), "");
}

TEST(VerifyAxioms, ZeroAntipodeFailsWithWitness) {
    HopfData d = z2()->data();
    for (auto& s : d.antipode) s.clear();
    const HopfPtr bad = HopfAlgebra::unchecked(d);
    const CheckList r = verify_axioms_uncached(*bad, {VerifyMode::full, Exec::serial});
    const Check* c = r.find("antipode");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_FALSE(c->witness.empty());
    EXPECT_NE(oracle::check_algebra_and_antipode(*bad), "");
    EXPECT_THROW(HopfAlgebra::create(d), VerificationError);
}

TEST(VerifyAxioms, ShapeErrorsAreRejected) {
    HopfData d = z2()->data();
    d.mult.pop_back();
    EXPECT_THROW(HopfAlgebra::create(d), std::invalid_argument);
}

TEST(Uqsl2, ThreeIsTwentySevenDimensionalAndVerifies) {
    const HopfPtr u = uqsl2(3);
    EXPECT_EQ(u->dim(), 27u);
    const CheckList r = verify_axioms_uncached(*u, {VerifyMode::full, Exec::parallel});
    EXPECT_TRUE(r.ok()) << r.first_failure();
    EXPECT_EQ(oracle::check_algebra_and_antipode(*u), "");
    EXPECT_EQ(oracle::check_bialgebra(*u, u->generators()), "");
}

TEST(Uqsl2, DefiningRelations) {
    const HopfPtr u = uqsl2(3);
    const Field& f = u->field();
    const Scalar q = f.root();
    const SparseVec E = el(*u, "E"), F = el(*u, "F"), K = el(*u, "K"), Kinv = el(*u, "K^2");
    EXPECT_EQ(u->mul(K, E), scaled(u->mul(E, K), q * q));
    EXPECT_EQ(u->mul(K, F), scaled(u->mul(F, K), (q * q).inv()));
    EXPECT_EQ(u->mul(K, Kinv), u->one());
    const SparseVec comm = axpy(u->mul(E, F), -f.one(), u->mul(F, E));
    EXPECT_EQ(comm, scaled(axpy(K, -f.one(), Kinv), (q - q.inv()).inv()));
    EXPECT_TRUE(u->mul(E, u->mul(E, E)).empty());
    EXPECT_TRUE(u->mul(F, u->mul(F, F)).empty());
    EXPECT_EQ(u->delta(K), u->mul2(u->delta(K), u->delta(u->one())));
    EXPECT_EQ(u->S(E), scaled(u->mul(E, Kinv), -f.one()));
    EXPECT_EQ(u->S(F), scaled(u->mul(K, F), -f.one()));
}

TEST(Taft, NineDimensionalAndVerifies) {
    const HopfPtr t = taft(3);
    EXPECT_EQ(t->dim(), 9u);
    EXPECT_TRUE(verify_axioms_uncached(*t, {VerifyMode::full, Exec::serial}).ok());
    EXPECT_EQ(oracle::check_algebra_and_antipode(*t), "");
    EXPECT_EQ(oracle::check_bialgebra(*t, t->generators()), "");
}

TEST(Dual, GroupAlgebraDoubleDualIsIdentity) {
    const HopfPtr d = dual(*z2());
    EXPECT_TRUE(verify_axioms(*d).ok());
    const HopfPtr dd = dual(*d);
    EXPECT_TRUE(same_structure(*dd, *z2()));
}

TEST(Dual, TransposesStructure) {
    const HopfPtr t = taft(3);
    const HopfPtr d = dual(*t);
    const std::size_t n = t->dim();
    // (e^i e^j)(e_k) = coefficient of e_i (x) e_j in Delta(e_k).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec prod = oracle::dense(*d, d->product(i, j), n);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec dk = oracle::delta(*t, oracle::basis(*t, k));
                EXPECT_EQ(prod[k], dk[i * n + j]);
            }
        }
    EXPECT_TRUE(verify_axioms_uncached(*d, {VerifyMode::full, Exec::serial}).ok());
    EXPECT_TRUE(same_structure(*dual(*d), *t));
}

TEST(Dual, Uqsl2ThreeVerifies) {
    const HopfPtr d = dual(*uqsl2(3));
    EXPECT_EQ(d->dim(), 27u);
    EXPECT_TRUE(verify_axioms_uncached(*d, {VerifyMode::full, Exec::parallel}).ok());
}

TEST(Grouplike, Checks) {
    const HopfPtr u = uqsl2(3);
    EXPECT_TRUE(check_grouplike(*u, u->one()));
    EXPECT_FALSE(check_grouplike(*u, SparseVec{}));
    EXPECT_TRUE(check_grouplike(*u, el(*u, "K")));
    EXPECT_FALSE(check_grouplike(*u, el(*u, "E")));
}

TEST(Antipode, InverseComposesToIdentity) {
    for (const HopfPtr& h : {z2(), taft(3), uqsl2(3)}) {
        const Matrix s = h->antipode_matrix();
        EXPECT_TRUE((s * h->antipode_inverse_matrix()).is_identity());
        for (std::size_t i = 0; i < h->dim(); ++i) EXPECT_EQ(h->S(h->S_inv(h->basis_vec(i))), h->basis_vec(i));
    }
}

TEST(Modules, OneDimensionalFromCounitAndRejectsNonCharacters) {
    const HopfPtr t = taft(3);
    const ModuleRep k = one_dim_module(t, t->data().counit);
    EXPECT_TRUE(k.verify().ok());
    Vec bad = t->data().counit;
    bad[*t->index_of("E")] = t->field().one();
    EXPECT_THROW(one_dim_module(t, bad), std::invalid_argument);
}

TEST(Modules, TwistByIdentityIsIdentity) {
    const HopfPtr t = taft(3);
    const ModuleRep reg = regular_module(t);
    const ModuleRep tw = twisted_module(reg, t, Matrix::identity(t->field(), t->dim()));
    EXPECT_EQ(tw.actions(), reg.actions());
}

TEST(Modules, TwistAlongCompositionIsIteratedTwist) {
    const MapPtr outer = subalg_K_power(3, 1);
    const MapPtr inner = unit_map(outer->source());
    const MapPtr both = compose(*outer, *inner);
    const ModuleRep reg = regular_module(outer->target());
    const ModuleRep once = twisted_module(twisted_module(reg, outer->source(), outer->matrix()), inner->source(),
                                          inner->matrix());
    const ModuleRep direct = twisted_module(reg, both->source(), both->matrix());
    EXPECT_EQ(once.actions(), direct.actions());
    EXPECT_TRUE(direct.verify().ok());
}

TEST(Modules, TensorProductIsAModule) {
    const HopfPtr t = taft(3);
    const ModuleRep x = tensor_module(regular_module(t), one_dim_module(t, t->data().counit));
    EXPECT_TRUE(x.verify().ok());
}

TEST(ContentHash, IgnoresMetadataAndTracksConstants) {
    HopfData d = z2()->data();
    d.metadata["note"] = "changed";
    const HopfPtr same = HopfAlgebra::create(d);
    EXPECT_EQ(same->content_hash(), z2()->content_hash());
    EXPECT_NE(dual(*taft(3))->content_hash(), taft(3)->content_hash());
}
