#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfkit/comodule.hpp"

namespace hopfkit {

// L-bimodule P with a left H-coaction, H = L.hopf().
// left[l*dim+p] = l > p, right[p*dimL+l] = p < l, coaction[p] over h*dim+q.
struct BimoduleData {
    ComodulePtr algebra;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<SparseVec> left;
    std::vector<SparseVec> right;
    std::vector<SparseVec> coaction;
    std::map<std::string, std::string> metadata;

    void validate_shape() const;
};

class HLBimodule;
using BimodulePtr = std::shared_ptr<const HLBimodule>;

class HLBimodule {
public:
    static BimodulePtr create(BimoduleData data);
    static BimodulePtr unchecked(BimoduleData data);

    const ComodulePtr& algebra() const noexcept { return data_.algebra; }
    const HopfPtr& hopf() const noexcept { return data_.algebra->hopf(); }
    const Field& field() const { return data_.algebra->field(); }
    std::size_t dim() const noexcept { return data_.dim; }
    std::size_t algebra_dim() const noexcept { return data_.algebra->dim(); }
    const std::string& label(std::size_t i) const { return data_.basis.at(i); }
    const BimoduleData& data() const noexcept { return data_; }

    const SparseVec& left(std::size_t l, std::size_t p) const { return data_.left[l * data_.dim + p]; }
    const SparseVec& right(std::size_t p, std::size_t l) const { return data_.right[p * algebra_dim() + l]; }
    const SparseVec& coaction(std::size_t p) const { return data_.coaction[p]; }

    SparseVec act_left(const SparseVec& l, const SparseVec& p) const;
    SparseVec act_right(const SparseVec& p, const SparseVec& l) const;
    SparseVec coact(const SparseVec& p) const;
    std::string format(const SparseVec& x) const;

    explicit HLBimodule(BimoduleData data);

private:
    BimoduleData data_;
};

CheckList verify_bimodule(const HLBimodule& p, Exec exec = Exec::parallel);

// L as a bimodule over itself with coaction delta.
BimodulePtr regular_bimodule(const ComodulePtr& l);
BimodulePtr direct_sum(const HLBimodule& p, const HLBimodule& q);

// P (x)_L Q as the quotient of P (x) Q (pair index p*dimQ+q) by the
// balancing relations; the quotient basis is the set of non-pivot columns.
struct TensorOverL {
    BimodulePtr module;
    Matrix projection;               // dim quotient x (dimP*dimQ)
    std::vector<std::size_t> lift;   // quotient basis i <- pair index lift[i]
    std::size_t relation_rank = 0;

    SparseVec project(const SparseVec& pair) const { return projection.apply(pair); }
};

TensorOverL tensor_over_L(const HLBimodule& p, const HLBimodule& q);

// Left L-linear maps P -> L, vectorized as x[k*dimP+p] = coefficient of e_k in f(e_p).
Subspace left_linear_maps(const HLBimodule& p);
SparseVec evaluate_map(const HLBimodule& p, const Vec& f, const SparseVec& x);

// b_i = e_i and functionals b^i (vectorized maps) with sum_i b^i(p) > b_i = p.
struct DualBasisData {
    std::vector<SparseVec> elements;
    std::vector<Vec> functionals;
};

// Throws std::invalid_argument ("not projective as left L-module") if the
// system has no solution.
DualBasisData dual_basis(const HLBimodule& p, const Subspace& maps);

struct LeftDual {
    BimodulePtr dual;             // basis = basis of left_linear_maps(P)
    Subspace maps;
    DualBasisData basis;
    TensorOverL p_dual;           // P (x)_L dagger P
    TensorOverL dual_p;           // dagger P (x)_L P
    Matrix ev;                    // L x (P (x)_L dagger P)
    SparseVec coev_one;           // coev(1_L) in dagger P (x)_L P
    Matrix zigzag_p;              // (ev (x) id)(id (x) coev) on P
    Matrix zigzag_dual;           // (id (x) ev)(coev (x) id) on dagger P
    CheckList checks;
};

// Builds dagger P with (l > f < l')(p) = f(p < l) l' and coaction
// f_{-1} (x) f_0(p) = S(p_{-1}) f(p_0)_{-1} (x) f(p_0)_0, ev(p (x) f) = f(p) and
// coev(l) = b^i (x) b_i < l. Throws InconsistencyError if any morphism or
// zig-zag check fails.
LeftDual left_dual(const HLBimodule& p, Exec exec = Exec::parallel);

}  // namespace hopfkit
