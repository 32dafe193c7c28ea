#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "hopfkit/hopf.hpp"
#include "hopfkit/maps.hpp"

namespace hopfkit {

// Left H-comodule algebra L. mult[i*dim+j] = e_i e_j; coaction[i] is
// delta(e_i) over the pair index h*dim+k of h_h (x) e_k.
struct ComoduleData {
    HopfPtr hopf;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<SparseVec> mult;
    SparseVec unit;
    std::vector<SparseVec> coaction;
    bool exact_asserted = false;
    bool indecomposable_asserted = false;
    std::map<std::string, std::string> metadata;

    void validate_shape() const;
};

class ComoduleAlgebra;
using ComodulePtr = std::shared_ptr<const ComoduleAlgebra>;

class ComoduleAlgebra {
public:
    static ComodulePtr create(ComoduleData data);
    static ComodulePtr unchecked(ComoduleData data);

    const HopfPtr& hopf() const noexcept { return data_.hopf; }
    const Field& field() const { return data_.hopf->field(); }
    std::size_t dim() const noexcept { return data_.dim; }
    const std::string& label(std::size_t i) const { return data_.basis.at(i); }
    const ComoduleData& data() const noexcept { return data_; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return data_.mult[i * data_.dim + j]; }
    const SparseVec& unit() const noexcept { return data_.unit; }
    const SparseVec& coaction(std::size_t i) const { return data_.coaction[i]; }
    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
    SparseVec coact(const SparseVec& x) const;
    SparseVec basis_vec(std::size_t i) const { return unit_sparse(i, field()); }
    Matrix left_mult(const SparseVec& x) const;
    std::string format(const SparseVec& x) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    explicit ComoduleAlgebra(ComoduleData data);

private:
    ComoduleData data_;
};

CheckList verify_comodule_algebra(const ComoduleAlgebra& l, Exec exec = Exec::parallel);

// (L, delta_f) over the target of f, delta_f(a) = f(a_{-1}) (x) a_0.
ComodulePtr pushforward_coaction(const ComoduleAlgebra& l, const BialgebraMap& f);

struct FFrobeniusOptions {
    std::uint64_t seed = 0;
    int attempts = 64;
    Exec exec = Exec::parallel;
};

struct FFrobeniusResult {
    bool exists = false;
    SparseVec element;
    std::size_t kernel_dim = 0;
    bool prefilter_applicable = false;  // L is the source algebra with delta = Delta
    bool prefilter_g_in_image = false;
    std::string search;                 // how the representative was found
    std::vector<std::string> warnings;
    std::vector<std::string> findings;
    CheckList checks;
};

// Kernel of {a l - chi(l_{-1}) l_0 a = 0} and {f(a_{-1}) (x) a_0 = f(g')gbar (x) a},
// then an invertible representative, re-verified against both equations.
FFrobeniusResult f_frobenius_element(const BialgebraMap& f, const ComoduleAlgebra& l, FFrobeniusOptions opts = {});

// Does a satisfy both defining equations (invertibility checked separately)?
CheckList check_f_frobenius(const BialgebraMap& f, const ComoduleAlgebra& l, const SparseVec& a);

}  // namespace hopfkit
