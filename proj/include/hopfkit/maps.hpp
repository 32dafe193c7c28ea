#pragma once

#include <memory>
#include <string>

#include "hopfkit/hopf.hpp"
#include "hopfkit/invariants.hpp"

namespace hopfkit {

// Bialgebra map f: source -> target; column j of the matrix is f(e'_j).
class BialgebraMap {
public:
    static std::shared_ptr<const BialgebraMap> create(HopfPtr source, HopfPtr target, Matrix f, std::string name = {});
    static CheckList verify(const HopfAlgebra& source, const HopfAlgebra& target, const Matrix& f);

    const HopfPtr& source() const noexcept { return source_; }
    const HopfPtr& target() const noexcept { return target_; }
    const Matrix& matrix() const noexcept { return f_; }
    const std::string& name() const noexcept { return name_; }
    SparseVec apply(const SparseVec& x) const;
    // Image of the source basis vector e'_j.
    const SparseVec& image(std::size_t j) const { return columns_.at(j); }
    std::size_t rank() const;

    BialgebraMap(HopfPtr source, HopfPtr target, Matrix f, std::string name);

private:
    HopfPtr source_;
    HopfPtr target_;
    Matrix f_;
    std::vector<SparseVec> columns_;
    std::string name_;
};

using MapPtr = std::shared_ptr<const BialgebraMap>;

MapPtr compose(const BialgebraMap& outer, const BialgebraMap& inner);

enum class PerfectMode { automatic, split, assert_injective, skip };
PerfectMode parse_perfect_mode(const std::string& s);

struct PerfectResult {
    enum class State { yes, no, asserted, skipped } state = State::skipped;
    std::string method;
    std::string to_string() const;
};

struct MapClassification {
    Vec chi;
    bool chi_is_character = false;
    bool frobenius = false;
    bool frobenius_via_alpha = false;
    bool tensor_frobenius = false;
    bool g_in_image = false;
    SparseVec f_of_source_g;
    PerfectResult perfect;
    std::vector<std::string> witnesses;
    CheckList checks;
};

// chi_f(h') = alpha_H(S_H(f(h'_1))) alpha_H'(h'_2), cross-checked against
// alpha_H(f(S'(h'_1))) alpha_H'(h'_2); throws InconsistencyError if the two
// routes differ.
Vec relative_modular_function(const BialgebraMap& f, const InvariantBundle& target, const InvariantBundle& source);

MapClassification classify_map(const BialgebraMap& f, PerfectMode mode = PerfectMode::automatic,
                               Exec exec = Exec::parallel);

// Does the free cover A^d -> M (e_i -> m_i) split A-linearly?
bool projective_test(const ModuleRep& m, Exec exec = Exec::parallel);
PerfectResult is_perfect(const BialgebraMap& f, PerfectMode mode, Exec exec = Exec::parallel);

bool g_in_image(const BialgebraMap& f, const SparseVec& g);

// sigma_X(1 (x) x) = g_H f(gbar_H') x (x) 1 as a matrix on X.
Matrix half_braiding(const BialgebraMap& f, const ModuleRep& x);
// H'-linearity k_chi (x) X_f -> X_f (x) k_chi and multiplicativity on X (x) Y.
CheckList verify_half_braiding(const BialgebraMap& f, const ModuleRep& x, const ModuleRep& y);

}  // namespace hopfkit
