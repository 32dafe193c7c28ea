#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/exec.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

// Raw structure constants. Products and coproducts are stored per basis
// index: mult[i*dim+j] = e_i e_j, comult[i] = Delta(e_i) over the pair
// index p*dim+q of e_p (x) e_q, antipode[i] = S(e_i).
struct HopfData {
    const Field* field = nullptr;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<SparseVec> mult;
    SparseVec unit;
    std::vector<SparseVec> comult;
    Vec counit;
    std::vector<SparseVec> antipode;
    // Free-form provenance shown in reports (builtin descriptor, parameters).
    std::map<std::string, std::string> metadata;

    // Throws std::invalid_argument on inconsistent sizes or indices.
    void validate_shape() const;
};

enum class VerifyMode { automatic, full, generated };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::automatic;
    Exec exec = Exec::parallel;
};

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

class HopfAlgebra {
public:
    // Verifies the axioms (cached by content hash) and throws
    // VerificationError with the failing report if any axiom fails.
    static HopfPtr create(HopfData data, VerifyOptions opts = {});
    // No axiom check; for building deliberately broken inputs and for the
    // verifier itself.
    static HopfPtr unchecked(HopfData data);

    const Field& field() const { return *data_.field; }
    std::size_t dim() const noexcept { return data_.dim; }
    const std::vector<std::string>& basis() const noexcept { return data_.basis; }
    const std::string& label(std::size_t i) const { return data_.basis.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;
    const HopfData& data() const noexcept { return data_; }
    const std::map<std::string, std::string>& metadata() const noexcept { return data_.metadata; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return data_.mult[i * data_.dim + j]; }
    const SparseVec& unit() const noexcept { return data_.unit; }
    const SparseVec& coproduct(std::size_t i) const { return data_.comult[i]; }
    const Scalar& counit(std::size_t i) const { return data_.counit[i]; }
    const SparseVec& antipode(std::size_t i) const { return data_.antipode[i]; }

    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
    // Product in H (x) H on pair indices.
    SparseVec mul2(const SparseVec& x, const SparseVec& y) const;
    SparseVec delta(const SparseVec& x) const;
    Scalar eps(const SparseVec& x) const;
    SparseVec S(const SparseVec& x) const;
    SparseVec S_inv(const SparseVec& x) const;
    SparseVec one() const { return data_.unit; }
    SparseVec basis_vec(std::size_t i) const { return unit_sparse(i, field()); }

    // Column j of left_mult(h) is e_h e_j.
    Matrix left_mult(std::size_t h) const;
    Matrix right_mult(std::size_t h) const;
    Matrix left_mult(const SparseVec& x) const;
    // Column i is S(e_i).
    Matrix antipode_matrix() const;
    const Matrix& antipode_inverse_matrix() const;

    // Basis indices that generate H as an algebra, found greedily by
    // closure under left multiplication.
    const std::vector<std::size_t>& generators() const;

    // SHA-256 over a canonical serialization of the structure constants.
    const std::string& content_hash() const;

    // "K^2" for a single basis vector, "(c)*a + (d)*b" otherwise, "0".
    std::string format(const SparseVec& x) const;
    std::string format(const Vec& x) const { return format(to_sparse(x)); }
    // Inverse of format; also accepts a bare scalar-free label list joined by '+'.
    SparseVec parse_element(const std::string& text) const;

    HopfAlgebra(const HopfAlgebra&) = delete;
    HopfAlgebra& operator=(const HopfAlgebra&) = delete;

private:
    explicit HopfAlgebra(HopfData data);

    HopfData data_;
    std::map<std::string, std::size_t> label_index_;
    mutable std::once_flag gens_once_, hash_once_, sinv_once_;
    mutable std::vector<std::size_t> generators_;
    mutable std::string hash_;
    mutable Matrix antipode_inverse_;
};

// The seven Hopf axioms plus invertibility of S. In generated mode the
// multiplicative identities are checked only for generators in the left
// slot; each identity defines a subalgebra, so this is equivalent.
CheckList verify_axioms(const HopfAlgebra& h, VerifyOptions opts = {});
CheckList verify_axioms_uncached(const HopfAlgebra& h, VerifyOptions opts);
VerifyMode resolve_mode(const HopfAlgebra& h, VerifyMode mode);

HopfPtr dual(const HopfAlgebra& h);

bool check_grouplike(const HopfAlgebra& h, const SparseVec& g);
// Convolution inverse of a grouplike is S(g); throws if g is not invertible.
SparseVec grouplike_inverse(const HopfAlgebra& h, const SparseVec& g);

// Algebra-map test for a covector: phi(xy) = phi(x)phi(y), phi(1) = 1.
bool is_character(const HopfAlgebra& h, const Vec& phi, std::string* witness = nullptr);

// Left module over H: action[h] is the matrix of e_h (column j = e_h . v_j).
class ModuleRep {
public:
    ModuleRep(HopfPtr h, std::size_t dim, std::vector<Matrix> action, std::string name = {});

    const HopfPtr& algebra() const noexcept { return h_; }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& action(std::size_t h) const { return action_.at(h); }
    const std::vector<Matrix>& actions() const noexcept { return action_; }
    Matrix act(const SparseVec& x) const;
    const std::string& name() const noexcept { return name_; }

    // rho(xy) = rho(x)rho(y), rho(1) = id.
    CheckList verify(Exec exec = Exec::parallel) const;

private:
    HopfPtr h_;
    std::size_t dim_;
    std::vector<Matrix> action_;
    std::string name_;
};

ModuleRep one_dim_module(const HopfPtr& h, const Vec& phi, std::string name = {});
ModuleRep regular_module(const HopfPtr& h);
// M twisted by a linear map f: H' -> H given as a dim H x dim H' matrix.
ModuleRep twisted_module(const ModuleRep& m, const HopfPtr& source, const Matrix& f);
// M twisted by an algebra automorphism of H given as a matrix (e.g. S^2).
ModuleRep twisted_module(const ModuleRep& m, const Matrix& automorphism);
// Tensor product module via Delta.
ModuleRep tensor_module(const ModuleRep& x, const ModuleRep& y);

// Is t: X -> Y (dim Y x dim X) a module map?
bool is_module_map(const ModuleRep& x, const ModuleRep& y, const Matrix& t, std::string* witness = nullptr);

}  // namespace hopfkit
