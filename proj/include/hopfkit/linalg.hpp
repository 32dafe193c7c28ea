#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hopfkit/exec.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vec = std::vector<Scalar>;

struct Term {
    std::uint32_t index;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<Term>;

Vec zero_vec(const Field& f, std::size_t n);
Vec to_dense(const SparseVec& v, const Field& f, std::size_t n);
SparseVec to_sparse(const Vec& v);
SparseVec unit_sparse(std::size_t i, const Field& f);
bool is_zero(const Vec& v);

// a + c*b, both sorted.
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec scaled(const SparseVec& v, const Scalar& c);
Scalar dot(const Vec& covector, const SparseVec& v);
Scalar dot(const Vec& a, const Vec& b);

// Accumulates unsorted contributions into a sorted sparse vector.
class SparseAccumulator {
public:
    void add(std::size_t index, const Scalar& c);
    void add(const SparseVec& v, const Scalar& c);
    SparseVec take();
    bool empty() const noexcept { return pending_.empty(); }

private:
    std::vector<Term> pending_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, std::size_t cols, std::vector<SparseVec> rows);
    static Matrix from_dense(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<SparseVec>& cols);

    const Field& field() const { return *field_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const SparseVec& row(std::size_t r) const { return rows_[r]; }
    void set_row(std::size_t r, SparseVec v);
    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add_to(std::size_t r, std::size_t c, const Scalar& v);
    void append_row(SparseVec v);

    std::size_t nnz() const;
    double density() const;

    Matrix transpose() const;
    SparseVec column(std::size_t c) const;
    std::vector<Vec> to_dense() const;
    Vec apply(const Vec& x) const;
    SparseVec apply(const SparseVec& x) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    bool is_identity() const;
    bool is_zero() const;

private:
    const Field* field_ = nullptr;
    std::size_t cols_ = 0;
    std::vector<SparseVec> rows_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix scaled_matrix(const Matrix& a, const Scalar& c);

struct Rref {
    Matrix R;  // nonzero rows only, sorted by pivot
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

// Reduced row echelon form. Picks the sparse path below 10% density; both
// paths return the identical (unique) reduced form.
Rref rref(const Matrix& a, Exec exec = Exec::parallel);
Rref rref_dense(const Matrix& a, Exec exec = Exec::parallel);
Rref rref_sparse(const Matrix& a);

std::size_t rank(const Matrix& a);

// Basis of {x : A x = 0}, canonicalized as the reduced echelon basis of
// the null space (so each vector's first nonzero coordinate is 1).
std::vector<Vec> kernel(const Matrix& a, Exec exec = Exec::parallel);
std::vector<Vec> kernel_from_rref(const Rref& r, std::size_t cols);

struct Solution {
    bool consistent = false;
    Vec x;
    std::vector<Vec> kernel;
};

Solution solve(const Matrix& a, const Vec& b, Exec exec = Exec::parallel);

// Solves A X = B for every column of B at once; nullopt if any column is
// inconsistent. Free variables are set to zero.
std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b, Exec exec = Exec::parallel);

std::optional<Matrix> invert(const Matrix& a, Exec exec = Exec::parallel);

// Incremental sparse echelon basis. Rows are kept semi-reduced (each row is
// reduced against the pivots that existed when it was inserted); finish()
// back-substitutes to the reduced form.
class Echelon {
public:
    Echelon(const Field& f, std::size_t cols);

    // True if v was independent of the current rows.
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    // Remainder of v after eliminating every pivot column.
    SparseVec reduce(const SparseVec& v) const;
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    Rref finish() const;

private:
    const Field* field_;
    std::size_t cols_;
    std::vector<SparseVec> rows_;
    std::vector<std::int64_t> pivot_row_;
};

// A subspace of k^n with a fixed reduced echelon basis. Coordinates of a
// member are read off at the pivot columns.
class Subspace {
public:
    Subspace() = default;
    Subspace(const Field& f, std::size_t ambient, const std::vector<Vec>& spanning);

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    const Vec& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // Coordinates of v in the basis; nullopt if v is not in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec combine(const Vec& coords) const;

private:
    const Field* field_ = nullptr;
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hopfkit
