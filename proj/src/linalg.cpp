#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfkit {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec to_dense(const SparseVec& v, const Field& f, std::size_t n) {
    Vec out = zero_vec(f, n);
    for (const auto& t : v) out[t.index] = t.coeff;
    return out;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({static_cast<std::uint32_t>(i), v[i]});
    return out;
}

SparseVec unit_sparse(std::size_t i, const Field& f) { return {{static_cast<std::uint32_t>(i), f.one()}}; }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back({b[j].index, c * b[j].coeff});
            ++j;
        } else {
            Scalar s = a[i].coeff + c * b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].index, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scaled(const SparseVec& v, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back({t.index, t.coeff * c});
    return out;
}

Scalar dot(const Vec& covector, const SparseVec& v) {
    Scalar s;
    for (const auto& t : v) s += covector[t.index] * t.coeff;
    return s;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

void SparseAccumulator::add(std::size_t index, const Scalar& c) {
    if (c.is_zero()) return;
    pending_.push_back({static_cast<std::uint32_t>(index), c});
}

void SparseAccumulator::add(const SparseVec& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& t : v) pending_.push_back({t.index, t.coeff * c});
}

SparseVec SparseAccumulator::take() {
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVec out;
    for (std::size_t i = 0; i < pending_.size();) {
        std::size_t j = i + 1;
        Scalar s = pending_[i].coeff;
        while (j < pending_.size() && pending_[j].index == pending_[i].index) s += pending_[j++].coeff;
        if (!s.is_zero()) out.push_back({pending_[i].index, std::move(s)});
        i = j;
    }
    pending_.clear();
    return out;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols) : field_(&f), cols_(cols), rows_(rows) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = unit_sparse(i, f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, std::vector<SparseVec> rows) {
    Matrix m(f, 0, cols);
    m.rows_ = std::move(rows);
    for (const auto& r : m.rows_)
        if (!r.empty() && r.back().index >= cols) throw std::invalid_argument("row entry out of range");
    return m;
}

Matrix Matrix::from_dense(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("dense row has wrong length");
        m.rows_[r] = to_sparse(rows[r]);
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<SparseVec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : cols[c]) {
            if (t.index >= rows) throw std::invalid_argument("column entry out of range");
            m.rows_[t.index].push_back({static_cast<std::uint32_t>(c), t.coeff});
        }
    return m;
}

void Matrix::set_row(std::size_t r, SparseVec v) {
    if (!v.empty() && v.back().index >= cols_) throw std::invalid_argument("row entry out of range");
    rows_.at(r) = std::move(v);
}

void Matrix::append_row(SparseVec v) {
    if (!v.empty() && v.back().index >= cols_) throw std::invalid_argument("row entry out of range");
    rows_.push_back(std::move(v));
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    const auto& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Term& t, std::size_t k) { return t.index < k; });
    if (it != row.end() && it->index == c) return it->coeff;
    return field_->zero();
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (c >= cols_) throw std::out_of_range("matrix column out of range");
    auto& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Term& t, std::size_t k) { return t.index < k; });
    const bool present = it != row.end() && it->index == c;
    if (v.is_zero()) {
        if (present) row.erase(it);
    } else if (present) {
        it->coeff = v;
    } else {
        row.insert(it, {static_cast<std::uint32_t>(c), v});
    }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
    if (!v.is_zero()) set(r, c, at(r, c) + v);
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

double Matrix::density() const {
    if (rows_.empty() || cols_ == 0) return 0.0;
    return static_cast<double>(nnz()) / (static_cast<double>(rows_.size()) * static_cast<double>(cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(*field_, cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& e : rows_[r]) t.rows_[e.index].push_back({static_cast<std::uint32_t>(r), e.coeff});
    return t;
}

SparseVec Matrix::column(std::size_t c) const {
    SparseVec out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar v = at(r, c);
        if (!v.is_zero()) out.push_back({static_cast<std::uint32_t>(r), std::move(v)});
    }
    return out;
}

std::vector<Vec> Matrix::to_dense() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(hopfkit::to_dense(r, *field_, cols_));
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec y = zero_vec(*field_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) y[r] = dot(x, rows_[r]);
    return y;
}

SparseVec Matrix::apply(const SparseVec& x) const {
    if (!x.empty() && x.back().index >= cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    SparseVec out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar s;
        std::size_t i = 0;
        std::size_t j = 0;
        const auto& row = rows_[r];
        while (i < row.size() && j < x.size()) {
            if (row[i].index < x[j].index) {
                ++i;
            } else if (x[j].index < row[i].index) {
                ++j;
            } else {
                s += row[i].coeff * x[j].coeff;
                ++i;
                ++j;
            }
        }
        if (!s.is_zero()) out.push_back({static_cast<std::uint32_t>(r), std::move(s)});
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    SparseAccumulator acc;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& t : a.row(r)) acc.add(b.row(t.index), t.coeff);
        out.rows_[r] = acc.take();
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix out(a.field(), a.rows(), a.cols());
    const Scalar one = a.field().one();
    for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] = axpy(a.row(r), one, b.row(r));
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix out(a.field(), a.rows(), a.cols());
    const Scalar minus = -a.field().one();
    for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] = axpy(a.row(r), minus, b.row(r));
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.rows_ == b.rows_;
}

bool Matrix::is_identity() const {
    if (rows_.size() != cols_) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.size() != 1 || row[0].index != r || !row[0].coeff.is_one()) return false;
    }
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseVec& r) { return r.empty(); });
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.rows(); ++k) {
            SparseVec row;
            for (const auto& x : a.row(i))
                for (const auto& y : b.row(k))
                    row.push_back({static_cast<std::uint32_t>(x.index * b.cols() + y.index), x.coeff * y.coeff});
            out.set_row(i * b.rows() + k, std::move(row));
        }
    return out;
}

Matrix scaled_matrix(const Matrix& a, const Scalar& c) {
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, scaled(a.row(r), c));
    return out;
}

Echelon::Echelon(const Field& f, std::size_t cols) : field_(&f), cols_(cols), pivot_row_(cols, -1) {}

SparseVec Echelon::reduce(const SparseVec& v) const {
    std::map<std::uint32_t, Scalar> work;
    for (const auto& t : v) {
        if (t.index >= cols_) throw std::invalid_argument("vector longer than echelon width");
        work.emplace(t.index, t.coeff);
    }
    SparseVec out;
    while (!work.empty()) {
        auto it = work.begin();
        const std::uint32_t c = it->first;
        const Scalar t = std::move(it->second);
        work.erase(it);
        if (t.is_zero()) continue;
        const std::int64_t pr = pivot_row_[c];
        if (pr < 0) {
            out.push_back({c, t});
            continue;
        }
        const SparseVec& row = rows_[static_cast<std::size_t>(pr)];
        for (std::size_t k = 1; k < row.size(); ++k) {
            auto [slot, inserted] = work.try_emplace(row[k].index);
            slot->second -= t * row[k].coeff;
            if (slot->second.is_zero()) work.erase(slot);
        }
    }
    return out;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const Scalar lead = r[0].coeff.inv();
    if (!lead.is_one())
        for (auto& t : r) t.coeff = t.coeff * lead;
    pivot_row_[r[0].index] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool Echelon::contains(const SparseVec& v) const { return reduce(v).empty(); }

Rref Echelon::finish() const {
    std::vector<std::size_t> pivots;
    pivots.reserve(rows_.size());
    for (const auto& r : rows_) pivots.push_back(r[0].index);
    std::sort(pivots.begin(), pivots.end());
    std::vector<SparseVec> reduced(rows_.size());
    // Pivot column -> position in `pivots`.
    std::vector<std::int64_t> slot(cols_, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) slot[pivots[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const SparseVec& src = rows_[static_cast<std::size_t>(pivot_row_[pivots[i]])];
        std::map<std::uint32_t, Scalar> work;
        for (std::size_t k = 1; k < src.size(); ++k) work.emplace(src[k].index, src[k].coeff);
        SparseVec out{src[0]};
        while (!work.empty()) {
            auto it = work.begin();
            const std::uint32_t c = it->first;
            const Scalar t = std::move(it->second);
            work.erase(it);
            if (t.is_zero()) continue;
            if (slot[c] < 0) {
                out.push_back({c, t});
                continue;
            }
            const SparseVec& row = reduced[static_cast<std::size_t>(slot[c])];
            for (std::size_t k = 1; k < row.size(); ++k) {
                auto [s, inserted] = work.try_emplace(row[k].index);
                s->second -= t * row[k].coeff;
                if (s->second.is_zero()) work.erase(s);
            }
        }
        reduced[i] = std::move(out);
    }
    Rref result;
    result.R = Matrix::from_rows(*field_, cols_, std::move(reduced));
    result.pivots = std::move(pivots);
    return result;
}

Rref rref_sparse(const Matrix& a) {
    Echelon e(a.field(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) e.insert(a.row(r));
    return e.finish();
}

Rref rref_dense(const Matrix& a, Exec exec) {
    std::vector<Vec> m = a.to_dense();
    const std::size_t nr = m.size();
    const std::size_t nc = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && m[p][col].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(m[p], m[row]);
        const Scalar inv = m[row][col].inv();
        for (std::size_t k = col; k < nc; ++k)
            if (!m[row][k].is_zero()) m[row][k] = m[row][k] * inv;
        const Vec& prow = m[row];
        for_each_index(nr, exec, [&](std::size_t r) {
            if (r == row || m[r][col].is_zero()) return;
            const Scalar factor = m[r][col];
            for (std::size_t k = col; k < nc; ++k)
                if (!prow[k].is_zero()) m[r][k] -= factor * prow[k];
        });
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    Rref result;
    result.R = Matrix::from_dense(a.field(), nc, m);
    result.pivots = std::move(pivots);
    return result;
}

Rref rref(const Matrix& a, Exec exec) {
    if (a.rows() == 0 || a.cols() == 0) return Rref{Matrix(a.field(), 0, a.cols()), {}};
    if (a.density() < 0.1) return rref_sparse(a);
    return rref_dense(a, exec);
}

std::size_t rank(const Matrix& a) {
    Echelon e(a.field(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) e.insert(a.row(r));
    return e.rank();
}

std::vector<Vec> kernel_from_rref(const Rref& r, std::size_t cols) {
    const Field& f = r.R.field();
    std::vector<char> is_pivot(cols, 0);
    for (auto p : r.pivots)
        if (p < cols) is_pivot[p] = 1;
    Matrix null(f, 0, cols);
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc] != 0) continue;
        SparseVec v;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            if (r.pivots[i] >= cols) continue;
            const Scalar c = r.R.at(i, fc);
            if (!c.is_zero()) v.push_back({static_cast<std::uint32_t>(r.pivots[i]), -c});
        }
        v.push_back({static_cast<std::uint32_t>(fc), f.one()});
        std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        null.append_row(std::move(v));
    }
    const Rref canon = rref_sparse(null);
    return canon.R.to_dense();
}

std::vector<Vec> kernel(const Matrix& a, Exec exec) { return kernel_from_rref(rref(a, exec), a.cols()); }

namespace {

Matrix augment(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseVec row = a.row(r);
        for (const auto& t : b.row(r))
            row.push_back({static_cast<std::uint32_t>(t.index + a.cols()), t.coeff});
        out.set_row(r, std::move(row));
    }
    return out;
}

}  // namespace

Solution solve(const Matrix& a, const Vec& b, Exec exec) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    Matrix bm(a.field(), a.rows(), 1);
    for (std::size_t r = 0; r < b.size(); ++r)
        if (!b[r].is_zero()) bm.set(r, 0, b[r]);
    const Rref r = rref(augment(a, bm), exec);
    Solution s;
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return s;
    s.consistent = true;
    s.x = zero_vec(a.field(), a.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) s.x[r.pivots[i]] = r.R.at(i, a.cols());
    s.kernel = kernel_from_rref(r, a.cols());
    return s;
}

std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b, Exec exec) {
    if (b.rows() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong row count");
    const Rref r = rref(augment(a, b), exec);
    if (!r.pivots.empty() && r.pivots.back() >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        SparseVec row;
        for (const auto& t : r.R.row(i))
            if (t.index >= a.cols()) row.push_back({static_cast<std::uint32_t>(t.index - a.cols()), t.coeff});
        x.set_row(r.pivots[i], std::move(row));
    }
    return x;
}

std::optional<Matrix> invert(const Matrix& a, Exec exec) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix is not square");
    const Rref r = rref(augment(a, Matrix::identity(a.field(), a.rows())), exec);
    if (r.rank() < a.rows() || (!r.pivots.empty() && r.pivots.back() >= a.cols())) return std::nullopt;
    Matrix x(a.field(), a.rows(), a.rows());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        SparseVec row;
        for (const auto& t : r.R.row(i))
            if (t.index >= a.cols()) row.push_back({static_cast<std::uint32_t>(t.index - a.cols()), t.coeff});
        x.set_row(r.pivots[i], std::move(row));
    }
    return x;
}

Subspace::Subspace(const Field& f, std::size_t ambient, const std::vector<Vec>& spanning)
    : field_(&f), ambient_(ambient) {
    Echelon e(f, ambient);
    for (const auto& v : spanning) {
        if (v.size() != ambient) throw std::invalid_argument("spanning vector has wrong length");
        e.insert(to_sparse(v));
    }
    const Rref r = e.finish();
    basis_ = r.R.to_dense();
    pivots_ = r.pivots;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length for subspace");
    Vec c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    if (combine(c) != v) return std::nullopt;
    return c;
}

Vec Subspace::combine(const Vec& coords) const {
    Vec out = zero_vec(*field_, ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (coords[i].is_zero()) continue;
        for (std::size_t k = 0; k < ambient_; ++k)
            if (!basis_[i][k].is_zero()) out[k] += coords[i] * basis_[i][k];
    }
    return out;
}

}  // namespace hopfkit
