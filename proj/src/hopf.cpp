#include "hopfkit/hopf.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace hopfkit {

namespace {

void check_indices(const SparseVec& v, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].index >= bound) throw std::invalid_argument(std::string(what) + ": index out of range");
        if (i > 0 && v[i - 1].index >= v[i].index) throw std::invalid_argument(std::string(what) + ": unsorted entries");
        if (v[i].coeff.is_zero()) throw std::invalid_argument(std::string(what) + ": explicit zero");
    }
}

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new()) { EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr); }
    ~Sha256() { EVP_MD_CTX_free(ctx_); }
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;
    void update(const std::string& s) { EVP_DigestUpdate(ctx_, s.data(), s.size()); }
    std::string hex() {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_, md, &len);
        std::string out;
        char buf[3];
        for (unsigned int i = 0; i < len; ++i) {
            std::snprintf(buf, sizeof buf, "%02x", md[i]);
            out += buf;
        }
        return out;
    }

private:
    EVP_MD_CTX* ctx_;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void HopfData::validate_shape() const {
    if (field == nullptr) throw std::invalid_argument("hopf data has no field");
    if (dim == 0) throw std::invalid_argument("hopf data has dimension 0");
    if (basis.size() != dim) throw std::invalid_argument("basis label count does not match dim");
    if (mult.size() != dim * dim) throw std::invalid_argument("mult table has wrong size");
    if (comult.size() != dim) throw std::invalid_argument("comult table has wrong size");
    if (counit.size() != dim) throw std::invalid_argument("counit has wrong length");
    if (antipode.size() != dim) throw std::invalid_argument("antipode has wrong size");
    for (const auto& v : mult) check_indices(v, dim, "mult");
    check_indices(unit, dim, "unit");
    for (const auto& v : comult) check_indices(v, dim * dim, "comult");
    for (const auto& v : antipode) check_indices(v, dim, "antipode");
}

HopfAlgebra::HopfAlgebra(HopfData data) : data_(std::move(data)) {
    data_.validate_shape();
    for (std::size_t i = 0; i < data_.dim; ++i) {
        if (!label_index_.emplace(data_.basis[i], i).second)
            throw std::invalid_argument("duplicate basis label '" + data_.basis[i] + "'");
    }
}

HopfPtr HopfAlgebra::unchecked(HopfData data) { return HopfPtr(new HopfAlgebra(std::move(data))); }

HopfPtr HopfAlgebra::create(HopfData data, VerifyOptions opts) {
    HopfPtr h = unchecked(std::move(data));
    CheckList report = verify_axioms(*h, opts);
    if (!report.ok()) throw VerificationError("Hopf axioms fail: " + report.first_failure(), report);
    return h;
}

std::optional<std::size_t> HopfAlgebra::index_of(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

SparseVec HopfAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
    SparseAccumulator acc;
    for (const auto& a : x)
        for (const auto& b : y) acc.add(product(a.index, b.index), a.coeff * b.coeff);
    return acc.take();
}

SparseVec HopfAlgebra::mul2(const SparseVec& x, const SparseVec& y) const {
    const std::size_t n = data_.dim;
    SparseAccumulator acc;
    for (const auto& a : x) {
        const std::size_t p = a.index / n;
        const std::size_t q = a.index % n;
        for (const auto& b : y) {
            const std::size_t r = b.index / n;
            const std::size_t s = b.index % n;
            const Scalar c = a.coeff * b.coeff;
            for (const auto& t1 : product(p, r))
                for (const auto& t2 : product(q, s)) acc.add(t1.index * n + t2.index, c * t1.coeff * t2.coeff);
        }
    }
    return acc.take();
}

SparseVec HopfAlgebra::delta(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& a : x) acc.add(coproduct(a.index), a.coeff);
    return acc.take();
}

Scalar HopfAlgebra::eps(const SparseVec& x) const { return dot(data_.counit, x); }

SparseVec HopfAlgebra::S(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& a : x) acc.add(antipode(a.index), a.coeff);
    return acc.take();
}

SparseVec HopfAlgebra::S_inv(const SparseVec& x) const {
    const Matrix& m = antipode_inverse_matrix();
    return m.apply(x);
}

Matrix HopfAlgebra::left_mult(std::size_t h) const {
    std::vector<SparseVec> cols(data_.dim);
    for (std::size_t j = 0; j < data_.dim; ++j) cols[j] = product(h, j);
    return Matrix::from_columns(field(), data_.dim, cols);
}

Matrix HopfAlgebra::right_mult(std::size_t h) const {
    std::vector<SparseVec> cols(data_.dim);
    for (std::size_t j = 0; j < data_.dim; ++j) cols[j] = product(j, h);
    return Matrix::from_columns(field(), data_.dim, cols);
}

Matrix HopfAlgebra::left_mult(const SparseVec& x) const {
    std::vector<SparseVec> cols(data_.dim);
    for (std::size_t j = 0; j < data_.dim; ++j) cols[j] = mul(x, basis_vec(j));
    return Matrix::from_columns(field(), data_.dim, cols);
}

Matrix HopfAlgebra::antipode_matrix() const { return Matrix::from_columns(field(), data_.dim, data_.antipode); }

const Matrix& HopfAlgebra::antipode_inverse_matrix() const {
    std::call_once(sinv_once_, [&] {
        auto inv = invert(antipode_matrix());
        if (!inv) throw std::invalid_argument("antipode is not invertible");
        antipode_inverse_ = std::move(*inv);
    });
    return antipode_inverse_;
}

const std::vector<std::size_t>& HopfAlgebra::generators() const {
    std::call_once(gens_once_, [&] {
        const std::size_t n = data_.dim;
        std::vector<std::size_t> gens;
        auto closure = [&](const std::vector<std::size_t>& g) {
            Echelon span(field(), n);
            std::vector<SparseVec> queue;
            if (span.insert(data_.unit)) queue.push_back(data_.unit);
            for (auto i : g)
                if (span.insert(basis_vec(i))) queue.push_back(basis_vec(i));
            for (std::size_t head = 0; head < queue.size() && span.rank() < n; ++head) {
                for (auto i : g) {
                    SparseVec w = mul(basis_vec(i), queue[head]);
                    if (span.insert(w)) queue.push_back(std::move(w));
                }
            }
            return span;
        };
        Echelon span = closure(gens);
        for (std::size_t i = 0; i < n && span.rank() < n; ++i) {
            if (span.contains(basis_vec(i))) continue;
            gens.push_back(i);
            span = closure(gens);
        }
        generators_ = std::move(gens);
    });
    return generators_;
}

const std::string& HopfAlgebra::content_hash() const {
    std::call_once(hash_once_, [&] {
        Sha256 sha;
        const std::size_t n = data_.dim;
        sha.update("hopf\n" + field().name() + "\n" + std::to_string(n) + "\n");
        for (const auto& b : data_.basis) sha.update(b + "\n");
        std::string buf;
        for (std::size_t ij = 0; ij < data_.mult.size(); ++ij) {
            for (const auto& t : data_.mult[ij]) {
                buf = "m " + std::to_string(ij / n) + " " + std::to_string(ij % n) + " " + std::to_string(t.index) +
                      " " + t.coeff.to_string() + "\n";
                sha.update(buf);
            }
        }
        for (const auto& t : data_.unit) sha.update("u " + std::to_string(t.index) + " " + t.coeff.to_string() + "\n");
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : data_.comult[i])
                sha.update("d " + std::to_string(i) + " " + std::to_string(t.index / n) + " " +
                           std::to_string(t.index % n) + " " + t.coeff.to_string() + "\n");
        for (std::size_t i = 0; i < n; ++i)
            if (!data_.counit[i].is_zero()) sha.update("e " + std::to_string(i) + " " + data_.counit[i].to_string() + "\n");
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : data_.antipode[i])
                sha.update("s " + std::to_string(i) + " " + std::to_string(t.index) + " " + t.coeff.to_string() + "\n");
        hash_ = sha.hex();
    });
    return hash_;
}

std::string HopfAlgebra::format(const SparseVec& x) const {
    if (x.empty()) return "0";
    if (x.size() == 1 && x[0].coeff.is_one()) return label(x[0].index);
    std::string out;
    for (const auto& t : x) {
        if (!out.empty()) out += " + ";
        out += "(" + t.coeff.to_string() + ")*" + label(t.index);
    }
    return out;
}

SparseVec HopfAlgebra::parse_element(const std::string& text) const {
    std::vector<std::string> terms;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    terms.push_back(cur);
    SparseAccumulator acc;
    for (auto term : terms) {
        term = trim(term);
        if (term.empty()) throw std::invalid_argument("empty term in element '" + text + "'");
        Scalar coeff = field().one();
        std::string lab = term;
        if (term.front() == '(') {
            int d = 0;
            std::size_t close = std::string::npos;
            for (std::size_t i = 0; i < term.size(); ++i) {
                if (term[i] == '(') ++d;
                if (term[i] == ')' && --d == 0) {
                    close = i;
                    break;
                }
            }
            if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
            coeff = field().parse(term.substr(1, close - 1));
            std::string rest = trim(term.substr(close + 1));
            if (rest.empty() || rest.front() != '*')
                throw std::invalid_argument("expected '*' after coefficient in '" + term + "'");
            lab = trim(rest.substr(1));
        } else if (term.front() == '-') {
            coeff = -coeff;
            lab = trim(term.substr(1));
        }
        auto idx = index_of(lab);
        if (!idx) throw std::invalid_argument("unknown basis label '" + lab + "'");
        acc.add(*idx, coeff);
    }
    return acc.take();
}

HopfPtr dual(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    const Field& f = h.field();
    HopfData d;
    d.field = &f;
    d.dim = n;
    for (const auto& b : h.basis()) d.basis.push_back("d_" + b);
    // (d_j d_k)(e_i) = coefficient of e_j (x) e_k in Delta(e_i).
    std::vector<SparseAccumulator> mult(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : h.coproduct(i)) mult[t.index].add(i, t.coeff);
    d.mult.resize(n * n);
    for (std::size_t jk = 0; jk < n * n; ++jk) d.mult[jk] = mult[jk].take();
    d.unit = to_sparse(h.data().counit);
    std::vector<SparseAccumulator> comult(n);
    for (std::size_t jk = 0; jk < n * n; ++jk)
        for (const auto& t : h.data().mult[jk]) comult[t.index].add(jk, t.coeff);
    d.comult.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.comult[i] = comult[i].take();
    d.counit = zero_vec(f, n);
    for (const auto& t : h.unit()) d.counit[t.index] = t.coeff;
    std::vector<SparseAccumulator> anti(n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : h.antipode(j)) anti[t.index].add(j, t.coeff);
    d.antipode.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.antipode[i] = anti[i].take();
    d.metadata["construction"] = "dual";
    for (const auto& [k, v] : h.metadata()) d.metadata["dual_of." + k] = v;
    return HopfAlgebra::create(std::move(d));
}

bool check_grouplike(const HopfAlgebra& h, const SparseVec& g) {
    if (!h.eps(g).is_one()) return false;
    const std::size_t n = h.dim();
    SparseAccumulator acc;
    for (const auto& a : g)
        for (const auto& b : g) acc.add(a.index * n + b.index, a.coeff * b.coeff);
    return h.delta(g) == acc.take();
}

SparseVec grouplike_inverse(const HopfAlgebra& h, const SparseVec& g) {
    SparseVec inv = h.S(g);
    if (h.mul(g, inv) != h.one() || h.mul(inv, g) != h.one()) throw std::invalid_argument("element is not invertible");
    return inv;
}

bool is_character(const HopfAlgebra& h, const Vec& phi, std::string* witness) {
    if (phi.size() != h.dim()) throw std::invalid_argument("covector has wrong length");
    if (!dot(phi, h.one()).is_one()) {
        if (witness != nullptr) *witness = "value on 1 is not 1";
        return false;
    }
    for (auto i : h.generators()) {
        for (std::size_t j = 0; j < h.dim(); ++j) {
            if (dot(phi, h.product(i, j)) != phi[i] * phi[j]) {
                if (witness != nullptr) *witness = "x=" + h.label(i) + ", y=" + h.label(j);
                return false;
            }
        }
    }
    return true;
}

ModuleRep::ModuleRep(HopfPtr h, std::size_t dim, std::vector<Matrix> action, std::string name)
    : h_(std::move(h)), dim_(dim), action_(std::move(action)), name_(std::move(name)) {
    if (action_.size() != h_->dim()) throw std::invalid_argument("module needs one action matrix per basis element");
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("action matrix has wrong shape");
}

Matrix ModuleRep::act(const SparseVec& x) const {
    Matrix out(h_->field(), dim_, dim_);
    for (const auto& t : x) out = out + scaled_matrix(action_[t.index], t.coeff);
    return out;
}

CheckList ModuleRep::verify(Exec exec) const {
    CheckList r;
    r.add("unit acts as identity", act(h_->one()).is_identity());
    const auto& gens = h_->generators();
    const std::size_t n = h_->dim();
    const std::size_t bad = first_failure(gens.size() * n, exec, [&](std::size_t t) {
        const std::size_t i = gens[t / n];
        const std::size_t j = t % n;
        return action_[i] * action_[j] != act(h_->product(i, j));
    });
    std::string w;
    if (bad < gens.size() * n) w = "x=" + h_->label(gens[bad / n]) + ", y=" + h_->label(bad % n);
    r.add("action multiplicative", bad == gens.size() * n, w);
    return r;
}

ModuleRep one_dim_module(const HopfPtr& h, const Vec& phi, std::string name) {
    std::string w;
    if (!is_character(*h, phi, &w)) throw std::invalid_argument("covector is not an algebra map (" + w + ")");
    std::vector<Matrix> act;
    act.reserve(h->dim());
    for (std::size_t i = 0; i < h->dim(); ++i) {
        Matrix m(h->field(), 1, 1);
        m.set(0, 0, phi[i]);
        act.push_back(std::move(m));
    }
    return ModuleRep(h, 1, std::move(act), std::move(name));
}

ModuleRep regular_module(const HopfPtr& h) {
    std::vector<Matrix> act;
    act.reserve(h->dim());
    for (std::size_t i = 0; i < h->dim(); ++i) act.push_back(h->left_mult(i));
    return ModuleRep(h, h->dim(), std::move(act), "regular");
}

ModuleRep twisted_module(const ModuleRep& m, const HopfPtr& source, const Matrix& f) {
    if (f.rows() != m.algebra()->dim() || f.cols() != source->dim())
        throw std::invalid_argument("twisting map has wrong shape");
    const Matrix ft = f.transpose();
    std::vector<Matrix> act;
    act.reserve(source->dim());
    for (std::size_t j = 0; j < source->dim(); ++j) act.push_back(m.act(ft.row(j)));
    return ModuleRep(source, m.dim(), std::move(act), m.name() + "_f");
}

ModuleRep twisted_module(const ModuleRep& m, const Matrix& automorphism) {
    return twisted_module(m, m.algebra(), automorphism);
}

ModuleRep tensor_module(const ModuleRep& x, const ModuleRep& y) {
    const HopfAlgebra& h = *x.algebra();
    const std::size_t n = h.dim();
    std::vector<Matrix> act;
    act.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(h.field(), x.dim() * y.dim(), x.dim() * y.dim());
        for (const auto& t : h.coproduct(i))
            m = m + scaled_matrix(kron(x.action(t.index / n), y.action(t.index % n)), t.coeff);
        act.push_back(std::move(m));
    }
    return ModuleRep(x.algebra(), x.dim() * y.dim(), std::move(act), x.name() + "(x)" + y.name());
}

bool is_module_map(const ModuleRep& x, const ModuleRep& y, const Matrix& t, std::string* witness) {
    if (t.rows() != y.dim() || t.cols() != x.dim()) throw std::invalid_argument("module map has wrong shape");
    const HopfAlgebra& h = *x.algebra();
    for (auto g : h.generators()) {
        if (t * x.action(g) != y.action(g) * t) {
            if (witness != nullptr) *witness = "h=" + h.label(g);
            return false;
        }
    }
    return true;
}

}  // namespace hopfkit
