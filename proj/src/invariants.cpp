#include "hopfkit/invariants.hpp"

#include <map>
#include <mutex>

namespace hopfkit {

namespace {

// Inserts rows until the rank reaches cols-1, then returns the candidate
// spanning the (at most one-dimensional) kernel of what was inserted. The
// caller re-checks the candidate against the full system.
template <typename RowSource>
Vec corank_one_candidate(const Field& f, std::size_t cols, std::size_t* kernel_dim, RowSource rows) {
    Echelon e(f, cols);
    rows([&](const SparseVec& r) {
        e.insert(r);
        return e.rank() + 1 < cols;
    });
    const auto k = kernel_from_rref(e.finish(), cols);
    if (kernel_dim != nullptr) *kernel_dim = k.size();
    if (k.empty()) return {};
    return k.front();
}

std::size_t first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

}  // namespace

Vec left_integral(const HopfAlgebra& h, std::size_t* kernel_dim, Exec exec) {
    (void)exec;
    const std::size_t n = h.dim();
    const Field& f = h.field();
    std::size_t kd = 0;
    Vec cand = corank_one_candidate(f, n, &kd, [&](auto&& push) {
        for (auto g : h.generators()) {
            const Matrix lg = h.left_mult(g) - scaled_matrix(Matrix::identity(f, n), h.counit(g));
            for (std::size_t r = 0; r < n; ++r)
                if (!lg.row(r).empty() && !push(lg.row(r))) return;
        }
    });
    if (kd == 1) {
        // The generator rows already cut out the full solution space; a
        // rank-(n-1) prefix can only be larger, so confirm on every basis h.
        const SparseVec c = to_sparse(cand);
        for (std::size_t i = 0; i < n; ++i)
            if (h.mul(h.basis_vec(i), c) != scaled(c, h.counit(i))) {
                kd = 0;
                cand.clear();
                break;
            }
    }
    if (kernel_dim != nullptr) *kernel_dim = kd;
    return cand;
}

Vec right_cointegral(const HopfAlgebra& h, std::size_t* kernel_dim, Exec exec) {
    (void)exec;
    const std::size_t n = h.dim();
    const Field& f = h.field();
    // For each h and output k: sum_j d[h][j][k] l_j - u_k l_h = 0.
    auto rows_for = [&](std::size_t i) {
        std::map<std::size_t, SparseAccumulator> by_k;
        for (const auto& t : h.coproduct(i)) by_k[t.index % n].add(t.index / n, t.coeff);
        for (const auto& u : h.unit()) by_k[u.index].add(i, -u.coeff);
        std::vector<SparseVec> out;
        for (auto& [k, acc] : by_k) {
            SparseVec r = acc.take();
            if (!r.empty()) out.push_back(std::move(r));
        }
        return out;
    };
    std::size_t kd = 0;
    Vec cand = corank_one_candidate(f, n, &kd, [&](auto&& push) {
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& r : rows_for(i))
                if (!push(r)) return;
    });
    if (kd == 1) {
        for (std::size_t i = 0; i < n && kd == 1; ++i)
            for (const auto& r : rows_for(i))
                if (!dot(cand, r).is_zero()) {
                    kd = 0;
                    cand.clear();
                    break;
                }
    }
    if (kernel_dim != nullptr) *kernel_dim = kd;
    return cand;
}

void normalize_pair(const Vec& integral, Vec& cointegral) {
    const Scalar p = dot(cointegral, integral);
    if (p.is_zero()) throw VerificationError("cointegral pairs to zero with the integral", {});
    const Scalar s = p.inv();
    for (auto& c : cointegral) c = c * s;
}

Vec modular_function(const HopfAlgebra& h, const Vec& integral) {
    const std::size_t n = h.dim();
    const std::size_t p = first_nonzero(integral);
    if (p == n) throw std::invalid_argument("integral is zero");
    const SparseVec L = to_sparse(integral);
    const Scalar inv_lead = integral[p].inv();
    Vec alpha = zero_vec(h.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        const SparseVec li = h.mul(L, h.basis_vec(i));
        Scalar a = h.field().zero();
        for (const auto& t : li)
            if (t.index == p) a = t.coeff * inv_lead;
        if (li != scaled(L, a))
            throw InconsistencyError("integral times " + h.label(i) + " is not a multiple of the integral");
        alpha[i] = a;
    }
    return alpha;
}

SparseVec distinguished_grouplike(const HopfAlgebra& h, const Vec& cointegral) {
    const std::size_t n = h.dim();
    auto lhs = [&](std::size_t i) {
        SparseAccumulator acc;
        for (const auto& t : h.coproduct(i)) acc.add(t.index / n, t.coeff * cointegral[t.index % n]);
        return acc.take();
    };
    const std::size_t p = first_nonzero(cointegral);
    if (p == n) throw std::invalid_argument("cointegral is zero");
    const SparseVec g = scaled(lhs(p), cointegral[p].inv());
    for (std::size_t i = 0; i < n; ++i)
        if (lhs(i) != scaled(g, cointegral[i]))
            throw InconsistencyError("distinguished grouplike equation fails at " + h.label(i));
    return g;
}

Vec convolve(const HopfAlgebra& h, const Vec& a, const Vec& b) {
    const std::size_t n = h.dim();
    Vec out = zero_vec(h.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar s;
        for (const auto& t : h.coproduct(i)) s += t.coeff * a[t.index / n] * b[t.index % n];
        out[i] = s.field() == nullptr ? h.field().zero() : s;
    }
    return out;
}

int root_exponent(const Scalar& s) {
    if (s.field() == nullptr || s.field()->spec().kind != FieldKind::cyclotomic) return -1;
    const Field& f = *s.field();
    Scalar p = f.one();
    for (std::int64_t e = 0; e < f.spec().param; ++e) {
        if (p == s) return static_cast<int>(e);
        p = p * f.root();
    }
    return -1;
}

const InvariantBundle& invariants(const HopfAlgebra& h, Exec exec) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<InvariantBundle>> cache;
    {
        const std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(h.content_hash());
        if (it != cache.end()) return *it->second;
    }
    auto b = std::make_unique<InvariantBundle>();
    const std::size_t n = h.dim();
    const Field& f = h.field();
    b->integral = left_integral(h, &b->integral_kernel_dim, exec);
    b->cointegral = right_cointegral(h, &b->cointegral_kernel_dim, exec);
    CheckList& c = b->checks;
    c.add("integral space one-dimensional", b->integral_kernel_dim == 1,
          "kernel dimension " + std::to_string(b->integral_kernel_dim));
    c.add("cointegral space one-dimensional", b->cointegral_kernel_dim == 1,
          "kernel dimension " + std::to_string(b->cointegral_kernel_dim));
    if (!c.ok()) throw VerificationError("integral data is not unique: " + c.first_failure(), c);
    const Scalar pairing = dot(b->cointegral, b->integral);
    c.add("cointegral pairs nontrivially with integral", !pairing.is_zero());
    if (pairing.is_zero()) throw VerificationError("<cointegral, integral> = 0", c);
    normalize_pair(b->integral, b->cointegral);

    b->alpha = modular_function(h, b->integral);
    std::string w;
    c.add("modular function is an algebra map", is_character(h, b->alpha, &w), w);
    b->alpha_bar = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i) b->alpha_bar[i] = dot(b->alpha, h.antipode(i));
    b->unimodular = b->alpha == h.data().counit;

    b->g = distinguished_grouplike(h, b->cointegral);
    c.add("distinguished grouplike is grouplike", check_grouplike(h, b->g));
    b->g_bar = h.S(b->g);
    c.add("g gbar = 1", h.mul(b->g, b->g_bar) == h.one() && h.mul(b->g_bar, b->g) == h.one());
    b->dual_unimodular = b->g == h.one();

    // Self-checks on every basis element.
    const SparseVec L = to_sparse(b->integral);
    const std::size_t bad_int = first_failure(n, exec, [&](std::size_t i) {
        return h.mul(h.basis_vec(i), L) != scaled(L, h.counit(i)) ||
               h.mul(L, h.basis_vec(i)) != scaled(L, b->alpha[i]);
    });
    c.add("integral identities", bad_int == n, bad_int < n ? "h=" + h.label(bad_int) : "");
    const std::size_t bad_co = first_failure(n, exec, [&](std::size_t i) {
        SparseAccumulator acc;
        for (const auto& t : h.coproduct(i)) acc.add(t.index % n, t.coeff * b->cointegral[t.index / n]);
        return acc.take() != scaled(h.one(), b->cointegral[i]);
    });
    c.add("cointegral identity", bad_co == n, bad_co < n ? "h=" + h.label(bad_co) : "");
    c.add("pairing normalized", dot(b->cointegral, b->integral).is_one());
    c.add("alpha * alpha_bar = eps", convolve(h, b->alpha, b->alpha_bar) == h.data().counit);
    Vec alpha_s2 = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i) alpha_s2[i] = dot(b->alpha, h.S(h.antipode(i)));
    c.add("alpha o S^2 = alpha", alpha_s2 == b->alpha);

    const std::lock_guard<std::mutex> lock(mu);
    return *cache.emplace(h.content_hash(), std::move(b)).first->second;
}

bool verify_radford(const HopfPtr& h, const InvariantBundle& b, std::string* witness) {
    const ModuleRep x = regular_module(h);
    const ModuleRep k_abar = one_dim_module(h, b.alpha_bar, "k_abar");
    const Matrix s = h->antipode_matrix();
    const Matrix s4 = s * s * s * s;
    const ModuleRep src = tensor_module(k_abar, x);
    const ModuleRep dst = tensor_module(twisted_module(x, s4), k_abar);
    return is_module_map(src, dst, h->left_mult(b.g), witness);
}

bool verify_pivotal(const HopfAlgebra& h, const SparseVec& g, std::string* witness) {
    if (!check_grouplike(h, g)) {
        if (witness != nullptr) *witness = "not grouplike";
        return false;
    }
    const SparseVec ginv = grouplike_inverse(h, g);
    for (std::size_t i = 0; i < h.dim(); ++i) {
        const SparseVec e = h.basis_vec(i);
        if (h.mul(h.mul(g, e), ginv) != h.S(h.antipode(i))) {
            if (witness != nullptr) *witness = "g h g^-1 != S^2(h) at h=" + h.label(i);
            return false;
        }
    }
    return true;
}

}  // namespace hopfkit
