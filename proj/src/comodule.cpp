#include "hopfkit/comodule.hpp"

#include <random>
#include <stdexcept>

namespace hopfkit {

void ComoduleData::validate_shape() const {
    if (!hopf) throw std::invalid_argument("comodule algebra without a Hopf algebra");
    if (dim == 0) throw std::invalid_argument("comodule algebra of dimension 0");
    if (basis.size() != dim) throw std::invalid_argument("comodule basis has the wrong length");
    if (mult.size() != dim * dim) throw std::invalid_argument("comodule multiplication table has the wrong size");
    if (coaction.size() != dim) throw std::invalid_argument("coaction table has the wrong size");
    for (const auto& v : mult)
        for (const auto& t : v)
            if (t.index >= dim) throw std::invalid_argument("product index out of range");
    for (const auto& t : unit)
        if (t.index >= dim) throw std::invalid_argument("unit index out of range");
    for (const auto& v : coaction)
        for (const auto& t : v)
            if (t.index >= hopf->dim() * dim) throw std::invalid_argument("coaction index out of range");
}

ComoduleAlgebra::ComoduleAlgebra(ComoduleData data) : data_(std::move(data)) { data_.validate_shape(); }

ComodulePtr ComoduleAlgebra::unchecked(ComoduleData data) {
    return std::make_shared<const ComoduleAlgebra>(std::move(data));
}

ComodulePtr ComoduleAlgebra::create(ComoduleData data) {
    auto l = unchecked(std::move(data));
    CheckList r = verify_comodule_algebra(*l);
    if (!r.ok()) throw VerificationError("not a comodule algebra: " + r.first_failure(), r);
    return l;
}

SparseVec ComoduleAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
    SparseAccumulator acc;
    for (const auto& a : x)
        for (const auto& b : y) acc.add(product(a.index, b.index), a.coeff * b.coeff);
    return acc.take();
}

SparseVec ComoduleAlgebra::coact(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& t : x) acc.add(coaction(t.index), t.coeff);
    return acc.take();
}

Matrix ComoduleAlgebra::left_mult(const SparseVec& x) const {
    std::vector<SparseVec> cols;
    cols.reserve(dim());
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(x, basis_vec(j)));
    return Matrix::from_columns(field(), dim(), cols);
}

std::string ComoduleAlgebra::format(const SparseVec& x) const {
    if (x.empty()) return "0";
    if (x.size() == 1 && x[0].coeff.is_one()) return label(x[0].index);
    std::string out;
    for (const auto& t : x) {
        if (!out.empty()) out += " + ";
        out += "(" + t.coeff.to_string() + ")*" + label(t.index);
    }
    return out;
}

std::optional<std::size_t> ComoduleAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (data_.basis[i] == label) return i;
    return std::nullopt;
}

namespace {

// Product in H (x) L on pair indices h*m+k.
SparseVec mul_hl(const HopfAlgebra& h, const ComoduleAlgebra& l, const SparseVec& x, const SparseVec& y) {
    const std::size_t m = l.dim();
    SparseAccumulator acc;
    for (const auto& a : x)
        for (const auto& b : y) {
            const Scalar c = a.coeff * b.coeff;
            const SparseVec& hh = h.product(a.index / m, b.index / m);
            const SparseVec& ll = l.product(a.index % m, b.index % m);
            for (const auto& u : hh)
                for (const auto& v : ll) acc.add(u.index * m + v.index, c * u.coeff * v.coeff);
        }
    return acc.take();
}

}  // namespace

CheckList verify_comodule_algebra(const ComoduleAlgebra& l, Exec exec) {
    CheckList r;
    const HopfAlgebra& h = *l.hopf();
    const std::size_t m = l.dim();
    const std::size_t n = h.dim();
    auto lab = [&](std::size_t i) { return l.label(i) + " (#" + std::to_string(i) + ")"; };

    std::size_t bad = first_failure(m, exec, [&](std::size_t i) {
        return l.mul(l.unit(), l.basis_vec(i)) != l.basis_vec(i) || l.mul(l.basis_vec(i), l.unit()) != l.basis_vec(i);
    });
    r.add("unit", bad == m, bad < m ? "x=" + lab(bad) : "");

    std::string w;
    bad = first_failure(m * m, exec, [&](std::size_t ij) {
        const std::size_t i = ij / m;
        const std::size_t j = ij % m;
        for (std::size_t k = 0; k < m; ++k)
            if (l.mul(l.product(i, j), l.basis_vec(k)) != l.mul(l.basis_vec(i), l.product(j, k))) return true;
        return false;
    });
    if (bad < m * m) w = "x=" + lab(bad / m) + ", y=" + lab(bad % m);
    r.add("associativity", bad == m * m, w);

    // (Delta (x) id) delta = (id (x) delta) delta on indices (a*n+b)*m+k.
    bad = first_failure(m, exec, [&](std::size_t i) {
        SparseAccumulator lhs;
        SparseAccumulator rhs;
        for (const auto& t : l.coaction(i)) {
            const std::size_t hh = t.index / m;
            const std::size_t k = t.index % m;
            for (const auto& d : h.coproduct(hh)) lhs.add(d.index * m + k, t.coeff * d.coeff);
            for (const auto& d : l.coaction(k)) rhs.add(hh * n * m + d.index, t.coeff * d.coeff);
        }
        return lhs.take() != rhs.take();
    });
    r.add("coassociativity", bad == m, bad < m ? "x=" + lab(bad) : "");

    bad = first_failure(m, exec, [&](std::size_t i) {
        SparseAccumulator acc;
        for (const auto& t : l.coaction(i)) acc.add(t.index % m, t.coeff * h.counit(t.index / m));
        return acc.take() != l.basis_vec(i);
    });
    r.add("counit", bad == m, bad < m ? "x=" + lab(bad) : "");

    SparseVec one_one;
    for (const auto& u : h.unit())
        for (const auto& v : l.unit()) one_one.push_back({static_cast<std::uint32_t>(u.index * m + v.index), u.coeff * v.coeff});
    r.add("coaction unital", l.coact(l.unit()) == one_one);

    w.clear();
    bad = first_failure(m * m, exec, [&](std::size_t ij) {
        const std::size_t i = ij / m;
        const std::size_t j = ij % m;
        return l.coact(l.product(i, j)) != mul_hl(h, l, l.coaction(i), l.coaction(j));
    });
    if (bad < m * m) w = "x=" + lab(bad / m) + ", y=" + lab(bad % m);
    r.add("coaction multiplicative", bad == m * m, w);
    return r;
}

ComodulePtr pushforward_coaction(const ComoduleAlgebra& l, const BialgebraMap& f) {
    if (l.hopf()->content_hash() != f.source()->content_hash())
        throw std::invalid_argument("comodule algebra is not over the source of the map");
    const std::size_t m = l.dim();
    ComoduleData d = l.data();
    d.hopf = f.target();
    for (std::size_t i = 0; i < m; ++i) {
        SparseAccumulator acc;
        for (const auto& t : l.coaction(i))
            for (const auto& u : f.image(t.index / m)) acc.add(u.index * m + t.index % m, t.coeff * u.coeff);
        d.coaction[i] = acc.take();
    }
    d.metadata["construction"] = "pushforward along " + (f.name().empty() ? std::string("f") : f.name());
    return ComoduleAlgebra::create(std::move(d));
}

namespace {

struct FrobeniusSystem {
    Vec chi;
    SparseVec t;  // f(g_H') gbar_H
};

FrobeniusSystem frobenius_system(const BialgebraMap& f, Exec exec) {
    const InvariantBundle& bt = invariants(*f.target(), exec);
    const InvariantBundle& bs = invariants(*f.source(), exec);
    return {relative_modular_function(f, bt, bs), f.target()->mul(f.apply(bs.g), bt.g_bar)};
}

// chi(l_{-1}) l_0 for l = e_i.
SparseVec twisted(const ComoduleAlgebra& l, const Vec& chi, std::size_t i) {
    const std::size_t m = l.dim();
    SparseAccumulator acc;
    for (const auto& t : l.coaction(i)) acc.add(t.index % m, t.coeff * chi[t.index / m]);
    return acc.take();
}

// f(a_{-1}) (x) a_0 - t (x) a in H (x) L.
SparseVec second_equation(const BialgebraMap& f, const ComoduleAlgebra& l, const SparseVec& t, const SparseVec& a) {
    const std::size_t m = l.dim();
    SparseAccumulator acc;
    for (const auto& c : l.coact(a))
        for (const auto& u : f.image(c.index / m)) acc.add(u.index * m + c.index % m, c.coeff * u.coeff);
    for (const auto& u : t)
        for (const auto& v : a) acc.add(u.index * m + v.index, -u.coeff * v.coeff);
    return acc.take();
}

bool same_algebra(const ComoduleAlgebra& l, const HopfAlgebra& h) {
    return l.hopf()->content_hash() == h.content_hash() && l.dim() == h.dim() && l.data().mult == h.data().mult &&
           l.unit() == h.unit() && l.data().coaction == h.data().comult;
}

}  // namespace

CheckList check_f_frobenius(const BialgebraMap& f, const ComoduleAlgebra& l, const SparseVec& a) {
    CheckList r;
    const FrobeniusSystem sys = frobenius_system(f, Exec::parallel);
    const Matrix la = l.left_mult(a);
    const auto inv = invert(la);
    r.add("invertible", inv.has_value());
    if (inv) {
        const SparseVec a_inv = inv->apply(l.unit());
        std::string w;
        for (std::size_t i = 0; i < l.dim() && w.empty(); ++i)
            if (l.mul(l.mul(a, l.basis_vec(i)), a_inv) != twisted(l, sys.chi, i)) w = "l=" + l.label(i);
        r.add("a l a^-1 = chi(l_-1) l_0", w.empty(), w);
    } else {
        std::string w;
        for (std::size_t i = 0; i < l.dim() && w.empty(); ++i)
            if (l.mul(a, l.basis_vec(i)) != l.mul(twisted(l, sys.chi, i), a)) w = "l=" + l.label(i);
        r.add("a l = chi(l_-1) l_0 a", w.empty(), w);
    }
    r.add("f(a_-1) (x) a_0 = f(g') gbar (x) a", second_equation(f, l, sys.t, a).empty());
    return r;
}

FFrobeniusResult f_frobenius_element(const BialgebraMap& f, const ComoduleAlgebra& l, FFrobeniusOptions opts) {
    if (l.hopf()->content_hash() != f.source()->content_hash())
        throw std::invalid_argument("comodule algebra is not over the source of the map");
    FFrobeniusResult res;
    const Field& field = l.field();
    const std::size_t m = l.dim();
    const FrobeniusSystem sys = frobenius_system(f, opts.exec);

    res.prefilter_applicable = same_algebra(l, *f.source());
    res.prefilter_g_in_image = g_in_image(f, invariants(*f.target(), opts.exec).g);

    // Column k of the system is the image of the unknown basis vector e_k:
    // first the m*m coordinates of {e_k e_l - chi(l_-1) l_0 e_k}_l, then
    // second_equation(e_k) shifted past them.
    std::vector<SparseVec> cols(m);
    for_each_index(m, opts.exec, [&](std::size_t k) {
        const SparseVec ek = l.basis_vec(k);
        SparseAccumulator acc;
        for (std::size_t i = 0; i < m; ++i) {
            for (const auto& t : l.product(k, i)) acc.add(i * m + t.index, t.coeff);
            for (const auto& t : l.mul(twisted(l, sys.chi, i), ek)) acc.add(i * m + t.index, -t.coeff);
        }
        for (const auto& t : second_equation(f, l, sys.t, ek)) acc.add(m * m + t.index, t.coeff);
        cols[k] = acc.take();
    });
    const std::size_t rows = m * m + f.target()->dim() * m;
    const Matrix a = Matrix::from_columns(field, rows, cols);
    const std::vector<Vec> ker = kernel(a, opts.exec);
    res.kernel_dim = ker.size();
    if (ker.empty()) {
        res.warnings.push_back("kernel zero");
        res.checks.add("solution space computed", true);
        if (res.prefilter_applicable && res.prefilter_g_in_image)
            res.findings.push_back("g_H lies in f(H') but no solution exists");
        return res;
    }
    if (ker.size() > 1)
        res.findings.push_back("solution space has dimension " + std::to_string(ker.size()) + ", expected 1");

    auto invertible = [&](const Vec& v) { return rank(l.left_mult(to_sparse(v))) == m; };
    std::optional<Vec> found;
    for (std::size_t i = 0; i < ker.size() && !found; ++i)
        if (invertible(ker[i])) {
            found = ker[i];
            res.search = "kernel basis vector " + std::to_string(i);
        }
    if (!found && ker.size() > 1) {
        Vec s = zero_vec(field, m);
        for (const auto& v : ker)
            for (std::size_t j = 0; j < m; ++j) s[j] += v[j];
        if (invertible(s)) {
            found = s;
            res.search = "sum of kernel basis";
        }
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> dist(-3, 3);
        for (int attempt = 0; attempt < opts.attempts && !found; ++attempt) {
            Vec c = zero_vec(field, m);
            for (const auto& v : ker) {
                const Scalar w = field.from_int(dist(rng));
                for (std::size_t j = 0; j < m; ++j) c[j] += w * v[j];
            }
            if (invertible(c)) {
                found = c;
                res.search = "random combination, attempt " + std::to_string(attempt + 1) + ", seed " +
                             std::to_string(opts.seed);
            }
        }
    }
    if (!found) {
        res.warnings.push_back("kernel nonzero, no invertible representative found");
        return res;
    }
    // Canonical scaling: first nonzero coordinate 1.
    Vec v = *found;
    for (const auto& c : v)
        if (!c.is_zero()) {
            const Scalar s = c.inv();
            for (auto& x : v) x = x * s;
            break;
        }
    res.element = to_sparse(v);
    res.checks = check_f_frobenius(f, l, res.element);
    res.exists = res.checks.ok();
    if (!res.exists) throw InconsistencyError("kernel element fails direct re-verification: " + res.checks.first_failure());
    if (res.prefilter_applicable && !res.prefilter_g_in_image)
        throw InconsistencyError("f-Frobenius element found although g_H is not in f(H')");
    return res;
}

}  // namespace hopfkit
