#include "hopfkit/bimodule.hpp"

#include <stdexcept>

namespace hopfkit {

void BimoduleData::validate_shape() const {
    if (!algebra) throw std::invalid_argument("bimodule without a comodule algebra");
    const std::size_t m = algebra->dim();
    const std::size_t n = algebra->hopf()->dim();
    if (basis.size() != dim) throw std::invalid_argument("bimodule basis has the wrong length");
    if (left.size() != m * dim) throw std::invalid_argument("left action table has the wrong size");
    if (right.size() != dim * m) throw std::invalid_argument("right action table has the wrong size");
    if (coaction.size() != dim) throw std::invalid_argument("bimodule coaction table has the wrong size");
    for (const auto* table : {&left, &right})
        for (const auto& v : *table)
            for (const auto& t : v)
                if (t.index >= dim) throw std::invalid_argument("action index out of range");
    for (const auto& v : coaction)
        for (const auto& t : v)
            if (t.index >= n * dim) throw std::invalid_argument("bimodule coaction index out of range");
}

HLBimodule::HLBimodule(BimoduleData data) : data_(std::move(data)) { data_.validate_shape(); }

BimodulePtr HLBimodule::unchecked(BimoduleData data) { return std::make_shared<const HLBimodule>(std::move(data)); }

BimodulePtr HLBimodule::create(BimoduleData data) {
    auto p = unchecked(std::move(data));
    CheckList r = verify_bimodule(*p);
    if (!r.ok()) throw VerificationError("not an H-comodule L-bimodule: " + r.first_failure(), r);
    return p;
}

SparseVec HLBimodule::act_left(const SparseVec& l, const SparseVec& p) const {
    SparseAccumulator acc;
    for (const auto& a : l)
        for (const auto& b : p) acc.add(left(a.index, b.index), a.coeff * b.coeff);
    return acc.take();
}

SparseVec HLBimodule::act_right(const SparseVec& p, const SparseVec& l) const {
    SparseAccumulator acc;
    for (const auto& a : p)
        for (const auto& b : l) acc.add(right(a.index, b.index), a.coeff * b.coeff);
    return acc.take();
}

SparseVec HLBimodule::coact(const SparseVec& p) const {
    SparseAccumulator acc;
    for (const auto& t : p) acc.add(coaction(t.index), t.coeff);
    return acc.take();
}

std::string HLBimodule::format(const SparseVec& x) const {
    if (x.empty()) return "0";
    if (x.size() == 1 && x[0].coeff.is_one()) return label(x[0].index);
    std::string out;
    for (const auto& t : x) {
        if (!out.empty()) out += " + ";
        out += "(" + t.coeff.to_string() + ")*" + label(t.index);
    }
    return out;
}

CheckList verify_bimodule(const HLBimodule& p, Exec exec) {
    CheckList r;
    const ComoduleAlgebra& l = *p.algebra();
    const HopfAlgebra& h = *p.hopf();
    const std::size_t d = p.dim();
    const std::size_t m = l.dim();
    const std::size_t n = h.dim();
    auto lab = [&](std::size_t i) { return p.label(i); };

    std::size_t bad = first_failure(d, exec, [&](std::size_t i) {
        const SparseVec e = unit_sparse(i, p.field());
        return p.act_left(l.unit(), e) != e || p.act_right(e, l.unit()) != e;
    });
    r.add("unit acts trivially", bad == d, bad < d ? "p=" + lab(bad) : "");

    bad = first_failure(m * m, exec, [&](std::size_t ab) {
        const std::size_t a = ab / m;
        const std::size_t b = ab % m;
        for (std::size_t i = 0; i < d; ++i) {
            const SparseVec e = unit_sparse(i, p.field());
            if (p.act_left(l.product(a, b), e) != p.act_left(l.basis_vec(a), p.left(b, i))) return true;
            if (p.act_right(e, l.product(a, b)) != p.act_right(p.right(i, a), l.basis_vec(b))) return true;
            if (p.act_right(p.left(a, i), l.basis_vec(b)) != p.act_left(l.basis_vec(a), p.right(i, b))) return true;
        }
        return false;
    });
    r.add("bimodule axioms", bad == m * m, bad < m * m ? "a=" + l.label(bad / m) + ", b=" + l.label(bad % m) : "");

    bad = first_failure(d, exec, [&](std::size_t i) {
        SparseAccumulator lhs;
        SparseAccumulator rhs;
        for (const auto& t : p.coaction(i)) {
            const std::size_t hh = t.index / d;
            const std::size_t k = t.index % d;
            for (const auto& u : h.coproduct(hh)) lhs.add(u.index * d + k, t.coeff * u.coeff);
            for (const auto& u : p.coaction(k)) rhs.add(hh * n * d + u.index, t.coeff * u.coeff);
        }
        return lhs.take() != rhs.take();
    });
    r.add("coassociativity", bad == d, bad < d ? "p=" + lab(bad) : "");

    bad = first_failure(d, exec, [&](std::size_t i) {
        SparseAccumulator acc;
        for (const auto& t : p.coaction(i)) acc.add(t.index % d, t.coeff * h.counit(t.index / d));
        return acc.take() != unit_sparse(i, p.field());
    });
    r.add("counit", bad == d, bad < d ? "p=" + lab(bad) : "");

    // rho(a > p) = a_{-1} p_{-1} (x) a_0 > p_0 and the mirror for <.
    bad = first_failure(m * d, exec, [&](std::size_t ai) {
        const std::size_t a = ai / d;
        const std::size_t i = ai % d;
        const SparseVec& da = l.coaction(a);
        const SparseVec lhs_left = p.coact(p.left(a, i));
        SparseAccumulator acc;
        for (const auto& x : da)
            for (const auto& y : p.coaction(i)) {
                const SparseVec& hh = h.product(x.index / m, y.index / d);
                const SparseVec& pp = p.left(x.index % m, y.index % d);
                for (const auto& u : hh)
                    for (const auto& v : pp) acc.add(u.index * d + v.index, x.coeff * y.coeff * u.coeff * v.coeff);
            }
        if (lhs_left != acc.take()) return true;
        const SparseVec lhs_right = p.coact(p.right(i, a));
        for (const auto& y : p.coaction(i))
            for (const auto& x : da) {
                const SparseVec& hh = h.product(y.index / d, x.index / m);
                const SparseVec& pp = p.right(y.index % d, x.index % m);
                for (const auto& u : hh)
                    for (const auto& v : pp) acc.add(u.index * d + v.index, x.coeff * y.coeff * u.coeff * v.coeff);
            }
        return lhs_right != acc.take();
    });
    r.add("coaction compatible with actions", bad == m * d,
          bad < m * d ? "a=" + l.label(bad / d) + ", p=" + lab(bad % d) : "");
    return r;
}

BimodulePtr regular_bimodule(const ComodulePtr& l) {
    BimoduleData d;
    d.algebra = l;
    d.dim = l->dim();
    d.basis = l->data().basis;
    d.left = l->data().mult;
    d.right = l->data().mult;
    d.coaction = l->data().coaction;
    d.metadata["construction"] = "regular";
    return HLBimodule::create(std::move(d));
}

BimodulePtr direct_sum(const HLBimodule& p, const HLBimodule& q) {
    if (p.algebra() != q.algebra()) throw std::invalid_argument("direct sum over different algebras");
    const std::size_t dp = p.dim();
    const std::size_t dq = q.dim();
    const std::size_t d = dp + dq;
    const std::size_t m = p.algebra_dim();
    BimoduleData out;
    out.algebra = p.algebra();
    out.dim = d;
    for (std::size_t i = 0; i < dp; ++i) out.basis.push_back(p.label(i) + "@1");
    for (std::size_t i = 0; i < dq; ++i) out.basis.push_back(q.label(i) + "@2");
    auto shift = [](const SparseVec& v, std::size_t s) {
        SparseVec o = v;
        for (auto& t : o) t.index += static_cast<std::uint32_t>(s);
        return o;
    };
    out.left.resize(m * d);
    out.right.resize(d * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t i = 0; i < dp; ++i) {
            out.left[a * d + i] = p.left(a, i);
            out.right[i * m + a] = p.right(i, a);
        }
        for (std::size_t i = 0; i < dq; ++i) {
            out.left[a * d + dp + i] = shift(q.left(a, i), dp);
            out.right[(dp + i) * m + a] = shift(q.right(i, a), dp);
        }
    }
    auto recoact = [&](const SparseVec& v, std::size_t dsrc, std::size_t s) {
        SparseVec o;
        for (const auto& t : v)
            o.push_back({static_cast<std::uint32_t>((t.index / dsrc) * d + s + t.index % dsrc), t.coeff});
        return o;
    };
    for (std::size_t i = 0; i < dp; ++i) out.coaction.push_back(recoact(p.coaction(i), dp, 0));
    for (std::size_t i = 0; i < dq; ++i) out.coaction.push_back(recoact(q.coaction(i), dq, dp));
    return HLBimodule::create(std::move(out));
}

TensorOverL tensor_over_L(const HLBimodule& p, const HLBimodule& q) {
    if (p.algebra() != q.algebra() && p.algebra()->data().mult != q.algebra()->data().mult)
        throw std::invalid_argument("tensor over L of bimodules over different algebras");
    const Field& f = p.field();
    const ComoduleAlgebra& l = *p.algebra();
    const HopfAlgebra& h = *p.hopf();
    const std::size_t dp = p.dim();
    const std::size_t dq = q.dim();
    const std::size_t m = l.dim();
    const std::size_t big = dp * dq;

    Echelon e(f, big);
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t j = 0; j < dq; ++j) {
                SparseAccumulator acc;
                for (const auto& t : p.right(i, a)) acc.add(t.index * dq + j, t.coeff);
                for (const auto& t : q.left(a, j)) acc.add(i * dq + t.index, -t.coeff);
                const SparseVec rel = acc.take();
                if (!rel.empty()) e.insert(rel);
            }
    const Rref rr = e.finish();
    TensorOverL out;
    out.relation_rank = rr.rank();
    std::vector<std::int64_t> pos(big, -1);
    {
        std::vector<bool> is_pivot(big, false);
        for (auto c : rr.pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < big; ++c)
            if (!is_pivot[c]) {
                pos[c] = static_cast<std::int64_t>(out.lift.size());
                out.lift.push_back(c);
            }
    }
    const std::size_t dim = out.lift.size();
    std::vector<SparseVec> cols(big);
    for (std::size_t c = 0; c < big; ++c)
        if (pos[c] >= 0) cols[c] = unit_sparse(static_cast<std::size_t>(pos[c]), f);
    for (std::size_t r = 0; r < rr.rank(); ++r) {
        SparseAccumulator acc;
        for (const auto& t : rr.R.row(r))
            if (pos[t.index] >= 0) acc.add(static_cast<std::size_t>(pos[t.index]), -t.coeff);
        cols[rr.pivots[r]] = acc.take();
    }
    out.projection = Matrix::from_columns(f, dim, cols);

    BimoduleData d;
    d.algebra = p.algebra();
    d.dim = dim;
    for (auto c : out.lift) d.basis.push_back(p.label(c / dq) + "|" + q.label(c % dq));
    d.left.resize(m * dim);
    d.right.resize(dim * m);
    for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t i = out.lift[k] / dq;
        const std::size_t j = out.lift[k] % dq;
        for (std::size_t a = 0; a < m; ++a) {
            SparseAccumulator la;
            for (const auto& t : p.left(a, i)) la.add(t.index * dq + j, t.coeff);
            d.left[a * dim + k] = out.project(la.take());
            SparseAccumulator ra;
            for (const auto& t : q.right(j, a)) ra.add(i * dq + t.index, t.coeff);
            d.right[k * m + a] = out.project(ra.take());
        }
        // rho(p (x) q) = p_{-1} q_{-1} (x) p_0 (x) q_0.
        SparseAccumulator co;
        for (const auto& x : p.coaction(i))
            for (const auto& y : q.coaction(j)) {
                const SparseVec& hh = h.product(x.index / dp, y.index / dq);
                const SparseVec pr = out.project(unit_sparse((x.index % dp) * dq + y.index % dq, f));
                for (const auto& u : hh)
                    for (const auto& v : pr) co.add(u.index * dim + v.index, x.coeff * y.coeff * u.coeff * v.coeff);
            }
        d.coaction.push_back(co.take());
    }
    d.metadata["construction"] = "tensor over L";
    out.module = HLBimodule::unchecked(std::move(d));
    CheckList r = verify_bimodule(*out.module);
    if (!r.ok()) throw InconsistencyError("P (x)_L Q fails the bimodule axioms: " + r.first_failure());
    return out;
}

Subspace left_linear_maps(const HLBimodule& p) {
    const Field& f = p.field();
    const ComoduleAlgebra& l = *p.algebra();
    const std::size_t d = p.dim();
    const std::size_t m = l.dim();
    // f(a > e_j) - a f(e_j) = 0, one row per (a, j, output k).
    Matrix sys(f, 0, m * d);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<SparseAccumulator> rows(m);
            for (const auto& t : p.left(a, j))
                for (std::size_t k = 0; k < m; ++k) rows[k].add(k * d + t.index, t.coeff);
            for (std::size_t k = 0; k < m; ++k)
                for (const auto& t : l.product(a, k)) rows[t.index].add(k * d + j, -t.coeff);
            for (auto& r : rows) {
                SparseVec v = r.take();
                if (!v.empty()) sys.append_row(std::move(v));
            }
        }
    return Subspace(f, m * d, kernel(sys));
}

SparseVec evaluate_map(const HLBimodule& p, const Vec& fv, const SparseVec& x) {
    const std::size_t d = p.dim();
    const std::size_t m = p.algebra_dim();
    SparseAccumulator acc;
    for (const auto& t : x)
        for (std::size_t k = 0; k < m; ++k) {
            const Scalar& c = fv[k * d + t.index];
            if (!c.is_zero()) acc.add(k, t.coeff * c);
        }
    return acc.take();
}

DualBasisData dual_basis(const HLBimodule& p, const Subspace& maps) {
    const Field& f = p.field();
    const std::size_t d = p.dim();
    const std::size_t D = maps.dim();
    // Unknown y[i*D+s]: b^i = sum_s y[i,s] phi_s. Equation for each p and output coordinate.
    Matrix sys(f, d * d, d * D);
    Vec rhs = zero_vec(f, d * d);
    for (std::size_t pp = 0; pp < d; ++pp) {
        rhs[pp * d + pp] = f.one();
        for (std::size_t s = 0; s < D; ++s) {
            const SparseVec val = evaluate_map(p, maps.basis(s), unit_sparse(pp, f));
            for (std::size_t i = 0; i < d; ++i)
                for (const auto& t : p.act_left(val, unit_sparse(i, f))) sys.add_to(pp * d + t.index, i * D + s, t.coeff);
        }
    }
    const Solution sol = solve(sys, rhs);
    if (!sol.consistent) throw std::invalid_argument("not projective as left L-module");
    DualBasisData out;
    for (std::size_t i = 0; i < d; ++i) {
        out.elements.push_back(unit_sparse(i, f));
        Vec coords(sol.x.begin() + static_cast<std::ptrdiff_t>(i * D), sol.x.begin() + static_cast<std::ptrdiff_t>((i + 1) * D));
        out.functionals.push_back(maps.combine(coords));
    }
    return out;
}

LeftDual left_dual(const HLBimodule& p, Exec exec) {
    const Field& f = p.field();
    const ComoduleAlgebra& l = *p.algebra();
    const HopfAlgebra& h = *p.hopf();
    const std::size_t d = p.dim();
    const std::size_t m = l.dim();
    const std::size_t n = h.dim();
    LeftDual out;
    out.maps = left_linear_maps(p);
    const std::size_t D = out.maps.dim();
    auto coords = [&](const Vec& fv, const char* what) {
        auto c = out.maps.coordinates(fv);
        if (!c) throw InconsistencyError(std::string("dagger P: ") + what + " leaves Hom_L(P, L)");
        return to_sparse(*c);
    };

    BimoduleData dd;
    dd.algebra = p.algebra();
    dd.dim = D;
    for (std::size_t s = 0; s < D; ++s) dd.basis.push_back("phi" + std::to_string(s + 1));
    dd.left.resize(m * D);
    dd.right.resize(D * m);
    for (std::size_t s = 0; s < D; ++s) {
        const Vec& phi = out.maps.basis(s);
        for (std::size_t a = 0; a < m; ++a) {
            Vec lf = zero_vec(f, m * d);
            Vec rf = zero_vec(f, m * d);
            for (std::size_t j = 0; j < d; ++j) {
                for (const auto& t : evaluate_map(p, phi, p.right(j, a))) lf[t.index * d + j] += t.coeff;
                for (const auto& t : l.mul(evaluate_map(p, phi, unit_sparse(j, f)), l.basis_vec(a)))
                    rf[t.index * d + j] += t.coeff;
            }
            dd.left[a * D + s] = coords(lf, "left action");
            dd.right[s * m + a] = coords(rf, "right action");
        }
        // One vectorized map per H basis component u.
        std::vector<Vec> comp(n, zero_vec(f, m * d));
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : p.coaction(j)) {
                const SparseVec su = h.antipode(t.index / d);
                const SparseVec val = evaluate_map(p, phi, unit_sparse(t.index % d, f));
                for (const auto& c : l.coact(val)) {
                    const SparseVec hh = h.mul(su, h.basis_vec(c.index / m));
                    for (const auto& u : hh) comp[u.index][(c.index % m) * d + j] += t.coeff * c.coeff * u.coeff;
                }
            }
        SparseAccumulator co;
        for (std::size_t u = 0; u < n; ++u)
            if (!is_zero(comp[u]))
                for (const auto& t : coords(comp[u], "coaction")) co.add(u * D + t.index, t.coeff);
        dd.coaction.push_back(co.take());
    }
    dd.metadata["construction"] = "left dual";
    out.dual = HLBimodule::unchecked(std::move(dd));
    out.checks.append(verify_bimodule(*out.dual, exec), "dagger P: ");
    if (!out.checks.ok()) throw InconsistencyError("dagger P fails the bimodule axioms: " + out.checks.first_failure());

    out.basis = dual_basis(p, out.maps);
    const HLBimodule& dp = *out.dual;
    out.p_dual = tensor_over_L(p, dp);
    out.dual_p = tensor_over_L(dp, p);

    // ev on P (x) dagger P (pair index j*D+s), then restricted to the quotient.
    Matrix ev_full(f, m, d * D);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t s = 0; s < D; ++s)
            for (const auto& t : evaluate_map(p, out.maps.basis(s), unit_sparse(j, f))) ev_full.set(t.index, j * D + s, t.coeff);
    {
        std::vector<SparseVec> cols;
        for (auto c : out.p_dual.lift) cols.push_back(ev_full.column(c));
        out.ev = Matrix::from_columns(f, m, cols);
    }
    out.checks.add("ev balanced", out.ev * out.p_dual.projection == ev_full);
    const HLBimodule& pd = *out.p_dual.module;
    {
        std::string w;
        for (std::size_t k = 0; k < pd.dim() && w.empty(); ++k) {
            const SparseVec ek = unit_sparse(k, f);
            const SparseVec v = out.ev.apply(ek);
            for (std::size_t a = 0; a < m && w.empty(); ++a) {
                if (out.ev.apply(pd.left(a, k)) != l.mul(l.basis_vec(a), v)) w = "left, x=" + pd.label(k);
                if (out.ev.apply(pd.right(k, a)) != l.mul(v, l.basis_vec(a))) w = "right, x=" + pd.label(k);
            }
            SparseAccumulator lhs;
            for (const auto& t : pd.coaction(k))
                for (const auto& u : out.ev.apply(unit_sparse(t.index % pd.dim(), f)))
                    lhs.add((t.index / pd.dim()) * m + u.index, t.coeff * u.coeff);
            if (lhs.take() != l.coact(v)) w = "colinear, x=" + pd.label(k);
        }
        out.checks.add("ev is a morphism", w.empty(), w);
    }

    // coev(1) = sum_i b^i (x) b_i.
    SparseAccumulator cacc;
    for (std::size_t i = 0; i < d; ++i) {
        const auto bi = out.maps.coordinates(out.basis.functionals[i]);
        for (std::size_t s = 0; s < D; ++s)
            if (!(*bi)[s].is_zero())
                for (const auto& t : out.basis.elements[i]) cacc.add(s * d + t.index, (*bi)[s] * t.coeff);
    }
    out.coev_one = out.dual_p.project(cacc.take());
    const HLBimodule& dpm = *out.dual_p.module;
    {
        std::string w;
        for (std::size_t a = 0; a < m && w.empty(); ++a)
            if (dpm.act_left(l.basis_vec(a), out.coev_one) != dpm.act_right(out.coev_one, l.basis_vec(a)))
                w = "l > coev(1) != coev(1) < l at l=" + l.label(a);
        SparseVec one_coev;
        for (const auto& u : h.unit())
            for (const auto& t : out.coev_one)
                one_coev.push_back({static_cast<std::uint32_t>(u.index * dpm.dim() + t.index), u.coeff * t.coeff});
        if (w.empty() && dpm.coact(out.coev_one) != one_coev) w = "coev(1) is not coinvariant";
        out.checks.add("coev is a morphism", w.empty(), w);
    }

    // Zig-zags through the quotient maps.
    std::vector<SparseVec> z1(d);
    for (std::size_t j = 0; j < d; ++j) {
        SparseAccumulator acc;
        for (const auto& c : out.coev_one) {
            const std::size_t pair = out.dual_p.lift[c.index];
            const std::size_t s = pair / d;
            const std::size_t q = pair % d;
            const SparseVec lval = out.ev.apply(out.p_dual.project(unit_sparse(j * D + s, f)));
            acc.add(p.act_left(lval, unit_sparse(q, f)), c.coeff);
        }
        z1[j] = acc.take();
    }
    out.zigzag_p = Matrix::from_columns(f, d, z1);
    std::vector<SparseVec> z2(D);
    for (std::size_t s0 = 0; s0 < D; ++s0) {
        SparseAccumulator acc;
        for (const auto& c : out.coev_one) {
            const std::size_t pair = out.dual_p.lift[c.index];
            const std::size_t s = pair / d;
            const std::size_t q = pair % d;
            const SparseVec lval = out.ev.apply(out.p_dual.project(unit_sparse(q * D + s0, f)));
            acc.add(dp.act_right(unit_sparse(s, f), lval), c.coeff);
        }
        z2[s0] = acc.take();
    }
    out.zigzag_dual = Matrix::from_columns(f, D, z2);
    out.checks.add("zig-zag on P", out.zigzag_p.is_identity());
    out.checks.add("zig-zag on dagger P", out.zigzag_dual.is_identity());
    if (!out.checks.ok()) throw InconsistencyError("left dual: " + out.checks.first_failure());
    return out;
}

}  // namespace hopfkit
