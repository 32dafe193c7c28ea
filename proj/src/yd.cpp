#include "hopfkit/yd.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

struct Triple {
    std::size_t a, b, c;
    Scalar coeff;
};

// (Delta (x) id) Delta(e_h) as a list of h_1 (x) h_2 (x) h_3.
std::vector<Triple> delta2(const HopfAlgebra& h, std::size_t i) {
    const std::size_t n = h.dim();
    std::vector<Triple> out;
    for (const auto& t : h.coproduct(i))
        for (const auto& u : h.coproduct(t.index / n))
            out.push_back({u.index / n, u.index % n, t.index % n, t.coeff * u.coeff});
    return out;
}

Matrix column_matrix(const Field& f, std::size_t rows, const SparseVec& v) {
    return Matrix::from_columns(f, rows, {v});
}

Matrix row_matrix(const Field& f, std::size_t cols, const SparseVec& v) { return Matrix::from_rows(f, cols, {v}); }

}  // namespace

Matrix YDModule::act(const SparseVec& h) const {
    Matrix m(hopf->field(), dim, dim);
    for (const auto& t : h) m = m + scaled_matrix(action[t.index], t.coeff);
    return m;
}

SparseVec YDModule::coact(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& t : x) acc.add(coaction[t.index], t.coeff);
    return acc.take();
}

ModuleRep YDModule::as_module() const { return ModuleRep(hopf, dim, action); }

CheckList verify_yd(const YDModule& x, Exec exec) {
    CheckList r;
    const HopfAlgebra& h = *x.hopf;
    const Field& f = h.field();
    const std::size_t n = h.dim();
    const std::size_t d = x.dim;
    if (x.action.size() != n || x.coaction.size() != d) {
        r.add("shape", false, "action or coaction table has the wrong size");
        return r;
    }
    r.append(x.as_module().verify(exec));

    std::size_t bad = first_failure(d, exec, [&](std::size_t i) {
        SparseAccumulator lhs;
        SparseAccumulator rhs;
        for (const auto& t : x.coaction[i]) {
            const std::size_t hh = t.index / d;
            const std::size_t k = t.index % d;
            for (const auto& u : h.coproduct(hh)) lhs.add(u.index * d + k, t.coeff * u.coeff);
            for (const auto& u : x.coaction[k]) rhs.add(hh * n * d + u.index, t.coeff * u.coeff);
        }
        return lhs.take() != rhs.take();
    });
    r.add("coassociativity", bad == d, bad < d ? "x=" + x.basis[bad] : "");
    bad = first_failure(d, exec, [&](std::size_t i) {
        SparseAccumulator acc;
        for (const auto& t : x.coaction[i]) acc.add(t.index % d, t.coeff * h.counit(t.index / d));
        return acc.take() != unit_sparse(i, f);
    });
    r.add("counit", bad == d, bad < d ? "x=" + x.basis[bad] : "");

    const auto& gens = h.generators();
    bad = first_failure(gens.size() * d, exec, [&](std::size_t t) {
        const std::size_t g = gens[t / d];
        const std::size_t i = t % d;
        const SparseVec lhs = x.coact(x.action[g].column(i));
        SparseAccumulator rhs;
        for (const auto& tr : delta2(h, g)) {
            const SparseVec s3 = h.antipode(tr.c);
            for (const auto& c : x.coaction[i]) {
                const SparseVec hx = h.mul(h.mul(h.basis_vec(tr.a), h.basis_vec(c.index / d)), s3);
                const SparseVec v = x.action[tr.b].column(c.index % d);
                for (const auto& u : hx)
                    for (const auto& w : v) rhs.add(u.index * d + w.index, tr.coeff * c.coeff * u.coeff * w.coeff);
            }
        }
        return lhs != rhs.take();
    });
    std::string w;
    if (bad < gens.size() * d) w = "h=" + h.label(gens[bad / d]) + ", x=" + x.basis[bad % d];
    r.add("Yetter-Drinfeld compatibility", bad == gens.size() * d, w);
    return r;
}

YDModule trivial_yd(const HopfPtr& h) {
    YDModule y;
    y.hopf = h;
    y.dim = 1;
    y.basis = {"1"};
    for (std::size_t i = 0; i < h->dim(); ++i) {
        Matrix m(h->field(), 1, 1);
        m.set(0, 0, h->counit(i));
        y.action.push_back(std::move(m));
    }
    y.coaction = {h->one()};
    return y;
}

YDModule adjoint_yd(const HopfPtr& h) {
    const std::size_t n = h->dim();
    YDModule y;
    y.hopf = h;
    y.dim = n;
    y.basis = h->basis();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<SparseVec> cols;
        for (std::size_t j = 0; j < n; ++j) {
            SparseAccumulator acc;
            for (const auto& t : h->coproduct(i))
                acc.add(h->mul(h->product(t.index / n, j), h->antipode(t.index % n)), t.coeff);
            cols.push_back(acc.take());
        }
        y.action.push_back(Matrix::from_columns(h->field(), n, cols));
    }
    y.coaction = h->data().comult;
    return y;
}

YDModule coadjoint_yd(const HopfPtr& h) {
    const std::size_t n = h->dim();
    YDModule y;
    y.hopf = h;
    y.dim = n;
    y.basis = h->basis();
    for (std::size_t i = 0; i < n; ++i) y.action.push_back(h->left_mult(i));
    for (std::size_t i = 0; i < n; ++i) {
        SparseAccumulator acc;
        for (const auto& tr : delta2(*h, i))
            for (const auto& u : h->mul(h->basis_vec(tr.a), h->antipode(tr.c))) acc.add(u.index * n + tr.b, tr.coeff * u.coeff);
        y.coaction.push_back(acc.take());
    }
    return y;
}

YDModule graded_yd(const ModuleRep& v, const SparseVec& g) {
    YDModule y;
    y.hopf = v.algebra();
    y.dim = v.dim();
    for (std::size_t i = 0; i < v.dim(); ++i) y.basis.push_back("v" + std::to_string(i + 1));
    y.action = v.actions();
    for (std::size_t i = 0; i < v.dim(); ++i) {
        SparseVec c;
        for (const auto& t : g) c.push_back({static_cast<std::uint32_t>(t.index * v.dim() + i), t.coeff});
        y.coaction.push_back(std::move(c));
    }
    return y;
}

YDModule yd_tensor(const YDModule& x, const YDModule& y) {
    const HopfAlgebra& h = *x.hopf;
    const std::size_t n = h.dim();
    const std::size_t dx = x.dim;
    const std::size_t dy = y.dim;
    const std::size_t d = dx * dy;
    YDModule out;
    out.hopf = x.hopf;
    out.dim = d;
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) out.basis.push_back(x.basis[i] + "|" + y.basis[j]);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(h.field(), d, d);
        for (const auto& t : h.coproduct(i))
            m = m + scaled_matrix(kron(x.action[t.index / n], y.action[t.index % n]), t.coeff);
        out.action.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) {
            SparseAccumulator acc;
            for (const auto& a : x.coaction[i])
                for (const auto& b : y.coaction[j])
                    for (const auto& u : h.product(a.index / dx, b.index / dy))
                        acc.add(u.index * d + (a.index % dx) * dy + b.index % dy, a.coeff * b.coeff * u.coeff);
            out.coaction.push_back(acc.take());
        }
    return out;
}

Matrix braiding(const YDModule& x, const YDModule& y) {
    const Field& f = x.hopf->field();
    const std::size_t dx = x.dim;
    const std::size_t dy = y.dim;
    std::vector<SparseVec> cols(dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) {
            SparseAccumulator acc;
            for (const auto& t : x.coaction[i])
                for (const auto& v : y.action[t.index / dx].column(j)) acc.add(v.index * dx + t.index % dx, t.coeff * v.coeff);
            cols[i * dy + j] = acc.take();
        }
    return Matrix::from_columns(f, dx * dy, cols);
}

Matrix swap_matrix(const Field& f, std::size_t dx, std::size_t dy) {
    Matrix m(f, dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) m.set(j * dx + i, i * dy + j, f.one());
    return m;
}

bool is_yd_morphism(const YDModule& x, const YDModule& y, const Matrix& t, std::string* witness) {
    if (t.rows() != y.dim || t.cols() != x.dim) throw std::invalid_argument("YD morphism has wrong shape");
    const HopfAlgebra& h = *x.hopf;
    for (auto g : h.generators())
        if (t * x.action[g] != y.action[g] * t) {
            if (witness != nullptr) *witness = "not H-linear at h=" + h.label(g);
            return false;
        }
    for (std::size_t i = 0; i < x.dim; ++i) {
        SparseAccumulator acc;
        for (const auto& c : x.coaction[i])
            for (const auto& v : t.column(c.index % x.dim)) acc.add((c.index / x.dim) * y.dim + v.index, c.coeff * v.coeff);
        if (acc.take() != y.coact(t.column(i))) {
            if (witness != nullptr) *witness = "not H-colinear at x=" + x.basis[i];
            return false;
        }
    }
    return true;
}

CheckList verify_hexagons(const YDModule& x, const YDModule& y, const YDModule& z) {
    CheckList r;
    const Field& f = x.hopf->field();
    const Matrix ix = Matrix::identity(f, x.dim);
    const Matrix iy = Matrix::identity(f, y.dim);
    const Matrix iz = Matrix::identity(f, z.dim);
    const Matrix lhs1 = braiding(yd_tensor(x, y), z);
    const Matrix rhs1 = kron(braiding(x, z), iy) * kron(ix, braiding(y, z));
    r.add("c_{X(x)Y,Z} = (c_{X,Z} (x) id)(id (x) c_{Y,Z})", lhs1 == rhs1);
    const Matrix lhs2 = braiding(x, yd_tensor(y, z));
    const Matrix rhs2 = kron(iy, braiding(x, z)) * kron(braiding(x, y), iz);
    r.add("c_{X,Y(x)Z} = (id (x) c_{X,Z})(c_{X,Y} (x) id)", lhs2 == rhs2);
    return r;
}

YDDual yd_dual(const YDModule& x, DualSide side, Exec exec) {
    const HopfAlgebra& h = *x.hopf;
    const Field& f = h.field();
    const std::size_t n = h.dim();
    const std::size_t d = x.dim;
    YDDual out;
    out.side = side;
    YDModule& dm = out.dual;
    dm.hopf = x.hopf;
    dm.dim = d;
    for (const auto& b : x.basis) dm.basis.push_back(b + "*");
    // (h.f)(x) = f(S(h) x) on the right dual, f(S^-1(h) x) on the left dual.
    for (std::size_t i = 0; i < n; ++i) {
        const SparseVec s = side == DualSide::right ? h.antipode(i) : h.S_inv(h.basis_vec(i));
        dm.action.push_back(x.act(s).transpose());
    }
    // Unknown coaction D[u][s] of one dual basis vector, index u*d+s. The ev
    // condition for f_v against e_w reads, for the right dual,
    // sum D[u][s] [s = w_0] e_u w_{-1} = delta_{vw} 1, and with the factors
    // swapped (w_{-1} e_u) for the left dual.
    Matrix sys(f, d * n, n * d);
    for (std::size_t w = 0; w < d; ++w)
        for (const auto& t : x.coaction[w]) {
            const std::size_t hw = t.index / d;
            const std::size_t w0 = t.index % d;
            for (std::size_t u = 0; u < n; ++u) {
                const SparseVec& prod = side == DualSide::right ? h.product(u, hw) : h.product(hw, u);
                for (const auto& c : prod) sys.add_to(w * n + c.index, u * d + w0, t.coeff * c.coeff);
            }
        }
    Matrix rhs(f, d * n, d);
    for (std::size_t v = 0; v < d; ++v)
        for (const auto& u : h.unit()) rhs.set(v * n + u.index, v, u.coeff);
    out.solution_kernel_dim = n * d - rank(sys);
    const auto sol = solve_many(sys, rhs, exec);
    out.checks.add("dual coaction exists", sol.has_value());
    out.checks.add("dual coaction unique", out.solution_kernel_dim == 0,
                   "solution space has dimension " + std::to_string(out.solution_kernel_dim));
    if (!sol) throw InconsistencyError("no coaction makes ev a comodule map");
    const Matrix cols = sol->transpose();
    for (std::size_t v = 0; v < d; ++v) dm.coaction.push_back(cols.row(v));

    out.checks.append(verify_yd(dm, exec), "dual: ");
    const YDModule k = trivial_yd(x.hopf);
    SparseVec ev;
    SparseVec coev;
    for (std::size_t w = 0; w < d; ++w) {
        ev.push_back({static_cast<std::uint32_t>(w * d + w), f.one()});
        coev.push_back({static_cast<std::uint32_t>(w * d + w), f.one()});
    }
    out.ev = ev;
    out.coev = coev;
    const Matrix ev_m = row_matrix(f, d * d, ev);
    const Matrix coev_m = column_matrix(f, d * d, coev);
    const Matrix ix = Matrix::identity(f, d);
    std::string w;
    if (side == DualSide::right) {
        // ev: X*(x)X -> k, coev: k -> X(x)X*.
        out.checks.add("ev is a YD morphism", is_yd_morphism(yd_tensor(dm, x), k, ev_m, &w), w);
        out.checks.add("coev is a YD morphism", is_yd_morphism(k, yd_tensor(x, dm), coev_m, &w), w);
        out.checks.add("zig-zag on X", (kron(ix, ev_m) * kron(coev_m, ix)).is_identity());
        out.checks.add("zig-zag on X*", (kron(ev_m, ix) * kron(ix, coev_m)).is_identity());
    } else {
        // ev: X(x)X* -> k, coev: k -> X*(x)X.
        out.checks.add("ev is a YD morphism", is_yd_morphism(yd_tensor(x, dm), k, ev_m, &w), w);
        out.checks.add("coev is a YD morphism", is_yd_morphism(k, yd_tensor(dm, x), coev_m, &w), w);
        out.checks.add("zig-zag on X", (kron(ev_m, ix) * kron(ix, coev_m)).is_identity());
        out.checks.add("zig-zag on X*", (kron(ix, ev_m) * kron(coev_m, ix)).is_identity());
    }
    if (!out.checks.ok()) throw InconsistencyError("YD dual: " + out.checks.first_failure());
    return out;
}

YDPivot yd_pivot(const YDModule& x, const SparseVec& g, Exec exec) {
    YDPivot out;
    std::string w;
    out.checks.add("pivotal element", verify_pivotal(*x.hopf, g, &w), w);
    out.double_dual = yd_dual(yd_dual(x, DualSide::right, exec).dual, DualSide::right, exec).dual;
    out.map = x.act(g);
    out.checks.add("invertible", rank(out.map) == x.dim);
    w.clear();
    out.checks.add("YD morphism X -> X**", is_yd_morphism(x, out.double_dual, out.map, &w), w);
    return out;
}

SparseVec TSpace::value(const Vec& coords, const SparseVec& h) const {
    const Vec fv = functions.combine(coords);
    const std::size_t dp = target->dim();
    SparseAccumulator acc;
    for (const auto& t : h)
        for (std::size_t p = 0; p < dp; ++p) {
            const Scalar& c = fv[t.index * dp + p];
            if (!c.is_zero()) acc.add(p, t.coeff * c);
        }
    return acc.take();
}

TSpace t_space(const BimodulePtr& pp, Exec exec) {
    const HLBimodule& p = *pp;
    const ComoduleAlgebra& l = *p.algebra();
    const HopfAlgebra& h = *p.hopf();
    const Field& f = h.field();
    const std::size_t n = h.dim();
    const std::size_t m = l.dim();
    const std::size_t dp = p.dim();
    const std::size_t amb = n * dp;
    TSpace out;
    out.target = pp;

    // l > f(e_h) - f(l_{-1} e_h) < l_0 = 0 for every (l, h), one row per output p.
    std::vector<std::vector<SparseVec>> blocks(m * n);
    for_each_index(m * n, exec, [&](std::size_t lh) {
        const std::size_t a = lh / n;
        const std::size_t hi = lh % n;
        std::vector<SparseAccumulator> rows(dp);
        for (std::size_t q = 0; q < dp; ++q)
            for (const auto& t : p.left(a, q)) rows[t.index].add(hi * dp + q, t.coeff);
        for (const auto& c : l.coaction(a)) {
            const std::size_t k = c.index / m;
            const std::size_t a0 = c.index % m;
            for (const auto& hp : h.product(k, hi))
                for (std::size_t q = 0; q < dp; ++q)
                    for (const auto& t : p.right(q, a0)) rows[t.index].add(hp.index * dp + q, -c.coeff * hp.coeff * t.coeff);
        }
        for (auto& r : rows) {
            SparseVec v = r.take();
            if (!v.empty()) blocks[lh].push_back(std::move(v));
        }
    });
    Matrix sys(f, 0, amb);
    for (auto& b : blocks)
        for (auto& r : b) sys.append_row(std::move(r));
    out.functions = Subspace(f, amb, kernel(sys, exec));
    const std::size_t dim = out.functions.dim();

    YDModule& y = out.module;
    y.hopf = p.hopf();
    y.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) y.basis.push_back("t" + std::to_string(i + 1));
    auto coords = [&](const Vec& v, const char* what) {
        auto c = out.functions.coordinates(v);
        if (!c) throw InconsistencyError(std::string("T^L(H,P): ") + what + " leaves the constraint space");
        return to_sparse(*c);
    };
    // (e_g * f)(e_h') = f(e_h' e_g).
    y.action.resize(n);
    for_each_index(n, exec, [&](std::size_t g) {
        std::vector<SparseVec> cols(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const Vec& fv = out.functions.basis(i);
            Vec nv = zero_vec(f, amb);
            for (std::size_t hp = 0; hp < n; ++hp)
                for (const auto& t : h.product(hp, g))
                    for (std::size_t q = 0; q < dp; ++q)
                        if (!fv[t.index * dp + q].is_zero()) nv[hp * dp + q] += t.coeff * fv[t.index * dp + q];
            cols[i] = coords(nv, "action");
        }
        y.action[g] = Matrix::from_columns(f, dim, cols);
    });
    // f_{-1} (x) f_0(h) = S(h_1) f(h_2)_{-1} h_3 (x) f(h_2)_0.
    std::vector<std::vector<Triple>> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = delta2(h, i);
    y.coaction.resize(dim);
    for_each_index(dim, exec, [&](std::size_t i) {
        const Vec& fv = out.functions.basis(i);
        std::vector<Vec> comp(n);
        for (std::size_t hi = 0; hi < n; ++hi)
            for (const auto& tr : d2[hi])
                for (std::size_t q = 0; q < dp; ++q) {
                    const Scalar& val = fv[tr.b * dp + q];
                    if (val.is_zero()) continue;
                    for (const auto& c : p.coaction(q)) {
                        const SparseVec hx =
                            h.mul(h.mul(h.antipode(tr.a), h.basis_vec(c.index / dp)), h.basis_vec(tr.c));
                        for (const auto& u : hx) {
                            if (comp[u.index].empty()) comp[u.index] = zero_vec(f, amb);
                            comp[u.index][hi * dp + c.index % dp] += tr.coeff * val * c.coeff * u.coeff;
                        }
                    }
                }
        SparseAccumulator acc;
        for (std::size_t u = 0; u < n; ++u)
            if (!comp[u].empty() && !is_zero(comp[u]))
                for (const auto& t : coords(comp[u], "coaction")) acc.add(u * dim + t.index, t.coeff);
        y.coaction[i] = acc.take();
    });
    out.checks.append(verify_yd(y, exec));
    if (!out.checks.ok()) throw InconsistencyError("T^L(H,P) fails the YD axioms: " + out.checks.first_failure());
    return out;
}

}  // namespace hopfkit
