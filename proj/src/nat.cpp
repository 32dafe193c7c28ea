#include "hopfkit/yd.hpp"

#include <stdexcept>

namespace hopfkit {

SparseVec YDAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
    const std::size_t d = module.dim;
    SparseAccumulator acc;
    for (const auto& a : x)
        for (const auto& b : y) acc.add(mult.column(a.index * d + b.index), a.coeff * b.coeff);
    return acc.take();
}

CheckList verify_yd_algebra(const YDAlgebra& a, Exec exec) {
    CheckList r;
    const Field& f = a.module.hopf->field();
    const std::size_t d = a.module.dim;
    // Columns of mult, cached once.
    std::vector<SparseVec> cols(d * d);
    const Matrix mt = a.mult.transpose();
    for (std::size_t i = 0; i < d * d; ++i) cols[i] = mt.row(i);
    auto mul = [&](const SparseVec& x, const SparseVec& y) {
        SparseAccumulator acc;
        for (const auto& s : x)
            for (const auto& t : y) acc.add(cols[s.index * d + t.index], s.coeff * t.coeff);
        return acc.take();
    };
    std::size_t bad = first_failure(d * d, exec, [&](std::size_t ij) {
        const SparseVec& xy = cols[ij];
        const SparseVec x = unit_sparse(ij / d, f);
        for (std::size_t k = 0; k < d; ++k)
            if (mul(xy, unit_sparse(k, f)) != mul(x, cols[(ij % d) * d + k])) return true;
        return false;
    });
    r.add("associativity", bad == d * d, bad < d * d ? "x=" + a.module.basis[bad / d] + ", y=" + a.module.basis[bad % d] : "");
    bad = first_failure(d, exec, [&](std::size_t i) {
        const SparseVec e = unit_sparse(i, f);
        return mul(a.unit, e) != e || mul(e, a.unit) != e;
    });
    r.add("unit", bad == d, bad < d ? "x=" + a.module.basis[bad] : "");
    std::string w;
    r.add("multiplication is a YD morphism", is_yd_morphism(yd_tensor(a.module, a.module), a.module, a.mult, &w), w);
    w.clear();
    r.add("unit is a YD morphism",
          is_yd_morphism(trivial_yd(a.module.hopf), a.module, Matrix::from_columns(f, d, {a.unit}), &w), w);
    return r;
}

bool is_commutative(const YDAlgebra& a, std::string* witness) {
    const bool ok = a.mult * braiding(a.module, a.module) == a.mult;
    if (!ok && witness != nullptr) *witness = "m o c != m";
    return ok;
}

BimoduleAlgebra regular_bimodule_algebra(const ComodulePtr& l) {
    BimoduleAlgebra q;
    q.object = regular_bimodule(l);
    q.mult = l->data().mult;
    q.unit = l->unit();
    return q;
}

BimoduleAlgebra endomorphism_algebra(const LeftDual& dl) {
    const HLBimodule& dp = *dl.dual_p.module;
    const Field& f = dp.field();
    const std::size_t D = dl.dual->dim();
    const std::size_t d = dl.basis.elements.size();
    const std::size_t q = dp.dim();
    BimoduleAlgebra out;
    out.object = dl.dual_p.module;
    out.unit = dl.coev_one;
    out.mult.resize(q * q);
    // Lifts (f_s, e_j) of the quotient basis; the product is well defined on
    // the quotient because ev is balanced.
    for (std::size_t a = 0; a < q; ++a) {
        const std::size_t s1 = dl.dual_p.lift[a] / d;
        const std::size_t j1 = dl.dual_p.lift[a] % d;
        for (std::size_t b = 0; b < q; ++b) {
            const std::size_t s2 = dl.dual_p.lift[b] / d;
            const std::size_t j2 = dl.dual_p.lift[b] % d;
            const SparseVec lval = dl.ev.apply(dl.p_dual.project(unit_sparse(j1 * D + s2, f)));
            // (f_s1 < ev(e_j1 (x) f_s2)) (x) e_j2.
            SparseAccumulator acc;
            const SparseVec fs1_lval = dl.dual->act_right(unit_sparse(s1, f), lval);
            for (const auto& t : fs1_lval) acc.add(t.index * d + j2, t.coeff);
            out.mult[a * q + b] = dl.dual_p.project(acc.take());
        }
    }
    return out;
}

NatAlgebra nat_algebra(const BimoduleAlgebra& q, Exec exec) {
    NatAlgebra out;
    out.space = t_space(q.object, exec);
    const TSpace& t = out.space;
    const HopfAlgebra& h = *q.object->hopf();
    const Field& f = h.field();
    const std::size_t n = h.dim();
    const std::size_t dq = q.object->dim();
    const std::size_t dim = t.functions.dim();
    const std::size_t amb = n * dq;

    auto qmul = [&](const SparseVec& x, const SparseVec& y) {
        SparseAccumulator acc;
        for (const auto& a : x)
            for (const auto& b : y) acc.add(q.mult[a.index * dq + b.index], a.coeff * b.coeff);
        return acc.take();
    };
    // vals[i][h] = f_i(e_h).
    std::vector<std::vector<SparseVec>> vals(dim, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t hi = 0; hi < n; ++hi) {
            SparseVec v;
            for (std::size_t p = 0; p < dq; ++p) {
                const Scalar& c = t.functions.basis(i)[hi * dq + p];
                if (!c.is_zero()) v.push_back({static_cast<std::uint32_t>(p), c});
            }
            vals[i][hi] = std::move(v);
        }
    auto coords = [&](const Vec& v, const char* what) {
        auto c = t.functions.coordinates(v);
        if (!c) throw InconsistencyError(std::string("nat algebra: ") + what + " leaves T^L(H,P)");
        return to_sparse(*c);
    };
    std::vector<SparseVec> cols(dim * dim);
    for_each_index(dim * dim, exec, [&](std::size_t ij) {
        const std::size_t i = ij / dim;
        const std::size_t j = ij % dim;
        Vec fv = zero_vec(f, amb);
        for (std::size_t hi = 0; hi < n; ++hi)
            for (const auto& c : h.coproduct(hi))
                for (const auto& u : qmul(vals[i][c.index / n], vals[j][c.index % n])) fv[hi * dq + u.index] += c.coeff * u.coeff;
        cols[ij] = coords(fv, "product");
    });
    Vec uv = zero_vec(f, amb);
    for (std::size_t hi = 0; hi < n; ++hi)
        for (const auto& u : q.unit) uv[hi * dq + u.index] += h.counit(hi) * u.coeff;
    out.algebra.module = t.module;
    out.algebra.mult = Matrix::from_columns(f, dim, cols);
    out.algebra.unit = coords(uv, "unit");
    out.checks.append(t.checks);
    out.checks.append(verify_yd_algebra(out.algebra, exec));
    if (!out.checks.ok()) throw InconsistencyError("nat algebra: " + out.checks.first_failure());
    return out;
}

FormKind parse_form_kind(const std::string& s) {
    if (s == "auto") return FormKind::automatic;
    if (s == "integral") return FormKind::integral;
    if (s == "right-integral") return FormKind::right_integral;
    if (s == "cointegral") return FormKind::cointegral;
    if (s == "yd") return FormKind::yd;
    throw std::invalid_argument("unknown form '" + s + "' (auto|integral|right-integral|cointegral|yd)");
}

std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::automatic: return "auto";
        case FormKind::integral: return "integral";
        case FormKind::right_integral: return "right-integral";
        case FormKind::cointegral: return "cointegral";
        case FormKind::yd: return "yd";
    }
    return "?";
}

namespace {

bool is_trivial_comodule(const ComoduleAlgebra& l) {
    return l.dim() == 1 && l.coaction(0) == l.hopf()->one();
}

bool is_regular_comodule(const ComoduleAlgebra& l) {
    const HopfAlgebra& h = *l.hopf();
    return l.dim() == h.dim() && l.data().mult == h.data().mult && l.unit() == h.unit() &&
           l.data().coaction == h.data().comult;
}

// Covectors mu on A with mu(h.x) = eps(h) mu(x) and x_{-1} mu(x_0) = mu(x) 1.
std::vector<Vec> invariant_forms(const YDModule& a) {
    const HopfAlgebra& h = *a.hopf;
    const Field& f = h.field();
    const std::size_t d = a.dim;
    const std::size_t n = h.dim();
    Matrix sys(f, 0, d);
    for (auto g : h.generators()) {
        for (std::size_t x = 0; x < d; ++x) {
            SparseAccumulator acc;
            acc.add(a.action[g].column(x), f.one());
            acc.add(x, -h.counit(g));
            SparseVec r = acc.take();
            if (!r.empty()) sys.append_row(std::move(r));
        }
    }
    for (std::size_t x = 0; x < d; ++x) {
        std::vector<SparseAccumulator> rows(n);
        for (const auto& t : a.coaction[x]) rows[t.index / d].add(t.index % d, t.coeff);
        for (const auto& u : h.unit()) rows[u.index].add(x, -u.coeff);
        for (auto& r : rows) {
            SparseVec v = r.take();
            if (!v.empty()) sys.append_row(std::move(v));
        }
    }
    return kernel(sys);
}

}  // namespace

std::optional<Vec> canonical_form(const NatAlgebra& a, FormKind kind, FormKind* resolved,
                                  std::vector<std::string>* warnings) {
    const ComoduleAlgebra& l = *a.space.target->algebra();
    const HopfAlgebra& h = *l.hopf();
    const Field& f = h.field();
    const std::size_t dim = a.space.functions.dim();
    const bool l_is_k = is_trivial_comodule(l) && a.space.target->dim() == 1;
    const bool l_is_h = is_regular_comodule(l) && a.space.target->dim() == h.dim();
    if (kind == FormKind::automatic) kind = l_is_k ? FormKind::right_integral : l_is_h ? FormKind::cointegral : FormKind::yd;
    if (resolved != nullptr) *resolved = kind;
    auto warn = [&](const std::string& s) {
        if (warnings != nullptr) warnings->push_back(s);
    };
    Vec form = zero_vec(f, dim);
    auto coord = [&](std::size_t i) {
        Vec c = zero_vec(f, dim);
        c[i] = f.one();
        return c;
    };
    switch (kind) {
        case FormKind::integral:
        case FormKind::right_integral: {
            if (!l_is_k) {
                warn("integral forms need L = k");
                return std::nullopt;
            }
            const InvariantBundle& b = invariants(h);
            SparseVec lam = to_sparse(b.integral);
            if (kind == FormKind::right_integral) lam = h.S(lam);
            for (std::size_t i = 0; i < dim; ++i) {
                const SparseVec v = a.space.value(coord(i), lam);
                form[i] = v.empty() ? f.zero() : v[0].coeff;
            }
            return form;
        }
        case FormKind::cointegral: {
            if (!l_is_h) {
                warn("the cointegral form needs L = H with coaction Delta");
                return std::nullopt;
            }
            const InvariantBundle& b = invariants(h);
            for (std::size_t i = 0; i < dim; ++i) form[i] = dot(b.cointegral, a.space.value(coord(i), h.one()));
            return form;
        }
        case FormKind::yd: {
            const auto forms = invariant_forms(a.algebra.module);
            if (forms.empty()) {
                warn("no nonzero YD-invariant form");
                return std::nullopt;
            }
            if (forms.size() > 1) warn("YD-invariant forms span dimension " + std::to_string(forms.size()) + "; using the first");
            return forms.front();
        }
        case FormKind::automatic: break;
    }
    return std::nullopt;
}

FrobeniusFormReport frobenius_form_check(const YDAlgebra& a, const Vec& form, const std::optional<SparseVec>& pivot,
                                         Exec exec) {
    FrobeniusFormReport r;
    const YDModule& m = a.module;
    const HopfAlgebra& h = *m.hopf;
    const Field& f = h.field();
    const std::size_t d = m.dim;
    const std::size_t n = h.dim();
    if (form.size() != d) throw std::invalid_argument("form has the wrong length");

    // eps-linearity on every basis h, then colinearity.
    std::string w;
    for (std::size_t hi = 0; hi < n && w.empty(); ++hi)
        for (std::size_t x = 0; x < d && w.empty(); ++x)
            if (dot(form, m.action[hi].column(x)) != h.counit(hi) * form[x])
                w = "lambda(h.x) != eps(h) lambda(x) at h=" + h.label(hi) + ", x=" + m.basis[x];
    for (std::size_t x = 0; x < d && w.empty(); ++x) {
        SparseAccumulator acc;
        for (const auto& t : m.coaction[x]) acc.add(t.index / d, t.coeff * form[t.index % d]);
        if (acc.take() != scaled(h.one(), form[x])) w = "x_{-1} lambda(x_0) != lambda(x) 1 at x=" + m.basis[x];
    }
    r.yd_morphism = w.empty();
    r.yd_witness = w;
    r.checks.add("form is a YD morphism", r.yd_morphism, w);

    std::vector<Vec> beta(d, zero_vec(f, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) beta[i][j] = dot(form, a.mult.column(i * d + j));
    r.pairing = Matrix::from_dense(f, d, beta);
    r.pairing_rank = rank(r.pairing);
    r.nondegenerate = r.pairing_rank == d;
    r.checks.add("pairing nondegenerate", r.nondegenerate, "rank " + std::to_string(r.pairing_rank) + " < " + std::to_string(d));
    w.clear();
    r.commutative = is_commutative(a, &w);
    r.checks.add("commutative", r.commutative, w);

    if (r.nondegenerate) {
        const Matrix gamma = *invert(r.pairing, exec);
        // Delta(x) = sum_{j,k} gamma_{jk} (x e_j) (x) e_k.
        std::vector<SparseVec> dcols(d);
        for (std::size_t x = 0; x < d; ++x) {
            SparseAccumulator acc;
            for (std::size_t j = 0; j < d; ++j) {
                const SparseVec xj = a.mult.column(x * d + j);
                for (const auto& g : gamma.row(j))
                    for (const auto& t : xj) acc.add(t.index * d + g.index, g.coeff * t.coeff);
            }
            dcols[x] = acc.take();
        }
        const Matrix delta = Matrix::from_columns(f, d * d, dcols);
        const Matrix id = Matrix::identity(f, d);
        const Matrix eps = Matrix::from_rows(f, d, {to_sparse(form)});
        CheckList fa;
        fa.add("counit (eps (x) id) Delta = id", (kron(eps, id) * delta).is_identity());
        fa.add("counit (id (x) eps) Delta = id", (kron(id, eps) * delta).is_identity());
        fa.add("coassociativity", kron(delta, id) * delta == kron(id, delta) * delta);
        const Matrix dm = delta * a.mult;
        fa.add("(m (x) id)(id (x) Delta) = Delta m", kron(a.mult, id) * kron(id, delta) == dm);
        fa.add("Delta m = (id (x) m)(Delta (x) id)", kron(id, a.mult) * kron(delta, id) == dm);
        r.frobenius_axioms = fa.ok();
        r.checks.append(fa);
        w.clear();
        r.coproduct_yd_morphism = is_yd_morphism(m, yd_tensor(m, m), delta, &w);
        r.checks.add("coproduct is a YD morphism", *r.coproduct_yd_morphism, w);
        if (!fa.ok()) r.notes.push_back("form does not induce Frobenius structure: " + fa.first_failure());
    } else {
        r.notes.push_back("pairing degenerate (rank " + std::to_string(r.pairing_rank) + " of " + std::to_string(d) +
                          "); coproduct not constructed");
    }

    if (!pivot) {
        r.notes.push_back("symmetric: not evaluated (no pivotal element supplied)");
        return r;
    }
    w.clear();
    if (!verify_pivotal(h, *pivot, &w)) {
        r.notes.push_back("symmetric: not evaluated (" + w + ")");
        return r;
    }
    // (eps m (x) id)(id (x) coev) versus (p_{vA} (x) eps m)(coev~ (x) id), both A -> A^v.
    const YDDual right = yd_dual(m, DualSide::right, exec);
    const YDDual left = yd_dual(m, DualSide::left, exec);
    const YDPivot p = yd_pivot(left.dual, *pivot, exec);
    r.checks.append(p.checks, "pivot: ");
    const bool same = p.double_dual.coaction == right.dual.coaction && p.double_dual.action == right.dual.action;
    r.checks.add("(vA)vv = Av", same);
    auto em = [&](std::size_t x, std::size_t y) { return beta[x][y]; };
    std::vector<SparseVec> lhs(d);
    std::vector<SparseVec> rhs(d);
    for (std::size_t x = 0; x < d; ++x) {
        SparseAccumulator la;
        for (const auto& c : right.coev) la.add(c.index % d, c.coeff * em(x, c.index / d));
        lhs[x] = la.take();
        SparseAccumulator ra;
        for (const auto& c : left.coev) {
            const Scalar s = c.coeff * em(c.index % d, x);
            if (!s.is_zero()) ra.add(p.map.column(c.index / d), s);
        }
        rhs[x] = ra.take();
    }
    r.symmetric = lhs == rhs;
    r.checks.add("symmetric", *r.symmetric);
    return r;
}

}  // namespace hopfkit
