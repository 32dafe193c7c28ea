#include "hopfkit/maps.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

// (f (x) f) on pair indices: source n' x n' -> target n x n.
SparseVec tensor_apply(const BialgebraMap& f, const SparseVec& x) {
    const std::size_t ns = f.source()->dim();
    const std::size_t nt = f.target()->dim();
    SparseAccumulator acc;
    for (const auto& t : x) {
        const SparseVec& a = f.image(t.index / ns);
        const SparseVec& b = f.image(t.index % ns);
        for (const auto& u : a)
            for (const auto& v : b) acc.add(u.index * nt + v.index, t.coeff * u.coeff * v.coeff);
    }
    return acc.take();
}

}  // namespace

BialgebraMap::BialgebraMap(HopfPtr source, HopfPtr target, Matrix f, std::string name)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)), name_(std::move(name)) {
    if (source_->field().spec() != target_->field().spec())
        throw std::invalid_argument("bialgebra map between different fields");
    if (f_.rows() != target_->dim() || f_.cols() != source_->dim())
        throw std::invalid_argument("map matrix must be dim(target) x dim(source)");
    const Matrix t = f_.transpose();
    for (std::size_t j = 0; j < source_->dim(); ++j) columns_.push_back(t.row(j));
}

MapPtr BialgebraMap::create(HopfPtr source, HopfPtr target, Matrix f, std::string name) {
    auto m = std::make_shared<const BialgebraMap>(std::move(source), std::move(target), std::move(f), std::move(name));
    CheckList r = verify(*m->source(), *m->target(), m->matrix());
    if (!r.ok()) throw VerificationError("not a bialgebra map: " + r.first_failure(), r);
    return m;
}

CheckList BialgebraMap::verify(const HopfAlgebra& source, const HopfAlgebra& target, const Matrix& f) {
    const BialgebraMap m(HopfAlgebra::unchecked(source.data()), HopfAlgebra::unchecked(target.data()), f, {});
    CheckList r;
    const std::size_t ns = source.dim();
    r.add("unit preserved", m.apply(source.one()) == target.one());
    {
        std::string w;
        for (auto i : source.generators()) {
            for (std::size_t j = 0; j < ns && w.empty(); ++j)
                if (m.apply(source.product(i, j)) != target.mul(m.image(i), m.image(j)))
                    w = "x=" + source.label(i) + ", y=" + source.label(j);
            if (!w.empty()) break;
        }
        r.add("multiplicative", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t j = 0; j < ns && w.empty(); ++j)
            if (target.delta(m.image(j)) != tensor_apply(m, source.coproduct(j))) w = "x=" + source.label(j);
        r.add("comultiplicative", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t j = 0; j < ns && w.empty(); ++j)
            if (target.eps(m.image(j)) != source.counit(j)) w = "x=" + source.label(j);
        r.add("counit preserved", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t j = 0; j < ns && w.empty(); ++j)
            if (m.apply(source.antipode(j)) != target.S(m.image(j))) w = "x=" + source.label(j);
        r.add("commutes with antipode", w.empty(), w);
    }
    return r;
}

SparseVec BialgebraMap::apply(const SparseVec& x) const {
    SparseAccumulator acc;
    for (const auto& t : x) acc.add(columns_.at(t.index), t.coeff);
    return acc.take();
}

std::size_t BialgebraMap::rank() const { return hopfkit::rank(f_.transpose()); }

MapPtr compose(const BialgebraMap& outer, const BialgebraMap& inner) {
    if (inner.target()->content_hash() != outer.source()->content_hash())
        throw std::invalid_argument("maps are not composable");
    return BialgebraMap::create(inner.source(), outer.target(), outer.matrix() * inner.matrix(),
                                outer.name() + " o " + inner.name());
}

PerfectMode parse_perfect_mode(const std::string& s) {
    if (s == "auto") return PerfectMode::automatic;
    if (s == "split") return PerfectMode::split;
    if (s == "assert") return PerfectMode::assert_injective;
    if (s == "skip") return PerfectMode::skip;
    throw std::invalid_argument("unknown perfectness mode '" + s + "' (auto|split|assert|skip)");
}

std::string PerfectResult::to_string() const {
    switch (state) {
        case State::yes: return "true";
        case State::no: return "false";
        case State::asserted: return "asserted";
        case State::skipped: return "skipped";
    }
    return "?";
}

Vec relative_modular_function(const BialgebraMap& f, const InvariantBundle& target, const InvariantBundle& source) {
    const HopfAlgebra& hs = *f.source();
    const std::size_t n = hs.dim();
    Vec chi = zero_vec(hs.field(), n);
    Vec route2 = zero_vec(hs.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar a;
        Scalar b;
        for (const auto& t : hs.coproduct(i)) {
            const std::size_t p = t.index / n;
            const std::size_t q = t.index % n;
            const Scalar right = t.coeff * source.alpha[q];
            if (right.is_zero()) continue;
            a += dot(target.alpha_bar, f.image(p)) * right;
            b += dot(target.alpha, f.apply(hs.antipode(p))) * right;
        }
        chi[i] = a.field() == nullptr ? hs.field().zero() : a;
        route2[i] = b.field() == nullptr ? hs.field().zero() : b;
    }
    if (chi != route2) throw InconsistencyError("chi_f: alpha_H o S_H o f and alpha_H o f o S' routes disagree");
    return chi;
}

bool g_in_image(const BialgebraMap& f, const SparseVec& g) {
    Echelon e(f.target()->field(), f.target()->dim());
    for (std::size_t j = 0; j < f.source()->dim(); ++j) e.insert(f.image(j));
    return e.contains(g);
}

bool projective_test(const ModuleRep& m, Exec exec) {
    const HopfAlgebra& a = *m.algebra();
    const std::size_t d = m.dim();
    const std::size_t na = a.dim();
    const Field& f = a.field();
    auto var = [&](std::size_t j, std::size_t i, std::size_t x) {
        return static_cast<std::uint32_t>((j * d + i) * na + x);
    };
    const std::size_t nvars = d * d * na;
    Matrix sys(f, 0, nvars);
    Vec rhs;
    // s(b m_j) = b s(m_j) for generators b.
    for (auto b : a.generators()) {
        const Matrix& rho = m.action(b);
        const Matrix rho_t = rho.transpose();  // row j lists rho[k][j]
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t y = 0; y < na; ++y) {
                    SparseAccumulator acc;
                    for (const auto& t : rho_t.row(j)) acc.add(var(t.index, i, y), t.coeff);
                    for (std::size_t x = 0; x < na; ++x)
                        for (const auto& t : a.product(b, x))
                            if (t.index == y) acc.add(var(j, i, x), -t.coeff);
                    SparseVec row = acc.take();
                    if (!row.empty()) {
                        sys.append_row(std::move(row));
                        rhs.push_back(f.zero());
                    }
                }
    }
    // pi(s(m_j)) = m_j with pi(e_x (x) eps_i) = e_x . m_i.
    std::vector<Matrix> act_t;
    act_t.reserve(na);
    for (std::size_t x = 0; x < na; ++x) act_t.push_back(m.action(x).transpose());
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
            SparseAccumulator acc;
            for (std::size_t x = 0; x < na; ++x)
                for (std::size_t i = 0; i < d; ++i) {
                    const Scalar c = m.action(x).at(l, i);
                    if (!c.is_zero()) acc.add(var(j, i, x), c);
                }
            sys.append_row(acc.take());
            rhs.push_back(l == j ? f.one() : f.zero());
        }
    return solve(sys, rhs, exec).consistent;
}

PerfectResult is_perfect(const BialgebraMap& f, PerfectMode mode, Exec exec) {
    PerfectResult r;
    switch (mode) {
        case PerfectMode::skip:
            r.state = PerfectResult::State::skipped;
            r.method = "skipped by request";
            return r;
        case PerfectMode::assert_injective:
            r.state = PerfectResult::State::asserted;
            r.method = "asserted by user";
            return r;
        case PerfectMode::automatic:
            if (f.rank() == f.source()->dim()) {
                r.state = PerfectResult::State::yes;
                r.method = "injective: a Hopf algebra is free over a Hopf subalgebra";
                return r;
            }
            [[fallthrough]];
        case PerfectMode::split: {
            const ModuleRep hf = twisted_module(regular_module(f.target()), f.source(), f.matrix());
            r.state = projective_test(hf, exec) ? PerfectResult::State::yes : PerfectResult::State::no;
            r.method = "split test of the free cover of H_f";
            return r;
        }
    }
    return r;
}

MapClassification classify_map(const BialgebraMap& f, PerfectMode mode, Exec exec) {
    MapClassification c;
    const HopfAlgebra& hs = *f.source();
    const HopfAlgebra& ht = *f.target();
    const InvariantBundle& bt = invariants(ht, exec);
    const InvariantBundle& bs = invariants(hs, exec);
    c.chi = relative_modular_function(f, bt, bs);
    std::string w;
    c.chi_is_character = is_character(hs, c.chi, &w);
    c.checks.add("chi_f is an algebra map", c.chi_is_character, w);
    c.checks.add("chi_f = convolution (alpha_H o S o f) * alpha_H'",
                 c.chi == convolve(hs, [&] {
                     Vec v = zero_vec(hs.field(), hs.dim());
                     for (std::size_t j = 0; j < hs.dim(); ++j) v[j] = dot(bt.alpha_bar, f.image(j));
                     return v;
                 }(), bs.alpha));

    c.frobenius = c.chi == hs.data().counit;
    Vec alpha_f = zero_vec(hs.field(), hs.dim());
    for (std::size_t j = 0; j < hs.dim(); ++j) alpha_f[j] = dot(bt.alpha, f.image(j));
    c.frobenius_via_alpha = alpha_f == bs.alpha;
    if (c.frobenius != c.frobenius_via_alpha)
        throw InconsistencyError("Frobenius tests disagree: chi_f = eps gives " + std::string(c.frobenius ? "true" : "false") +
                                 ", alpha_H o f = alpha_H' gives " + (c.frobenius_via_alpha ? "true" : "false"));
    c.checks.add("Frobenius tests agree", true);
    if (!c.frobenius) {
        for (std::size_t j = 0; j < hs.dim(); ++j)
            if (c.chi[j] != hs.counit(j)) {
                c.witnesses.push_back("chi_f(" + hs.label(j) + ") = " + c.chi[j].to_string() + " != " +
                                      hs.counit(j).to_string());
                break;
            }
    }
    c.f_of_source_g = f.apply(bs.g);
    const bool g_match = c.f_of_source_g == bt.g;
    c.tensor_frobenius = c.frobenius && g_match;
    if (!g_match)
        c.witnesses.push_back("f(g_H') = " + ht.format(c.f_of_source_g) + " != g_H = " + ht.format(bt.g));
    c.g_in_image = g_in_image(f, bt.g);
    c.perfect = is_perfect(f, mode, exec);
    return c;
}

Matrix half_braiding(const BialgebraMap& f, const ModuleRep& x) {
    const InvariantBundle& bt = invariants(*f.target());
    const InvariantBundle& bs = invariants(*f.source());
    const SparseVec t = f.target()->mul(bt.g, f.apply(bs.g_bar));
    return x.act(t);
}

CheckList verify_half_braiding(const BialgebraMap& f, const ModuleRep& x, const ModuleRep& y) {
    CheckList r;
    const HopfPtr& hs = f.source();
    const InvariantBundle& bt = invariants(*f.target());
    const InvariantBundle& bs = invariants(*hs);
    const Vec chi = relative_modular_function(f, bt, bs);
    const ModuleRep k_chi = one_dim_module(hs, chi, "k_chi");
    const ModuleRep xf = twisted_module(x, hs, f.matrix());
    const Matrix sigma = half_braiding(f, x);
    std::string w;
    r.add("H'-linear chi (x) X_f -> X_f (x) chi",
          is_module_map(tensor_module(k_chi, xf), tensor_module(xf, k_chi), sigma, &w), w);
    r.add("invertible", rank(sigma) == x.dim());
    const ModuleRep xy = tensor_module(x, y);
    r.add("multiplicative", half_braiding(f, xy) == kron(sigma, half_braiding(f, y)));
    return r;
}

}  // namespace hopfkit
