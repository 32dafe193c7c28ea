#include <map>
#include <mutex>
#include <numeric>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

namespace {

std::string labels(const HopfAlgebra& h, std::initializer_list<std::size_t> idx) {
    std::string out;
    const char* names[] = {"x", "y", "z"};
    std::size_t k = 0;
    for (auto i : idx) {
        if (!out.empty()) out += ", ";
        out += std::string(names[k++]) + "=" + h.label(i) + " (#" + std::to_string(i) + ")";
    }
    return out;
}

// Compares two sums of scaled sparse vectors without materializing both.
bool sums_equal(SparseAccumulator& acc) { return acc.take().empty(); }

}  // namespace

VerifyMode resolve_mode(const HopfAlgebra& h, VerifyMode mode) {
    if (mode != VerifyMode::automatic) return mode;
    return h.dim() <= 64 ? VerifyMode::full : VerifyMode::generated;
}

CheckList verify_axioms_uncached(const HopfAlgebra& h, VerifyOptions opts) {
    const std::size_t n = h.dim();
    const Field& f = h.field();
    const Scalar one = f.one();
    const Scalar minus = -one;
    CheckList r;

    std::vector<std::size_t> left;
    if (resolve_mode(h, opts.mode) == VerifyMode::full) {
        left.resize(n);
        std::iota(left.begin(), left.end(), std::size_t{0});
    } else {
        left = h.generators();
    }

    // Unit law on every basis element.
    {
        std::size_t bad = first_failure(n, opts.exec, [&](std::size_t i) {
            const SparseVec e = h.basis_vec(i);
            return h.mul(h.one(), e) != e || h.mul(e, h.one()) != e;
        });
        r.add("unit", bad == n, bad < n ? labels(h, {bad}) : "");
    }

    // Associativity (x y) z = x (y z) for x in `left`.
    {
        const std::size_t items = left.size() * n;
        auto fails_at = [&](std::size_t t, std::size_t z) {
            const std::size_t x = left[t / n];
            const std::size_t y = t % n;
            SparseAccumulator acc;
            for (const auto& a : h.product(x, y)) acc.add(h.product(a.index, z), a.coeff);
            for (const auto& b : h.product(y, z)) acc.add(h.product(x, b.index), minus * b.coeff);
            return !sums_equal(acc);
        };
        const std::size_t bad = first_failure(items, opts.exec, [&](std::size_t t) {
            for (std::size_t z = 0; z < n; ++z)
                if (fails_at(t, z)) return true;
            return false;
        });
        std::string w;
        if (bad < items) {
            std::size_t z = 0;
            while (!fails_at(bad, z)) ++z;
            w = labels(h, {left[bad / n], bad % n, z});
        }
        r.add("associativity", bad == items, w);
    }

    // Coassociativity on every basis element.
    {
        const std::size_t bad = first_failure(n, opts.exec, [&](std::size_t i) {
            SparseAccumulator acc;
            for (const auto& t : h.coproduct(i)) {
                const std::size_t p = t.index / n;
                const std::size_t q = t.index % n;
                for (const auto& u : h.coproduct(p)) acc.add(u.index * n + q, t.coeff * u.coeff);
                for (const auto& u : h.coproduct(q)) acc.add(p * n * n + u.index, minus * t.coeff * u.coeff);
            }
            return !sums_equal(acc);
        });
        r.add("coassociativity", bad == n, bad < n ? labels(h, {bad}) : "");
    }

    // Counit laws.
    {
        const std::size_t bad = first_failure(n, opts.exec, [&](std::size_t i) {
            SparseAccumulator left_acc;
            SparseAccumulator right_acc;
            for (const auto& t : h.coproduct(i)) {
                left_acc.add(t.index % n, h.counit(t.index / n) * t.coeff);
                right_acc.add(t.index / n, h.counit(t.index % n) * t.coeff);
            }
            const SparseVec e = h.basis_vec(i);
            return left_acc.take() != e || right_acc.take() != e;
        });
        r.add("counit", bad == n, bad < n ? labels(h, {bad}) : "");
    }

    // Delta is an algebra map.
    {
        SparseAccumulator unit2;
        for (const auto& a : h.one())
            for (const auto& b : h.one()) unit2.add(a.index * n + b.index, a.coeff * b.coeff);
        const bool unit_ok = h.delta(h.one()) == unit2.take();
        const std::size_t items = left.size() * n;
        const std::size_t bad = first_failure(items, opts.exec, [&](std::size_t t) {
            const std::size_t x = left[t / n];
            const std::size_t y = t % n;
            return h.delta(h.product(x, y)) != h.mul2(h.coproduct(x), h.coproduct(y));
        });
        std::string w;
        if (!unit_ok) w = "Delta(1) != 1 (x) 1";
        else if (bad < items) w = labels(h, {left[bad / n], bad % n});
        r.add("comultiplication multiplicative", unit_ok && bad == items, w);
    }

    // Counit is an algebra map.
    {
        const bool unit_ok = h.eps(h.one()).is_one();
        const std::size_t items = left.size() * n;
        const std::size_t bad = first_failure(items, opts.exec, [&](std::size_t t) {
            const std::size_t x = left[t / n];
            const std::size_t y = t % n;
            return h.eps(h.product(x, y)) != h.counit(x) * h.counit(y);
        });
        std::string w;
        if (!unit_ok) w = "eps(1) != 1";
        else if (bad < items) w = labels(h, {left[bad / n], bad % n});
        r.add("counit multiplicative", unit_ok && bad == items, w);
    }

    // m(S (x) id)Delta = u eps = m(id (x) S)Delta.
    {
        const std::size_t bad = first_failure(n, opts.exec, [&](std::size_t i) {
            SparseAccumulator l;
            SparseAccumulator rr;
            for (const auto& t : h.coproduct(i)) {
                const std::size_t p = t.index / n;
                const std::size_t q = t.index % n;
                for (const auto& s : h.antipode(p)) l.add(h.product(s.index, q), t.coeff * s.coeff);
                for (const auto& s : h.antipode(q)) rr.add(h.product(p, s.index), t.coeff * s.coeff);
            }
            const SparseVec target = scaled(h.one(), h.counit(i));
            return l.take() != target || rr.take() != target;
        });
        r.add("antipode", bad == n, bad < n ? labels(h, {bad}) : "");
    }

    r.add("antipode invertible", rank(h.antipode_matrix()) == n, "rank(S) < dim");
    return r;
}

CheckList verify_axioms(const HopfAlgebra& h, VerifyOptions opts) {
    static std::mutex mu;
    static std::map<std::string, CheckList> cache;
    const std::string key = h.content_hash() + (resolve_mode(h, opts.mode) == VerifyMode::full ? "/full" : "/gen");
    {
        const std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CheckList r = verify_axioms_uncached(h, opts);
    const std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
    return r;
}

}  // namespace hopfkit
