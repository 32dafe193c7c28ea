#include "hopfkit/builtins.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

// An algebra given by left multiplication of generators on a basis, with
// every non-unit basis vector written as s^{-1} g e_j for some earlier j.
struct Presentation {
    const Field* field = nullptr;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::size_t unit_index = 0;
    std::vector<std::vector<SparseVec>> gen_left;  // [g][j] = g e_j
    struct Step {
        std::size_t gen;
        std::size_t from;
        Scalar scale;  // g e_from = scale e_i
    };
    std::vector<Step> steps;  // indexed by basis; ignored for the unit
    std::vector<SparseVec> gen_delta;
    std::vector<SparseVec> gen_antipode;
    Vec gen_counit;
};

SparseVec apply_gen(const Presentation& p, std::size_t g, const SparseVec& v) {
    SparseAccumulator acc;
    for (const auto& t : v) acc.add(p.gen_left[g][t.index], t.coeff);
    return acc.take();
}

HopfData expand(const Presentation& p, Exec exec) {
    const std::size_t n = p.dim;
    const Field& f = *p.field;
    for (std::size_t i = 0; i < n; ++i)
        if (i != p.unit_index && p.steps[i].from >= i && p.steps[i].from != p.unit_index)
            throw std::logic_error("presentation steps must refer to earlier basis vectors");
    std::vector<Scalar> inv_scale(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i != p.unit_index) inv_scale[i] = p.steps[i].scale.inv();

    HopfData d;
    d.field = &f;
    d.dim = n;
    d.basis = p.labels;
    d.unit = unit_sparse(p.unit_index, f);
    d.mult.resize(n * n);
    // Column y of the product table: e_i e_y built along the steps.
    for_each_index(n, exec, [&](std::size_t y) {
        std::vector<SparseVec> col(n);
        col[p.unit_index] = unit_sparse(y, f);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p.unit_index) continue;
            const auto& st = p.steps[i];
            col[i] = scaled(apply_gen(p, st.gen, col[st.from]), inv_scale[i]);
        }
        for (std::size_t i = 0; i < n; ++i) d.mult[i * n + y] = std::move(col[i]);
    });

    d.comult.assign(n, SparseVec{});
    d.counit = zero_vec(f, n);
    d.antipode.assign(n, SparseVec{});
    HopfData scratch = d;
    const HopfPtr alg = HopfAlgebra::unchecked(std::move(scratch));

    d.comult[p.unit_index] = {{static_cast<std::uint32_t>(p.unit_index * n + p.unit_index), f.one()}};
    d.counit[p.unit_index] = f.one();
    d.antipode[p.unit_index] = d.unit;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p.unit_index) continue;
        const auto& st = p.steps[i];
        d.comult[i] = scaled(alg->mul2(p.gen_delta[st.gen], d.comult[st.from]), inv_scale[i]);
        d.counit[i] = inv_scale[i] * p.gen_counit[st.gen] * d.counit[st.from];
        d.antipode[i] = scaled(alg->mul(d.antipode[st.from], p.gen_antipode[st.gen]), inv_scale[i]);
    }
    return d;
}

std::string power_label(const std::string& sym, int e) {
    if (e == 0) return {};
    if (e == 1) return sym;
    return sym + "^" + std::to_string(e);
}

std::string monomial_label(std::initializer_list<std::pair<const char*, int>> parts) {
    std::string out;
    for (const auto& [sym, e] : parts) {
        const std::string p = power_label(sym, e);
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out.empty() ? "1" : out;
}

template <typename T>
std::shared_ptr<const T> memo(const std::string& key, const std::function<std::shared_ptr<const T>()>& build) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const T>> cache;
    {
        const std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = build();
    const std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, value).first->second;
}

std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<const void*, std::string>& registry() {
    static std::map<const void*, std::string> r;
    return r;
}

template <typename T>
std::shared_ptr<const T> tagged(std::shared_ptr<const T> p, const std::string& descriptor) {
    const std::lock_guard<std::mutex> lock(registry_mutex());
    registry().emplace(p.get(), descriptor);
    return p;
}

int int_param(const Descriptor& d, const std::string& key, std::optional<int> fallback = std::nullopt) {
    auto it = d.params.find(key);
    if (it == d.params.end()) {
        if (fallback) return *fallback;
        throw std::invalid_argument("builtin " + d.name + " requires parameter '" + key + "'");
    }
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != it->second.size()) throw std::invalid_argument("parameter '" + key + "' is not an integer");
    return v;
}

std::string str_param(const Descriptor& d, const std::string& key) {
    auto it = d.params.find(key);
    if (it == d.params.end()) throw std::invalid_argument("builtin " + d.name + " requires parameter '" + key + "'");
    return it->second;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

HopfPtr group_algebra(const std::vector<std::vector<int>>& table, const Field& f, std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("empty Cayley table");
    for (const auto& row : table) {
        if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("Cayley entry out of range");
    }
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table[e][a] == static_cast<int>(a) && table[a][e] == static_cast<int>(a);
        if (ok) id = e;
    }
    if (!id) throw std::invalid_argument("Cayley table has no identity");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == static_cast<int>(*id) && table[b][a] == static_cast<int>(*id)) inverse[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverse[a] == n) throw std::invalid_argument("Cayley table: element without inverse");
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a) labels.push_back(a == *id ? "1" : "g" + std::to_string(a));
    HopfData d;
    d.field = &f;
    d.dim = n;
    d.basis = std::move(labels);
    d.mult.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d.mult[a * n + b] = unit_sparse(static_cast<std::size_t>(table[a][b]), f);
    d.unit = unit_sparse(*id, f);
    d.comult.resize(n);
    d.antipode.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        d.comult[a] = unit_sparse(a * n + a, f);
        d.antipode[a] = unit_sparse(inverse[a], f);
    }
    d.counit = Vec(n, f.one());
    d.metadata["construction"] = "group_algebra";
    return HopfAlgebra::create(std::move(d));
}

HopfPtr cyclic_group_algebra(int n, const Field& f) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    auto h = memo<HopfAlgebra>("cyclic/" + std::to_string(n) + "/" + f.name(), [&] {
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        std::vector<std::string> labels;
        for (int a = 0; a < n; ++a) {
            labels.push_back(a == 0 ? "1" : power_label("g", a));
            for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
        }
        return group_algebra(table, f, labels);
    });
    return tagged(h, "group_algebra(field=" + f.name() + ",n=" + std::to_string(n) + ")");
}

HopfPtr base_field_hopf(const Field& f) {
    auto h = memo<HopfAlgebra>("k/" + f.name(), [&] { return group_algebra({{0}}, f, {"1"}); });
    return tagged(h, "base_field(field=" + f.name() + ")");
}

HopfPtr taft(int n, int which_root) {
    if (n < 2) throw std::invalid_argument("taft requires n >= 2");
    if (which_root <= 0 || which_root >= n || std::gcd(which_root, n) != 1)
        throw std::invalid_argument("taft which_root must be in (0, n) and coprime to n");
    auto h = memo<HopfAlgebra>("taft/" + std::to_string(n) + "/" + std::to_string(which_root), [&] {
        const Field& f = Field::get(FieldSpec::cyclotomic(n));
        const Scalar w = f.root().pow(which_root);
        const std::size_t un = static_cast<std::size_t>(n);
        auto idx = [&](int a, int c) { return static_cast<std::size_t>(a) * un + static_cast<std::size_t>(c); };
        Presentation p;
        p.field = &f;
        p.dim = un * un;
        p.unit_index = 0;
        p.gen_left.assign(2, std::vector<SparseVec>(p.dim));
        p.steps.resize(p.dim, {0, 0, f.one()});
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                const std::size_t i = idx(a, c);
                p.labels.push_back(monomial_label({{"E", a}, {"K", c}}));
                if (a + 1 < n) p.gen_left[0][i] = unit_sparse(idx(a + 1, c), f);
                p.gen_left[1][i] = {{static_cast<std::uint32_t>(idx(a, (c + 1) % n)), w.pow(a)}};
                if (a > 0) p.steps[i] = {0, idx(a - 1, c), f.one()};
                else if (c > 0) p.steps[i] = {1, idx(0, c - 1), f.one()};
            }
        const std::size_t E = idx(1, 0);
        const std::size_t K = idx(0, 1);
        const std::size_t N2 = p.dim;
        auto pair = [&](std::size_t a, std::size_t b) { return static_cast<std::uint32_t>(a * N2 + b); };
        SparseVec dE{{pair(0, E), f.one()}, {pair(E, K), f.one()}};
        std::sort(dE.begin(), dE.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        p.gen_delta = {dE, {{pair(K, K), f.one()}}};
        p.gen_antipode = {{{static_cast<std::uint32_t>(idx(1, n - 1)), -f.one()}},
                          unit_sparse(idx(0, n - 1), f)};
        p.gen_counit = {f.zero(), f.one()};
        HopfData d = expand(p, Exec::parallel);
        d.metadata["construction"] = "taft";
        d.metadata["n"] = std::to_string(n);
        d.metadata["which_root"] = std::to_string(which_root);
        d.metadata["KE"] = "z^" + std::to_string(which_root) + " EK";
        return HopfAlgebra::create(std::move(d));
    });
    return tagged(h, "taft(n=" + std::to_string(n) + ",which_root=" + std::to_string(which_root) + ")");
}

HopfData uqsl2_data(int n, Exec exec) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("uqsl2 requires odd n >= 3");
    const Field& f = Field::get(FieldSpec::cyclotomic(n));
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<Scalar> qp(un);
    for (std::size_t k = 0; k < un; ++k) qp[k] = f.root().pow(static_cast<std::int64_t>(k));
    auto q = [&](int k) { return qp[static_cast<std::size_t>(((k % n) + n) % n)]; };
    const Scalar inv_qdiff = (q(1) - q(-1)).inv();
    auto idx = [&](int a, int b, int c) {
        return (static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)) * un +
               static_cast<std::size_t>(((c % n) + n) % n);
    };
    Presentation p;
    p.field = &f;
    p.dim = un * un * un;
    p.unit_index = 0;
    p.gen_left.assign(3, std::vector<SparseVec>(p.dim));
    p.steps.resize(p.dim, {0, 0, f.one()});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const std::size_t i = idx(a, b, c);
                p.labels.push_back(monomial_label({{"E", a}, {"F", b}, {"K", c}}));
                if (a + 1 < n) p.gen_left[0][i] = unit_sparse(idx(a + 1, b, c), f);
                // F E^a = E^a F - E^{a-1} sum_r (q^{2r} K - q^{-2r} K^{-1}) / (q - q^{-1})
                SparseAccumulator acc;
                if (b + 1 < n) acc.add(idx(a, b + 1, c), f.one());
                if (a > 0) {
                    Scalar up;
                    Scalar down;
                    for (int r = 0; r < a; ++r) {
                        up += q(2 * r - 2 * b);
                        down += q(2 * b - 2 * r);
                    }
                    acc.add(idx(a - 1, b, c + 1), -(up * inv_qdiff));
                    acc.add(idx(a - 1, b, c - 1), down * inv_qdiff);
                }
                p.gen_left[1][i] = acc.take();
                p.gen_left[2][i] = {{static_cast<std::uint32_t>(idx(a, b, c + 1)), q(2 * a - 2 * b)}};
                if (a > 0) p.steps[i] = {0, idx(a - 1, b, c), f.one()};
                else if (b > 0) p.steps[i] = {1, idx(0, b - 1, c), f.one()};
                else if (c > 0) p.steps[i] = {2, idx(0, 0, c - 1), f.one()};
            }
    const std::size_t E = idx(1, 0, 0);
    const std::size_t F = idx(0, 1, 0);
    const std::size_t K = idx(0, 0, 1);
    const std::size_t Kinv = idx(0, 0, -1);
    const std::size_t N3 = p.dim;
    auto pair = [&](std::size_t a, std::size_t b) { return static_cast<std::uint32_t>(a * N3 + b); };
    auto sorted = [](SparseVec v) {
        std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        return v;
    };
    p.gen_delta = {sorted({{pair(E, K), f.one()}, {pair(0, E), f.one()}}),
                   sorted({{pair(F, 0), f.one()}, {pair(Kinv, F), f.one()}}),
                   {{pair(K, K), f.one()}}};
    // S(E) = -E K^{-1}, S(F) = -K F = -q^{-2} F K, S(K) = K^{-1}.
    p.gen_antipode = {{{static_cast<std::uint32_t>(idx(1, 0, -1)), -f.one()}},
                      {{static_cast<std::uint32_t>(idx(0, 1, 1)), -q(-2)}},
                      unit_sparse(Kinv, f)};
    p.gen_counit = {f.zero(), f.zero(), f.one()};
    HopfData d = expand(p, exec);
    d.metadata["construction"] = "uqsl2";
    d.metadata["n"] = std::to_string(n);
    d.metadata["q"] = "z";
    return d;
}

HopfPtr uqsl2(int n, Exec exec) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("uqsl2 requires odd n >= 3");
    auto h = memo<HopfAlgebra>("uqsl2/" + std::to_string(n), [&] {
        return HopfAlgebra::create(uqsl2_data(n, exec), {VerifyMode::automatic, exec});
    });
    return tagged(h, "uqsl2(n=" + std::to_string(n) + ")");
}

HopfPtr k_power(int n, int d) {
    if (n < 1 || d < 1 || n % d != 0) throw std::invalid_argument("k_power requires d | n");
    auto h = memo<HopfAlgebra>("kpow/" + std::to_string(n) + "/" + std::to_string(d), [&] {
        const Field& f = Field::get(FieldSpec::cyclotomic(n));
        const int m = n / d;
        std::vector<std::vector<int>> table(m, std::vector<int>(m));
        std::vector<std::string> labels;
        for (int a = 0; a < m; ++a) {
            labels.push_back(a == 0 ? "1" : power_label("K", a * d));
            for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
        }
        return group_algebra(table, f, labels);
    });
    return tagged(h, "k_power(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")");
}

MapPtr subalg_K_power(int n, int d) {
    return memo<BialgebraMap>("subalg/" + std::to_string(n) + "/" + std::to_string(d), [&] {
        HopfPtr src = k_power(n, d);
        HopfPtr tgt = uqsl2(n);
        std::vector<SparseVec> cols;
        for (std::size_t j = 0; j < src->dim(); ++j)
            cols.push_back(unit_sparse(static_cast<std::size_t>(d) * j, tgt->field()));
        return BialgebraMap::create(src, tgt, Matrix::from_columns(tgt->field(), tgt->dim(), cols),
                                    "subalg_K_power(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")");
    });
}

MapPtr inclusion_taft(int n) {
    return memo<BialgebraMap>("incl_taft/" + std::to_string(n), [&] {
        HopfPtr src = taft(n, 2);
        HopfPtr tgt = uqsl2(n);
        const std::size_t un = static_cast<std::size_t>(n);
        std::vector<SparseVec> cols;
        for (std::size_t a = 0; a < un; ++a)
            for (std::size_t c = 0; c < un; ++c) cols.push_back(unit_sparse(a * un * un + c, tgt->field()));
        return BialgebraMap::create(src, tgt, Matrix::from_columns(tgt->field(), tgt->dim(), cols),
                                    "inclusion_taft(n=" + std::to_string(n) + ")");
    });
}

MapPtr unit_map(const HopfPtr& h) {
    HopfPtr k = base_field_hopf(h->field());
    return BialgebraMap::create(k, h, Matrix::from_columns(h->field(), h->dim(), {h->one()}), "unit_map");
}

MapPtr counit_map(const HopfPtr& h) {
    HopfPtr k = base_field_hopf(h->field());
    Matrix m(h->field(), 1, h->dim());
    m.set_row(0, to_sparse(h->data().counit));
    return BialgebraMap::create(h, k, std::move(m), "counit_map");
}

MapPtr identity_map(const HopfPtr& h) {
    return BialgebraMap::create(h, h, Matrix::identity(h->field(), h->dim()), "identity_map");
}

ComodulePtr regular_comodule(const HopfPtr& h) {
    ComoduleData d;
    d.hopf = h;
    d.dim = h->dim();
    d.basis = h->basis();
    d.mult = h->data().mult;
    d.unit = h->one();
    d.coaction = h->data().comult;
    d.metadata["construction"] = "regular_comodule";
    return ComoduleAlgebra::create(std::move(d));
}

ComodulePtr trivial_comodule(const HopfPtr& h) {
    ComoduleData d;
    d.hopf = h;
    d.dim = 1;
    d.basis = {"1"};
    d.mult = {unit_sparse(0, h->field())};
    d.unit = unit_sparse(0, h->field());
    d.coaction = {h->one()};
    d.metadata["construction"] = "trivial_comodule";
    return ComoduleAlgebra::create(std::move(d));
}

std::string Descriptor::canonical() const {
    std::string out = name + "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out += ",";
        first = false;
        out += k + "=" + (v.find('(') != std::string::npos && !v.starts_with("cyclotomic") && !v.starts_with("prime")
                              ? parse_descriptor(v).canonical()
                              : v);
    }
    return out + ")";
}

Descriptor parse_descriptor(const std::string& raw) {
    const std::string text = trim(raw);
    Descriptor d;
    const auto open = text.find('(');
    if (open == std::string::npos) {
        d.name = text;
    } else {
        if (text.back() != ')') throw std::invalid_argument("descriptor '" + text + "' lacks closing ')'");
        d.name = trim(text.substr(0, open));
        const std::string body = text.substr(open + 1, text.size() - open - 2);
        int depth = 0;
        std::string cur;
        auto flush = [&] {
            const std::string item = trim(cur);
            cur.clear();
            if (item.empty()) return;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("descriptor parameter '" + item + "' lacks '='");
            d.params[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
        };
        for (char c : body) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth < 0) throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
            if (c == ',' && depth == 0) {
                flush();
            } else {
                cur += c;
            }
        }
        if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
        flush();
    }
    if (d.name.empty()) throw std::invalid_argument("empty builtin name");
    return d;
}

std::vector<std::string> builtin_names() {
    return {"group_algebra", "dual_of",        "taft",         "uqsl2",         "k_power",
            "base_field",    "subalg_K_power", "unit_map",     "counit_map",    "identity_map",
            "inclusion_taft", "regular_comodule", "trivial_comodule"};
}

namespace {

BuiltinValue build_builtin(const Descriptor& d) {
    const std::string& n = d.name;
    if (n == "group_algebra") {
        const Field& f = Field::get(FieldSpec::parse(d.params.contains("field") ? d.params.at("field") : "rational"));
        if (d.params.contains("cayley")) {
            std::vector<std::vector<int>> table;
            std::stringstream rows(d.params.at("cayley"));
            std::string row;
            while (std::getline(rows, row, ';')) {
                std::stringstream cells(row);
                std::vector<int> r;
                int v = 0;
                while (cells >> v) r.push_back(v);
                table.push_back(r);
            }
            return group_algebra(table, f);
        }
        return cyclic_group_algebra(int_param(d, "n"), f);
    }
    if (n == "base_field") {
        return base_field_hopf(Field::get(FieldSpec::parse(d.params.contains("field") ? d.params.at("field") : "rational")));
    }
    if (n == "dual_of") return dual(*builtin_hopf(str_param(d, "of")));
    if (n == "taft") return taft(int_param(d, "n"), int_param(d, "which_root", 2));
    if (n == "uqsl2") return uqsl2(int_param(d, "n"));
    if (n == "k_power") return k_power(int_param(d, "n"), int_param(d, "d"));
    if (n == "subalg_K_power") return subalg_K_power(int_param(d, "n"), int_param(d, "d"));
    if (n == "inclusion_taft") return inclusion_taft(int_param(d, "n"));
    if (n == "unit_map") return unit_map(builtin_hopf(str_param(d, "of")));
    if (n == "counit_map") return counit_map(builtin_hopf(str_param(d, "of")));
    if (n == "identity_map") return identity_map(builtin_hopf(str_param(d, "of")));
    if (n == "regular_comodule") return regular_comodule(builtin_hopf(str_param(d, "of")));
    if (n == "trivial_comodule") return trivial_comodule(builtin_hopf(str_param(d, "of")));
    throw std::invalid_argument("unknown builtin '" + n + "'");
}

}  // namespace

BuiltinValue builtin(const std::string& descriptor) {
    const Descriptor d = parse_descriptor(descriptor);
    const std::string key = d.canonical();
    static std::mutex mu;
    static std::map<std::string, BuiltinValue> cache;
    {
        const std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BuiltinValue v = build_builtin(d);
    std::visit([&](const auto& p) { tagged(p, key); }, v);
    const std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

std::optional<std::string> builtin_descriptor(const void* object) {
    const std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(object);
    if (it == registry().end()) return std::nullopt;
    return it->second;
}

HopfPtr builtin_hopf(const std::string& descriptor) {
    BuiltinValue v = builtin(descriptor);
    if (auto* h = std::get_if<HopfPtr>(&v)) return *h;
    throw std::invalid_argument("builtin '" + descriptor + "' is not a Hopf algebra");
}

MapPtr builtin_map(const std::string& descriptor) {
    BuiltinValue v = builtin(descriptor);
    if (auto* m = std::get_if<MapPtr>(&v)) return *m;
    throw std::invalid_argument("builtin '" + descriptor + "' is not a bialgebra map");
}

ComodulePtr builtin_comodule(const std::string& descriptor) {
    BuiltinValue v = builtin(descriptor);
    if (auto* c = std::get_if<ComodulePtr>(&v)) return *c;
    throw std::invalid_argument("builtin '" + descriptor + "' is not a comodule algebra");
}

}  // namespace hopfkit
