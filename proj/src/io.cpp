#include "hopfkit/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "hopfkit/builtins.hpp"

namespace hopfkit::io {

namespace {

[[noreturn]] void fail(const Source& src, const std::string& where, const std::string& msg) {
    throw ParseError(src.name + ": field '" + where + "': " + msg);
}

const json& need(const json& j, const char* key, const Source& src, const std::string& where = {}) {
    if (!j.is_object()) fail(src, where.empty() ? "<root>" : where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(src, where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::size_t as_index(const json& j, std::size_t bound, const Source& src, const std::string& where) {
    if (!j.is_number_integer()) fail(src, where, "expected an integer index");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
        fail(src, where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

std::size_t as_dim(const json& j, const Source& src, const std::string& where) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) fail(src, where, "expected a positive integer");
    return j.get<std::size_t>();
}

void check_schema(const json& j, const std::string& expected, const Source& src) {
    auto it = j.find("schema");
    if (it == j.end()) return;
    if (!it->is_string() || it->get<std::string>() != expected)
        fail(src, "schema", "expected \"" + expected + "\", got " + it->dump());
}

std::vector<std::string> read_basis(const json& j, std::size_t dim, const Source& src, const std::string& prefix) {
    std::vector<std::string> basis;
    auto it = j.find("basis");
    if (it == j.end()) {
        for (std::size_t i = 0; i < dim; ++i) basis.push_back(prefix + std::to_string(i));
        return basis;
    }
    if (!it->is_array() || it->size() != dim) fail(src, "basis", "expected an array of " + std::to_string(dim) + " labels");
    for (std::size_t i = 0; i < dim; ++i) {
        if (!(*it)[i].is_string()) fail(src, "basis[" + std::to_string(i) + "]", "expected a string");
        basis.push_back((*it)[i].get<std::string>());
    }
    return basis;
}

// Reads [i_1, ..., i_k, "c"] entries into out[slot(i_1..i_{k-1})] at index i_k.
// bounds has one entry per index position; slot maps the leading indices.
template <typename Slot>
void read_tensor(const json& j, const std::string& key, const std::vector<std::size_t>& bounds, const Field& f,
                 const Source& src, Slot slot, std::vector<SparseAccumulator>& out) {
    if (!j.is_array()) fail(src, key, "expected an array of sparse entries");
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string where = key + "[" + std::to_string(e) + "]";
        const json& entry = j[e];
        if (!entry.is_array() || entry.size() != bounds.size() + 1)
            fail(src, where, "expected " + std::to_string(bounds.size()) + " indices and a coefficient");
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < bounds.size(); ++k)
            idx.push_back(as_index(entry[k], bounds[k], src, where + "[" + std::to_string(k) + "]"));
        const Scalar c = scalar_from_json(entry.back(), f, src.name + ": " + where);
        auto [s, i] = slot(idx);
        out[s].add(i, c);
    }
}

std::vector<SparseVec> take_all(std::vector<SparseAccumulator>& acc) {
    std::vector<SparseVec> out;
    out.reserve(acc.size());
    for (auto& a : acc) out.push_back(a.take());
    return out;
}

json sparse_entries(const std::vector<SparseVec>& slots, std::size_t inner,
                    const std::function<json(std::size_t)>& lead) {
    json out = json::array();
    for (std::size_t s = 0; s < slots.size(); ++s)
        for (const auto& t : slots[s]) {
            json e = lead(s);
            if (inner > 0) {
                e.push_back(t.index / inner);
                e.push_back(t.index % inner);
            } else {
                e.push_back(t.index);
            }
            e.push_back(scalar_json(t.coeff));
            out.push_back(std::move(e));
        }
    return out;
}

json pairs(const SparseVec& v) {
    json out = json::array();
    for (const auto& t : v) out.push_back(json::array({t.index, scalar_json(t.coeff)}));
    return out;
}

template <typename T, typename Loader>
T resolve(const json& ref, const Source& src, const std::string& field, Loader load,
          T (*from_builtin)(const std::string&)) {
    if (ref.is_string()) {
        const std::string s = ref.get<std::string>();
        if (s.starts_with("builtin:")) {
            try {
                return from_builtin(s.substr(8));
            } catch (const std::invalid_argument& e) {
                fail(src, field, e.what());
            }
        }
        const std::filesystem::path p = std::filesystem::path(s).is_absolute() ? std::filesystem::path(s) : src.dir / s;
        Source sub{p.string(), p.parent_path()};
        return load(read_json_file(p), sub);
    }
    if (ref.is_object()) {
        Source sub{src.name + "#" + field, src.dir};
        return load(ref, sub);
    }
    fail(src, field, "expected \"builtin:...\", a file path, or an inline object");
}

void store_metadata(const json& j, std::map<std::string, std::string>& md, const Source& src) {
    auto it = j.find("metadata");
    if (it == j.end()) return;
    if (!it->is_object()) fail(src, "metadata", "expected an object of strings");
    for (const auto& [k, v] : it->items()) md[k] = v.is_string() ? v.get<std::string>() : v.dump();
}

json metadata_json(const std::map<std::string, std::string>& md) {
    json out = json::object();
    for (const auto& [k, v] : md) out[k] = v;
    return out;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& name) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(name + ": " + e.what());
    }
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path.string());
}

json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, const Field& f, const std::string& where) {
    try {
        if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
        if (j.is_string()) return f.parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": bad scalar " + j.dump() + ": " + e.what());
    }
    throw ParseError(where + ": expected a scalar literal string or integer, got " + j.dump());
}

HopfPtr hopf_from_json(const json& j, const Source& src, bool verify) {
    check_schema(j, "hopfkit.hopf/1", src);
    const json& fj = need(j, "field", src);
    if (!fj.is_string()) fail(src, "field", "expected a field name such as \"cyclotomic(3)\"");
    const Field* f = nullptr;
    try {
        f = &Field::get(FieldSpec::parse(fj.get<std::string>()));
    } catch (const std::invalid_argument& e) {
        fail(src, "field", e.what());
    }
    HopfData d;
    d.field = f;
    d.dim = as_dim(need(j, "dim", src), src, "dim");
    const std::size_t n = d.dim;
    d.basis = read_basis(j, n, src, "e");

    std::vector<SparseAccumulator> mult(n * n), comult(n), antipode(n), unit(1), counit(1);
    read_tensor(need(j, "mult", src), "mult", {n, n, n}, *f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0] * n + i[1], i[2]}; }, mult);
    read_tensor(need(j, "unit", src), "unit", {n}, *f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{std::size_t{0}, i[0]}; }, unit);
    read_tensor(need(j, "comult", src), "comult", {n, n, n}, *f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0], i[1] * n + i[2]}; }, comult);
    read_tensor(need(j, "counit", src), "counit", {n}, *f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{std::size_t{0}, i[0]}; }, counit);
    read_tensor(need(j, "antipode", src), "antipode", {n, n}, *f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0], i[1]}; }, antipode);
    d.mult = take_all(mult);
    d.comult = take_all(comult);
    d.antipode = take_all(antipode);
    d.unit = unit[0].take();
    d.counit = to_dense(counit[0].take(), *f, n);
    store_metadata(j, d.metadata, src);
    try {
        d.validate_shape();
    } catch (const std::invalid_argument& e) {
        throw ParseError(src.name + ": " + e.what());
    }
    return verify ? HopfAlgebra::create(std::move(d)) : HopfAlgebra::unchecked(std::move(d));
}

MapPtr map_from_json(const json& j, const Source& src) {
    check_schema(j, "hopfkit.map/1", src);
    HopfPtr s = resolve_hopf(need(j, "source", src), src, "source");
    HopfPtr t = resolve_hopf(need(j, "target", src), src, "target");
    if (&s->field() != &t->field()) fail(src, "target", "source and target live over different fields");
    std::vector<SparseAccumulator> rows(t->dim());
    read_tensor(need(j, "matrix", src), "matrix", {t->dim(), s->dim()}, s->field(), src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0], i[1]}; }, rows);
    Matrix m = Matrix::from_rows(s->field(), s->dim(), take_all(rows));
    std::string name;
    if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
    return BialgebraMap::create(s, t, std::move(m), name);
}

ComodulePtr comodule_from_json(const json& j, const Source& src) {
    check_schema(j, "hopfkit.comodule/1", src);
    HopfPtr h = resolve_hopf(need(j, "hopf", src), src, "hopf");
    const Field& f = h->field();
    ComoduleData d;
    d.hopf = h;
    d.dim = as_dim(need(j, "dim", src), src, "dim");
    const std::size_t m = d.dim;
    const std::size_t n = h->dim();
    d.basis = read_basis(j, m, src, "l");
    std::vector<SparseAccumulator> mult(m * m), coaction(m), unit(1);
    read_tensor(need(j, "mult", src), "mult", {m, m, m}, f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0] * m + i[1], i[2]}; }, mult);
    read_tensor(need(j, "unit", src), "unit", {m}, f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{std::size_t{0}, i[0]}; }, unit);
    read_tensor(need(j, "coaction", src), "coaction", {m, n, m}, f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0], i[1] * m + i[2]}; }, coaction);
    d.mult = take_all(mult);
    d.coaction = take_all(coaction);
    d.unit = unit[0].take();
    for (const char* flag : {"exact_asserted", "indecomposable_asserted"}) {
        auto it = j.find(flag);
        if (it == j.end()) continue;
        if (!it->is_boolean()) fail(src, flag, "expected true or false");
        (std::string(flag) == "exact_asserted" ? d.exact_asserted : d.indecomposable_asserted) = it->get<bool>();
    }
    store_metadata(j, d.metadata, src);
    try {
        d.validate_shape();
    } catch (const std::invalid_argument& e) {
        throw ParseError(src.name + ": " + e.what());
    }
    return ComoduleAlgebra::create(std::move(d));
}

BimodulePtr bimodule_from_json(const json& j, const Source& src) {
    check_schema(j, "hopfkit.bimodule/1", src);
    ComodulePtr l = resolve_comodule(need(j, "comodule", src), src, "comodule");
    const Field& f = l->field();
    BimoduleData d;
    d.algebra = l;
    d.dim = as_dim(need(j, "dim", src), src, "dim");
    const std::size_t p = d.dim;
    const std::size_t m = l->dim();
    const std::size_t n = l->hopf()->dim();
    d.basis = read_basis(j, p, src, "p");
    std::vector<SparseAccumulator> left(m * p), right(p * m), coaction(p);
    read_tensor(need(j, "left", src), "left", {m, p, p}, f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0] * p + i[1], i[2]}; }, left);
    read_tensor(need(j, "right", src), "right", {p, m, p}, f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0] * m + i[1], i[2]}; }, right);
    read_tensor(need(j, "coaction", src), "coaction", {p, n, p}, f, src,
                [&](const std::vector<std::size_t>& i) { return std::pair{i[0], i[1] * p + i[2]}; }, coaction);
    d.left = take_all(left);
    d.right = take_all(right);
    d.coaction = take_all(coaction);
    store_metadata(j, d.metadata, src);
    try {
        d.validate_shape();
    } catch (const std::invalid_argument& e) {
        throw ParseError(src.name + ": " + e.what());
    }
    return HLBimodule::create(std::move(d));
}

HopfPtr resolve_hopf(const json& ref, const Source& src, const std::string& field, bool verify) {
    return resolve<HopfPtr>(
        ref, src, field, [&](const json& j, const Source& s) { return hopf_from_json(j, s, verify); }, &builtin_hopf);
}

MapPtr resolve_map(const json& ref, const Source& src, const std::string& field) {
    return resolve<MapPtr>(ref, src, field, &map_from_json, &builtin_map);
}

ComodulePtr resolve_comodule(const json& ref, const Source& src, const std::string& field) {
    return resolve<ComodulePtr>(ref, src, field, &comodule_from_json, &builtin_comodule);
}

namespace {
BimodulePtr no_builtin_bimodule(const std::string& d) {
    throw std::invalid_argument("there are no builtin bimodules ('" + d + "')");
}
}  // namespace

BimodulePtr resolve_bimodule(const json& ref, const Source& src, const std::string& field) {
    return resolve<BimodulePtr>(ref, src, field, &bimodule_from_json, &no_builtin_bimodule);
}

json argument_ref(const std::string& arg) { return json(arg); }

json to_json(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    const HopfData& d = h.data();
    json j;
    j["schema"] = "hopfkit.hopf/1";
    j["field"] = h.field().name();
    j["dim"] = n;
    j["basis"] = d.basis;
    j["mult"] = sparse_entries(d.mult, 0, [&](std::size_t s) { return json::array({s / n, s % n}); });
    j["unit"] = pairs(d.unit);
    j["comult"] = sparse_entries(d.comult, n, [](std::size_t s) { return json::array({s}); });
    j["counit"] = pairs(to_sparse(d.counit));
    j["antipode"] = sparse_entries(d.antipode, 0, [](std::size_t s) { return json::array({s}); });
    if (!d.metadata.empty()) j["metadata"] = metadata_json(d.metadata);
    return j;
}

json to_json(const BialgebraMap& f) {
    json j;
    j["schema"] = "hopfkit.map/1";
    if (!f.name().empty()) j["name"] = f.name();
    j["source"] = ref_json(f.source());
    j["target"] = ref_json(f.target());
    json m = json::array();
    for (std::size_t r = 0; r < f.matrix().rows(); ++r)
        for (const auto& t : f.matrix().row(r)) m.push_back(json::array({r, t.index, scalar_json(t.coeff)}));
    j["matrix"] = std::move(m);
    return j;
}

json to_json(const ComodulePtr& l) {
    const ComoduleData& d = l->data();
    const std::size_t m = d.dim;
    json j;
    j["schema"] = "hopfkit.comodule/1";
    j["hopf"] = ref_json(d.hopf);
    j["dim"] = m;
    j["basis"] = d.basis;
    j["mult"] = sparse_entries(d.mult, 0, [&](std::size_t s) { return json::array({s / m, s % m}); });
    j["unit"] = pairs(d.unit);
    j["coaction"] = sparse_entries(d.coaction, m, [](std::size_t s) { return json::array({s}); });
    j["exact_asserted"] = d.exact_asserted;
    j["indecomposable_asserted"] = d.indecomposable_asserted;
    if (!d.metadata.empty()) j["metadata"] = metadata_json(d.metadata);
    return j;
}

json to_json(const HLBimodule& p) {
    const BimoduleData& d = p.data();
    const std::size_t dim = d.dim;
    const std::size_t m = p.algebra_dim();
    json j;
    j["schema"] = "hopfkit.bimodule/1";
    j["comodule"] = ref_json(d.algebra);
    j["dim"] = dim;
    j["basis"] = d.basis;
    j["left"] = sparse_entries(d.left, 0, [&](std::size_t s) { return json::array({s / dim, s % dim}); });
    j["right"] = sparse_entries(d.right, 0, [&](std::size_t s) { return json::array({s / m, s % m}); });
    j["coaction"] = sparse_entries(d.coaction, dim, [](std::size_t s) { return json::array({s}); });
    if (!d.metadata.empty()) j["metadata"] = metadata_json(d.metadata);
    return j;
}

json ref_json(const HopfPtr& h) {
    if (auto d = builtin_descriptor(h.get())) return "builtin:" + *d;
    return to_json(*h);
}

json ref_json(const ComodulePtr& l) {
    if (auto d = builtin_descriptor(l.get())) return "builtin:" + *d;
    return to_json(l);
}

namespace {

void pretty_into(const json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + json(k).dump() + ": ";
            pretty_into(v, depth + 1, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
        return;
    }
    if (j.is_array() && !j.empty()) {
        bool flat = true;
        for (const auto& v : j) flat = flat && !v.is_structured();
        if (flat) {
            out += j.dump();
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            pretty_into(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
        return;
    }
    out += j.dump();
}

}  // namespace

std::string pretty(const json& j) {
    std::string out;
    pretty_into(j, 0, out);
    return out + "\n";
}

std::string canonical_dump(const json& j) { return nlohmann::json::parse(j.dump()).dump(); }

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

}  // namespace hopfkit::io
