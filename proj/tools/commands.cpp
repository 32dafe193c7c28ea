#include "commands.hpp"

#include <sstream>

#include "hopfkit/builtins.hpp"
#include "hopfkit/invariants.hpp"
#include "hopfkit/yd.hpp"

namespace hopfkit::cli {

using io::json;

namespace {

json checks_json(const CheckList& c) {
    json out = json::array();
    for (const auto& k : c.checks) {
        json e;
        e["name"] = k.name;
        e["passed"] = k.passed;
        if (!k.passed && !k.witness.empty()) e["witness"] = k.witness;
        out.push_back(std::move(e));
    }
    return out;
}

json covector_json(const std::vector<std::string>& labels, const Vec& v) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[labels[i]] = v[i].to_string();
    return out;
}

json strings(const std::vector<std::string>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

std::string opt_string(const json& o, const char* key, const std::string& fallback) {
    auto it = o.find(key);
    return it == o.end() ? fallback : it->get<std::string>();
}

io::Source arg_source() { return io::Source{"<command line>", "."}; }

std::string schema_of(const json& doc) {
    if (auto it = doc.find("schema"); it != doc.end() && it->is_string()) return it->get<std::string>();
    if (doc.contains("matrix")) return "hopfkit.map/1";
    if (doc.contains("left")) return "hopfkit.bimodule/1";
    if (doc.contains("coaction")) return "hopfkit.comodule/1";
    return "hopfkit.hopf/1";
}

// Inlines file references and canonicalizes builtin descriptors.
json expand_refs(const json& ref, const std::filesystem::path& dir) {
    if (ref.is_string()) {
        const std::string s = ref.get<std::string>();
        if (s.starts_with("builtin:")) return "builtin:" + parse_descriptor(s.substr(8)).canonical();
        const std::filesystem::path p = std::filesystem::path(s).is_absolute() ? std::filesystem::path(s) : dir / s;
        return expand_refs(io::read_json_file(p), p.parent_path());
    }
    if (!ref.is_object()) return ref;
    json out = ref;
    for (const char* key : {"source", "target", "hopf", "comodule"})
        if (auto it = out.find(key); it != out.end()) *it = expand_refs(*it, dir);
    return out;
}

// Builtin arguments are echoed in canonical form, paths verbatim.
std::string echo_arg(const std::string& a) {
    if (a.starts_with("builtin:")) return "builtin:" + parse_descriptor(a.substr(8)).canonical();
    return a;
}

json inputs_json(const Invocation& inv) {
    json out = json::array();
    for (const auto& a : inv.inputs) {
        json e;
        e["arg"] = echo_arg(a);
        e["sha256"] = io::sha256_hex(io::canonical_dump(expand_refs(json(a), ".")));
        out.push_back(std::move(e));
    }
    return out;
}

void require_inputs(const Invocation& inv, std::size_t n) {
    if (inv.inputs.size() != n)
        throw std::invalid_argument(inv.command + " expects " + std::to_string(n) + " input(s), got " +
                                    std::to_string(inv.inputs.size()));
}

json invariants_result(const HopfPtr& h, const Invocation& inv, CheckList& checks) {
    const InvariantBundle& b = invariants(*h);
    checks.append(b.checks);
    std::string w;
    const bool radford = verify_radford(h, b, &w);
    checks.add("Radford map is a module map", radford, w);
    json r;
    r["field"] = h->field().name();
    r["dim"] = h->dim();
    r["integral"] = h->format(b.integral);
    r["cointegral"] = covector_json(h->basis(), b.cointegral);
    r["alpha"] = covector_json(h->basis(), b.alpha);
    r["alpha_bar"] = covector_json(h->basis(), b.alpha_bar);
    json gens = json::object();
    for (auto g : h->generators()) {
        json e;
        e["value"] = b.alpha[g].to_string();
        if (h->field().spec().kind == FieldKind::cyclotomic) {
            const int k = root_exponent(b.alpha[g]);
            if (k >= 0) e["root_exponent"] = k;
        }
        gens[h->label(g)] = std::move(e);
    }
    r["alpha_on_generators"] = std::move(gens);
    r["g_H"] = h->format(b.g);
    r["g_bar"] = h->format(b.g_bar);
    r["integral_kernel_dim"] = b.integral_kernel_dim;
    r["cointegral_kernel_dim"] = b.cointegral_kernel_dim;
    r["unimodular"] = b.unimodular;
    r["dual_unimodular"] = b.dual_unimodular;
    r["radford_ok"] = radford;
    if (auto it = inv.options.find("pivot"); it != inv.options.end()) {
        json piv = json::array();
        for (const auto& e : *it) {
            json p;
            p["element"] = e;
            std::string pw;
            p["pivotal"] = verify_pivotal(*h, h->parse_element(e.get<std::string>()), &pw);
            if (!pw.empty()) p["witness"] = pw;
            piv.push_back(std::move(p));
        }
        r["pivotal"] = std::move(piv);
    }
    return r;
}

json verify_result(const std::string& arg, CheckList& checks) {
    const io::Source src = arg_source();
    const json ref(arg);
    std::string kind;
    if (arg.starts_with("builtin:")) {
        BuiltinValue v = builtin(arg.substr(8));
        kind = std::holds_alternative<HopfPtr>(v) ? "hopf" : std::holds_alternative<MapPtr>(v) ? "map" : "comodule";
    } else {
        kind = schema_of(io::read_json_file(arg));
        kind = kind.substr(8, kind.find('/') - 8);
    }
    json r;
    r["kind"] = kind;
    if (kind == "hopf") {
        HopfPtr h = io::resolve_hopf(ref, src, "input", false);
        checks.append(verify_axioms(*h));
        r["field"] = h->field().name();
        r["dim"] = h->dim();
    } else if (kind == "map") {
        MapPtr f = io::resolve_map(ref, src, "input");
        checks.append(BialgebraMap::verify(*f->source(), *f->target(), f->matrix()));
        r["source_dim"] = f->source()->dim();
        r["target_dim"] = f->target()->dim();
    } else if (kind == "comodule") {
        ComodulePtr l = io::resolve_comodule(ref, src, "input");
        checks.append(verify_comodule_algebra(*l));
        r["dim"] = l->dim();
    } else {
        BimodulePtr p = io::resolve_bimodule(ref, src, "input");
        checks.append(verify_bimodule(*p));
        r["dim"] = p->dim();
    }
    r["valid"] = checks.ok();
    return r;
}

json classify_result(const MapPtr& f, const Invocation& inv, CheckList& checks, json& warnings) {
    const PerfectMode mode = parse_perfect_mode(opt_string(inv.options, "perfect", "auto"));
    const MapClassification c = classify_map(*f, mode);
    checks.append(c.checks);
    const HopfAlgebra& hs = *f->source();
    const HopfAlgebra& ht = *f->target();
    const InvariantBundle& bt = invariants(ht);

    // Half-braiding on one-dimensional modules always, on the regular
    // module while the Kronecker products stay small.
    const HopfPtr tgt = f->target();
    const ModuleRep ka = one_dim_module(tgt, bt.alpha, "k_alpha");
    const ModuleRep ke = one_dim_module(tgt, ht.data().counit, "k_eps");
    checks.append(verify_half_braiding(*f, ka, ke), "half-braiding (k_alpha, k_eps): ");
    if (ht.dim() <= 81) {
        const ModuleRep reg = regular_module(tgt);
        checks.append(verify_half_braiding(*f, reg, ka), "half-braiding (regular, k_alpha): ");
    } else {
        warnings.push_back("half-braiding sampled on one-dimensional modules only (target dimension " +
                           std::to_string(ht.dim()) + ")");
    }
    bool sigma_identity = true;
    if (c.tensor_frobenius && ht.dim() <= 81)
        sigma_identity = half_braiding(*f, regular_module(tgt)).is_identity();
    checks.add("tensor-Frobenius implies trivial half-braiding", sigma_identity);

    json r;
    r["valid"] = true;
    r["source_dim"] = hs.dim();
    r["target_dim"] = ht.dim();
    r["perfect"] = c.perfect.to_string();
    r["perfect_method"] = c.perfect.method;
    r["chi_f"] = covector_json(hs.basis(), c.chi);
    r["frobenius"] = c.frobenius;
    r["frobenius_via_alpha"] = c.frobenius_via_alpha;
    r["tensor_frobenius"] = c.tensor_frobenius;
    r["g_in_image"] = c.g_in_image;
    r["f_of_source_g"] = ht.format(c.f_of_source_g);
    r["g_target"] = ht.format(bt.g);
    r["witnesses"] = strings(c.witnesses);
    if (c.perfect.state == PerfectResult::State::skipped)
        warnings.push_back("perfectness skipped; the Frobenius criteria presuppose a perfect map");
    return r;
}

json f_frobenius_result(const MapPtr& f, const ComodulePtr& l, const Invocation& inv, CheckList& checks,
                        json& warnings) {
    if (l->hopf() != f->source() && l->hopf()->content_hash() != f->source()->content_hash())
        throw io::ParseError("comodule algebra is not over the source of the map");
    FFrobeniusOptions opts;
    if (auto it = inv.options.find("seed"); it != inv.options.end()) opts.seed = it->get<std::uint64_t>();
    if (auto it = inv.options.find("attempts"); it != inv.options.end()) opts.attempts = it->get<int>();
    const FFrobeniusResult res = f_frobenius_element(*f, *l, opts);
    checks.append(res.checks);
    for (const auto& w : res.warnings) warnings.push_back(w);
    json r;
    r["exists"] = res.exists;
    r["element"] = res.exists ? json(l->format(res.element)) : json(nullptr);
    json coords = json::array();
    for (const auto& t : res.element) coords.push_back(json::array({l->label(t.index), t.coeff.to_string()}));
    r["element_coordinates"] = std::move(coords);
    r["kernel_dim"] = res.kernel_dim;
    r["prefilter_applicable"] = res.prefilter_applicable;
    r["prefilter_g_in_image"] = res.prefilter_g_in_image;
    r["search"] = res.search;
    r["findings"] = strings(res.findings);
    r["exact_asserted"] = l->data().exact_asserted;
    r["indecomposable_asserted"] = l->data().indecomposable_asserted;
    return r;
}

json nat_result(const HopfPtr& h, const ComodulePtr& l, const Invocation& inv, CheckList& checks, json& warnings) {
    if (l->hopf() != h && l->hopf()->content_hash() != h->content_hash())
        throw io::ParseError("comodule algebra is not over the given Hopf algebra");
    json r;
    BimoduleAlgebra q;
    if (auto it = inv.options.find("bimodule"); it != inv.options.end()) {
        BimodulePtr p = io::resolve_bimodule(*it, arg_source(), "--bimodule");
        if (p->algebra() != l && p->algebra()->data().mult != l->data().mult)
            throw io::ParseError("bimodule is not over the given comodule algebra");
        const LeftDual d = left_dual(*p);
        checks.append(d.checks, "dagger P: ");
        r["P_dim"] = p->dim();
        r["dagger_P_dim"] = d.dual->dim();
        r["object_dim"] = d.dual_p.module->dim();
        q = endomorphism_algebra(d);
    } else {
        q = regular_bimodule_algebra(l);
        r["P_dim"] = l->dim();
        r["object_dim"] = l->dim();
    }
    const NatAlgebra a = nat_algebra(q);
    checks.append(a.checks);
    r["T_dim"] = a.algebra.module.dim;
    std::optional<SparseVec> pivot;
    if (auto it = inv.options.find("pivot"); it != inv.options.end()) pivot = h->parse_element(it->get<std::string>());

    const FormKind kind = parse_form_kind(opt_string(inv.options, "form", "auto"));
    FormKind resolved = kind;
    std::vector<std::string> fw;
    const auto form = canonical_form(a, kind, &resolved, &fw);
    for (const auto& w : fw) warnings.push_back(w);
    r["form"] = to_string(resolved);
    std::string cw;
    r["commutative"] = is_commutative(a.algebra, &cw);
    if (!form) {
        r["form_defined"] = false;
        return r;
    }
    r["form_defined"] = true;
    json fv = json::array();
    for (const auto& s : *form) fv.push_back(s.to_string());
    r["form_values"] = std::move(fv);
    const FrobeniusFormReport fr = frobenius_form_check(a.algebra, *form, pivot);
    json f;
    f["yd_morphism"] = fr.yd_morphism;
    if (!fr.yd_witness.empty()) f["yd_witness"] = fr.yd_witness;
    f["pairing_rank"] = fr.pairing_rank;
    f["nondegenerate"] = fr.nondegenerate;
    f["frobenius_axioms"] = fr.frobenius_axioms ? json(*fr.frobenius_axioms) : json("not evaluated");
    f["coproduct_yd_morphism"] = fr.coproduct_yd_morphism ? json(*fr.coproduct_yd_morphism) : json("not evaluated");
    f["commutative"] = fr.commutative;
    f["symmetric"] = fr.symmetric ? json(*fr.symmetric) : json("not evaluated");
    f["notes"] = strings(fr.notes);
    f["checks"] = checks_json(fr.checks);
    r["frobenius_form"] = std::move(f);
    return r;
}

}  // namespace

json run_command(const Invocation& inv) {
    json report;
    report["schema"] = "hopfkit.report/1";
    report["command"] = inv.command;
    report["options"] = inv.options;
    report["inputs"] = inputs_json(inv);
    report["version"] = kVersion;
    CheckList checks;
    json warnings = json::array();
    json result;
    std::string status = "ok";
    std::string error;
    const io::Source src = arg_source();
    try {
        if (inv.command == "verify") {
            require_inputs(inv, 1);
            result = verify_result(inv.inputs[0], checks);
        } else if (inv.command == "invariants") {
            require_inputs(inv, 1);
            result = invariants_result(io::resolve_hopf(json(inv.inputs[0]), src, "hopf"), inv, checks);
        } else if (inv.command == "classify-map") {
            require_inputs(inv, 1);
            result = classify_result(io::resolve_map(json(inv.inputs[0]), src, "map"), inv, checks, warnings);
        } else if (inv.command == "f-frobenius") {
            require_inputs(inv, 2);
            result = f_frobenius_result(io::resolve_map(json(inv.inputs[0]), src, "map"),
                                        io::resolve_comodule(json(inv.inputs[1]), src, "comodule"), inv, checks,
                                        warnings);
        } else if (inv.command == "nat") {
            require_inputs(inv, 2);
            result = nat_result(io::resolve_hopf(json(inv.inputs[0]), src, "hopf"),
                                io::resolve_comodule(json(inv.inputs[1]), src, "comodule"), inv, checks, warnings);
        } else {
            throw std::invalid_argument("unknown command '" + inv.command + "'");
        }
        if (!checks.ok()) status = "failed";
    } catch (const VerificationError& e) {
        status = "failed";
        error = e.what();
        checks.append(e.report());
    } catch (const InconsistencyError& e) {
        status = "inconsistency";
        error = e.what();
    }
    report["status"] = status;
    if (!error.empty()) report["error"] = error;
    report["result"] = result.is_null() ? json::object() : result;
    report["checks"] = checks_json(checks);
    report["warnings"] = warnings;
    return report;
}

int exit_code(const json& report) {
    const std::string s = report.at("status").get<std::string>();
    if (s == "ok") return kOk;
    if (s == "inconsistency") return kTrap;
    return kFailed;
}

std::string cache_key(const Invocation& inv) {
    json key;
    key["command"] = inv.command;
    json inputs = json::array();
    for (const auto& a : inv.inputs) inputs.push_back(expand_refs(json(a), "."));
    key["inputs"] = std::move(inputs);
    json echo = json::array();
    for (const auto& a : inv.inputs) echo.push_back(echo_arg(a));
    key["echo"] = std::move(echo);
    json opts = inv.options;
    // Relative paths inside options are resolved the same way as inputs.
    if (auto it = opts.find("bimodule"); it != opts.end()) *it = expand_refs(*it, ".");
    key["options"] = std::move(opts);
    key["version"] = kVersion;
    return io::sha256_hex(io::canonical_dump(key));
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::ostream& os) {
    if (v.is_object()) {
        if (v.empty() && !prefix.empty()) os << prefix << ": {}\n";
        for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, os);
        return;
    }
    if (v.is_array()) {
        bool flat = true;
        bool checks = !v.empty();
        for (const auto& x : v) {
            flat = flat && !x.is_structured();
            checks = checks && x.is_object() && x.contains("name") && x.contains("passed");
        }
        if (checks) {
            for (const auto& c : v) {
                os << prefix << ": " << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
                if (c.contains("witness")) os << ": " << c.at("witness").get<std::string>();
                os << "\n";
            }
            return;
        }
        if (flat) {
            os << prefix << ":";
            for (const auto& x : v) os << " " << scalar_text(x);
            os << "\n";
            return;
        }
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", os);
        return;
    }
    os << prefix << ": " << scalar_text(v) << "\n";
}

}  // namespace

std::string render(const json& report, const std::string& format) {
    if (format == "json") return io::pretty(report);
    std::ostringstream os;
    os << "command: " << report.at("command").get<std::string>() << "\n";
    os << "version: " << report.at("version").get<std::string>() << "\n";
    for (const auto& in : report.at("inputs"))
        os << "input: " << in.at("arg").get<std::string>() << " (sha256 " << in.at("sha256").get<std::string>() << ")\n";
    os << "status: " << report.at("status").get<std::string>() << "\n";
    if (report.contains("error")) os << "error: " << report.at("error").get<std::string>() << "\n";
    flatten(report.at("result"), "", os);
    for (const auto& c : report.at("checks")) {
        os << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
        if (c.contains("witness")) os << ": " << c.at("witness").get<std::string>();
        os << "\n";
    }
    for (const auto& w : report.at("warnings")) os << "warning: " << w.get<std::string>() << "\n";
    return os.str();
}

json builtin_document(const std::string& name, const std::vector<std::string>& params) {
    std::string desc = name;
    if (!params.empty()) {
        if (desc.find('(') != std::string::npos) throw std::invalid_argument("give parameters either inline or via --param");
        desc += "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (params[i].find('=') == std::string::npos)
                throw std::invalid_argument("--param expects k=v, got '" + params[i] + "'");
            desc += (i ? "," : "") + params[i];
        }
        desc += ")";
    }
    const BuiltinValue v = builtin(desc);
    if (auto* h = std::get_if<HopfPtr>(&v)) return io::to_json(**h);
    if (auto* m = std::get_if<MapPtr>(&v)) return io::to_json(**m);
    return io::to_json(std::get<ComodulePtr>(v));
}

}  // namespace hopfkit::cli
