#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include <unistd.h>

#include "hopfkit/builtins.hpp"
#include "hopfkit/io.hpp"

using namespace hopfkit;
using io::json;

namespace {

std::filesystem::path scratch() {
    const auto p = std::filesystem::temp_directory_path() / ("hopfkit_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    return p;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string parse_error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const io::ParseError& e) {
        return e.what();
    }
    return "<no error>";
}

}  // namespace

TEST(Io, HopfRoundTrip) {
    for (const HopfPtr& h : {taft(3), builtin_hopf("dual_of(of=taft(n=3))"), builtin_hopf("group_algebra(n=2)")}) {
        const json j = io::to_json(*h);
        const HopfPtr back = io::hopf_from_json(io::parse_json_text(io::pretty(j), "rt"), {});
        EXPECT_EQ(back->content_hash(), h->content_hash());
        EXPECT_EQ(back->basis(), h->basis());
    }
}

TEST(Io, MapComoduleAndBimoduleRoundTrip) {
    const MapPtr f = subalg_K_power(3, 1);
    const MapPtr f2 = io::map_from_json(io::to_json(*f), {});
    EXPECT_EQ(f2->matrix(), f->matrix());
    EXPECT_EQ(f2->source()->content_hash(), f->source()->content_hash());
    // Builtin endpoints are written as references, not inlined.
    EXPECT_EQ(io::to_json(*f)["target"], "builtin:uqsl2(n=3)");

    const ComodulePtr l = regular_comodule(taft(3));
    const ComodulePtr l2 = io::comodule_from_json(io::to_json(l), {});
    EXPECT_EQ(l2->data().coaction, l->data().coaction);
    EXPECT_EQ(l2->data().mult, l->data().mult);

    const BimodulePtr p = regular_bimodule(l);
    const BimodulePtr p2 = io::bimodule_from_json(io::to_json(*p), {});
    EXPECT_EQ(p2->data().left, p->data().left);
    EXPECT_EQ(p2->data().right, p->data().right);
    EXPECT_EQ(p2->data().coaction, p->data().coaction);
}

TEST(Io, RelativeFileReferencesResolve) {
    const auto dir = scratch();
    write(dir / "h.json", io::pretty(io::to_json(*taft(3))));
    json map = io::to_json(*identity_map(taft(3)));
    map["source"] = "h.json";
    map["target"] = "h.json";
    write(dir / "m.json", map.dump());
    const MapPtr f = io::resolve_map(json((dir / "m.json").string()), {}, "map");
    EXPECT_TRUE(f->matrix().is_identity());
    std::filesystem::remove_all(dir);
}

TEST(Io, DiagnosticsNameTheField) {
    json j = io::to_json(*builtin_hopf("group_algebra(n=2)"));
    j["mult"][0][2] = 7;
    EXPECT_NE(parse_error_of([&] { io::hopf_from_json(j, {"bad.json", "."}); }).find("bad.json: field 'mult[0]"),
              std::string::npos);
    json k = io::to_json(*builtin_hopf("group_algebra(n=2)"));
    k["counit"][0][1] = "1/0";
    EXPECT_NE(parse_error_of([&] { io::hopf_from_json(k, {}); }).find("counit"), std::string::npos);
    json s = io::to_json(*builtin_hopf("group_algebra(n=2)"));
    s.erase("antipode");
    EXPECT_NE(parse_error_of([&] { io::hopf_from_json(s, {}); }).find("antipode"), std::string::npos);
    s = io::to_json(*builtin_hopf("group_algebra(n=2)"));
    s["field"] = "quaternion";
    EXPECT_NE(parse_error_of([&] { io::hopf_from_json(s, {}); }).find("field"), std::string::npos);
}

TEST(Io, SyntaxErrorsCarryLineAndColumn) {
    const std::string msg = parse_error_of([] { io::parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "x.json"); });
    EXPECT_NE(msg.find("x.json"), std::string::npos);
    EXPECT_NE(msg.find("line 3"), std::string::npos);
    EXPECT_NE(parse_error_of([] { io::read_json_file("/nonexistent/file.json"); }).find("cannot open"),
              std::string::npos);
}

TEST(Io, FailingAxiomsSurfaceOnlyWhenVerifying) {
    json j = io::to_json(*builtin_hopf("group_algebra(n=2)"));
    j["antipode"] = json::array();
    EXPECT_THROW(io::hopf_from_json(j, {}, true), VerificationError);
    const HopfPtr h = io::hopf_from_json(j, {}, false);
    EXPECT_FALSE(verify_axioms_uncached(*h, {VerifyMode::full, Exec::serial}).ok());
}

TEST(Io, BuiltinReferences) {
    EXPECT_EQ(io::resolve_hopf(json("builtin:taft(n=3)"), {}, "h"), taft(3));
    EXPECT_THROW(io::resolve_hopf(json("builtin:taft(n=2x)"), {}, "h"), std::exception);
}

TEST(Io, Sha256KnownVectors) {
    EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, CanonicalDumpIgnoresKeyOrder) {
    const json a = json::parse(R"({"b": 1, "a": [1, {"y": 2, "x": 3}]})");
    const json b = json::parse(R"({"a": [1, {"x": 3, "y": 2}], "b": 1})");
    EXPECT_EQ(io::canonical_dump(a), io::canonical_dump(b));
    EXPECT_NE(io::canonical_dump(a), io::canonical_dump(json::parse(R"({"a": [{"x": 3, "y": 2}, 1], "b": 1})")));
}

TEST(Io, PrettyOutputReparses) {
    const json j = io::to_json(*taft(3));
    EXPECT_EQ(json::parse(io::pretty(j)), j);
    EXPECT_NE(io::pretty(j).find("[0,0,0,\"1\"]"), std::string::npos);
}

TEST(Io, ScalarJson) {
    const Field& f = Field::get(FieldSpec::cyclotomic(3));
    const Scalar s = f.parse("1/2*z - 3");
    EXPECT_EQ(io::scalar_from_json(io::scalar_json(s), f, "x"), s);
    EXPECT_EQ(io::scalar_from_json(json(5), f, "x"), f.from_int(5));
    EXPECT_THROW(io::scalar_from_json(json(1.5), f, "x"), io::ParseError);
}
