#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hopfkit/bimodule.hpp"
#include "hopfkit/comodule.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/maps.hpp"

namespace hopfkit::io {

using json = nlohmann::ordered_json;

// Malformed input; the message names the file and the offending field
// ("mult[4][2]") or the line and column of a syntax error.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Where a document came from: relative references resolve against dir.
struct Source {
    std::string name = "<inline>";
    std::filesystem::path dir = ".";
};

json read_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text, const std::string& name);

// References are "builtin:DESCRIPTOR", a path to a JSON file, or an inline
// object. With verify = false the Hopf algebra is constructed unchecked so
// that the caller can report failing axioms itself.
HopfPtr hopf_from_json(const json& j, const Source& src, bool verify = true);
MapPtr map_from_json(const json& j, const Source& src);
ComodulePtr comodule_from_json(const json& j, const Source& src);
BimodulePtr bimodule_from_json(const json& j, const Source& src);

HopfPtr resolve_hopf(const json& ref, const Source& src, const std::string& field, bool verify = true);
MapPtr resolve_map(const json& ref, const Source& src, const std::string& field);
ComodulePtr resolve_comodule(const json& ref, const Source& src, const std::string& field);
BimodulePtr resolve_bimodule(const json& ref, const Source& src, const std::string& field);

// A command-line argument: "builtin:..." or a file path.
json argument_ref(const std::string& arg);

json to_json(const HopfAlgebra& h);
json to_json(const BialgebraMap& f);
json to_json(const ComodulePtr& l);
json to_json(const HLBimodule& p);

// "builtin:DESCRIPTOR" for builtin objects, otherwise the inline document.
json ref_json(const HopfPtr& h);
json ref_json(const ComodulePtr& l);

json scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& f, const std::string& where);

// Indented output that keeps arrays of scalars (sparse entries) on one line.
std::string pretty(const json& j);

// Deterministic serialization used for hashing and the cache.
std::string canonical_dump(const json& j);
std::string sha256_hex(const std::string& data);

}  // namespace hopfkit::io
