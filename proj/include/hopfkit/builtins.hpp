#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfkit/comodule.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/maps.hpp"

namespace hopfkit {

// Group algebra kG from a Cayley table (table[a][b] = index of ab).
HopfPtr group_algebra(const std::vector<std::vector<int>>& table, const Field& f, std::vector<std::string> labels = {});
// k[Z_n] with basis 1, g, g^2, ...
HopfPtr cyclic_group_algebra(int n, const Field& f);
// The one-dimensional Hopf algebra k.
HopfPtr base_field_hopf(const Field& f);

// Taft algebra on E^a K^c with KE = w EK, w = z^which_root in Q(zeta_n).
HopfPtr taft(int n, int which_root = 2);
// Small quantum group u_q(sl2) on E^a F^b K^c, q = z in Q(zeta_n), n odd.
HopfPtr uqsl2(int n, Exec exec = Exec::parallel);
// Unverified, unmemoized structure constants of uqsl2(n).
HopfData uqsl2_data(int n, Exec exec = Exec::parallel);
// Group algebra of <K^d> inside u_q(sl2), labelled 1, K^d, K^2d, ...
HopfPtr k_power(int n, int d);

MapPtr subalg_K_power(int n, int d);
MapPtr inclusion_taft(int n);
MapPtr unit_map(const HopfPtr& h);
MapPtr counit_map(const HopfPtr& h);
MapPtr identity_map(const HopfPtr& h);

// L = H with delta = Delta.
ComodulePtr regular_comodule(const HopfPtr& h);
// L = k with delta(1) = 1 (x) 1.
ComodulePtr trivial_comodule(const HopfPtr& h);

using BuiltinValue = std::variant<HopfPtr, MapPtr, ComodulePtr>;

// Parses descriptors such as "uqsl2(n=3)", "dual_of(of=taft(n=3))" or
// "unit_map(of=uqsl2(n=3))". Results are memoized by canonical descriptor.
BuiltinValue builtin(const std::string& descriptor);
HopfPtr builtin_hopf(const std::string& descriptor);
MapPtr builtin_map(const std::string& descriptor);
ComodulePtr builtin_comodule(const std::string& descriptor);

struct Descriptor {
    std::string name;
    std::map<std::string, std::string> params;
    std::string canonical() const;
};
Descriptor parse_descriptor(const std::string& text);

std::vector<std::string> builtin_names();

// Canonical descriptor of an object returned by a builtin generator, so that
// writers can refer to it instead of inlining its structure constants.
std::optional<std::string> builtin_descriptor(const void* object);

}  // namespace hopfkit
