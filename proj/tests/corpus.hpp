#pragma once

// The builtin objects every property suite runs over.

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "hopfkit/builtins.hpp"

namespace corpus {

// Cayley table of S3 with elements listed as permutations of {0,1,2}.
inline std::string s3_cayley() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::string out;
    for (std::size_t a = 0; a < perms.size(); ++a) {
        if (a) out += ';';
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::array<int, 3> ab{};
            for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
            const auto idx = std::find(perms.begin(), perms.end(), ab) - perms.begin();
            if (b) out += ' ';
            out += std::to_string(idx);
        }
    }
    return out;
}

inline std::vector<std::string> hopf_descriptors() {
    return {"base_field()",
            "group_algebra(n=2)",
            "group_algebra(field=cyclotomic(3),n=3)",
            "group_algebra(cayley=" + s3_cayley() + ")",
            "taft(n=3)",
            "taft(n=3,which_root=1)",
            "taft(n=5)",
            "k_power(d=1,n=3)",
            "k_power(d=3,n=9)",
            "uqsl2(n=3)",
            "dual_of(of=group_algebra(cayley=" + s3_cayley() + "))",
            "dual_of(of=taft(n=3))",
            "dual_of(of=uqsl2(n=3))"};
}

inline std::vector<std::string> map_descriptors() {
    return {"identity_map(of=taft(n=3))",
            "identity_map(of=uqsl2(n=3))",
            "unit_map(of=group_algebra(n=2))",
            "unit_map(of=taft(n=3))",
            "unit_map(of=uqsl2(n=3))",
            "unit_map(of=dual_of(of=uqsl2(n=3)))",
            "counit_map(of=group_algebra(n=2))",
            "counit_map(of=taft(n=3))",
            "inclusion_taft(n=3)",
            "subalg_K_power(d=1,n=3)",
            "subalg_K_power(d=3,n=3)"};
}

// Readable gtest parameter names.
inline std::string test_name(const std::string& d) {
    std::string out;
    for (char c : d) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    if (out.size() > 60) out = out.substr(0, 40) + "_" + std::to_string(std::hash<std::string>{}(d) % 100000);
    return out;
}

}  // namespace corpus
