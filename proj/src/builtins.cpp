#include "hopfgk/builtins.hpp"

namespace hopfgk {

namespace {

// Four generators: x1, x2, x3 primitive and z anti-cocommutative. U_H is not
// normal here (ad z moves x1 outside U_H) but A = <x1, x2, z> is, with x3
// generating H over A.
// The sign of [x1,z] is the one compatible with Δ(z): δ([x1,z]) = δ(z).
constexpr const char* kWzz35a = R"(# Non-normal U_H; GK dimension 4 via an almost centralizing extension.
hopf "wzz-3-5a"
gen x1 deg 1
gen x2 deg 1
gen x3 deg 1
gen z deg 2
rel [x1,x2] = x2
rel [x1,x3] = 0
rel [x2,x3] = 0
rel [x1,z] = z
rel [z,x2] = 0
rel [z,x3] = x2
delta z = x1 ox x2 - x2 ox x1
)";

constexpr const char* kEnvAbelian3 = R"(hopf "env-abelian-3"
gen x1 deg 1
gen x2 deg 1
gen x3 deg 1
rel [x1,x2] = 0
rel [x1,x3] = 0
rel [x2,x3] = 0
)";

constexpr const char* kEnvNonabelian2 = R"(hopf "env-nonabelian-2"
gen x deg 1
gen y deg 1
rel [x,y] = y
)";

constexpr const char* kEnvHeisenberg = R"(hopf "env-heisenberg"
gen x deg 1
gen y deg 1
gen c deg 1
rel [x,y] = c
rel [x,c] = 0
rel [y,c] = 0
)";

constexpr const char* kCentralAcc = R"(# Abelian primitives with one central anti-cocommutative element.
hopf "central-acc"
gen x1 deg 1
gen x2 deg 1
gen x3 deg 1
gen z deg 2
rel [x1,x2] = 0
rel [x1,x3] = 0
rel [x2,x3] = 0
rel [z,x1] = 0
rel [z,x2] = 0
rel [z,x3] = 0
delta z = x1 ox x2 - x2 ox x1
)";

constexpr const char* kDoubleAcc = R"(# Two anti-cocommutative generators whose bracket is primitive.
hopf "double-acc"
gen x1 deg 1
gen x2 deg 1
gen x3 deg 1
gen z1 deg 2
gen z2 deg 2
rel [x1,x2] = 0
rel [x1,x3] = 0
rel [x2,x3] = 0
rel [z1,x1] = 0
rel [z1,x2] = 0
rel [z1,x3] = 0
rel [z2,x1] = 0
rel [z2,x2] = 0
rel [z2,x3] = 0
rel [z1,z2] = x3
delta z1 = x1 ox x2 - x2 ox x1
delta z2 = x2 ox x3 - x3 ox x2
)";

constexpr const char* kHeisenbergAcc = R"(# Heisenberg primitives; z acts on them by [z,x] = c.
hopf "heisenberg-acc"
gen x deg 1
gen y deg 1
gen c deg 1
gen z deg 2
rel [x,y] = c
rel [x,c] = 0
rel [y,c] = 0
rel [z,x] = c
rel [z,y] = 0
rel [z,c] = 0
delta z = x ox c - c ox x
)";

}  // namespace

const std::vector<PresentationSource>& builtins() {
    static const std::vector<PresentationSource> all{
        {kWzz35a, "wzz-3-5a"},
        {kEnvAbelian3, "env-abelian-3"},
        {kEnvNonabelian2, "env-nonabelian-2"},
        {kEnvHeisenberg, "env-heisenberg"},
        {kCentralAcc, "central-acc"},
        {kDoubleAcc, "double-acc"},
        {kHeisenbergAcc, "heisenberg-acc"},
    };
    return all;
}

std::optional<PresentationSource> findBuiltin(std::string_view name) {
    for (const auto& b : builtins())
        if (b.origin == name) return b;
    return std::nullopt;
}

}  // namespace hopfgk
