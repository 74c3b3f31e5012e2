#pragma once

// Fixed term lists shared by the suites and the acceptance binary.

#include <string>
#include <vector>

namespace catalog {

// countable planar spaces of CB rank <= 3, as (text, rank, degree)
struct RankedTerm {
    const char* text;
    unsigned rank;
    unsigned degree;
};

inline const std::vector<RankedTerm>& ranked() {
    static const std::vector<RankedTerm> v = {
        {"pt", 0, 1},
        {"ord(3)", 0, 3},
        {"sum(pt, pt)", 0, 2},
        {"mix(pt; planar)", 1, 1},
        {"mix(pt, pt; planar)", 1, 1},
        {"sum(mix(pt; planar), pt)", 1, 1},
        {"sum(mix(pt; planar), mix(pt; planar))", 1, 2},
        {"ord(w)", 1, 1},
        {"ord(w*3)", 1, 3},
        {"mix(ord(3); planar)", 1, 1},
        {"mix(mix(pt; planar); planar)", 2, 1},
        {"mix(mix(pt; planar), pt; planar)", 2, 1},
        {"mix(ord(w), pt; planar)", 2, 1},
        {"mix(sum(pt, ord(w)); planar)", 2, 1},
        {"ord(w^(2))", 2, 1},
        {"ord(w^(2)*2)", 2, 2},
        {"sum(ord(w^(2)), ord(w))", 2, 1},
        {"ord(w^(3))", 3, 1},
        {"mix(ord(w^(2)); planar)", 3, 1},
        {"mix(mix(mix(pt; planar); planar); planar)", 3, 1},
        {"sum(ord(w^(3)), ord(w^(3)))", 3, 2},
    };
    return v;
}

// mixed catalog for stability checks: every term has size <= 12
inline const std::vector<std::string>& stability_terms() {
    static const std::vector<std::string> v = {
        "pt",
        "pt^g",
        "ord(5)",
        "ord(w)",
        "ord(w*2)",
        "ord(w^(2))",
        "ord(w^(w))",
        "ord(w^(w+1)*3)",
        "mix(pt; planar)",
        "mix(pt; g)",
        "mix(pt^g; g)",
        "mix(pt, pt^g; g)",
        "mix(mix(pt; planar); planar)",
        "mix(mix(pt^g; g), pt; g)",
        "cantor()",
        "cantor^g()",
        "cantor(pt)",
        "cantor^g(pt)",
        "cantor^g(pt^g)",
        "cantor(ord(w))",
        "cantor^g(pt, pt^g)",
        "cantor(cantor())",
        "cantor(mix(pt; planar))",
        "mix(cantor(); planar)",
        "mix(cantor^g(); g)",
        "mix(cantor^g(), cantor(); g)",
        "mix(cantor(pt); planar)",
        "mix(cantor^g(), pt; g)",
        "sum(pt, cantor())",
        "sum(cantor^g(), ord(w))",
        "sum(cantor^g(), cantor())",
        "sum(mix(pt; planar), pt^g)",
        "sum(ord(w^(2)), cantor^g(pt))",
        "mix(sum(pt, cantor()); planar)",
        "cantor^g(mix(pt; g))",
        "mix(mix(cantor(); planar), pt; planar)",
    };
    return v;
}

}  // namespace catalog
