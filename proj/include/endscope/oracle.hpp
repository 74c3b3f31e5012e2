#pragma once

// Brute-force finite truncations, written without the ordinal or germ code so
// it can cross-check them.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "endscope/termlang.hpp"

namespace endscope::oracle {

enum class NodeKind {
    Leaf,    // isolated point
    Limit,   // point with expanded copies converging to it
    Branch,  // Cantor shell split (not a point)
    Dust,    // unexpanded Cantor remainder, perfect
    Deep,    // countable point of rank beyond depth + 1, not expanded
    Group,   // clopen union (not a point)
};

struct TNode;

struct Edge {
    std::shared_ptr<const TNode> node;
    std::uint64_t copies = 1;
    bool indexed = false;  // copy count grows with depth
};

struct TNode {
    NodeKind kind = NodeKind::Leaf;
    Color color = Color::planar;
    int budget = 0;            // Cantor levels still to expand
    std::uint64_t rank = 0;    // ordinal points: CB rank
    std::uint64_t weight = 1;  // points this node stands for; Dust and Deep saturate
    std::vector<Edge> kids;
};

struct Truncation {
    int depth = 0;
    std::shared_ptr<const TNode> root;
};

Truncation truncate(const Term& t, int depth);
// cut a deeper truncation down to the given depth
Truncation project(const Truncation& tr, int depth);

std::uint64_t point_count(const Truncation& tr);

// surviving points after k derivative rounds, k = 0, 1, ... until none are left
std::vector<std::uint64_t> cb_bruteforce(const Truncation& tr);

struct Bundle {
    int depth = 0;
    std::vector<std::array<std::uint64_t, 2>> survivors;  // per round, [planar, genus], capped at depth
    std::array<std::uint64_t, 2> isolated{};
    bool perfect = false;
    bool operator==(const Bundle&) const = default;
};

Bundle invariants(const Truncation& tr);

struct Comparison {
    bool same = true;
    std::string witness;
};

Comparison equiv_invariants(const Term& a, const Term& b, int depth);

}  // namespace endscope::oracle
