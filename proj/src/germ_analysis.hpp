#pragma once

// Node-level germ analysis shared by table derivation and the normalizer.

#include <optional>
#include <set>
#include <vector>

#include "endscope/termlang.hpp"

namespace endscope::detail {

enum class NodeType { Point, Limit, Cantor, Rank };

struct GNode {
    const Term* term = nullptr;
    NodeType type = NodeType::Point;
    Color color = Color::planar;
    bool repeated = false;      // sits inside a Mix/Cantor component, so has infinitely many copies
    Cnf alpha;                  // Rank: cb rank of the countable block
    std::uint64_t degree = 1;   // Rank: number of top points
    std::vector<int> inner;     // non-rank nodes in every neighbourhood (self for Cantor)
    std::optional<Cnf> rho;     // highest rank accumulating here
    int cls = -1;               // equivalence class, non-rank nodes only
};

class Analysis {
public:
    explicit Analysis(const Term& root);
    Analysis(const std::vector<const Term*>& roots);

    const std::vector<GNode>& nodes() const { return nodes_; }
    int class_count() const { return nclasses_; }

    // node created for the root of the i-th input term, -1 for a Sum root
    int root_node(std::size_t i) const { return roots_[i]; }
    // node ids created while walking the i-th input term
    const std::vector<int>& nodes_of(std::size_t i) const { return spans_[i]; }

    // classes met strictly near node x (self included for self-accumulating)
    std::set<int> inner_classes(int x) const;
    bool self_accumulating(int cls) const;

private:
    std::vector<GNode> nodes_;
    std::vector<int> roots_;
    std::vector<std::vector<int>> spans_;
    int nclasses_ = 0;

    int walk(const Term& t, bool repeated, std::vector<int>& created);
    void classify();
};

}  // namespace endscope::detail
