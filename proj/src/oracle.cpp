#include "endscope/oracle.hpp"

#include <limits>
#include <map>
#include <set>

#include "endscope/error.hpp"

namespace endscope::oracle {

namespace {

constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kCap - b ? kCap : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kCap / b ? kCap : a * b;
}

using NodePtr = std::shared_ptr<const TNode>;

NodePtr make(NodeKind k, Color c, int budget, std::vector<Edge> kids = {}) {
    auto n = std::make_shared<TNode>();
    n->kind = k;
    n->color = c;
    n->budget = budget;
    n->kids = std::move(kids);
    return n;
}

std::uint64_t cap_of(int depth) { return static_cast<std::uint64_t>(std::max(depth, 1)); }

// a countable point too deep to expand: saturated at every round, with saturated isolated points below it
NodePtr deep(int depth) {
    std::uint64_t cap = cap_of(depth);
    auto n = std::make_shared<TNode>();
    n->kind = NodeKind::Deep;
    n->weight = cap;
    n->kids = {{make(NodeKind::Leaf, Color::planar, 0), cap, true}};
    return n;
}

NodePtr dust(Color c, std::vector<Edge> comps, int depth) {
    auto n = std::make_shared<TNode>();
    n->kind = NodeKind::Dust;
    n->color = c;
    n->weight = cap_of(depth);
    n->kids = std::move(comps);
    return n;
}

// reads the literal shape of a rank without using ordinal arithmetic:
// finite iff at most one summand with empty exponent
bool literal_finite(const Cnf& c, std::uint64_t& value) {
    if (c.terms.empty()) {
        value = 0;
        return true;
    }
    if (c.terms.size() == 1 && c.terms[0].exp.terms.empty()) {
        value = c.terms[0].coef;
        return true;
    }
    return false;
}

// Mix and Ord nesting is expanded structurally with d copies standing in for
// infinitely many; only Cantor self-similarity consumes the depth budget.
class Builder {
public:
    explicit Builder(int depth) : d_(depth) {}

    NodePtr build(const Term& t, int r) {
        auto key = std::make_pair(&t, r);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        NodePtr out;
        const auto copies = cap_of(d_);
        switch (t.kind) {
            case TermKind::Pt:
                out = make(NodeKind::Leaf, t.color, r);
                break;
            case TermKind::Ord: {
                std::uint64_t beta = 0;
                bool shallow = literal_finite(t.rank, beta) && beta <= static_cast<std::uint64_t>(d_) + 1;
                NodePtr top = shallow ? ord_point(beta) : deep(d_);
                out = make(NodeKind::Group, Color::planar, r, {{top, t.degree, false}});
                break;
            }
            case TermKind::Mix: {
                std::vector<Edge> kids;
                for (const auto& c : t.kids) kids.push_back({build(c, r), copies, true});
                out = make(NodeKind::Limit, t.color, r, std::move(kids));
                break;
            }
            case TermKind::Cantor: {
                if (r == 0) {
                    std::vector<Edge> kids;
                    for (const auto& c : t.kids) kids.push_back({build(c, 0), copies, true});
                    out = dust(t.color, std::move(kids), d_);
                    break;
                }
                std::vector<Edge> kids{{build(t, r - 1), 2, false}};
                for (const auto& c : t.kids) kids.push_back({build(c, r - 1), 1, false});
                out = make(NodeKind::Branch, t.color, r, std::move(kids));
                break;
            }
            case TermKind::Sum: {
                std::vector<Edge> kids;
                for (const auto& p : t.kids) kids.push_back({build(p, r), 1, false});
                out = make(NodeKind::Group, Color::planar, r, std::move(kids));
                break;
            }
        }
        memo_[key] = out;
        return out;
    }

private:
    int d_;
    std::map<std::pair<const Term*, int>, NodePtr> memo_;
    std::map<std::uint64_t, NodePtr> ord_memo_;

    NodePtr ord_point(std::uint64_t beta) {
        if (beta == 0) return make(NodeKind::Leaf, Color::planar, 0);
        if (auto it = ord_memo_.find(beta); it != ord_memo_.end()) return it->second;
        auto n = std::make_shared<TNode>();
        n->kind = NodeKind::Limit;
        n->rank = beta;
        n->kids = {{ord_point(beta - 1), cap_of(d_), true}};
        ord_memo_[beta] = n;
        return n;
    }
};

NodePtr cut(const NodePtr& n, int drop, int depth, std::map<const TNode*, NodePtr>& memo) {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    const auto copies = cap_of(depth);
    NodePtr out;
    auto cut_kids = [&](std::size_t from, bool force_indexed) {
        std::vector<Edge> kids;
        for (std::size_t i = from; i < n->kids.size(); ++i) {
            const auto& e = n->kids[i];
            bool indexed = e.indexed || force_indexed;
            kids.push_back({cut(e.node, drop, depth, memo), indexed ? copies : e.copies, indexed});
        }
        return kids;
    };
    if (n->kind == NodeKind::Limit && n->rank > static_cast<std::uint64_t>(depth) + 1) {
        out = deep(depth);
    } else if (n->kind == NodeKind::Deep) {
        out = deep(depth);
    } else if (n->kind == NodeKind::Branch && n->budget - drop <= 0) {
        // first kid is the self copy; the rest are the components
        out = dust(n->color, cut_kids(1, true), depth);
    } else if (n->kind == NodeKind::Dust) {
        out = dust(n->color, cut_kids(0, false), depth);
    } else {
        auto m = std::make_shared<TNode>(*n);
        m->budget = std::max(n->budget - drop, 0);
        m->kids = cut_kids(0, false);
        out = m;
    }
    memo[n.get()] = out;
    return out;
}

bool is_point(NodeKind k) { return k != NodeKind::Branch && k != NodeKind::Group; }

using Pair = std::array<std::uint64_t, 2>;

class Counter {
public:
    // points of each colour still present after k derivative rounds
    Pair alive(const TNode* n, int k) {
        auto key = std::make_pair(n, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Pair out{0, 0};
        for (const auto& e : n->kids) {
            auto c = alive(e.node.get(), k);
            out[0] = sat_add(out[0], sat_mul(c[0], e.copies));
            out[1] = sat_add(out[1], sat_mul(c[1], e.copies));
        }
        if (is_point(n->kind) && self_alive(n, k)) {
            int ci = n->color == Color::genus ? 1 : 0;
            out[ci] = sat_add(out[ci], n->weight);
        }
        memo_[key] = out;
        return out;
    }

    Pair isolated(const TNode* n) {
        if (auto it = iso_.find(n); it != iso_.end()) return it->second;
        Pair out{0, 0};
        for (const auto& e : n->kids) {
            auto c = isolated(e.node.get());
            out[0] = sat_add(out[0], sat_mul(c[0], e.copies));
            out[1] = sat_add(out[1], sat_mul(c[1], e.copies));
        }
        if (n->kind == NodeKind::Leaf) {
            int ci = n->color == Color::genus ? 1 : 0;
            out[ci] = sat_add(out[ci], n->weight);
        }
        iso_[n] = out;
        return out;
    }

private:
    std::map<std::pair<const TNode*, int>, Pair> memo_;
    std::map<const TNode*, Pair> iso_;

    bool self_alive(const TNode* n, int k) {
        switch (n->kind) {
            case NodeKind::Leaf:
                return k == 0;
            case NodeKind::Dust:
            case NodeKind::Deep:
                return true;
            case NodeKind::Limit:
                if (k == 0) return true;
                for (const auto& e : n->kids) {
                    auto c = alive(e.node.get(), k - 1);
                    if (c[0] + c[1] > 0) return true;
                }
                return false;
            default:
                return false;
        }
    }
};

bool has_kind(const TNode* n, NodeKind k, std::set<const TNode*>& seen) {
    if (!seen.insert(n).second) return false;
    if (n->kind == k) return true;
    for (const auto& e : n->kids)
        if (has_kind(e.node.get(), k, seen)) return true;
    return false;
}

bool has_kind(const TNode* n, NodeKind k) {
    std::set<const TNode*> seen;
    return has_kind(n, k, seen);
}

}  // namespace

Truncation truncate(const Term& t, int depth) {
    Builder b(depth);
    return {depth, b.build(t, depth)};
}

Truncation project(const Truncation& tr, int depth) {
    if (depth > tr.depth) throw std::invalid_argument("cannot project to a deeper truncation");
    std::map<const TNode*, NodePtr> memo;
    return {depth, cut(tr.root, tr.depth - depth, depth, memo)};
}

std::uint64_t point_count(const Truncation& tr) {
    Counter c;
    auto a = c.alive(tr.root.get(), 0);
    return sat_add(a[0], a[1]);
}

std::vector<std::uint64_t> cb_bruteforce(const Truncation& tr) {
    if (has_kind(tr.root.get(), NodeKind::Dust)) throw NotCountable("truncation contains Cantor dust");
    Counter c;
    std::vector<std::uint64_t> out;
    for (int k = 0; k <= tr.depth + 2; ++k) {
        auto a = c.alive(tr.root.get(), k);
        out.push_back(sat_add(a[0], a[1]));
        if (out.back() == 0) break;
    }
    return out;
}

Bundle invariants(const Truncation& tr) {
    Counter c;
    Bundle b;
    b.depth = tr.depth;
    const auto cap = cap_of(tr.depth);
    for (int k = 0; k <= tr.depth + 1; ++k) {
        auto a = c.alive(tr.root.get(), k);
        b.survivors.push_back({std::min(a[0], cap), std::min(a[1], cap)});
    }
    auto iso = c.isolated(tr.root.get());
    b.isolated = {std::min(iso[0], cap), std::min(iso[1], cap)};
    b.perfect = has_kind(tr.root.get(), NodeKind::Dust);
    return b;
}

Comparison equiv_invariants(const Term& a, const Term& b, int depth) {
    for (int d = 1; d <= depth; ++d) {
        Bundle x = invariants(truncate(a, d)), y = invariants(truncate(b, d));
        if (x == y) continue;
        const char* names[2] = {"planar", "genus"};
        std::string w = "depth " + std::to_string(d) + ": ";
        for (int ci = 0; ci < 2; ++ci)
            if (x.isolated[ci] != y.isolated[ci])
                return {false, w + "isolated " + names[ci] + " count " + std::to_string(x.isolated[ci]) + " vs " +
                                   std::to_string(y.isolated[ci])};
        for (std::size_t k = 0; k < x.survivors.size(); ++k)
            for (int ci = 0; ci < 2; ++ci)
                if (x.survivors[k][ci] != y.survivors[k][ci])
                    return {false, w + "derivative " + std::to_string(k) + " " + names[ci] + " count " +
                                       std::to_string(x.survivors[k][ci]) + " vs " +
                                       std::to_string(y.survivors[k][ci])};
        return {false, w + "perfect kernel " + (x.perfect ? "present" : "absent") + " vs " +
                           (y.perfect ? "present" : "absent")};
    }
    return {true, "same up to depth " + std::to_string(depth)};
}

}  // namespace endscope::oracle
