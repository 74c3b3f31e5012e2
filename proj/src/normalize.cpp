#include <algorithm>

#include "endscope/germs.hpp"
#include "endscope/termlang.hpp"
#include "germ_analysis.hpp"

namespace endscope {

namespace {

using detail::Analysis;
using detail::NodeType;

Term canonical_ord(const Cnf& rank, std::uint64_t degree) {
    if (rank.is_zero() && degree == 1) return Term::pt();
    return Term::ord(rank, degree);
}

// every class of p already accumulates onto the basepoint of the stable part s
bool absorbed_by(const Term& p, const Term& s) {
    Analysis an({&p, &s});
    int root = an.root_node(1);
    if (root < 0) return false;
    const auto& nodes = an.nodes();
    auto near = an.inner_classes(root);
    const auto& rho = nodes[root].rho;
    for (int k : an.nodes_of(0)) {
        const auto& g = nodes[k];
        if (g.type == NodeType::Rank) {
            if (!rho || *rho < g.alpha) return false;
        } else if (!near.count(g.cls)) {
            return false;
        }
    }
    return true;
}

void sort_canonical(std::vector<Term>& v) { std::sort(v.begin(), v.end(), canonical_less); }

// component multiset of a Mix/Cantor node: sums split into their parts,
// countable blocks split into single-top copies, duplicates dropped
std::vector<Term> component_set(std::vector<Term> comps) {
    std::vector<Term> flat;
    for (auto& c : comps) {
        if (c.kind == TermKind::Sum) {
            for (auto& p : c.kids) flat.push_back(std::move(p));
        } else {
            flat.push_back(std::move(c));
        }
    }
    for (auto& c : flat)
        if (c.kind == TermKind::Ord) c = canonical_ord(c.rank, 1);
    sort_canonical(flat);
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    return flat;
}

std::vector<Term> without(const std::vector<Term>& v, std::size_t i) {
    std::vector<Term> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i) out.push_back(v[k]);
    return out;
}

Term norm(const Term& t);

Term norm_sum(const Term& t) {
    std::vector<Term> parts, countable;
    for (const auto& p : t.kids) {
        Term n = norm(p);
        if (n.kind == TermKind::Sum) {
            for (auto& q : n.kids) parts.push_back(std::move(q));
        } else {
            parts.push_back(std::move(n));
        }
    }
    std::vector<Term> rest;
    for (auto& p : parts) (countable_planar(p) ? countable : rest).push_back(std::move(p));
    if (!countable.empty()) {
        auto [r, n] = cb_rank(countable.size() == 1 ? countable[0] : Term::sum(countable));
        rest.push_back(canonical_ord(r, n));
    }
    sort_canonical(rest);
    for (bool changed = true; changed && rest.size() > 1;) {
        changed = false;
        for (std::size_t i = 0; i < rest.size() && !changed; ++i)
            for (std::size_t j = 0; j < rest.size() && !changed; ++j) {
                if (i == j) continue;
                if (rest[j].kind != TermKind::Mix && rest[j].kind != TermKind::Cantor) continue;
                if (absorbed_by(rest[i], rest[j])) {
                    rest = without(rest, i);
                    changed = true;
                }
            }
    }
    if (rest.size() == 1) return rest[0];
    return Term::sum(std::move(rest));
}

// drop components whose removal leaves the basepoint germ unchanged
void absorb_components(Term& node) {
    for (bool changed = true; changed && !node.kids.empty();) {
        changed = false;
        if (node.kind == TermKind::Mix && node.kids.size() == 1) break;
        for (std::size_t i = 0; i < node.kids.size(); ++i) {
            Term cand = node;
            cand.kids = without(node.kids, i);
            if (root_equivalent(node, cand)) {
                node = std::move(cand);
                changed = true;
                break;
            }
        }
    }
}

Term norm_mix(const Term& t) {
    std::vector<Term> comps;
    for (const auto& c : t.kids) comps.push_back(norm(c));
    Term m = Term::mix(component_set(std::move(comps)), t.color);
    absorb_components(m);
    // a limit point equivalent to the basepoint of a component: the whole node is that component
    for (const auto& k : m.kids)
        if ((k.kind == TermKind::Cantor || k.kind == TermKind::Mix) && root_equivalent(m, k)) return k;
    return m;
}

Term norm_cantor(const Term& t) {
    std::vector<Term> comps;
    for (const auto& c : t.kids) comps.push_back(norm(c));
    Term c = Term::cantor(component_set(std::move(comps)), t.color);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < c.kids.size(); ++i) {
            const Term& k = c.kids[i];
            if (k.kind != TermKind::Cantor || k.color != c.color) continue;
            std::vector<Term> merged = without(c.kids, i);
            merged.insert(merged.end(), k.kids.begin(), k.kids.end());
            Term cand = Term::cantor(component_set(std::move(merged)), c.color);
            if (root_equivalent(c, cand)) {
                c = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    absorb_components(c);
    return c;
}

Term norm(const Term& t) {
    if (countable_planar(t)) {
        auto [r, n] = cb_rank(t);
        return canonical_ord(r, n);
    }
    switch (t.kind) {
        case TermKind::Sum:
            return norm_sum(t);
        case TermKind::Mix:
            return norm_mix(t);
        case TermKind::Cantor:
            return norm_cantor(t);
        default:
            return t;
    }
}

}  // namespace

bool root_equivalent(const Term& a, const Term& b) {
    if (countable_planar(a) || countable_planar(b)) {
        return countable_planar(a) && countable_planar(b) && cb_rank(a) == cb_rank(b);
    }
    Analysis an({&a, &b});
    int ra = an.root_node(0), rb = an.root_node(1);
    if (ra < 0 || rb < 0) return false;
    return an.nodes()[ra].cls == an.nodes()[rb].cls;
}

Term normalize(const Term& t) {
    auto v = validate(t);
    if (!v.empty()) throw ValidationError(v.front().rule + " violated at " + v.front().subterm);
    Term cur = norm(t);
    for (int guard = 0; guard < 16; ++guard) {
        Term next = norm(cur);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace endscope
