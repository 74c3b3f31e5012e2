#include "endscope/swindle.hpp"

#include <algorithm>

#include "endscope/error.hpp"

namespace endscope::swindle {

Word reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce(out);
}

std::string to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int x : w) {
        if (!s.empty()) s += ' ';
        s += x < 0 ? std::to_string(-x) + "'" : std::to_string(x);
    }
    return s;
}

Word SlotWord::get(Slot s) const {
    auto it = at.find(s);
    return it == at.end() ? Word{} : it->second;
}

void SlotWord::set(Slot s, Word w) {
    w = reduce(w);
    if (w.empty())
        at.erase(s);
    else
        at[s] = std::move(w);
}

std::set<Slot> SlotWord::support() const {
    std::set<Slot> out;
    for (const auto& [s, w] : at) out.insert(s);
    return out;
}

Slot Perm::apply(Slot s) const {
    auto it = fwd.find(s);
    return it == fwd.end() ? s + shift : it->second;
}

Slot Perm::unapply(Slot s) const {
    auto it = inv.find(s);
    return it == inv.end() ? s - shift : it->second;
}

void Perm::set(Slot from, Slot to) {
    if (to == from + shift) {
        fwd.erase(from);
        inv.erase(to);
        return;
    }
    fwd[from] = to;
    inv[to] = from;
}

SlotMap SlotMap::labels(SlotWord w) {
    SlotMap m;
    m.word = std::move(w);
    return m;
}

SlotMap SlotMap::translation(std::int64_t by) {
    SlotMap m;
    m.perm.shift = by;
    return m;
}

SlotMap compose(const SlotMap& g, const SlotMap& h) {
    SlotMap out;
    out.perm.shift = g.perm.shift + h.perm.shift;
    std::set<Slot> touched;
    for (const auto& [s, t] : h.perm.fwd) touched.insert(s);
    for (const auto& [s, t] : g.perm.fwd) touched.insert(h.perm.unapply(s));
    for (Slot s : h.word.support()) touched.insert(s);
    for (Slot s : g.word.support()) touched.insert(h.perm.unapply(s));
    for (Slot s : touched) {
        Slot mid = h.perm.apply(s);
        out.perm.set(s, g.perm.apply(mid));
        out.word.set(s, concat(g.word.get(mid), h.word.get(s)));
    }
    return out;
}

SlotMap inverse(const SlotMap& g) {
    SlotMap out;
    out.perm.shift = -g.perm.shift;
    for (const auto& [s, t] : g.perm.fwd) out.perm.set(t, s);
    for (const auto& [s, w] : g.word.at) out.word.set(g.perm.apply(s), inverse(w));
    return out;
}

SlotMap commutator(const SlotMap& a, const SlotMap& b) {
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

bool agree_on(const SlotMap& a, const SlotMap& b, Slot lo, Slot hi) {
    for (Slot s = lo; s <= hi; ++s)
        if (a.perm.apply(s) != b.perm.apply(s) || a.word.get(s) != b.word.get(s)) return false;
    return true;
}

AndersonResult anderson(const SlotWord& h, int depth) {
    auto supp = h.support();
    if (!supp.empty() && *supp.begin() < 0)
        throw BadSupport("slot " + std::to_string(*supp.begin()) + " lies outside the brick row");
    AndersonResult r;
    r.block = supp.empty() ? 1 : *supp.rbegin() + 1;
    r.v = SlotMap::translation(r.block);
    // a copy of h on each translate v^i(B), 0 <= i <= depth
    SlotWord u;
    for (int i = 0; i <= depth; ++i)
        for (const auto& [s, w] : h.at) u.set(s + i * r.block, w);
    r.u = SlotMap::labels(u);
    r.bracket = commutator(r.u, r.v);
    r.check = depth < 1 || agree_on(r.bracket, SlotMap::labels(h), 0, depth - 1);
    return r;
}

bool alternating_check(const SlotWord& f, const Split& split) {
    std::set<Slot> a1(split.a1.begin(), split.a1.end()), a2(split.a2.begin(), split.a2.end());
    if (a1.size() != split.a1.size() || a2.size() != split.a2.size()) throw BadSplit("repeated slot in split");
    for (Slot s : a1)
        if (a2.count(s)) throw BadSplit("A1 and A2 overlap at slot " + std::to_string(s));
    std::set<Slot> hit;
    for (Slot s : a1) {
        auto it = split.conj.find(s);
        if (it == split.conj.end() || !a2.count(it->second) || !hit.insert(it->second).second)
            throw BadSplit("conjugating map is not a bijection A1 -> A2");
    }
    if (hit.size() != a2.size() || split.conj.size() != a1.size())
        throw BadSplit("conjugating map is not a bijection A1 -> A2");
    for (Slot s : a1)
        if (f.get(split.conj.at(s)) != inverse(f.get(s))) return false;
    return true;
}

CommutatorResult commutator_from_alternating(const SlotWord& f, const Split& split) {
    std::set<Slot> inside(split.a1.begin(), split.a1.end());
    inside.insert(split.a2.begin(), split.a2.end());
    for (Slot s : f.support())
        if (!inside.count(s)) throw NotAlternating("support at slot " + std::to_string(s) + " outside A1 and A2");
    if (!alternating_check(f, split)) throw NotAlternating("f on A2 is not the conjugated inverse of f on A1");
    CommutatorResult r;
    for (Slot s : split.a1) r.f1.set(s, f.get(s));
    for (const auto& [a, b] : split.conj) {
        r.h.perm.set(a, b);
        r.h.perm.set(b, a);
    }
    SlotMap c = commutator(SlotMap::labels(r.f1), r.h);
    r.check = c.perm.fwd.empty() && c.perm.shift == 0 && c.word == f;
    return r;
}

EmLayout em_layout(int d) {
    EmLayout out;
    std::vector<Slot> red(d + 1);
    std::vector<std::vector<Slot>> bar(d + 1), plain(d + 1);
    auto push = [&](Tag t, int letter, int block) {
        if (!out.slots.empty()) out.slots.push_back({Tag::separator, 0, block});
        out.slots.push_back({t, letter, block});
        return static_cast<Slot>(out.slots.size()) - 1;
    };
    for (int k = 1; k <= d; ++k) {
        red[k] = push(Tag::red, k, k);
        for (int i = 1; i <= k; ++i) bar[k].push_back(push(Tag::blue_bar, i, k));
        for (int i = 1; i <= k; ++i) plain[k].push_back(push(Tag::blue, i, k));
    }
    for (Slot s = 0; s < static_cast<Slot>(out.slots.size()); ++s) {
        const auto& ls = out.slots[s];
        if (ls.tag == Tag::separator) continue;
        Word w{ls.tag == Tag::blue_bar ? -ls.letter : ls.letter};
        out.h1.set(s, w);
        if (ls.tag == Tag::red)
            out.f.set(s, w);
        else
            out.h2.set(s, w);
    }
    // h2: each blue block pairs its barred half with its plain half
    for (int k = 1; k <= d; ++k) {
        Split sp;
        for (int i = 0; i < k; ++i) {
            sp.a1.push_back(bar[k][i]);
            sp.a2.push_back(plain[k][i]);
            sp.conj[bar[k][i]] = plain[k][i];
        }
        out.h2_groups.push_back(std::move(sp));
    }
    // h1 regrouped: {red 1 | 1'} then {1..k of block k, red k+1 | 1'..(k+1)' of block k+1};
    // the plain half of the last block has no partner inside the truncation
    {
        Split sp;
        sp.a1 = {red[1]};
        sp.a2 = {bar[1][0]};
        sp.conj[red[1]] = bar[1][0];
        out.h1_groups.push_back(std::move(sp));
    }
    for (int k = 1; k < d; ++k) {
        Split sp;
        sp.a1 = plain[k];
        sp.a1.push_back(red[k + 1]);
        sp.a2 = bar[k + 1];
        for (std::size_t i = 0; i < sp.a1.size(); ++i) sp.conj[sp.a1[i]] = sp.a2[i];
        out.h1_groups.push_back(std::move(sp));
    }
    out.separators_ok = true;
    for (std::size_t i = 0; i + 1 < out.slots.size(); ++i)
        if ((out.slots[i].tag == Tag::separator) == (out.slots[i + 1].tag == Tag::separator))
            out.separators_ok = false;
    auto h1 = SlotMap::labels(out.h1), h2 = SlotMap::labels(out.h2), f = SlotMap::labels(out.f);
    Slot last = static_cast<Slot>(out.slots.size()) - 1;
    out.stated_order = agree_on(compose(h1, h2), f, 0, last);
    out.proof_order = agree_on(compose(inverse(h2), h1), f, 0, last);
    return out;
}

Fragmentation fragment_slots(const SlotMap& f, std::optional<std::int64_t> bound, Slot window) {
    if (!bound) throw UnboundedDisplacement("no displacement bound supplied");
    if (f.perm.shift != 0) throw UnboundedDisplacement("translations have no finite cycle structure");
    for (const auto& [s, t] : f.perm.fwd)
        if (std::abs(t - s) > *bound)
            throw UnboundedDisplacement("slot " + std::to_string(s) + " moves by " + std::to_string(t - s) +
                                        " > " + std::to_string(*bound));
    // cycle spans merged into clusters; f preserves every cluster
    std::vector<std::pair<Slot, Slot>> spans;
    std::set<Slot> seen;
    for (Slot s = 0; s < window; ++s) {
        if (seen.count(s)) continue;
        Slot lo = s, hi = s, cur = s;
        do {
            seen.insert(cur);
            lo = std::min(lo, cur);
            hi = std::max(hi, cur);
            cur = f.perm.apply(cur);
        } while (cur != s);
        spans.emplace_back(lo, hi);
    }
    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<Slot, Slot>> clusters;
    for (const auto& sp : spans) {
        if (!clusters.empty() && sp.first <= clusters.back().second)
            clusters.back().second = std::max(clusters.back().second, sp.second);
        else
            clusters.push_back(sp);
    }
    Fragmentation out;
    for (std::size_t i = 0; i < clusters.size(); ++i) (i % 2 == 0 ? out.n_clusters : out.m_clusters).push_back(clusters[i]);
    for (const auto& [lo, hi] : out.n_clusters)
        for (Slot s = lo; s <= hi; ++s) {
            out.g.perm.set(s, f.perm.apply(s));
            out.g.word.set(s, f.word.get(s));
        }
    out.h = compose(inverse(out.g), f);
    // checks: complementary supports, exact recomposition, clusters never touch
    bool ok = agree_on(compose(out.g, out.h), f, 0, window - 1);
    auto moved = [](const SlotMap& m, Slot s) { return m.perm.apply(s) != s || !m.word.get(s).empty(); };
    for (Slot s = 0; s < window; ++s) ok = ok && !(moved(out.g, s) && moved(out.h, s));
    for (std::size_t i = 1; i < clusters.size(); ++i) ok = ok && clusters[i].first > clusters[i - 1].second;
    out.check = ok;
    return out;
}

}  // namespace endscope::swindle
