#pragma once

// Slot model for the commutator constructions: slots stand in for big annuli or
// brick pieces, each carrying a reduced word over free generators 1..d.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "endscope/error.hpp"

namespace endscope::swindle {

using Word = std::vector<int>;  // letters +-1..+-d, reduced

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // a after b: a * b
std::string to_string(const Word& w);

using Slot = std::int64_t;

struct SlotWord {
    std::map<Slot, Word> at;  // unassigned slots carry the identity
    Word get(Slot s) const;
    void set(Slot s, Word w);
    std::set<Slot> support() const;
    bool operator==(const SlotWord& o) const { return at == o.at; }
};

// slot permutation: a translation with finitely many exceptions
struct Perm {
    std::int64_t shift = 0;
    std::map<Slot, Slot> fwd, inv;
    Slot apply(Slot s) const;
    Slot unapply(Slot s) const;
    void set(Slot from, Slot to);
};

// homeomorphism of the slot model: move slot s to perm(s), acting by word(s) on the way
struct SlotMap {
    Perm perm;
    SlotWord word;
    static SlotMap labels(SlotWord w);
    static SlotMap translation(std::int64_t by);
};

SlotMap compose(const SlotMap& g, const SlotMap& h);  // g after h
SlotMap inverse(const SlotMap& g);
SlotMap commutator(const SlotMap& a, const SlotMap& b);  // a b a^-1 b^-1
bool agree_on(const SlotMap& a, const SlotMap& b, Slot lo, Slot hi);  // slots lo..hi inclusive

struct AndersonResult {
    SlotMap u, v;
    SlotMap bracket;
    std::int64_t block = 0;  // support bound L; v translates by L
    bool check = false;
};

AndersonResult anderson(const SlotWord& h, int depth);

struct Split {
    std::vector<Slot> a1, a2;
    std::map<Slot, Slot> conj;  // A1 -> A2
};

bool alternating_check(const SlotWord& f, const Split& split);

struct CommutatorResult {
    SlotWord f1;
    SlotMap h;  // involution exchanging A1 and A2
    bool check = false;
};

CommutatorResult commutator_from_alternating(const SlotWord& f, const Split& split);

enum class Tag { red, blue, blue_bar, separator };

struct LayoutSlot {
    Tag tag;
    int letter = 0;  // generator index for tagged slots
    int block = 0;
};

struct EmLayout {
    std::vector<LayoutSlot> slots;
    SlotWord f, h1, h2;
    std::vector<Split> h1_groups, h2_groups;
    bool separators_ok = false;
    bool stated_order = false;  // f = h1 h2
    bool proof_order = false;  // f = h2^-1 h1
};

EmLayout em_layout(int d);

struct Fragmentation {
    SlotMap g, h;
    std::vector<std::pair<Slot, Slot>> n_clusters, m_clusters;
    bool check = false;
};

// f acts on slots 0..window-1; bound is the claimed displacement bound
Fragmentation fragment_slots(const SlotMap& f, std::optional<std::int64_t> bound, Slot window);

}  // namespace endscope::swindle
