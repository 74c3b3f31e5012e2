#include <gtest/gtest.h>

#include <random>
#include <string>

#include "endscope/swindle.hpp"

using namespace endscope::swindle;

namespace {

// reduction written against strings so it shares nothing with the library
std::string naive_reduce(const std::vector<int>& letters) {
    std::vector<int> st;
    for (int x : letters) {
        if (!st.empty() && st.back() == -x)
            st.pop_back();
        else
            st.push_back(x);
    }
    std::string s;
    for (int x : st) s += std::to_string(x) + ",";
    return s;
}

std::vector<int> inv(const std::vector<int>& w) {
    std::vector<int> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word random_word(std::mt19937_64& rng, int letters, int len) {
    Word w;
    while (static_cast<int>(w.size()) < len) {
        int x = 1 + static_cast<int>(rng() % letters);
        if (rng() % 2) x = -x;
        if (!w.empty() && w.back() == -x) continue;
        w.push_back(x);
    }
    return w;
}

SlotWord random_slots(std::mt19937_64& rng, int letters, int slots) {
    SlotWord h;
    for (int s = 0; s < slots; ++s)
        if (rng() % 4 != 0) h.set(s, random_word(rng, letters, 1 + rng() % 3));
    return h;
}

}  // namespace

TEST(Words, ReductionAndInverse) {
    EXPECT_EQ(reduce({1, 2, -2, -1, 3}), (Word{3}));
    EXPECT_EQ(concat({1, 2}, inverse({1, 2})), Word{});
    EXPECT_EQ(to_string({1, -2}), "1 2'");
    EXPECT_EQ(to_string({}), "e");
}

TEST(SlotMaps, ComposeAndInverse) {
    SlotMap t = SlotMap::translation(3);
    SlotWord w;
    w.set(0, {1});
    w.set(4, {2, 2});
    SlotMap g = compose(SlotMap::labels(w), t);
    SlotMap id = compose(g, inverse(g));
    EXPECT_EQ(id.perm.shift, 0);
    EXPECT_TRUE(id.perm.fwd.empty());
    EXPECT_TRUE(id.word.at.empty());
    // label of g at slot 1: t moves it to 4, then w acts there
    EXPECT_EQ(g.word.get(1), (Word{2, 2}));
    EXPECT_EQ(g.perm.apply(1), 4);
}

TEST(Anderson, SingleGenerator) {
    SlotWord h;
    h.set(0, {1});
    auto r = anderson(h, 16);
    EXPECT_TRUE(r.check);
    EXPECT_EQ(r.block, 1);
}

TEST(Anderson, IdentityGivesIdentity) {
    auto r = anderson(SlotWord{}, 16);
    EXPECT_TRUE(r.u.word.at.empty());
    EXPECT_TRUE(r.bracket.word.at.empty());
    EXPECT_EQ(r.bracket.perm.shift, 0);
    EXPECT_TRUE(r.check);
}

TEST(Anderson, NegativeSupportIsRejected) {
    SlotWord h;
    h.set(-1, {1});
    EXPECT_THROW(anderson(h, 4), endscope::BadSupport);
}

TEST(Anderson, RandomCasesAgreeWithIndependentReduction) {
    std::mt19937_64 rng(121);
    for (int i = 0; i < 200; ++i) {
        int letters = 1 + static_cast<int>(rng() % 4);
        SlotWord h = random_slots(rng, letters, 8);
        const int window = 32;
        auto r = anderson(h, window);
        ASSERT_TRUE(r.check) << "case " << i;
        // [u,v] = u v u^-1 v^-1 at slot s: label u(s) u(s - L)^-1
        for (Slot s = 0; s < window; ++s) {
            std::vector<int> letters_at = r.u.word.get(s);
            auto back = inv(r.u.word.get(s - r.block));
            letters_at.insert(letters_at.end(), back.begin(), back.end());
            EXPECT_EQ(naive_reduce(letters_at), naive_reduce(h.get(s))) << "case " << i << " slot " << s;
            EXPECT_EQ(r.bracket.perm.apply(s), s);
        }
    }
}

TEST(Alternating, Definitional) {
    SlotWord f;
    f.set(0, {1, 2});
    f.set(1, inverse({1, 2}));
    Split sp{{0}, {1}, {{0, 1}}};
    EXPECT_TRUE(alternating_check(f, sp));
    SlotWord g;
    g.set(0, {1, 2});
    g.set(1, {1, 2});
    EXPECT_FALSE(alternating_check(g, sp));
}

TEST(Alternating, MalformedSplits) {
    SlotWord f;
    EXPECT_THROW(alternating_check(f, Split{{0}, {0}, {{0, 0}}}), endscope::BadSplit);
    EXPECT_THROW(alternating_check(f, Split{{0, 2}, {1}, {{0, 1}, {2, 1}}}), endscope::BadSplit);
}

TEST(CommutatorFromAlternating, SinglePair) {
    SlotWord f;
    f.set(0, {1});
    f.set(1, {-1});
    auto r = commutator_from_alternating(f, Split{{0}, {1}, {{0, 1}}});
    EXPECT_TRUE(r.check);
    EXPECT_EQ(r.f1.get(0), (Word{1}));
    EXPECT_TRUE(r.f1.get(1).empty());
}

TEST(CommutatorFromAlternating, RoundTripOnRandomBricks) {
    std::mt19937_64 rng(122);
    for (int i = 0; i < 100; ++i) {
        int pairs = 1 + static_cast<int>(rng() % 10);
        SlotWord f;
        Split sp;
        for (int k = 0; k < pairs; ++k) {
            Slot a = 2 * k, b = 2 * k + 1;
            Word w = random_word(rng, 3, 1 + rng() % 4);
            f.set(a, w);
            f.set(b, inverse(w));
            sp.a1.push_back(a);
            sp.a2.push_back(b);
            sp.conj[a] = b;
        }
        auto r = commutator_from_alternating(f, sp);
        ASSERT_TRUE(r.check);
        SlotMap c = commutator(SlotMap::labels(r.f1), r.h);
        EXPECT_EQ(c.word, f);
        EXPECT_EQ(c.perm.shift, 0);
        EXPECT_TRUE(c.perm.fwd.empty());
    }
}

TEST(CommutatorFromAlternating, RejectsNonAlternating) {
    SlotWord f;
    f.set(0, {1});
    f.set(1, {1});
    EXPECT_THROW(commutator_from_alternating(f, Split{{0}, {1}, {{0, 1}}}), endscope::NotAlternating);
    SlotWord g;
    g.set(5, {2});
    EXPECT_THROW(commutator_from_alternating(g, Split{{0}, {1}, {{0, 1}}}), endscope::NotAlternating);
}

TEST(EmLayout, FirstBlockPattern) {
    auto l = em_layout(1);
    ASSERT_EQ(l.slots.size(), 5u);
    EXPECT_EQ(l.slots[0].tag, Tag::red);
    EXPECT_EQ(l.slots[1].tag, Tag::separator);
    EXPECT_EQ(l.slots[2].tag, Tag::blue_bar);
    EXPECT_EQ(l.slots[4].tag, Tag::blue);
    ASSERT_EQ(l.h2_groups.size(), 1u);
    EXPECT_EQ(l.h2_groups[0].conj.at(2), 4);
}

TEST(EmLayout, GroupsAlternateAndReconstruct) {
    for (int d = 1; d <= 6; ++d) {
        auto l = em_layout(d);
        EXPECT_TRUE(l.separators_ok) << d;
        for (const auto& g : l.h2_groups) EXPECT_TRUE(alternating_check(l.h2, g)) << "h2 d=" << d;
        for (const auto& g : l.h1_groups) EXPECT_TRUE(alternating_check(l.h1, g)) << "h1 d=" << d;
        EXPECT_EQ(l.h1_groups.size(), static_cast<std::size_t>(d));
        EXPECT_EQ(l.h2_groups.size(), static_cast<std::size_t>(d));
        // f is recovered as h2^-1 h1 slot by slot; the other order leaves the blue letters in place
        EXPECT_TRUE(l.proof_order) << d;
        EXPECT_FALSE(l.stated_order) << d;
        SlotMap rebuilt = compose(inverse(SlotMap::labels(l.h2)), SlotMap::labels(l.h1));
        EXPECT_EQ(rebuilt.word, l.f) << d;
    }
}

TEST(Fragment, DiagonalSplitsAlternateSlots) {
    SlotMap f;
    for (Slot s = 0; s < 8; ++s) f.word.set(s, {1});
    auto r = fragment_slots(f, 0, 8);
    EXPECT_TRUE(r.check);
    EXPECT_EQ(r.n_clusters.size(), 4u);
    EXPECT_EQ(r.g.word.get(0), (Word{1}));
    EXPECT_TRUE(r.g.word.get(1).empty());
    EXPECT_EQ(r.h.word.get(1), (Word{1}));
}

TEST(Fragment, BoundedPermutation) {
    SlotMap f;
    for (Slot k = 0; k < 8; ++k) {
        f.perm.set(4 * k, 4 * k + 2);
        f.perm.set(4 * k + 2, 4 * k);
        f.perm.set(4 * k + 1, 4 * k + 3);
        f.perm.set(4 * k + 3, 4 * k + 1);
        f.word.set(4 * k, {2});
    }
    auto r = fragment_slots(f, 2, 32);
    EXPECT_TRUE(r.check);
    EXPECT_EQ(r.n_clusters.size() + r.m_clusters.size(), 8u);
    for (std::size_t i = 1; i < r.n_clusters.size(); ++i)
        EXPECT_GE(r.n_clusters[i].first - r.n_clusters[i - 1].second, 3);
}

TEST(Fragment, UnboundedDisplacement) {
    SlotMap f;
    f.perm.set(0, 9);
    f.perm.set(9, 0);
    EXPECT_THROW(fragment_slots(f, std::nullopt, 16), endscope::UnboundedDisplacement);
    EXPECT_THROW(fragment_slots(f, 4, 16), endscope::UnboundedDisplacement);
    EXPECT_THROW(fragment_slots(SlotMap::translation(1), 4, 16), endscope::UnboundedDisplacement);
}
