#include <gtest/gtest.h>

#include <map>
#include <random>

#include "endscope/report.hpp"
#include "endscope/verdict.hpp"
#include "gen.hpp"

using namespace endscope;

namespace {

SurfaceDescriptor S(const std::string& s) { return std::get<SurfaceDescriptor>(parse(s)); }

GermTable surface_table(const std::string& s) {
    auto d = S(s);
    auto t = derive_table(d.ends);
    t.genus = d.genus;
    return t;
}

Verdict builtin(const char* name) { return verdict_of(read_input(*builtin_example(name))); }

const char* kMona = "surface { genus: inf, ends: mix(cantor^g(), cantor(); g) }";

}  // namespace

TEST(Telescoping, IsolatedPunctureIsCaseOne) {
    auto r = telescoping(surface_table("surface { genus: 0, ends: pt }"), "rank(0)");
    EXPECT_TRUE(r.telescoping);
    EXPECT_EQ(r.tcase, "i");
}

TEST(Telescoping, LochNessEndFailsOne) {
    auto t = surface_table("surface { genus: inf, ends: pt^g }");
    auto r = telescoping(t, "p1");
    EXPECT_FALSE(r.telescoping);
    EXPECT_EQ(r.failure, "F1");
    EXPECT_EQ(failure_case(t, "p1"), "F1");
}

TEST(Telescoping, MonaLisaEndIsCaseThree) {
    auto t = surface_table(kMona);
    auto r = telescoping(t, "e1");
    EXPECT_TRUE(r.telescoping);
    EXPECT_EQ(r.tcase, "iii");
    EXPECT_EQ(telescoping(t, "c1").tcase, "ii");
    EXPECT_THROW(failure_case(t, "e1"), IsTelescoping);
}

TEST(Telescoping, FluteLimitHasCountablePredecessor) {
    EXPECT_EQ(failure_case(surface_table("surface { genus: 0, ends: ord(w) }"), "rank(1)"), "F2");
}

TEST(Telescoping, IncomparableFamilyFailsThree) {
    auto in = read_input(*builtin_example("telescopefail-iii"));
    EXPECT_EQ(failure_case(table_of(in), "x"), "F3");
}

TEST(SurfaceVerdict, MonaLisaHolds) {
    auto v = surface_verdict(S(kMona));
    EXPECT_EQ(v.ac, Ac::holds);
    EXPECT_EQ(v.basis, "Theorem A");
    EXPECT_FALSE(v.failure);
}

TEST(SurfaceVerdict, IsolatedGenusClassFails) {
    for (const char* s : {"surface { genus: inf, ends: pt^g }",
                          "surface { genus: inf, ends: sum(pt^g, cantor()) }",
                          "surface { genus: inf, ends: sum(pt^g, mix(cantor^g(), cantor(); g)) }",
                          "surface { genus: inf, ends: mix(pt; g) }"}) {
        auto v = surface_verdict(S(s));
        EXPECT_EQ(v.ac, Ac::fails) << s;
        EXPECT_EQ(v.failure, "F1") << s;
        EXPECT_TRUE(v.witness) << s;
    }
}

TEST(SurfaceVerdict, FluteFailsTwo) {
    auto v = surface_verdict(S("surface { genus: 0, ends: ord(w) }"));
    EXPECT_EQ(v.ac, Ac::fails);
    EXPECT_EQ(v.failure, "F2");
}

TEST(SurfaceVerdict, BloomingCantorHolds) {
    EXPECT_EQ(surface_verdict(S("surface { genus: inf, ends: cantor^g() }")).ac, Ac::holds);
}

TEST(SurfaceVerdict, FinitelyPuncturedPlanarSurfacesHold) {
    for (const char* s : {"surface { genus: 0, ends: pt }", "surface { genus: 4, ends: ord(3) }"})
        EXPECT_EQ(surface_verdict(S(s)).ac, Ac::holds) << s;
}

TEST(SurfaceVerdict, UnstableTableIsUnknown) {
    auto v = builtin("unknown-6-2");
    EXPECT_EQ(v.ac, Ac::unknown);
    EXPECT_EQ(v.basis, "open-question");
}

TEST(SurfaceVerdict, FailureWithoutStabilityUsesSufficiency) {
    auto v = builtin("telescopefail-iii");
    EXPECT_EQ(v.ac, Ac::fails);
    EXPECT_EQ(v.basis, "Remark-sufficiency");
    EXPECT_EQ(v.failure, "F3");
}

TEST(StoneVerdict, OrdinalsHold) {
    for (const char* s : {"pt", "ord(7)", "ord(w)", "ord(w*3)", "ord(w^(2)*2)", "ord(w^(w))", "ord(w^(w^(w)+1)*5)"}) {
        auto v = stone_verdict(parse_term(s));
        EXPECT_EQ(v.ac, Ac::holds) << s;
        EXPECT_EQ(v.basis, "Theorem B") << s;
    }
}

TEST(StoneVerdict, CantorSetHolds) { EXPECT_EQ(stone_verdict(parse_term("cantor()")).ac, Ac::holds); }

TEST(StoneVerdict, UnstableTableAsStoneSpaceIsUnknown) {
    auto t = table_of(read_input(*builtin_example("unknown-6-2")));
    t.genus.reset();
    EXPECT_EQ(stone_verdict(t).ac, Ac::unknown);
}

TEST(Constants, ExponentArithmetic) {
    auto dag = constants();
    std::map<std::string, std::uint64_t> v;
    for (const auto& n : dag) v[n.name] = n.value;
    EXPECT_EQ(v["diagonal2"], 8u);
    EXPECT_EQ(v["conjugated-finite-part"], 12u);
    EXPECT_EQ(v["F-product"], 20u);
    EXPECT_EQ(v["pigeonhole"], 24u);
    EXPECT_EQ(v["globalpointed"], 96u);
    EXPECT_EQ(v["surface-brick-half"], 36u);
    EXPECT_EQ(v["surface-brick"], 72u);
    EXPECT_EQ(v["globalpointedS"], 288u);
    EXPECT_EQ(v["fragmentation-triple"], 864u);
    EXPECT_EQ(v["final-surface"], 4896u);
    EXPECT_EQ(v["multiple-check"], 17u);
    EXPECT_EQ(v["multiple-check"] * v["globalpointedS"], v["final-surface"]);
}

TEST(Constants, DependencyOrderAndReevaluation) {
    auto dag = constants();
    for (std::size_t i = 0; i < dag.size(); ++i) {
        for (const auto& d : dag[i].deps) {
            bool earlier = false;
            for (std::size_t j = 0; j < i; ++j) earlier = earlier || dag[j].name == d;
            EXPECT_TRUE(earlier) << dag[i].name << " uses " << d;
        }
        EXPECT_EQ(evaluate(dag[i], dag), dag[i].value) << dag[i].name;
    }
    EXPECT_EQ(expression(dag.back(), dag), "4896 / 288");
}

TEST(Constants, PigeonholeConjugatesTheProduct) {
    auto dag = constants();
    for (const auto& n : dag)
        if (n.name == "pigeonhole") EXPECT_EQ(expression(n, dag), "2 + 20 + 2");
}

// on random surfaces every class is stable, so the verdict is decided by telescoping alone
TEST(VerdictProperty, StableSurfacesFollowTelescoping) {
    std::mt19937_64 rng(111);
    for (int i = 0; i < 200; ++i) {
        Term ends = gen::term(rng, 1 + i % 10);
        Genus g{has_genus(ends), has_genus(ends) ? 0u : 2u};
        auto v = surface_verdict(surface_check(g, ends));
        bool all = true;
        for (const auto& c : v.classes) {
            EXPECT_EQ(c.stable, "stable") << print(ends);
            all = all && c.telescoping.telescoping;
        }
        EXPECT_EQ(v.ac, all ? Ac::holds : Ac::fails) << print(ends);
        EXPECT_EQ(v.basis, "Theorem A");
    }
}
