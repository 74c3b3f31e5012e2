// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "endscope/germs.hpp"
#include "endscope/oracle.hpp"
#include "endscope/report.hpp"
#include "endscope/stability.hpp"
#include "endscope/swindle.hpp"
#include "endscope/verdict.hpp"
#include "gen.hpp"

using namespace endscope;

namespace {

// pinned limits
constexpr double kConstantsSeconds = 1.0;
constexpr double kGoldenSeconds = 5.0;
constexpr double kStabilitySeconds = 60.0;
constexpr double kSwindleSeconds = 30.0;
constexpr int kCertificateDepth = 20;
constexpr std::size_t kMinCatalog = 30;
constexpr std::size_t kMaxTermSize = 12;
constexpr int kRandomTables = 500;
constexpr int kAndersonCases = 200;
constexpr int kAndersonLetters = 4;
constexpr int kAndersonWindow = 32;
constexpr int kEmMaxD = 6;
constexpr int kOracleDepth = 4;
constexpr int kOracleRandom = 300;
constexpr int kDeterminismRuns = 3;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string run_cli(const std::string& args, const std::string& stdin_text, int* code = nullptr) {
    std::string path = "/tmp/endscope_acceptance_stdin.txt";
    if (FILE* f = std::fopen(path.c_str(), "w")) {
        std::fputs(stdin_text.c_str(), f);
        std::fclose(f);
    }
    std::string cmd = std::string(ENDSCOPE_BIN) + " " + args + " < " + path + " 2>/dev/null";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    if (code) *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

int report(int id, const char* name, const std::function<Outcome()>& body, double limit = 0) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
        std::ostringstream os;
        os << "runtime " << secs << " s over " << limit << " s";
        o.fail(os.str());
    }
    std::printf("%s %d %-24s %7.3f s%s%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    return o.pass ? 0 : 1;
}

Outcome constants_criterion() {
    Outcome o;
    int code = 0;
    auto j = nlohmann::json::parse(run_cli("constants --format json", "", &code));
    if (code != 0) o.fail("constants exit " + std::to_string(code));
    std::map<std::string, std::uint64_t> v;
    for (const auto& n : j["nodes"]) v[n["node"].get<std::string>()] = n["value"].get<std::uint64_t>();
    const std::pair<const char*, std::uint64_t> want[] = {
        {"diagonal2", 8},       {"conjugated-finite-part", 12}, {"F-product", 20},      {"pigeonhole", 24},
        {"globalpointed", 96},  {"surface-brick-half", 36},     {"surface-brick", 72},  {"globalpointedS", 288},
        {"fragmentation-triple", 864}, {"final-surface", 4896}};
    for (const auto& [name, value] : want)
        if (v[name] != value) o.fail(std::string(name) + " = " + std::to_string(v[name]));
    if (v["multiple-check"] * v["globalpointedS"] != v["final-surface"]) o.fail("17 x 288 mismatch");
    return o;
}

Outcome golden_criterion() {
    Outcome o;
    auto expect = [&](const std::string& label, const Verdict& v, Ac ac, const char* failure, const char* basis) {
        if (v.ac != ac) o.fail(label + ": ac " + to_string(v.ac));
        if (failure && v.failure != std::optional<std::string>(failure)) o.fail(label + ": failure " + v.failure.value_or("-"));
        if (basis && v.basis != basis) o.fail(label + ": basis " + v.basis);
    };
    auto builtin = [](const char* name) { return verdict_of(read_input(*builtin_example(name))); };
    expect("mona-lisa", builtin("mona-lisa"), Ac::holds, nullptr, "Theorem A");
    expect("loch-ness", builtin("loch-ness"), Ac::fails, "F1", nullptr);
    for (const char* s : {"surface { genus: inf, ends: sum(pt^g, cantor()) }",
                          "surface { genus: inf, ends: sum(pt^g, mix(cantor^g(), cantor(); g)) }",
                          "surface { genus: inf, ends: sum(pt^g, pt^g, cantor^g(pt)) }",
                          "surface { genus: inf, ends: mix(pt; g) }"})
        expect(s, surface_verdict(std::get<SurfaceDescriptor>(parse(s))), Ac::fails, "F1", nullptr);
    expect("flute", builtin("flute"), Ac::fails, "F2", nullptr);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        Cnf a = gen::small_cnf(rng, 2);
        std::uint64_t n = 1 + rng() % 5;
        expect("ord " + to_string(a), stone_verdict(Term::ord(a, n)), Ac::holds, nullptr, nullptr);
    }
    expect("cantor", stone_verdict(Term::cantor({}, Color::planar)), Ac::holds, nullptr, nullptr);
    expect("unknown-6-2", builtin("unknown-6-2"), Ac::unknown, nullptr, nullptr);
    return o;
}

Outcome stability_criterion() {
    Outcome o;
    const auto& terms = catalog::stability_terms();
    if (terms.size() < kMinCatalog) o.fail("catalog has " + std::to_string(terms.size()) + " terms");
    std::size_t classes = 0;
    for (const auto& text : terms) {
        Term t = parse_term(text);
        if (size(t) > kMaxTermSize) o.fail(text + " too large");
        auto table = derive_table(t);
        for (const auto& id : class_ids(table)) {
            ++classes;
            auto r = stable_nbhd(table, id, kCertificateDepth);
            if (r.status != Stability::stable || !r.decomposition) {
                o.fail(text + " " + id + " not stable");
                continue;
            }
            auto rep = check(*r.decomposition);
            std::size_t reassembly = 0;
            for (const auto& [name, pass] : rep.checks) {
                if (!pass) o.fail(text + " " + id + " " + name);
                reassembly += name.rfind("reassembly", 0) == 0;
            }
            if (reassembly != 3) o.fail(text + " " + id + " has " + std::to_string(reassembly) + " reassemblies");
        }
    }
    if (o.pass) o.detail = std::to_string(terms.size()) + " terms, " + std::to_string(classes) + " classes";
    return o;
}

Outcome preorder_criterion() {
    Outcome o;
    std::mt19937_64 rng(4);
    int violations = 0;
    for (int i = 0; i < kRandomTables; ++i) {
        Term term = gen::term(rng, 1 + i % kMaxTermSize);
        auto t = derive_table(term);
        auto ids = class_ids(t);
        for (const auto& a : ids) {
            if (!dominates(t, a, a)) ++violations;
            for (const auto& b : ids)
                if (dominates(t, a, b))
                    for (const auto& c : ids)
                        if (dominates(t, b, c) && !dominates(t, a, c)) ++violations;
        }
        for (const auto& [z, x] : t.acc)
            if (lookup(t, z).color == Color::genus && lookup(t, x).color != Color::genus) ++violations;
        auto max = maximal_classes(t);
        if (max.empty() || max.size() > ids.size()) ++violations;
        if (term.kind == TermKind::Mix || term.kind == TermKind::Cantor)
            for (const auto& m : max)
                if (!equivalent(t, m, max.front())) ++violations;
        if (violations && o.pass) o.fail("first violation at " + print(term));
    }
    if (!o.pass) o.detail += " (" + std::to_string(violations) + " violations)";
    return o;
}

Outcome swindle_criterion() {
    using namespace endscope::swindle;
    Outcome o;
    std::mt19937_64 rng(5);
    for (int i = 0; i < kAndersonCases; ++i) {
        int letters = 1 + static_cast<int>(rng() % kAndersonLetters);
        SlotWord h;
        for (int s = 0; s < 8; ++s) {
            Word w;
            int len = static_cast<int>(rng() % 4);
            for (int k = 0; k < len; ++k) w.push_back((1 + static_cast<int>(rng() % letters)) * (rng() % 2 ? 1 : -1));
            h.set(s, w);
        }
        if (!anderson(h, kAndersonWindow).check) o.fail("anderson case " + std::to_string(i));
    }
    for (int d = 1; d <= kEmMaxD; ++d) {
        auto l = em_layout(d);
        for (const auto& g : l.h1_groups)
            if (!alternating_check(l.h1, g)) o.fail("h1 grouping d=" + std::to_string(d));
        for (const auto& g : l.h2_groups)
            if (!alternating_check(l.h2, g)) o.fail("h2 grouping d=" + std::to_string(d));
        if (!l.proof_order) o.fail("product reconstruction d=" + std::to_string(d));
        for (const auto& g : l.h2_groups) {
            SlotWord part;
            for (Slot s : g.a1) part.set(s, l.h2.get(s));
            for (Slot s : g.a2) part.set(s, l.h2.get(s));
            auto r = commutator_from_alternating(part, g);
            if (!r.check || commutator(SlotMap::labels(r.f1), r.h).word != part)
                o.fail("commutator round trip d=" + std::to_string(d));
        }
    }
    return o;
}

Outcome oracle_criterion() {
    Outcome o;
    int checked = 0;
    auto agree = [&](const Term& t) {
        ++checked;
        auto c = oracle::equiv_invariants(t, normalize(t), kOracleDepth);
        if (!c.same) o.fail(print(t) + ": " + c.witness);
    };
    for (const auto& text : catalog::stability_terms()) agree(parse_term(text));
    std::mt19937_64 rng(6);
    for (int i = 0; i < kOracleRandom; ++i) agree(gen::term(rng, 1 + i % kMaxTermSize));
    for (const auto& r : catalog::ranked()) {
        Term t = parse_term(r.text);
        auto [rank, degree] = cb_rank(t);
        auto counts = oracle::cb_bruteforce(oracle::truncate(t, kOracleDepth));
        if (!rank.is_finite() || rank.finite_value() != r.rank || counts.size() != rank.finite_value() + 2 ||
            counts[counts.size() - 2] != degree)
            o.fail(std::string("cb mismatch on ") + r.text);
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " terms, " + std::to_string(catalog::ranked().size()) + " ranked";
    return o;
}

Outcome determinism_criterion() {
    Outcome o;
    for (const auto& name : builtin_names()) {
        std::string text = *builtin_example(name);
        std::string first = run_cli("verdict - --format json", text);
        if (first.empty()) o.fail(name + ": no output");
        for (int k = 1; k < kDeterminismRuns; ++k)
            if (run_cli("verdict - --format json", text) != first) o.fail(name + ": output changed");
    }
    return o;
}

}  // namespace

int main() {
    int failed = 0;
    failed += report(1, "exponent-constants", constants_criterion, kConstantsSeconds);
    failed += report(2, "golden-verdicts", golden_criterion, kGoldenSeconds);
    failed += report(3, "stability-certificates", stability_criterion, kStabilitySeconds);
    failed += report(4, "preorder-laws", preorder_criterion);
    failed += report(5, "swindle-suite", swindle_criterion, kSwindleSeconds);
    failed += report(6, "oracle-agreement", oracle_criterion);
    failed += report(7, "determinism", determinism_criterion);
    return failed == 0 ? 0 : 1;
}
