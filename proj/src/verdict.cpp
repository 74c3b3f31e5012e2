#include "endscope/verdict.hpp"

#include <algorithm>
#include <map>

#include "endscope/error.hpp"
#include "endscope/stability.hpp"

namespace endscope {

const char* to_string(Ac a) {
    switch (a) {
        case Ac::holds:
            return "holds";
        case Ac::fails:
            return "fails";
        case Ac::unknown:
            return "unknown";
    }
    return "unknown";
}

namespace {

bool countable_kind(ClassKind k) { return k == ClassKind::finite || k == ClassKind::countable_discrete; }

bool accumulated(const GermTable& table, const std::string& x) {
    for (const auto& z : class_ids(table))
        if (accumulates(table, z, x)) return true;
    return false;
}

bool unstable(const GermTable& table, const std::string& x) {
    return stable_nbhd(table, x, 2).status == Stability::unstable;
}

// the failing clause, or empty when x is telescoping
std::string failure_of(const GermTable& table, const ClassView& v) {
    if (v.color == Color::genus && isolated_in_Eg(table, v.id)) return "F1";
    Predecessors p = predecessors(table, v.id);
    if (p.successor)
        for (const auto& m : p.preds)
            if (!cantor_type(table, m)) return "F2";
    return "F3";
}

std::string witness_for(const std::string& failure) {
    if (failure == "F1") return "curve-separating-genus: nondisplaceable curves cutting off the isolated genus end";
    if (failure == "F2") return "puncture-count curve: curves enclosing a growing number of the countable predecessor ends";
    return "pair-of-pants chain: nondisplaceable pairs of pants P_n separating fresh end types";
}

std::vector<std::string> reported_ids(const GermTable& table) { return class_ids(table); }

ClassEntry entry(const GermTable& table, const std::string& id, const std::vector<std::string>& maximal) {
    ClassView v = lookup(table, id);
    ClassEntry e;
    e.id = v.id;
    e.kind = v.kind;
    e.color = v.color;
    e.maximal = std::count(maximal.begin(), maximal.end(), v.id) > 0;
    e.cantor_type = v.kind == ClassKind::cantor;
    e.stable = to_string(stable_nbhd(table, v.id, 2).status);
    e.telescoping = telescoping(table, v.id);
    return e;
}

std::vector<ClassEntry> entries(const GermTable& table) {
    auto maximal = maximal_classes(table);
    std::vector<ClassEntry> out;
    for (const auto& id : reported_ids(table)) out.push_back(entry(table, id, maximal));
    return out;
}

const char* kPlanarReading =
    "case iii reading: a successor end whose predecessors are all of Cantor type is telescoping unless it is isolated among genus ends";
const char* kEquivalenceNote = "equivalence modulo engine invariants";

}  // namespace

TelescopingResult telescoping(const GermTable& table, const std::string& x) {
    ClassView v = lookup(table, x);
    TelescopingResult r;
    r.id = v.id;
    if (v.color == Color::planar && countable_kind(v.kind) && !accumulated(table, v.id)) {
        r.telescoping = true;
        r.tcase = "i";
        return r;
    }
    if (v.kind == ClassKind::cantor && !unstable(table, v.id)) {
        r.telescoping = true;
        r.tcase = "ii";
        return r;
    }
    if (v.kind != ClassKind::cantor) {
        Predecessors p = predecessors(table, v.id);
        bool all_cantor = p.successor && std::all_of(p.preds.begin(), p.preds.end(), [&](const std::string& m) {
                              return cantor_type(table, m);
                          });
        bool isolated_genus = v.color == Color::genus && isolated_in_Eg(table, v.id);
        if (all_cantor && !isolated_genus) {
            r.telescoping = true;
            r.tcase = "iii";
            return r;
        }
    }
    r.failure = failure_of(table, v);
    return r;
}

std::string failure_case(const GermTable& table, const std::string& x) {
    TelescopingResult r = telescoping(table, x);
    if (r.telescoping) throw IsTelescoping("class " + r.id + " is telescoping (case " + r.tcase + ")");
    return r.failure;
}

Verdict surface_verdict(const GermTable& table) {
    Verdict v;
    v.classes = entries(table);
    v.notes.push_back(kPlanarReading);
    v.notes.push_back(kEquivalenceNote);
    bool all_stable = std::all_of(v.classes.begin(), v.classes.end(),
                                  [](const ClassEntry& e) { return e.stable == "stable"; });
    if (all_stable) {
        v.basis = "Theorem A";
        auto bad = std::find_if(v.classes.begin(), v.classes.end(),
                                [](const ClassEntry& e) { return !e.telescoping.telescoping; });
        if (bad == v.classes.end()) {
            v.ac = Ac::holds;
        } else {
            v.ac = Ac::fails;
            v.failure = bad->telescoping.failure;
            v.witness = witness_for(*v.failure) + " (end " + bad->id + ")";
        }
        return v;
    }
    v.notes.push_back("stability not established for every class; sufficiency rules applied");
    v.basis = "Remark-sufficiency";
    for (const auto& e : v.classes) {
        if (!countable_kind(e.kind)) continue;
        std::string failure;
        if (e.color == Color::genus && isolated_in_Eg(table, e.id)) {
            failure = "F1";
        } else {
            Predecessors p = predecessors(table, e.id);
            for (const auto& m : p.preds)
                if (countable_kind(lookup(table, m).kind)) failure = "F2";
        }
        if (failure.empty())
            for (const auto& f : table.families)
                if (f.incomparable && accumulates(table, f.id, e.id)) failure = "F3";
        if (!failure.empty()) {
            v.ac = Ac::fails;
            v.failure = failure;
            v.witness = witness_for(failure) + " (end " + e.id + ")";
            return v;
        }
    }
    v.ac = Ac::unknown;
    v.basis = "open-question";
    return v;
}

Verdict surface_verdict(const SurfaceDescriptor& s) {
    auto violations = validate(s.ends);
    if (!violations.empty())
        throw ValidationError(violations.front().rule + " violated at " + violations.front().subterm);
    surface_check(s.genus, s.ends);
    GermTable table = derive_table(s.ends);
    table.genus = s.genus;
    return surface_verdict(table);
}

Verdict stone_verdict(const GermTable& table) {
    Verdict v;
    v.classes = entries(table);
    v.notes.push_back(kEquivalenceNote);
    bool all_stable = std::all_of(v.classes.begin(), v.classes.end(),
                                  [](const ClassEntry& e) { return e.stable == "stable"; });
    if (all_stable) {
        v.ac = Ac::holds;
        v.basis = "Theorem B";
    } else {
        v.ac = Ac::unknown;
        v.basis = "open-question";
        v.notes.push_back("some class lacks a stable neighbourhood; no failure theorem exists for Stone spaces");
    }
    return v;
}

Verdict stone_verdict(const Term& t) { return stone_verdict(derive_table(t)); }

// ---- exponent DAG ----

std::vector<DagNode> constants() {
    std::vector<DagNode> dag = {
        {"W", '#', {}, 1, "symmetric identity neighbourhood", 0},
        {"W2", '*', {"W"}, 2, "products of two elements of W", 0},
        {"diagonal2", '+', {"W2", "W2", "W2", "W2"}, 0, "G(Z) in W^8", 0},
        {"conjugated-finite-part", '+', {"W2", "diagonal2", "W2"}, 0, "conjugating by W^2 on both sides", 0},
        {"F-product", '+', {"conjugated-finite-part", "diagonal2"}, 0, "finite part times diagonal", 0},
        {"pigeonhole", '+', {"W2", "F-product", "W2"}, 0, "supported on a brick is in W^24", 0},
        {"globalpointed", '*', {"pigeonhole"}, 4, "G(Omega) in W^96", 0},
        {"surface-brick-half", '*', {"conjugated-finite-part"}, 3, "one of the two alternating halves", 0},
        {"surface-brick", '*', {"surface-brick-half"}, 2, "supported on a brick is in W^72", 0},
        {"globalpointedS", '*', {"surface-brick"}, 4, "G(Sigma_U) in W^288", 0},
        {"fragmentation-triple", '*', {"globalpointedS"}, 3, "864 = 3 x 288", 0},
        {"step1", '+', {"fragmentation-triple", "fragmentation-triple"}, 0, "first fragmentation step", 0},
        {"step2", '+', {"fragmentation-triple", "globalpointedS"}, 0, "second fragmentation step", 0},
        {"step3", '+', {"fragmentation-triple", "fragmentation-triple", "globalpointedS"}, 0,
         "third fragmentation step", 0},
        {"final-surface", '+', {"step1", "step2", "step3"}, 0, "17 x 288 = 4896", 0},
        {"multiple-check", '/', {"final-surface", "globalpointedS"}, 0, "final exponent in units of 288", 0},
    };
    for (std::size_t i = 0; i < dag.size(); ++i)
        dag[i].value = evaluate(dag[i], std::vector<DagNode>(dag.begin(), dag.begin() + i));
    return dag;
}

namespace {

std::uint64_t value_of(const std::string& name, const std::vector<DagNode>& evaluated) {
    for (const auto& n : evaluated)
        if (n.name == name) return n.value;
    throw std::logic_error("exponent DAG node " + name + " used before it is defined");
}

}  // namespace

std::uint64_t evaluate(const DagNode& n, const std::vector<DagNode>& evaluated) {
    switch (n.op) {
        case '#':
            return n.literal;
        case '+': {
            std::uint64_t s = 0;
            for (const auto& d : n.deps) s += value_of(d, evaluated);
            return s;
        }
        case '*': {
            std::uint64_t p = n.literal;
            for (const auto& d : n.deps) p *= value_of(d, evaluated);
            return p;
        }
        case '/': {
            std::uint64_t a = value_of(n.deps.at(0), evaluated), b = value_of(n.deps.at(1), evaluated);
            if (b == 0 || a % b != 0) throw std::logic_error("exponent " + n.name + " is not an exact multiple");
            return a / b;
        }
    }
    throw std::logic_error("unknown operator in exponent DAG");
}

std::string expression(const DagNode& n, const std::vector<DagNode>& evaluated) {
    std::string out;
    switch (n.op) {
        case '#':
            return std::to_string(n.literal);
        case '+':
            for (const auto& d : n.deps) out += (out.empty() ? "" : " + ") + std::to_string(value_of(d, evaluated));
            return out;
        case '*':
            return std::to_string(n.literal) + " x " + std::to_string(value_of(n.deps.at(0), evaluated));
        case '/':
            return std::to_string(value_of(n.deps.at(0), evaluated)) + " / " +
                   std::to_string(value_of(n.deps.at(1), evaluated));
    }
    return out;
}

}  // namespace endscope
