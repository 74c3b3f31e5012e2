#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endscope/germs.hpp"
#include "endscope/termlang.hpp"

namespace endscope {

struct TelescopingResult {
    std::string id;
    bool telescoping = false;
    std::string tcase;    // "i" | "ii" | "iii" when telescoping
    std::string failure;  // "F1" | "F2" | "F3" otherwise
};

// x is telescoping in a surface whose end space carries the table
TelescopingResult telescoping(const GermTable& table, const std::string& x);
std::string failure_case(const GermTable& table, const std::string& x);

enum class Ac { holds, fails, unknown };
const char* to_string(Ac a);

struct ClassEntry {
    std::string id;
    ClassKind kind;
    Color color;
    bool maximal = false;
    bool cantor_type = false;
    std::string stable;  // "stable" | "unstable" | "unknown"
    TelescopingResult telescoping;
};

struct Verdict {
    Ac ac = Ac::unknown;
    std::string basis;  // "Theorem A" | "Theorem B" | "Remark-sufficiency" | "open-question"
    std::vector<ClassEntry> classes;
    std::optional<std::string> failure;
    std::optional<std::string> witness;
    std::vector<std::string> notes;
};

Verdict surface_verdict(const SurfaceDescriptor& s);
Verdict surface_verdict(const GermTable& table);  // needs table.genus
Verdict stone_verdict(const Term& t);
Verdict stone_verdict(const GermTable& table);

struct DagNode {
    std::string name;
    char op;  // '#' literal, '+', '*', '/'
    std::vector<std::string> deps;
    std::uint64_t literal = 0;  // '#' value, or scalar factor for '*' with one dep
    std::string quote;
    std::uint64_t value = 0;
};

// evaluated Steinhaus-exponent DAG in dependency order
std::vector<DagNode> constants();
std::uint64_t evaluate(const DagNode& n, const std::vector<DagNode>& evaluated);
std::string expression(const DagNode& n, const std::vector<DagNode>& evaluated);

}  // namespace endscope
