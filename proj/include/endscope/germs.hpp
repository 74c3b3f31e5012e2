#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "endscope/termlang.hpp"

namespace endscope {

enum class ClassKind { finite, countable_discrete, cantor };

const char* to_string(ClassKind k);

struct GermClass {
    std::string id;
    ClassKind kind = ClassKind::finite;
    std::uint64_t count = 1;  // finite kind only
    Color color = Color::planar;
    std::optional<Cnf> rank;  // rank(beta) marker for countable planar germs
    std::optional<Term> germ; // local germ, derived tables only
};

// countably many pairwise distinct classes sharing one row (user tables)
struct ClassFamily {
    std::string id;
    ClassKind kind = ClassKind::cantor;
    Color color = Color::planar;
    bool incomparable = true;
};

enum class Origin { derived, user };

struct GermTable {
    std::vector<GermClass> classes;
    std::vector<ClassFamily> families;
    std::set<std::pair<std::string, std::string>> leq;  // (y, x): y below x
    std::set<std::pair<std::string, std::string>> acc;  // (z, x): z accumulates onto x
    Origin origin = Origin::derived;
    // rank(beta) exists for every beta <= rank_top; only some are stored as rows
    std::optional<Cnf> rank_top;
    std::vector<std::pair<std::string, Cnf>> rho;  // highest rank below each non-rank class
    std::optional<Genus> genus;                     // surface context carried by user tables
    std::string name;
};

// resolved view of an id, including rank(beta) ids that have no stored row
struct ClassView {
    std::string id;
    ClassKind kind;
    std::uint64_t count;
    Color color;
    std::optional<Cnf> rank;
    bool family = false;
    bool incomparable = false;
};

GermTable derive_table(const Term& t);

// the basepoints (roots) of a and b carry equivalent germs
bool root_equivalent(const Term& a, const Term& b);

ClassView lookup(const GermTable& table, const std::string& id);
std::vector<std::string> class_ids(const GermTable& table);  // rows then families
std::string rank_id(const Cnf& beta);

bool dominates(const GermTable& table, const std::string& y, const std::string& x);
bool accumulates(const GermTable& table, const std::string& z, const std::string& x);
bool equivalent(const GermTable& table, const std::string& a, const std::string& b);
std::vector<std::string> maximal_classes(const GermTable& table);
bool cantor_type(const GermTable& table, const std::string& x);
bool isolated_in_Eg(const GermTable& table, const std::string& x);

struct Predecessors {
    bool successor = false;
    std::vector<std::string> preds;
};

Predecessors predecessors(const GermTable& table, const std::string& x);

// reflexive/transitive closure of leq together with acc; throws BadTable on closedness failure
void close_and_check(GermTable& table);

nlohmann::ordered_json to_json(const GermTable& table);
GermTable table_from_json(const nlohmann::json& j);

}  // namespace endscope
