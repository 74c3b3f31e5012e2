#include "endscope/report.hpp"

#include <cstdint>
#include <sstream>

#include "endscope/error.hpp"

namespace endscope {

std::string fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

bool Input::is_surface() const {
    if (std::holds_alternative<SurfaceDescriptor>(value)) return true;
    if (const auto* t = std::get_if<GermTable>(&value)) return t->genus.has_value();
    return false;
}

Input read_input(std::string_view text) {
    Input in;
    in.text = std::string(text);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw BadTable(std::string("germ table is not valid JSON: ") + e.what());
        }
        in.value = table_from_json(j);
        return in;
    }
    Parsed p = parse(text);
    if (auto* s = std::get_if<SurfaceDescriptor>(&p)) {
        in.value = surface_check(s->genus, s->ends);
    } else {
        const Term& t = std::get<Term>(p);
        auto v = validate(t);
        if (!v.empty()) throw ValidationError(v.front().rule + " violated at " + v.front().subterm);
        in.value = t;
    }
    return in;
}

namespace {

struct Example {
    const char* name;
    const char* text;
};

// countably many incomparable Cantor levels converging onto one Cantor set; later
// levels are carried by families whose members, from level three on, are all genus
const char* kUnknown = R"({
  "name": "unknown-6-2",
  "origin": "user-supplied",
  "genus": "inf",
  "classes": [
    {"id": "p", "kind": "countable_discrete", "color": "planar"},
    {"id": "L11", "kind": "cantor", "color": "planar"},
    {"id": "L21", "kind": "cantor", "color": "genus"},
    {"id": "L31", "kind": "cantor", "color": "planar"},
    {"id": "Linf", "kind": "cantor", "color": "genus"}
  ],
  "families": [
    {"id": "L0", "kind": "cantor", "color": "genus", "members": "countably-infinite", "incomparable": true},
    {"id": "L1", "kind": "cantor", "color": "genus", "members": "countably-infinite", "incomparable": true},
    {"id": "L2", "kind": "cantor", "color": "genus", "members": "countably-infinite", "incomparable": true},
    {"id": "L3", "kind": "cantor", "color": "genus", "members": "countably-infinite", "incomparable": true}
  ],
  "leq": [],
  "acc": [
    ["p", "L21"], ["p", "L31"],
    ["L11", "L11"], ["L21", "L21"], ["L31", "L31"], ["Linf", "Linf"],
    ["L11", "L0"], ["L11", "L2"], ["L11", "L3"],
    ["L21", "L0"], ["L21", "L1"], ["L21", "L3"],
    ["L31", "L1"], ["L31", "L2"], ["L31", "L3"],
    ["L1", "L0"], ["L2", "L0"], ["L1", "L1"], ["L1", "L2"], ["L1", "L3"],
    ["L2", "L1"], ["L2", "L3"], ["L3", "L1"], ["L3", "L2"], ["L3", "L3"],
    ["L0", "Linf"], ["L1", "Linf"], ["L2", "Linf"], ["L3", "Linf"],
    ["p", "Linf"], ["L11", "Linf"], ["L21", "Linf"], ["L31", "Linf"]
  ]
}
)";

const char* kTelescopeFail = R"({
  "name": "telescopefail-iii",
  "origin": "user-supplied",
  "genus": 0,
  "classes": [
    {"id": "x", "kind": "finite", "count": 1, "color": "planar"}
  ],
  "families": [
    {"id": "z", "kind": "cantor", "color": "planar", "members": "countably-infinite", "incomparable": true}
  ],
  "leq": [],
  "acc": [["z", "z"], ["z", "x"]]
}
)";

const Example kExamples[] = {
    {"mona-lisa", "surface { genus: inf, ends: mix(cantor^g(), cantor(); g) }\n"},
    {"loch-ness", "surface { genus: inf, ends: pt^g }\n"},
    {"flute", "surface { genus: 0, ends: ord(w) }\n"},
    {"blooming-cantor", "surface { genus: inf, ends: cantor^g() }\n"},
    {"unknown-6-2", kUnknown},
    {"telescopefail-iii", kTelescopeFail},
};

const char* kind_name(ClassKind k) { return to_string(k); }

}  // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& e : kExamples) out.emplace_back(e.name);
    return out;
}

std::optional<std::string> builtin_example(std::string_view name) {
    for (const auto& e : kExamples)
        if (name == e.name) return std::string(e.text);
    return std::nullopt;
}

GermTable table_of(const Input& in) {
    if (const auto* t = std::get_if<Term>(&in.value)) return derive_table(*t);
    if (const auto* s = std::get_if<SurfaceDescriptor>(&in.value)) {
        GermTable table = derive_table(s->ends);
        table.genus = s->genus;
        return table;
    }
    return std::get<GermTable>(in.value);
}

Verdict verdict_of(const Input& in) {
    if (const auto* t = std::get_if<Term>(&in.value)) return stone_verdict(*t);
    if (const auto* s = std::get_if<SurfaceDescriptor>(&in.value)) return surface_verdict(*s);
    const auto& table = std::get<GermTable>(in.value);
    return table.genus ? surface_verdict(table) : stone_verdict(table);
}

nlohmann::ordered_json verdict_report(const Input& in, const Verdict& v) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tool"] = "endscope";
    j["version"] = kVersion;
    j["input_hash"] = fnv1a64(in.text);
    if (const auto* t = std::get_if<Term>(&in.value)) {
        j["input"] = print(*t);
        j["normalized"] = print(normalize(*t));
        j["space"] = "stone";
    } else if (const auto* s = std::get_if<SurfaceDescriptor>(&in.value)) {
        j["input"] = print(*s);
        j["normalized"] = print(SurfaceDescriptor{s->genus, normalize(s->ends)});
        j["space"] = "surface";
    } else {
        const auto& table = std::get<GermTable>(in.value);
        j["input"] = table.name.empty() ? "germ-table" : table.name;
        j["normalized"] = nullptr;
        j["space"] = table.genus ? "surface" : "stone";
    }
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : v.classes) {
        nlohmann::ordered_json row;
        row["id"] = c.id;
        row["kind"] = kind_name(c.kind);
        row["color"] = to_string(c.color);
        row["maximal"] = c.maximal;
        row["cantor_type"] = c.cantor_type;
        row["stable"] = c.stable;
        row["telescoping"] = c.telescoping.telescoping;
        row["case"] = c.telescoping.telescoping ? c.telescoping.tcase : c.telescoping.failure;
        classes.push_back(row);
    }
    j["classes"] = classes;
    nlohmann::ordered_json verdict;
    verdict["ac"] = to_string(v.ac);
    verdict["basis"] = v.basis;
    verdict["failure"] = v.failure ? nlohmann::ordered_json(*v.failure) : nlohmann::ordered_json(nullptr);
    verdict["witness"] = v.witness ? nlohmann::ordered_json(*v.witness) : nlohmann::ordered_json(nullptr);
    j["verdict"] = verdict;
    j["notes"] = v.notes;
    return j;
}

std::string verdict_text(const Input& in, const Verdict& v) {
    std::ostringstream os;
    auto j = verdict_report(in, v);
    os << "input      " << j["input"].get<std::string>() << "\n";
    if (!j["normalized"].is_null()) os << "normalized " << j["normalized"].get<std::string>() << "\n";
    os << "classes\n";
    for (const auto& c : v.classes) {
        os << "  " << c.id << "  " << to_string(c.kind) << " " << to_string(c.color) << (c.maximal ? " maximal" : "")
           << "  " << c.stable << "  ";
        if (c.telescoping.telescoping)
            os << "telescoping (case " << c.telescoping.tcase << ")";
        else
            os << "not telescoping (" << c.telescoping.failure << ")";
        os << "\n";
    }
    os << "verdict    " << to_string(v.ac) << " [" << v.basis << "]\n";
    if (v.failure) os << "failure    " << *v.failure << "\n";
    if (v.witness) os << "witness    " << *v.witness << "\n";
    for (const auto& n : v.notes) os << "note       " << n << "\n";
    return os.str();
}

}  // namespace endscope
