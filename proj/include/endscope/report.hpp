#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "endscope/germs.hpp"
#include "endscope/termlang.hpp"
#include "endscope/verdict.hpp"

namespace endscope {

inline constexpr const char* kVersion = "0.1.0";

std::string fnv1a64(std::string_view data);

// one input document: a term, a surface descriptor, or a user germ table (JSON)
struct Input {
    std::variant<Term, SurfaceDescriptor, GermTable> value;
    std::string text;
    bool is_surface() const;
};

Input read_input(std::string_view text);

std::vector<std::string> builtin_names();
std::optional<std::string> builtin_example(std::string_view name);

GermTable table_of(const Input& in);
Verdict verdict_of(const Input& in);

nlohmann::ordered_json verdict_report(const Input& in, const Verdict& v);
std::string verdict_text(const Input& in, const Verdict& v);

}  // namespace endscope
