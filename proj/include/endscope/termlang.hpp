#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "endscope/error.hpp"
#include "endscope/ordinal.hpp"

namespace endscope {

enum class Color { planar, genus };

const char* to_string(Color c);

enum class TermKind { Pt, Ord, Mix, Cantor, Sum };

struct Term {
    TermKind kind = TermKind::Pt;
    Color color = Color::planar;  // Pt color, Mix limit color, Cantor color
    Cnf rank;                     // Ord only
    std::uint64_t degree = 1;     // Ord only
    std::vector<Term> kids;       // Mix/Cantor components, Sum parts

    static Term pt(Color c = Color::planar);
    static Term ord(Cnf rank, std::uint64_t degree);
    static Term mix(std::vector<Term> comps, Color limit);
    static Term cantor(std::vector<Term> comps, Color c);
    static Term sum(std::vector<Term> parts);

    friend bool operator==(const Term&, const Term&) = default;
};

std::size_t size(const Term& t);
bool has_genus(const Term& t);
bool has_cantor(const Term& t);
// all-planar and Cantor-free
bool countable_planar(const Term& t);

std::string print(const Term& t);
// total order used for canonical component sorting: (size, printed form)
bool canonical_less(const Term& a, const Term& b);

struct Genus {
    bool infinite = false;
    std::uint64_t finite = 0;
    friend bool operator==(const Genus&, const Genus&) = default;
};

std::string to_string(const Genus& g);

struct SurfaceDescriptor {
    Genus genus;
    Term ends;
    friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

std::string print(const SurfaceDescriptor& s);

using Parsed = std::variant<Term, SurfaceDescriptor>;

Parsed parse(std::string_view text);
Term parse_term(std::string_view text);

struct Violation {
    std::string subterm;
    std::string rule;
};

std::vector<Violation> validate(const Term& t);

Term normalize(const Term& t);
SurfaceDescriptor surface_check(Genus genus, const Term& ends);

}  // namespace endscope
