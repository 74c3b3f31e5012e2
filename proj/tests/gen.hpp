#pragma once

// Hand-rolled generators shared by the property suites.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "endscope/ordinal.hpp"
#include "endscope/termlang.hpp"

namespace endscope {
inline void PrintTo(const Term& t, std::ostream* os) { *os << print(t); }
}  // namespace endscope

namespace gen {

using endscope::Cnf;
using endscope::Color;
using endscope::Summand;
using endscope::Term;

inline Cnf small_cnf(std::mt19937_64& rng, int nesting) {
    std::uniform_int_distribution<int> terms(0, nesting > 0 ? 3 : 1);
    std::uniform_int_distribution<std::uint64_t> coef(1, 4);
    int n = terms(rng);
    if (nesting == 0) return n == 0 ? Cnf{} : Cnf::nat(coef(rng));
    std::vector<Summand> parts;
    for (int i = 0; i < n; ++i) parts.push_back({small_cnf(rng, nesting - 1), coef(rng)});
    // sort exponents descending and merge equal ones into proper normal form
    std::sort(parts.begin(), parts.end(), [](const Summand& a, const Summand& b) { return b.exp < a.exp; });
    std::vector<Summand> merged;
    for (auto& p : parts) {
        if (!merged.empty() && merged.back().exp == p.exp)
            merged.back().coef += p.coef;
        else
            merged.push_back(p);
    }
    return Cnf{merged};
}

// a valid term of roughly the given size; planar nodes never contain genus
inline Term term(std::mt19937_64& rng, int size, bool allow_genus = true) {
    std::uniform_int_distribution<int> pick(0, 9);
    auto color = [&](bool allow) {
        return allow && std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? Color::genus : Color::planar;
    };
    if (size <= 1) {
        int k = pick(rng);
        if (k < 6) return Term::pt(color(allow_genus));
        if (k < 8) return Term::cantor({}, color(allow_genus));
        std::uniform_int_distribution<int> r(0, 3);
        Cnf rank = r(rng) == 3 ? Cnf::omega() : Cnf::nat(std::uniform_int_distribution<std::uint64_t>(1, 3)(rng));
        return Term::ord(rank, std::uniform_int_distribution<std::uint64_t>(1, 2)(rng));
    }
    int k = pick(rng);
    int rest = size - 1;
    int arity = std::uniform_int_distribution<int>(1, std::min(3, rest))(rng);
    std::vector<Term> kids;
    if (k < 3) {  // sum
        arity = std::max(arity, 2);
        for (int i = 0; i < arity; ++i) kids.push_back(term(rng, std::max(1, rest / arity), allow_genus));
        return Term::sum(std::move(kids));
    }
    Color c = color(allow_genus);
    for (int i = 0; i < arity; ++i) kids.push_back(term(rng, std::max(1, rest / arity), c == Color::genus));
    if (k < 7) return Term::mix(std::move(kids), c);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) kids.clear();
    return Term::cantor(std::move(kids), c);
}

inline Term countable_planar(std::mt19937_64& rng, int size) {
    if (size <= 1) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            return Term::ord(Cnf::nat(std::uniform_int_distribution<std::uint64_t>(1, 2)(rng)), 1);
        return Term::pt();
    }
    int rest = size - 1;
    int arity = std::uniform_int_distribution<int>(1, std::min(3, rest))(rng);
    std::vector<Term> kids;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        arity = std::max(arity, 2);
        for (int i = 0; i < arity; ++i) kids.push_back(countable_planar(rng, std::max(1, rest / arity)));
        return Term::sum(std::move(kids));
    }
    for (int i = 0; i < arity; ++i) kids.push_back(countable_planar(rng, std::max(1, rest / arity)));
    return Term::mix(std::move(kids), Color::planar);
}

}  // namespace gen
