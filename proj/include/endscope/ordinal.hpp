#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace endscope {

struct Summand;

// Ordinal below epsilon_0 in Cantor normal form: sum of w^exp * coef,
// exponents strictly decreasing. Empty list is 0.
struct Cnf {
    std::vector<Summand> terms;

    static Cnf zero() { return {}; }
    static Cnf nat(std::uint64_t n);
    static Cnf omega();

    bool is_zero() const { return terms.empty(); }
    bool is_finite() const;
    bool is_successor() const;
    bool is_limit() const { return !is_zero() && !is_successor(); }
    // value when finite; caller checks is_finite()
    std::uint64_t finite_value() const;
    const Cnf& lead_exponent() const;
    std::uint64_t lead_coefficient() const;
};

struct Summand {
    Cnf exp;
    std::uint64_t coef = 1;
};

bool operator==(const Cnf& a, const Cnf& b);
bool operator==(const Summand& a, const Summand& b);

enum class Order { Less, Equal, Greater };

Order cmp(const Cnf& a, const Cnf& b);
inline bool operator<(const Cnf& a, const Cnf& b) { return cmp(a, b) == Order::Less; }
inline bool operator<=(const Cnf& a, const Cnf& b) { return cmp(a, b) != Order::Greater; }

Cnf add(const Cnf& a, const Cnf& b);
Cnf mul_nat(const Cnf& a, std::uint64_t k);
Cnf omega_pow(const Cnf& a);
Cnf succ(const Cnf& a);
// predecessor of a successor ordinal
Cnf pred(const Cnf& a);
// k-th element of the standard fundamental sequence of a limit ordinal
Cnf fundamental(const Cnf& a, std::uint64_t k);
bool well_formed(const Cnf& a);

// text form: "w^(2)*3+w+1"; exponents always parenthesized except 1
std::string to_string(const Cnf& a);
Cnf parse_cnf(std::string_view text);

struct Term;

// (rank, degree): t is homeomorphic to the compact countable space whose
// rank-th derived set has exactly degree points
std::pair<Cnf, std::uint64_t> cb_rank(const Term& t);

}  // namespace endscope
