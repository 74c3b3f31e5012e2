#include "endscope/ordinal.hpp"

#include <stdexcept>

#include "endscope/error.hpp"
#include "endscope/termlang.hpp"

namespace endscope {

Cnf Cnf::nat(std::uint64_t n) {
    Cnf c;
    if (n > 0) c.terms.push_back({Cnf{}, n});
    return c;
}

Cnf Cnf::omega() {
    Cnf c;
    c.terms.push_back({nat(1), 1});
    return c;
}

bool Cnf::is_finite() const { return terms.empty() || (terms.size() == 1 && terms[0].exp.is_zero()); }

bool Cnf::is_successor() const { return !terms.empty() && terms.back().exp.is_zero(); }

std::uint64_t Cnf::finite_value() const { return terms.empty() ? 0 : terms[0].coef; }

const Cnf& Cnf::lead_exponent() const {
    static const Cnf zero_;
    return terms.empty() ? zero_ : terms[0].exp;
}

std::uint64_t Cnf::lead_coefficient() const { return terms.empty() ? 0 : terms[0].coef; }

bool operator==(const Cnf& a, const Cnf& b) { return a.terms == b.terms; }
bool operator==(const Summand& a, const Summand& b) { return a.coef == b.coef && a.exp == b.exp; }

Order cmp(const Cnf& a, const Cnf& b) {
    std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        Order e = cmp(a.terms[i].exp, b.terms[i].exp);
        if (e != Order::Equal) return e;
        if (a.terms[i].coef != b.terms[i].coef)
            return a.terms[i].coef < b.terms[i].coef ? Order::Less : Order::Greater;
    }
    if (a.terms.size() == b.terms.size()) return Order::Equal;
    return a.terms.size() < b.terms.size() ? Order::Less : Order::Greater;
}

Cnf add(const Cnf& a, const Cnf& b) {
    if (b.is_zero()) return a;
    const Cnf& e = b.terms[0].exp;
    Cnf r;
    std::size_t i = 0;
    for (; i < a.terms.size() && cmp(a.terms[i].exp, e) == Order::Greater; ++i) r.terms.push_back(a.terms[i]);
    std::uint64_t carry = 0;
    if (i < a.terms.size() && cmp(a.terms[i].exp, e) == Order::Equal) carry = a.terms[i].coef;
    r.terms.push_back({e, b.terms[0].coef + carry});
    for (std::size_t j = 1; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

Cnf mul_nat(const Cnf& a, std::uint64_t k) {
    if (k == 0 || a.is_zero()) return {};
    Cnf r = a;
    r.terms[0].coef *= k;
    return r;
}

Cnf omega_pow(const Cnf& a) {
    Cnf r;
    r.terms.push_back({a, 1});
    return r;
}

Cnf succ(const Cnf& a) { return add(a, Cnf::nat(1)); }

Cnf pred(const Cnf& a) {
    if (!a.is_successor()) throw std::invalid_argument("pred of non-successor ordinal " + to_string(a));
    Cnf r = a;
    if (--r.terms.back().coef == 0) r.terms.pop_back();
    return r;
}

Cnf fundamental(const Cnf& a, std::uint64_t k) {
    if (!a.is_limit()) throw std::invalid_argument("fundamental sequence of non-limit ordinal " + to_string(a));
    Cnf head = a;
    Summand last = head.terms.back();
    if (--head.terms.back().coef == 0) head.terms.pop_back();
    if (last.exp.is_successor()) return add(head, mul_nat(omega_pow(pred(last.exp)), k));
    return add(head, omega_pow(fundamental(last.exp, k)));
}

bool well_formed(const Cnf& a) {
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].coef == 0 || !well_formed(a.terms[i].exp)) return false;
        if (i > 0 && cmp(a.terms[i - 1].exp, a.terms[i].exp) != Order::Greater) return false;
    }
    return true;
}

std::string to_string(const Cnf& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& s : a.terms) {
        if (!out.empty()) out += "+";
        if (s.exp.is_zero()) {
            out += std::to_string(s.coef);
            continue;
        }
        out += "w";
        if (!(s.exp == Cnf::nat(1))) out += "^(" + to_string(s.exp) + ")";
        if (s.coef > 1) out += "*" + std::to_string(s.coef);
    }
    return out;
}

std::pair<Cnf, std::uint64_t> cb_rank(const Term& t) {
    if (has_cantor(t)) throw NotCountable("cb_rank needs a Cantor-free term: " + print(t));
    if (has_genus(t)) throw NotAllPlanar("cb_rank needs an all-planar term: " + print(t));
    switch (t.kind) {
        case TermKind::Pt:
            return {Cnf{}, 1};
        case TermKind::Ord:
            return {t.rank, t.degree};
        case TermKind::Sum: {
            std::pair<Cnf, std::uint64_t> best{Cnf{}, 0};
            for (const auto& p : t.kids) {
                auto r = cb_rank(p);
                Order o = cmp(r.first, best.first);
                if (best.second == 0 || o == Order::Greater)
                    best = r;
                else if (o == Order::Equal)
                    best.second += r.second;
            }
            return best;
        }
        case TermKind::Mix: {
            Cnf sup;
            for (const auto& c : t.kids) {
                auto r = cb_rank(c);
                if (cmp(r.first, sup) == Order::Greater) sup = r.first;
            }
            return {succ(sup), 1};
        }
        case TermKind::Cantor:
            break;
    }
    throw NotCountable("unreachable");
}

}  // namespace endscope
