#include "endscope/termlang.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace endscope {

const char* to_string(Color c) { return c == Color::genus ? "genus" : "planar"; }

Term Term::pt(Color c) {
    Term t;
    t.kind = TermKind::Pt;
    t.color = c;
    return t;
}

Term Term::ord(Cnf rank, std::uint64_t degree) {
    Term t;
    t.kind = TermKind::Ord;
    t.rank = std::move(rank);
    t.degree = degree;
    return t;
}

Term Term::mix(std::vector<Term> comps, Color limit) {
    Term t;
    t.kind = TermKind::Mix;
    t.color = limit;
    t.kids = std::move(comps);
    return t;
}

Term Term::cantor(std::vector<Term> comps, Color c) {
    Term t;
    t.kind = TermKind::Cantor;
    t.color = c;
    t.kids = std::move(comps);
    return t;
}

Term Term::sum(std::vector<Term> parts) {
    Term t;
    t.kind = TermKind::Sum;
    t.kids = std::move(parts);
    return t;
}

std::size_t size(const Term& t) {
    std::size_t n = 1;
    for (const auto& k : t.kids) n += size(k);
    return n;
}

bool has_genus(const Term& t) {
    if (t.kind == TermKind::Ord || t.kind == TermKind::Sum) {
        return std::any_of(t.kids.begin(), t.kids.end(), [](const Term& k) { return has_genus(k); });
    }
    if (t.color == Color::genus) return true;
    return std::any_of(t.kids.begin(), t.kids.end(), [](const Term& k) { return has_genus(k); });
}

bool has_cantor(const Term& t) {
    if (t.kind == TermKind::Cantor) return true;
    return std::any_of(t.kids.begin(), t.kids.end(), [](const Term& k) { return has_cantor(k); });
}

bool countable_planar(const Term& t) { return !has_cantor(t) && !has_genus(t); }

// ---- printing ----

namespace {

void print_list(const std::vector<Term>& kids, std::string& out);

void print_into(const Term& t, std::string& out) {
    switch (t.kind) {
        case TermKind::Pt:
            out += t.color == Color::genus ? "pt^g" : "pt";
            return;
        case TermKind::Ord: {
            Cnf lit;
            lit.terms.push_back({t.rank, t.degree});
            out += "ord(" + to_string(lit) + ")";
            return;
        }
        case TermKind::Mix:
            out += "mix(";
            print_list(t.kids, out);
            out += t.color == Color::genus ? "; g)" : "; planar)";
            return;
        case TermKind::Cantor:
            out += t.color == Color::genus ? "cantor^g(" : "cantor(";
            print_list(t.kids, out);
            out += ")";
            return;
        case TermKind::Sum:
            out += "sum(";
            print_list(t.kids, out);
            out += ")";
            return;
    }
}

void print_list(const std::vector<Term>& kids, std::string& out) {
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ", ";
        print_into(kids[i], out);
    }
}

}  // namespace

std::string print(const Term& t) {
    std::string out;
    print_into(t, out);
    return out;
}

bool canonical_less(const Term& a, const Term& b) {
    std::size_t sa = size(a), sb = size(b);
    if (sa != sb) return sa < sb;
    return print(a) < print(b);
}

std::string to_string(const Genus& g) { return g.infinite ? "inf" : std::to_string(g.finite); }

std::string print(const SurfaceDescriptor& s) {
    return "surface { genus: " + to_string(s.genus) + ", ends: " + print(s.ends) + " }";
}

// ---- lexing ----

namespace {

enum class Tok { Ident, Nat, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::uint64_t value = 0;
    int line = 1;
    int col = 1;
};

const char* const kKeywords[] = {"pt",     "ord",  "mix",    "cantor", "sum", "surface",
                                 "genus",  "ends", "inf",    "planar", "g",   "w"};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        Token t{Tok::Punct, "", 0, line, col};
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.text = std::string(src.substr(i, j - i));
            bool known = std::any_of(std::begin(kKeywords), std::end(kKeywords),
                                     [&](const char* k) { return t.text == k; });
            if (!known) throw LexError("unknown word '" + t.text + "'", line, col);
            t.kind = Tok::Ident;
            advance(j - i);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            std::uint64_t v = 0;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                std::uint64_t d = static_cast<std::uint64_t>(src[j] - '0');
                if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                    throw LexError("number too large", line, col);
                v = v * 10 + d;
                ++j;
            }
            t.kind = Tok::Nat;
            t.text = std::string(src.substr(i, j - i));
            t.value = v;
            advance(j - i);
        } else if (std::string_view("(){},;:^*+").find(static_cast<char>(c)) != std::string_view::npos) {
            t.text = std::string(1, static_cast<char>(c));
            advance(1);
        } else {
            throw LexError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, "<end of input>", 0, line, col});
    return out;
}

// ---- parsing ----

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Parsed input() {
        Parsed p = peek_is("surface") ? Parsed(surface()) : Parsed(term());
        expect_end();
        return p;
    }

    Term single_term() {
        Term t = term();
        expect_end();
        return t;
    }

    Cnf single_cnf() {
        Cnf c = cnf();
        expect_end();
        return c;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    bool peek_is(std::string_view s) const { return cur().kind != Tok::End && cur().text == s; }

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + ", found '" + cur().text + "'", cur().line, cur().col);
    }

    void expect(std::string_view s) {
        if (!peek_is(s)) fail("expected '" + std::string(s) + "'");
        ++pos_;
    }

    bool accept(std::string_view s) {
        if (!peek_is(s)) return false;
        ++pos_;
        return true;
    }

    void expect_end() {
        if (cur().kind != Tok::End) fail("expected end of input");
    }

    std::uint64_t nat() {
        if (cur().kind != Tok::Nat) fail("expected a natural number");
        return toks_[pos_++].value;
    }

    SurfaceDescriptor surface() {
        expect("surface");
        expect("{");
        expect("genus");
        expect(":");
        Genus g;
        if (accept("inf"))
            g.infinite = true;
        else
            g.finite = nat();
        expect(",");
        expect("ends");
        expect(":");
        Term ends = term();
        expect("}");
        return {g, std::move(ends)};
    }

    Color gflag() {
        if (!accept("^")) return Color::planar;
        expect("g");
        return Color::genus;
    }

    std::vector<Term> termlist() {
        std::vector<Term> out;
        out.push_back(term());
        while (accept(",")) out.push_back(term());
        return out;
    }

    Term term() {
        if (accept("pt")) return Term::pt(gflag());
        if (peek_is("ord")) {
            int line = cur().line, col = cur().col;
            ++pos_;
            expect("(");
            Cnf lit = cnf();
            expect(")");
            if (lit.is_zero()) throw SyntaxError("ord needs a positive ordinal", line, col);
            return Term::ord(lit.lead_exponent(), lit.lead_coefficient());
        }
        if (accept("mix")) {
            expect("(");
            auto comps = termlist();
            expect(";");
            Color c = Color::planar;
            if (accept("g"))
                c = Color::genus;
            else if (!accept("planar"))
                fail("expected 'planar' or 'g'");
            expect(")");
            return Term::mix(std::move(comps), c);
        }
        if (accept("cantor")) {
            Color c = gflag();
            expect("(");
            std::vector<Term> comps;
            if (!peek_is(")")) comps = termlist();
            expect(")");
            return Term::cantor(std::move(comps), c);
        }
        if (accept("sum")) {
            int line = cur().line, col = cur().col;
            expect("(");
            auto parts = termlist();
            expect(")");
            if (parts.size() < 2) throw SyntaxError("sum needs at least two parts", line, col);
            return Term::sum(std::move(parts));
        }
        fail("expected a term");
    }

    Cnf cnf() {
        Cnf acc = cterm();
        while (accept("+")) acc = add(acc, cterm());
        return acc;
    }

    Cnf cterm() {
        if (cur().kind == Tok::Nat) return Cnf::nat(nat());
        expect("w");
        Cnf e = Cnf::nat(1);
        if (accept("^")) {
            expect("(");
            e = cnf();
            expect(")");
        }
        std::uint64_t k = 1;
        if (accept("*")) {
            int line = cur().line, col = cur().col;
            k = nat();
            if (k == 0) throw SyntaxError("coefficient must be positive", line, col);
        }
        return mul_nat(omega_pow(e), k);
    }
};

}  // namespace

Parsed parse(std::string_view text) { return Parser(text).input(); }

Term parse_term(std::string_view text) { return Parser(text).single_term(); }

Cnf parse_cnf(std::string_view text) { return Parser(text).single_cnf(); }

// ---- validation ----

namespace {

void validate_into(const Term& t, std::vector<Violation>& out) {
    switch (t.kind) {
        case TermKind::Pt:
            break;
        case TermKind::Ord:
            if (t.degree < 1) out.push_back({print(t), "ord degree"});
            if (!well_formed(t.rank)) out.push_back({print(t), "cnf well-formed"});
            break;
        case TermKind::Sum:
            if (t.kids.size() < 2) out.push_back({print(t), "sum arity"});
            break;
        case TermKind::Mix:
            if (t.kids.empty()) out.push_back({print(t), "mix components"});
            [[fallthrough]];
        case TermKind::Cantor:
            if (t.color == Color::planar &&
                std::any_of(t.kids.begin(), t.kids.end(), [](const Term& k) { return has_genus(k); }))
                out.push_back({print(t), "genus closedness"});
            break;
    }
    for (const auto& k : t.kids) validate_into(k, out);
}

}  // namespace

std::vector<Violation> validate(const Term& t) {
    std::vector<Violation> out;
    validate_into(t, out);
    return out;
}

SurfaceDescriptor surface_check(Genus genus, const Term& ends) {
    auto v = validate(ends);
    if (!v.empty()) throw ValidationError(v.front().rule + " violated at " + v.front().subterm);
    bool g = has_genus(ends);
    if (genus.infinite && !g) throw GenusMismatch("infinite genus but every end is planar");
    if (!genus.infinite && g) throw GenusMismatch("finite genus " + std::to_string(genus.finite) +
                                                  " but some end is accumulated by genus");
    return {genus, ends};
}

}  // namespace endscope
