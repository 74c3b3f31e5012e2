#include "endscope/stability.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

#include "endscope/error.hpp"
#include "endscope/verdict.hpp"

namespace endscope {

int default_depth() {
    if (const char* env = std::getenv("ENDSCOPE_DEPTH")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
    }
    return 20;
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable:
            return "stable";
        case Stability::unstable:
            return "unstable";
        case Stability::unknown:
            return "unknown";
    }
    return "unknown";
}

namespace {

std::string address_of(std::size_t k) { return std::string(k - 1, '1') + "0"; }

Term rank_nbhd(const Cnf& beta) { return beta.is_zero() ? Term::pt() : Term::ord(beta, 1); }

Term sum_of(std::vector<Term> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    return Term::sum(std::move(parts));
}

bool same(const Term& a, const Term& b) { return normalize(a) == normalize(b); }

std::string embed_tag(const std::optional<Term>& a, const std::optional<Term>& b) {
    if (!a && !b) return "empty";
    if (!a) return "empty";
    if (!b) return "none";
    if (same(*a, *b)) return "identity";
    if (embeds(*a, *b)) return "absorb";
    return "none";
}

bool embed_tag_holds(const std::string& tag, const std::optional<Term>& a, const std::optional<Term>& b) {
    if (tag == "empty") return !a;
    if (!a || !b) return false;
    if (tag == "identity") return same(*a, *b);
    if (tag == "absorb") return normalize(Term::sum({*a, *b})) == normalize(*b);
    return false;
}

std::vector<std::vector<std::size_t>> pseudo_random_subsequences(std::size_t depth) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t seed : {11u, 23u, 37u}) {
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> seq;
        for (std::size_t k = 1; k < depth; ++k)
            if (rng() % 2 == 0) seq.push_back(k);
        // the last window index stands for the cofinal tail
        seq.push_back(depth);
        out.push_back(std::move(seq));
    }
    return out;
}

Decomposition decompose_germ(const Term& u, const std::string& id, Color color, int depth) {
    Decomposition d;
    d.basepoint = id;
    d.nbhd = u;
    d.color = color;
    const auto n = static_cast<std::size_t>(std::max(depth, 2));
    std::vector<std::optional<Term>> contents(n);
    if (u.kind == TermKind::Pt) {
        d.scheme = "empty";
    } else if (u.kind == TermKind::Ord) {
        d.scheme = "rank-shells";
        const Cnf& beta = u.rank;
        for (std::size_t k = 1; k <= n; ++k)
            contents[k - 1] = beta.is_successor() ? rank_nbhd(pred(beta)) : rank_nbhd(fundamental(beta, k));
    } else if (u.kind == TermKind::Mix) {
        d.scheme = "point-groups";
        for (auto& c : contents) c = sum_of(u.kids);
    } else if (u.kind == TermKind::Cantor) {
        d.scheme = "clopen-shells";
        for (auto& c : contents) c = u;
    } else {
        throw NotStable("basepoint of " + print(u) + " is not a single point");
    }
    for (std::size_t k = 1; k <= n; ++k) d.pieces.push_back({k, address_of(k), contents[k - 1]});
    for (std::size_t k = 1; k < n; ++k) d.embed_witness.push_back(embed_tag(contents[k - 1], contents[k]));
    d.subsequences = pseudo_random_subsequences(n);
    std::string recipe = d.scheme == "empty"                                     ? "trivial"
                         : (d.scheme == "rank-shells" && u.rank.is_limit()) ? "cofinal"
                                                                                 : "collapse";
    d.subsequence_witness.assign(d.subsequences.size(), recipe);
    return d;
}

std::optional<Term> germ_of(const GermTable& table, const ClassView& v) {
    for (const auto& c : table.classes)
        if (c.id == v.id) return c.germ;
    if (v.rank && table.origin == Origin::derived) return rank_nbhd(*v.rank);
    return std::nullopt;
}

const Piece* piece_at(const Decomposition& d, std::size_t k) {
    if (k == 0 || k > d.pieces.size()) return nullptr;
    return &d.pieces[k - 1];
}

}  // namespace

bool embeds(const Term& a, const Term& b) {
    Term nb = normalize(b);
    return normalize(a) == nb || normalize(Term::sum({a, b})) == nb;
}

StabilityResult stable_nbhd(const GermTable& table, const std::string& x, int depth) {
    ClassView v = lookup(table, x);
    StabilityResult r;
    if (table.origin == Origin::user) {
        for (const auto& f : table.families)
            if (f.incomparable && f.id != v.id && accumulates(table, f.id, v.id)) {
                r.status = Stability::unstable;
                r.obstruction = "cofinally many incomparable maximal germs accumulate at " + v.id + " (family " +
                                f.id + ")";
                return r;
            }
    }
    if (auto germ = germ_of(table, v)) {
        r.status = Stability::stable;
        r.decomposition = decompose_germ(*germ, v.id, v.color, depth);
        return r;
    }
    r.status = Stability::unknown;
    return r;
}

Decomposition decompose(const Term& t, const std::string& x, int depth) {
    GermTable table = derive_table(t);
    StabilityResult r = stable_nbhd(table, x, depth);
    if (r.status != Stability::stable) throw NotStable("class " + x + " has no stable neighbourhood");
    return *r.decomposition;
}

CheckReport check(const Decomposition& d) {
    CheckReport rep;
    bool disjoint = true;
    for (std::size_t i = 0; i < d.pieces.size(); ++i)
        for (std::size_t j = 0; j < d.pieces.size(); ++j) {
            if (i == j) continue;
            const auto& a = d.pieces[i].address;
            const auto& b = d.pieces[j].address;
            if (a.empty() || b.compare(0, a.size(), a) == 0) disjoint = false;
        }
    rep.add("disjointness", disjoint);

    bool descent = true;
    for (std::size_t k = 0; k < d.pieces.size(); ++k) {
        const auto& p = d.pieces[k];
        descent = descent && p.index == k + 1 && p.address.size() == k + 1 &&
                  p.address.find_first_not_of('1') == k && p.address.back() == '0';
    }
    rep.add("descent", descent && !d.pieces.empty());

    bool embed = d.embed_witness.size() + 1 == d.pieces.size();
    for (std::size_t k = 0; embed && k < d.embed_witness.size(); ++k)
        embed = embed_tag_holds(d.embed_witness[k], d.pieces[k].content, d.pieces[k + 1].content);
    rep.add("embed-witnesses", embed);

    const Term u = normalize(d.nbhd);
    for (std::size_t s = 0; s < d.subsequences.size(); ++s) {
        const auto& seq = d.subsequences[s];
        const std::string& how = s < d.subsequence_witness.size() ? d.subsequence_witness[s] : "";
        bool ok = !seq.empty() && std::is_sorted(seq.begin(), seq.end()) &&
                  std::adjacent_find(seq.begin(), seq.end()) == seq.end() && piece_at(d, seq.front()) &&
                  piece_at(d, seq.back());
        if (ok && how == "trivial") {
            ok = d.nbhd.kind == TermKind::Pt;
            for (auto k : seq) ok = ok && !piece_at(d, k)->content;
        } else if (ok && how == "collapse") {
            const auto& first = piece_at(d, seq.front())->content;
            ok = first.has_value();
            for (auto k : seq) ok = ok && piece_at(d, k)->content && same(*piece_at(d, k)->content, *first);
            ok = ok && normalize(Term::mix({*first}, d.color)) == u;
        } else if (ok && how == "cofinal") {
            // every piece up to the last chosen index is dominated by a chosen later piece
            for (std::size_t j = 1; ok && j <= seq.back(); ++j) {
                const auto& yj = piece_at(d, j)->content;
                bool hit = false;
                for (auto k : seq)
                    if (k >= j && yj && piece_at(d, k)->content && embeds(*yj, *piece_at(d, k)->content)) {
                        hit = true;
                        break;
                    }
                ok = hit && embeds(*yj, d.nbhd) && !same(*yj, d.nbhd);
            }
        } else {
            ok = false;
        }
        rep.add("reassembly-" + std::to_string(s + 1), ok);
    }
    if (d.subsequences.size() < 3) rep.add("reassembly-count", false);
    return rep;
}

ShrinkWitness build_shrink_witness(const Term& t, const std::string& x, const SubNeighborhood& u, int depth) {
    if (!u.keeps_basepoint) throw BadSubneighborhood("sub-neighbourhood does not contain the basepoint");
    Decomposition d = decompose(t, x, depth);
    for (auto k : u.removed)
        if (k == 0 || k >= d.pieces.size())
            throw BadSubneighborhood("removed piece Y_" + std::to_string(k) + " outside the checked window");
    ShrinkWitness w;
    w.basepoint = d.basepoint;
    if (d.scheme == "empty" || u.removed.empty()) {
        w.recipe = "identity";
        w.fixed_from = 1;
        return w;
    }
    if (d.scheme == "rank-shells" && d.nbhd.rank.is_limit()) {
        // the first m+1 pieces are absorbed into the largest of them
        std::size_t m = *u.removed.rbegin();
        BlockMove mv;
        for (std::size_t k = 1; k <= m + 1; ++k) {
            mv.from.push_back(k);
            if (!u.removed.count(k)) mv.to.push_back(k);
        }
        w.recipe = "block-absorption";
        w.moves.push_back(std::move(mv));
        w.fixed_from = m + 2;
        return w;
    }
    // Hilbert hotel: the j-th piece moves onto the j-th kept piece
    w.recipe = "hilbert-hotel";
    std::size_t target = 0;
    for (std::size_t j = 1; j <= d.pieces.size(); ++j) {
        do {
            ++target;
        } while (u.removed.count(target));
        if (target > d.pieces.size()) break;
        w.moves.push_back({{j}, {target}});
    }
    w.fixed_from = d.pieces.size() + 1;
    return w;
}

CheckReport check_shrink(const Decomposition& d, const SubNeighborhood& u, const ShrinkWitness& w) {
    CheckReport rep;
    rep.add("basepoint-kept", u.keeps_basepoint);
    std::set<std::size_t> sources, targets;
    bool disjoint = true, avoids = true, descent = true, homeo = true;
    for (const auto& mv : w.moves) {
        for (auto k : mv.from) disjoint = disjoint && sources.insert(k).second;
        for (auto k : mv.to) {
            disjoint = disjoint && targets.insert(k).second;
            avoids = avoids && !u.removed.count(k);
        }
        if (mv.from.size() == 1 && mv.to.size() == 1) descent = descent && mv.to[0] >= mv.from[0];
        std::vector<Term> a, b;
        for (auto k : mv.from)
            if (const Piece* p = piece_at(d, k); p && p->content) a.push_back(*p->content);
        for (auto k : mv.to)
            if (const Piece* p = piece_at(d, k); p && p->content) b.push_back(*p->content);
        homeo = homeo && a.empty() == b.empty() && (a.empty() || same(sum_of(a), sum_of(b)));
    }
    // moved blocks fill the window before fixed_from contiguously
    bool covers = true;
    std::size_t expect = 1;
    for (auto k : sources) covers = covers && k == expect++;
    if (w.recipe == "block-absorption") covers = covers && expect == w.fixed_from;
    if (w.recipe == "identity") covers = u.removed.empty() || d.scheme == "empty";
    rep.add("disjointness", disjoint && avoids);
    rep.add("descent", descent);
    rep.add("block-homeomorphisms", homeo);
    rep.add("coverage", covers);
    return rep;
}

BlockBijection extend_embedding(std::size_t n, std::size_t m, const std::vector<std::size_t>& phi) {
    if (n >= m) throw NotClopenImage("need n < m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    if (phi.size() != n) throw NotClopenImage("embedding lists " + std::to_string(phi.size()) + " blocks, expected " +
                                              std::to_string(n));
    std::set<std::size_t> used;
    for (auto v : phi) {
        if (v == 0 || v > m) throw NotClopenImage("block " + std::to_string(v) + " lies outside Y[m]");
        if (!used.insert(v).second) throw NotClopenImage("embedding is not injective on blocks");
    }
    BlockBijection h;
    h.p = 2 * m;
    h.image = phi;
    std::size_t next = 1;
    for (std::size_t i = n + 1; i <= h.p; ++i) {
        while (used.count(next)) ++next;
        h.image.push_back(next++);
    }
    return h;
}

bool check_extension(std::size_t n, const std::vector<std::size_t>& phi, const BlockBijection& h) {
    if (h.image.size() != h.p || phi.size() != n) return false;
    std::set<std::size_t> seen(h.image.begin(), h.image.end());
    if (seen.size() != h.p || *seen.begin() != 1 || *seen.rbegin() != h.p) return false;
    return std::equal(phi.begin(), phi.end(), h.image.begin());
}

// ---- bricks and shifts ----

bool Brick::valid() const {
    return std::find(period.begin(), period.end(), true) != period.end() &&
           std::find(period.begin(), period.end(), false) != period.end();
}

bool Brick::contains(std::uint64_t n) const {
    if (n < prefix.size()) return prefix[n];
    return period[(n - prefix.size()) % period.size()];
}

std::string Brick::to_string() const {
    std::string s;
    for (bool b : prefix) s += b ? '1' : '0';
    s += '(';
    for (bool b : period) s += b ? '1' : '0';
    return s + ')';
}

Brick Brick::parse(const std::string& text) {
    Brick b;
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') throw ValidationError("brick must look like prefix(period)");
    auto bits = [&](std::string_view s, std::vector<bool>& out) {
        for (char c : s) {
            if (c != '0' && c != '1') throw ValidationError("brick words use only 0 and 1");
            out.push_back(c == '1');
        }
    };
    bits(std::string_view(text).substr(0, open), b.prefix);
    bits(std::string_view(text).substr(open + 1, text.size() - open - 2), b.period);
    if (!b.valid()) throw ValidationError("brick " + text + " is finite or co-finite");
    return b;
}

ShiftMap::ShiftMap(Brick b) : b_(std::move(b)) {
    if (!b_.valid()) throw ValidationError("brick " + b_.to_string() + " is finite or co-finite");
    ones_prefix_ = std::count(b_.prefix.begin(), b_.prefix.end(), true);
    ones_period_ = std::count(b_.period.begin(), b_.period.end(), true);
}

std::uint64_t ShiftMap::rank(std::uint64_t n, bool bit) const {
    const std::uint64_t P = b_.prefix.size(), L = b_.period.size();
    if (n <= P) return std::count(b_.prefix.begin(), b_.prefix.begin() + n, bit);
    std::uint64_t pre = bit ? ones_prefix_ : P - ones_prefix_;
    std::uint64_t per = bit ? ones_period_ : L - ones_period_;
    std::uint64_t q = (n - P) / L, r = (n - P) % L;
    return pre + q * per + std::count(b_.period.begin(), b_.period.begin() + r, bit);
}

std::uint64_t ShiftMap::select(std::uint64_t j, bool bit) const {
    const std::uint64_t P = b_.prefix.size(), L = b_.period.size();
    std::uint64_t pre = bit ? ones_prefix_ : P - ones_prefix_;
    if (j < pre) {
        for (std::uint64_t i = 0; i < P; ++i)
            if (b_.prefix[i] == bit && j-- == 0) return i;
    }
    j -= pre;
    std::uint64_t per = bit ? ones_period_ : L - ones_period_;
    std::uint64_t q = j / per, r = j % per;
    for (std::uint64_t i = 0; i < L; ++i)
        if (b_.period[i] == bit && r-- == 0) return P + q * L + i;
    return 0;  // unreachable for a valid brick
}

namespace {

std::uint64_t pair_code(std::uint64_t a, std::uint64_t c) { return (a + c) * (a + c + 1) / 2 + c; }

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t j) {
    std::uint64_t w = 0;
    while ((w + 1) * (w + 2) / 2 <= j) ++w;
    std::uint64_t c = j - w * (w + 1) / 2;
    return {w - c, c};
}

// nonzero rows are enumerated 1, -1, 2, -2, ...
std::int64_t row_of(std::uint64_t a) {
    return a % 2 == 0 ? static_cast<std::int64_t>(a / 2 + 1) : -static_cast<std::int64_t>((a + 1) / 2);
}

std::uint64_t code_of(std::int64_t row) {
    return row > 0 ? 2 * static_cast<std::uint64_t>(row - 1) : 2 * static_cast<std::uint64_t>(-row) - 1;
}

}  // namespace

std::pair<std::int64_t, std::uint64_t> ShiftMap::position(std::uint64_t n) const {
    if (b_.contains(n)) return {0, rank(n, true)};
    auto [a, c] = unpair(rank(n, false));
    return {row_of(a), c};
}

std::uint64_t ShiftMap::index(std::int64_t row, std::uint64_t col) const {
    if (row == 0) return select(col, true);
    return select(pair_code(code_of(row), col), false);
}

std::uint64_t ShiftMap::apply(std::uint64_t n, std::int64_t power) const {
    auto [row, col] = position(n);
    return index(row + power, col);
}

ShiftMap shift(const Brick& b) { return ShiftMap(b); }

CheckReport check_shift(const ShiftMap& s, int depth) {
    CheckReport rep;
    const auto d = static_cast<std::uint64_t>(std::max(depth, 1));
    const std::uint64_t window = 4 * d;
    bool row0 = true, roundtrip = true, identity = true;
    for (std::uint64_t n = 0; n < window; ++n) {
        auto [row, col] = s.position(n);
        row0 = row0 && ((row == 0) == s.brick().contains(n));
        roundtrip = roundtrip && s.index(row, col) == n;
        identity = identity && s.apply(n, 0) == n;
    }
    rep.add("row-zero-is-brick", row0);
    rep.add("rows-partition", roundtrip);
    rep.add("identity-power", identity);
    std::set<std::uint64_t> seen;
    bool disjoint = true;
    for (std::int64_t i = -static_cast<std::int64_t>(d); i <= static_cast<std::int64_t>(d); ++i)
        for (std::uint64_t col = 0; col < d; ++col) {
            std::uint64_t n = s.index(i, col);
            disjoint = disjoint && seen.insert(n).second && s.position(n).first == i;
        }
    rep.add("translates-disjoint", disjoint);
    bool leave = true;
    for (std::uint64_t n = 0; n < d; ++n)
        leave = leave && s.apply(n, static_cast<std::int64_t>(d)) >= d && s.apply(n, -static_cast<std::int64_t>(d)) >= d;
    rep.add("orbits-leave-prefix", leave);
    return rep;
}

// ---- stable partition ----

std::vector<StablePart> partition_stable(const Term& t) {
    GermTable table = derive_table(t);
    Term n = normalize(t);
    std::vector<Term> parts = n.kind == TermKind::Sum ? n.kids : std::vector<Term>{n};
    std::vector<StablePart> out;
    for (const auto& p : parts) {
        if (countable_planar(p)) {
            auto [alpha, k] = cb_rank(p);
            for (std::uint64_t i = 0; i < k; ++i) out.push_back({rank_nbhd(alpha), rank_id(alpha)});
            continue;
        }
        std::string id;
        for (const auto& c : table.classes)
            if (!c.rank && c.germ && root_equivalent(p, *c.germ)) {
                id = c.id;
                break;
            }
        if (id.empty()) throw std::logic_error("no class for part " + print(p));
        out.push_back({p, id});
    }
    return out;
}

// ---- annuli ----

AnnulusDecomposition annuli(const SurfaceDescriptor& s, const std::string& x, int depth) {
    GermTable table = derive_table(s.ends);
    TelescopingResult tr = telescoping(table, x);
    if (!tr.telescoping)
        throw NotTelescoping("end " + tr.id + " is not telescoping (" + tr.failure + ")", tr.failure);
    AnnulusDecomposition a;
    a.basepoint = tr.id;
    a.tcase = tr.tcase;
    std::vector<std::string> content;
    bool genus = false;
    for (const auto& z : class_ids(table))
        if (accumulates(table, z, tr.id)) {
            content.push_back(z);
            genus = genus || lookup(table, z).color == Color::genus;
        }
    const auto n = static_cast<std::size_t>(std::max(depth, 1));
    for (std::size_t i = 0; i < n; ++i) {
        a.annuli.push_back({i, content, genus});
        if (i > 0) a.adjacency.emplace_back(i - 1, i);
    }
    return a;
}

CheckReport check_annuli(const GermTable& table, const AnnulusDecomposition& a) {
    CheckReport rep;
    bool chain = true;
    for (const auto& [i, j] : a.adjacency) chain = chain && j == i + 1 && j < a.annuli.size();
    rep.add("adjacent-only-consecutive", chain && a.adjacency.size() + 1 == a.annuli.size());

    bool known = true;
    try {
        lookup(table, a.basepoint);
        for (const auto& y : a.annuli)
            for (const auto& z : y.content) lookup(table, z);
    } catch (const UnknownClass&) {
        known = false;
    }
    rep.add("classes-known", known);
    if (!known || a.annuli.empty()) return rep;

    std::set<std::string> first(a.annuli[0].content.begin(), a.annuli[0].content.end());
    bool unions = true;
    for (std::size_t i = 0; i < a.annuli.size() && unions; ++i) {
        std::set<std::string> acc;
        bool g = false;
        for (std::size_t j = i; j < a.annuli.size(); ++j) {
            acc.insert(a.annuli[j].content.begin(), a.annuli[j].content.end());
            g = g || a.annuli[j].genus;
            unions = unions && acc == first && g == a.annuli[0].genus;
        }
    }
    rep.add("unions-match-first", unions);

    bool contains_all = true;
    for (const auto& z : class_ids(table)) {
        if (z == a.basepoint || !accumulates(table, z, a.basepoint)) continue;
        for (const auto& y : a.annuli)
            contains_all = contains_all && std::count(y.content.begin(), y.content.end(), z) > 0;
    }
    rep.add("contains-all-types", contains_all);
    return rep;
}

// ---- certificates ----

nlohmann::ordered_json certificate(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "decomposition";
    j["basepoint"] = d.basepoint;
    j["scheme"] = d.scheme;
    j["neighborhood"] = print(d.nbhd);
    j["color"] = d.color == Color::genus ? "genus" : "planar";
    auto pieces = nlohmann::ordered_json::array();
    for (const auto& p : d.pieces) {
        nlohmann::ordered_json pj;
        pj["index"] = p.index;
        pj["address"] = p.address;
        pj["content"] = p.content ? nlohmann::ordered_json(print(*p.content)) : nlohmann::ordered_json(nullptr);
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    nlohmann::ordered_json w;
    w["embed"] = d.embed_witness;
    auto subs = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < d.subsequences.size(); ++s)
        subs.push_back({{"indices", d.subsequences[s]}, {"recipe", d.subsequence_witness[s]}});
    w["subsequences"] = subs;
    j["witnesses"] = w;
    return j;
}

nlohmann::ordered_json certificate(const ShiftMap& s, int depth) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "shift";
    j["brick"] = s.brick().to_string();
    j["depth"] = depth;
    auto rows = nlohmann::ordered_json::array();
    for (std::int64_t i = -depth; i <= depth; ++i) {
        std::vector<std::uint64_t> idx;
        for (int c = 0; c < depth; ++c) idx.push_back(s.index(i, static_cast<std::uint64_t>(c)));
        rows.push_back({{"row", i}, {"indices", idx}});
    }
    j["rows"] = rows;
    return j;
}

nlohmann::ordered_json certificate(const AnnulusDecomposition& a) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "annuli";
    j["basepoint"] = a.basepoint;
    j["case"] = a.tcase;
    auto list = nlohmann::ordered_json::array();
    for (const auto& y : a.annuli) list.push_back({{"index", y.index}, {"content", y.content}, {"genus", y.genus}});
    j["annuli"] = list;
    auto adj = nlohmann::ordered_json::array();
    for (const auto& [x, y] : a.adjacency) adj.push_back({x, y});
    j["adjacency"] = adj;
    return j;
}

CheckReport check_certificate(const nlohmann::json& cert, const GermTable* table) {
    try {
        const std::string kind = cert.at("kind").get<std::string>();
        if (kind == "decomposition") {
            Decomposition d;
            d.basepoint = cert.at("basepoint").get<std::string>();
            d.scheme = cert.at("scheme").get<std::string>();
            d.nbhd = parse_term(cert.at("neighborhood").get<std::string>());
            d.color = cert.at("color").get<std::string>() == "genus" ? Color::genus : Color::planar;
            for (const auto& p : cert.at("pieces")) {
                Piece piece{p.at("index").get<std::size_t>(), p.at("address").get<std::string>(), std::nullopt};
                if (!p.at("content").is_null()) piece.content = parse_term(p.at("content").get<std::string>());
                d.pieces.push_back(std::move(piece));
            }
            const auto& w = cert.at("witnesses");
            d.embed_witness = w.at("embed").get<std::vector<std::string>>();
            for (const auto& s : w.at("subsequences")) {
                d.subsequences.push_back(s.at("indices").get<std::vector<std::size_t>>());
                d.subsequence_witness.push_back(s.at("recipe").get<std::string>());
            }
            CheckReport rep = check(d);
            if (table) {
                bool match = true;
                try {
                    auto fresh = stable_nbhd(*table, d.basepoint, static_cast<int>(d.pieces.size()));
                    match = fresh.decomposition && same(fresh.decomposition->nbhd, d.nbhd);
                } catch (const UnknownClass&) {
                    match = false;
                }
                rep.add("basepoint-neighborhood", match);
            }
            return rep;
        }
        if (kind == "shift") {
            ShiftMap s(Brick::parse(cert.at("brick").get<std::string>()));
            int depth = cert.at("depth").get<int>();
            CheckReport rep = check_shift(s, depth);
            bool rows = true;
            for (const auto& r : cert.at("rows")) {
                auto i = r.at("row").get<std::int64_t>();
                auto idx = r.at("indices").get<std::vector<std::uint64_t>>();
                for (std::size_t c = 0; c < idx.size(); ++c) rows = rows && s.index(i, c) == idx[c];
            }
            rep.add("rows-replay", rows);
            return rep;
        }
        if (kind == "annuli") {
            if (!table) throw ValidationError("annulus certificates are checked against a surface");
            AnnulusDecomposition a;
            a.basepoint = cert.at("basepoint").get<std::string>();
            a.tcase = cert.at("case").get<std::string>();
            for (const auto& y : cert.at("annuli"))
                a.annuli.push_back({y.at("index").get<std::size_t>(), y.at("content").get<std::vector<std::string>>(),
                                    y.at("genus").get<bool>()});
            for (const auto& e : cert.at("adjacency"))
                a.adjacency.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
            return check_annuli(*table, a);
        }
        throw ValidationError("unknown certificate kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace endscope
