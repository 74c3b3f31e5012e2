#include "endscope/germs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "germ_analysis.hpp"

namespace endscope {

namespace detail {

Analysis::Analysis(const Term& root) : Analysis(std::vector<const Term*>{&root}) {}

Analysis::Analysis(const std::vector<const Term*>& roots) {
    for (const Term* r : roots) {
        std::vector<int> created;
        roots_.push_back(walk(*r, false, created));
        spans_.push_back(std::move(created));
    }
    classify();
}

int Analysis::walk(const Term& t, bool repeated, std::vector<int>& created) {
    if (countable_planar(t)) {
        auto [alpha, n] = cb_rank(t);
        GNode g;
        g.term = &t;
        g.type = NodeType::Rank;
        g.repeated = repeated;
        g.alpha = alpha;
        g.degree = n;
        nodes_.push_back(std::move(g));
        created.push_back(static_cast<int>(nodes_.size()) - 1);
        return created.back();
    }
    if (t.kind == TermKind::Sum) {
        for (const auto& p : t.kids) walk(p, repeated, created);
        return -1;
    }
    int id = static_cast<int>(nodes_.size());
    GNode g;
    g.term = &t;
    g.color = t.color;
    g.repeated = repeated;
    g.type = t.kind == TermKind::Pt ? NodeType::Point : t.kind == TermKind::Mix ? NodeType::Limit : NodeType::Cantor;
    nodes_.push_back(std::move(g));
    created.push_back(id);
    std::vector<int> inside;
    for (const auto& c : t.kids) walk(c, true, inside);
    std::vector<int> inner;
    std::optional<Cnf> rho;
    if (t.kind == TermKind::Cantor) inner.push_back(id);
    for (int k : inside) {
        const GNode& n = nodes_[k];
        if (n.type == NodeType::Rank) {
            if (!rho || *rho < n.alpha) rho = n.alpha;
        } else {
            inner.push_back(k);
        }
    }
    nodes_[id].inner = std::move(inner);
    nodes_[id].rho = std::move(rho);
    created.insert(created.end(), inside.begin(), inside.end());
    return id;
}

void Analysis::classify() {
    std::vector<int> xs;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (nodes_[i].type != NodeType::Rank) xs.push_back(i);
    const std::size_t n = nodes_.size();
    // greatest fixpoint: start from colour/rank agreement, drop pairs whose
    // neighbourhood class sets cannot be matched
    std::vector<std::vector<char>> eq(n, std::vector<char>(n, 0));
    for (int a : xs)
        for (int b : xs) eq[a][b] = nodes_[a].color == nodes_[b].color && nodes_[a].rho == nodes_[b].rho;
    auto covered = [&](int a, int b) {
        for (int p : nodes_[a].inner) {
            bool hit = false;
            for (int q : nodes_[b].inner)
                if (eq[p][q]) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int a : xs)
            for (int b : xs)
                if (eq[a][b] && !(covered(a, b) && covered(b, a))) {
                    eq[a][b] = eq[b][a] = 0;
                    changed = true;
                }
    }
    for (int a : xs) {
        if (nodes_[a].cls >= 0) continue;
        for (int b : xs)
            if (eq[a][b]) nodes_[b].cls = nclasses_;
        ++nclasses_;
    }
}

std::set<int> Analysis::inner_classes(int x) const {
    std::set<int> out;
    for (int k : nodes_[x].inner) out.insert(nodes_[k].cls);
    return out;
}

bool Analysis::self_accumulating(int cls) const {
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (nodes_[i].type != NodeType::Rank && nodes_[i].cls == cls && inner_classes(i).count(cls)) return true;
    return false;
}

}  // namespace detail

using detail::Analysis;
using detail::NodeType;

const char* to_string(ClassKind k) {
    switch (k) {
        case ClassKind::finite:
            return "finite";
        case ClassKind::countable_discrete:
            return "countable_discrete";
        case ClassKind::cantor:
            return "cantor";
    }
    return "?";
}

std::string rank_id(const Cnf& beta) { return "rank(" + to_string(beta) + ")"; }

namespace {

constexpr std::uint64_t kMany = std::numeric_limits<std::uint64_t>::max();

std::uint64_t add_count(std::uint64_t a, std::uint64_t b) {
    if (a == kMany || b == kMany || a > kMany - b) return kMany;
    return a + b;
}

void set_count(GermClass& c, std::uint64_t count) {
    if (count == kMany) {
        c.kind = ClassKind::countable_discrete;
        c.count = 0;
    } else {
        c.kind = ClassKind::finite;
        c.count = count;
    }
}

std::optional<Cnf> rho_value(const GermTable& t, const std::string& id) {
    for (const auto& [k, v] : t.rho)
        if (k == id) return v;
    return std::nullopt;
}

bool stored(const GermTable& t, const std::string& id) {
    return std::any_of(t.classes.begin(), t.classes.end(), [&](const GermClass& c) { return c.id == id; }) ||
           std::any_of(t.families.begin(), t.families.end(), [&](const ClassFamily& f) { return f.id == id; });
}

}  // namespace

GermTable derive_table(const Term& t) {
    auto violations = validate(t);
    if (!violations.empty())
        throw ValidationError(violations.front().rule + " violated at " + violations.front().subterm);
    Analysis a(t);
    const auto& nodes = a.nodes();

    struct Draft {
        GermClass row;
        char letter;
        std::optional<Cnf> rho;
        int rep;
    };
    std::vector<Draft> drafts(a.class_count());
    std::vector<std::uint64_t> counts(a.class_count(), 0);
    std::vector<char> seen(a.class_count(), 0);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        const auto& g = nodes[i];
        if (g.type == NodeType::Rank) continue;
        auto& d = drafts[g.cls];
        counts[g.cls] = add_count(counts[g.cls], g.repeated ? kMany : 1);
        if (!seen[g.cls] || canonical_less(*g.term, *d.row.germ)) {
            d.row.germ = *g.term;
            d.rep = i;
        }
        seen[g.cls] = 1;
        d.row.color = g.color;
        d.rho = g.rho;
    }
    for (int c = 0; c < a.class_count(); ++c) {
        auto& d = drafts[c];
        if (a.self_accumulating(c)) {
            d.row.kind = ClassKind::cantor;
            d.row.count = 0;
            d.letter = 'c';
        } else {
            set_count(d.row, counts[c]);
            d.letter = (nodes[d.rep].inner.empty() && !d.rho) ? 'p' : 'e';
        }
    }
    std::vector<int> order(a.class_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& dx = drafts[x];
        const auto& dy = drafts[y];
        if (dx.letter != dy.letter) return dx.letter < dy.letter;
        if (dx.row.color != dy.row.color) return dx.row.color == Color::genus;
        return canonical_less(*dx.row.germ, *dy.row.germ);
    });
    std::map<char, int> per_letter;
    std::vector<std::string> ids(a.class_count());
    GermTable table;
    table.origin = Origin::derived;
    for (int c : order) {
        auto& d = drafts[c];
        d.row.id = std::string(1, d.letter) + std::to_string(++per_letter[d.letter]);
        ids[c] = d.row.id;
        table.classes.push_back(d.row);
        if (d.rho) table.rho.emplace_back(d.row.id, *d.rho);
    }

    // rank family: rows for the ranks that carry structure, the rest stay virtual
    std::vector<Cnf> ranks;
    for (const auto& g : nodes)
        if (g.type == NodeType::Rank) {
            ranks.push_back(g.alpha);
            if (!table.rank_top || *table.rank_top < g.alpha) table.rank_top = g.alpha;
        }
    if (table.rank_top) {
        std::vector<Cnf> rows{Cnf::zero()};
        const Cnf& top = *table.rank_top;
        if (top.is_finite())
            for (std::uint64_t b = 1; b <= top.finite_value(); ++b) rows.push_back(Cnf::nat(b));
        for (const auto& r : ranks) rows.push_back(r);
        for (const auto& [id, r] : table.rho) rows.push_back(r);
        std::size_t base = rows.size();
        for (std::size_t i = 0; i < base; ++i)
            if (rows[i].is_successor()) rows.push_back(pred(rows[i]));
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        for (const auto& beta : rows) {
            GermClass row;
            row.id = rank_id(beta);
            row.rank = beta;
            row.color = Color::planar;
            row.germ = beta.is_zero() ? Term::pt() : Term::ord(beta, 1);
            std::uint64_t count = 0;
            for (const auto& g : nodes) {
                if (g.type != NodeType::Rank || g.alpha < beta) continue;
                if (beta < g.alpha)
                    count = kMany;
                else
                    count = add_count(count, g.repeated ? kMany : g.degree);
            }
            set_count(row, count);
            table.classes.push_back(row);
        }
        for (const auto& zb : rows)
            for (const auto& xb : rows)
                if (zb < xb) table.acc.emplace(rank_id(zb), rank_id(xb));
        for (const auto& [xid, r] : table.rho)
            for (const auto& zb : rows)
                if (zb <= r) table.acc.emplace(rank_id(zb), xid);
    }
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (nodes[i].type == NodeType::Rank) continue;
        for (int c : a.inner_classes(i)) table.acc.emplace(ids[c], ids[nodes[i].cls]);
    }
    close_and_check(table);
    return table;
}

std::vector<std::string> class_ids(const GermTable& table) {
    std::vector<std::string> out;
    for (const auto& c : table.classes) out.push_back(c.id);
    for (const auto& f : table.families) out.push_back(f.id);
    return out;
}

ClassView lookup(const GermTable& table, const std::string& id) {
    for (const auto& c : table.classes)
        if (c.id == id) return {c.id, c.kind, c.count, c.color, c.rank, false, false};
    for (const auto& f : table.families)
        if (f.id == id) return {f.id, f.kind, 0, f.color, std::nullopt, true, f.incomparable};
    if (table.rank_top && id.size() > 6 && id.compare(0, 5, "rank(") == 0 && id.back() == ')') {
        Cnf beta;
        try {
            beta = parse_cnf(std::string_view(id).substr(5, id.size() - 6));
        } catch (const SyntaxError&) {
            throw UnknownClass("unknown class '" + id + "'");
        }
        if (beta <= *table.rank_top)
            return {rank_id(beta), ClassKind::countable_discrete, 0, Color::planar, beta, false, false};
    }
    throw UnknownClass("unknown class '" + id + "'");
}

bool dominates(const GermTable& table, const std::string& y, const std::string& x) {
    ClassView vy = lookup(table, y), vx = lookup(table, x);
    if (vy.id == vx.id) return true;
    if (stored(table, vy.id) && stored(table, vx.id)) return table.leq.count({vy.id, vx.id}) > 0;
    if (vy.rank && vx.rank) return *vy.rank <= *vx.rank;
    if (vy.rank) {
        auto r = rho_value(table, vx.id);
        return r && *vy.rank <= *r;
    }
    return false;
}

bool accumulates(const GermTable& table, const std::string& z, const std::string& x) {
    ClassView vz = lookup(table, z), vx = lookup(table, x);
    if (stored(table, vz.id) && stored(table, vx.id)) return table.acc.count({vz.id, vx.id}) > 0;
    if (vz.rank && vx.rank) return *vz.rank < *vx.rank;
    if (vz.rank) {
        auto r = rho_value(table, vx.id);
        return r && *vz.rank <= *r;
    }
    return false;
}

bool equivalent(const GermTable& table, const std::string& a, const std::string& b) {
    return dominates(table, a, b) && dominates(table, b, a);
}

std::vector<std::string> maximal_classes(const GermTable& table) {
    auto ids = class_ids(table);
    std::vector<std::string> out;
    for (const auto& x : ids) {
        bool top = true;
        for (const auto& y : ids)
            if (y != x && dominates(table, x, y) && !dominates(table, y, x)) {
                top = false;
                break;
            }
        if (top) out.push_back(x);
    }
    return out;
}

bool cantor_type(const GermTable& table, const std::string& x) {
    return lookup(table, x).kind == ClassKind::cantor;
}

bool isolated_in_Eg(const GermTable& table, const std::string& x) {
    ClassView v = lookup(table, x);
    if (v.color != Color::genus) throw NotGenusColored("class " + v.id + " is planar");
    for (const auto& z : class_ids(table))
        if (lookup(table, z).color == Color::genus && accumulates(table, z, v.id)) return false;
    return true;
}

Predecessors predecessors(const GermTable& table, const std::string& x) {
    ClassView v = lookup(table, x);
    Predecessors out;
    if (v.rank && table.origin == Origin::derived) {
        if (v.rank->is_successor()) {
            out.successor = true;
            out.preds.push_back(rank_id(pred(*v.rank)));
        }
        return out;
    }
    std::vector<std::string> below;
    for (const auto& z : class_ids(table))
        if (z != v.id && dominates(table, z, v.id) && !dominates(table, v.id, z)) below.push_back(z);
    for (const auto& z : below) {
        bool top = true;
        for (const auto& w : below)
            if (w != z && dominates(table, z, w) && !dominates(table, w, z)) {
                top = false;
                break;
            }
        if (!top) continue;
        // a family of pairwise distinct classes can never be covered by finitely many
        if (lookup(table, z).family) return {};
        out.preds.push_back(z);
    }
    out.successor = !out.preds.empty();
    return out;
}

void close_and_check(GermTable& table) {
    auto ids = class_ids(table);
    std::set<std::string> known(ids.begin(), ids.end());
    if (known.size() != ids.size()) throw BadTable("duplicate class id");
    for (const auto* rel : {&table.leq, &table.acc})
        for (const auto& [a, b] : *rel)
            if (!known.count(a) || !known.count(b)) throw BadTable("relation mentions unknown class " + a + "/" + b);
    for (const auto& p : table.acc) table.leq.insert(p);
    for (const auto& id : ids) table.leq.emplace(id, id);
    const std::size_t n = ids.size();
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[ids[i]] = i;
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : table.leq) m[idx[a]][idx[b]] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (m[k][j]) m[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m[i][j]) table.leq.emplace(ids[i], ids[j]);
    for (const auto& [z, x] : table.acc)
        if (lookup(table, z).color == Color::genus && lookup(table, x).color != Color::genus)
            throw BadTable("genus class " + z + " accumulates onto planar class " + x);
}

nlohmann::ordered_json to_json(const GermTable& table) {
    nlohmann::ordered_json j;
    if (!table.name.empty()) j["name"] = table.name;
    j["origin"] = table.origin == Origin::derived ? "derived-from-term" : "user-supplied";
    if (table.genus) j["genus"] = table.genus->infinite ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(table.genus->finite);
    auto& cls = j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : table.classes) {
        nlohmann::ordered_json row;
        row["id"] = c.id;
        row["kind"] = to_string(c.kind);
        if (c.kind == ClassKind::finite) row["count"] = c.count;
        row["color"] = to_string(c.color);
        if (c.rank) row["rank"] = to_string(*c.rank);
        if (c.germ) row["germ"] = print(*c.germ);
        cls.push_back(row);
    }
    if (!table.families.empty()) {
        auto& fam = j["families"] = nlohmann::ordered_json::array();
        for (const auto& f : table.families)
            fam.push_back({{"id", f.id}, {"kind", to_string(f.kind)}, {"color", to_string(f.color)},
                           {"members", "countably-infinite"}, {"incomparable", f.incomparable}});
    }
    auto pairs = [](const std::set<std::pair<std::string, std::string>>& s) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [a, b] : s) arr.push_back({a, b});
        return arr;
    };
    j["leq"] = pairs(table.leq);
    j["acc"] = pairs(table.acc);
    if (table.rank_top) j["rank_top"] = to_string(*table.rank_top);
    if (!table.rho.empty()) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (const auto& [id, v] : table.rho) r[id] = to_string(v);
        j["rho"] = r;
    }
    return j;
}

namespace {

ClassKind kind_from(const std::string& s) {
    if (s == "finite") return ClassKind::finite;
    if (s == "countable_discrete") return ClassKind::countable_discrete;
    if (s == "cantor") return ClassKind::cantor;
    throw BadTable("unknown class kind '" + s + "'");
}

Color color_from(const std::string& s) {
    if (s == "planar") return Color::planar;
    if (s == "genus") return Color::genus;
    throw BadTable("unknown color '" + s + "'");
}

}  // namespace

GermTable table_from_json(const nlohmann::json& j) {
    try {
        GermTable t;
        t.name = j.value("name", "");
        std::string origin = j.value("origin", "user-supplied");
        if (origin == "derived-from-term")
            t.origin = Origin::derived;
        else if (origin == "user-supplied")
            t.origin = Origin::user;
        else
            throw BadTable("unknown origin '" + origin + "'");
        if (j.contains("genus")) {
            Genus g;
            if (j["genus"].is_string()) {
                if (j["genus"].get<std::string>() != "inf") throw BadTable("genus must be 'inf' or a number");
                g.infinite = true;
            } else {
                g.finite = j["genus"].get<std::uint64_t>();
            }
            t.genus = g;
        }
        for (const auto& c : j.at("classes")) {
            GermClass row;
            row.id = c.at("id").get<std::string>();
            row.kind = kind_from(c.at("kind").get<std::string>());
            row.count = row.kind == ClassKind::finite ? c.value("count", std::uint64_t{1}) : 0;
            row.color = color_from(c.at("color").get<std::string>());
            if (c.contains("rank")) row.rank = parse_cnf(c["rank"].get<std::string>());
            if (c.contains("germ")) row.germ = parse_term(c["germ"].get<std::string>());
            t.classes.push_back(std::move(row));
        }
        if (j.contains("families"))
            for (const auto& f : j["families"]) {
                ClassFamily fam;
                fam.id = f.at("id").get<std::string>();
                fam.kind = kind_from(f.at("kind").get<std::string>());
                fam.color = color_from(f.at("color").get<std::string>());
                fam.incomparable = f.value("incomparable", true);
                t.families.push_back(std::move(fam));
            }
        for (const auto& p : j.value("leq", nlohmann::json::array())) t.leq.emplace(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        for (const auto& p : j.value("acc", nlohmann::json::array())) t.acc.emplace(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        if (j.contains("rank_top")) t.rank_top = parse_cnf(j["rank_top"].get<std::string>());
        if (j.contains("rho"))
            for (const auto& [k, v] : j["rho"].items()) t.rho.emplace_back(k, parse_cnf(v.get<std::string>()));
        close_and_check(t);
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw BadTable(std::string("malformed germ table: ") + e.what());
    }
}

}  // namespace endscope
