#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "endscope/error.hpp"
#include "endscope/oracle.hpp"
#include "endscope/report.hpp"
#include "endscope/stability.hpp"
#include "endscope/swindle.hpp"
#include "endscope/verdict.hpp"

using namespace endscope;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 64;
constexpr int kDataErr = 65;
constexpr int kInternal = 70;

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

int exit_for(Ac ac) { return ac == Ac::holds ? 0 : ac == Ac::fails ? 1 : 2; }

json with_schema(const nlohmann::ordered_json& body) {
    json j;
    j["schema"] = 1;
    for (auto it = body.begin(); it != body.end(); ++it)
        if (it.key() != "schema") j[it.key()] = it.value();
    return j;
}

json check_json(const CheckReport& rep) {
    json j;
    j["schema"] = 1;
    j["ok"] = rep.ok;
    auto arr = json::array();
    for (const auto& [name, pass] : rep.checks) arr.push_back({{"check", name}, {"pass", pass}});
    j["checks"] = arr;
    return j;
}

int cmd_parse(const std::string& file) {
    Input in = read_input(slurp(file));
    if (const auto* t = std::get_if<Term>(&in.value))
        std::cout << print(*t) << "\n";
    else if (const auto* s = std::get_if<SurfaceDescriptor>(&in.value))
        std::cout << print(*s) << "\n";
    else
        std::cout << with_schema(to_json(std::get<GermTable>(in.value))).dump(2) << "\n";
    return 0;
}

int cmd_normalize(const std::string& file) {
    Input in = read_input(slurp(file));
    if (const auto* t = std::get_if<Term>(&in.value))
        std::cout << print(normalize(*t)) << "\n";
    else if (const auto* s = std::get_if<SurfaceDescriptor>(&in.value))
        std::cout << print(SurfaceDescriptor{s->genus, normalize(s->ends)}) << "\n";
    else
        throw ValidationError("germ tables have no term to normalize");
    return 0;
}

int cmd_classify(const std::string& file) {
    Input in = read_input(slurp(file));
    std::cout << with_schema(to_json(table_of(in))).dump(2) << "\n";
    return 0;
}

int cmd_verdict(const std::string& file, const std::string& format) {
    Input in = read_input(slurp(file));
    Verdict v = verdict_of(in);
    if (format == "json")
        std::cout << verdict_report(in, v).dump(2) << "\n";
    else
        std::cout << verdict_text(in, v);
    return exit_for(v.ac);
}

int cmd_certify(const std::string& file, const std::string& end, const std::string& kind, const std::string& brick,
                const std::string& check_file, int depth) {
    Input in = read_input(slurp(file));
    GermTable table = table_of(in);
    if (!check_file.empty()) {
        auto cert = nlohmann::json::parse(slurp(check_file), nullptr, false);
        if (cert.is_discarded()) throw ValidationError("certificate is not valid JSON");
        CheckReport rep = check_certificate(cert, &table);
        std::cout << check_json(rep).dump(2) << "\n";
        return rep.ok ? 0 : 1;
    }
    if (kind == "shift") {
        ShiftMap s = shift(Brick::parse(brick));
        std::cout << certificate(s, depth).dump(2) << "\n";
        return 0;
    }
    if (end.empty()) throw ValidationError("--end is required for " + kind + " certificates");
    if (kind == "annuli") {
        const auto* s = std::get_if<SurfaceDescriptor>(&in.value);
        if (!s) throw ValidationError("annulus certificates need a surface descriptor");
        std::cout << certificate(annuli(*s, end, depth)).dump(2) << "\n";
        return 0;
    }
    StabilityResult r = stable_nbhd(table, end, depth);
    if (r.status != Stability::stable) {
        json j;
        j["schema"] = 1;
        j["kind"] = "decomposition";
        j["basepoint"] = end;
        j["status"] = to_string(r.status);
        if (!r.obstruction.empty()) j["obstruction"] = r.obstruction;
        std::cout << j.dump(2) << "\n";
        return r.status == Stability::unstable ? 1 : 2;
    }
    std::cout << certificate(*r.decomposition).dump(2) << "\n";
    return 0;
}

json word_json(const swindle::SlotWord& w) {
    json j = json::object();
    for (const auto& [s, word] : w.at) j[std::to_string(s)] = swindle::to_string(word);
    return j;
}

int cmd_swindle(int letters, int depth, std::uint64_t seed, const std::string& format) {
    using namespace swindle;
    if (letters < 1) throw ValidationError("--letters must be at least 1");
    std::mt19937_64 rng(seed);
    bool all = true;

    EmLayout em = em_layout(letters);
    json layout = json::array();
    for (const auto& s : em.slots) {
        std::string tag = s.tag == Tag::red ? "red" : s.tag == Tag::blue ? "blue" : s.tag == Tag::blue_bar ? "blue-bar" : "sep";
        layout.push_back(s.tag == Tag::separator ? json(tag) : json(tag + ":" + std::to_string(s.letter)));
    }
    json blocks = json::array();
    for (std::size_t i = 0; i < em.h2_groups.size(); ++i) {
        bool ok = alternating_check(em.h2, em.h2_groups[i]);
        all = all && ok;
        blocks.push_back({{"element", "h2"}, {"group", i + 1}, {"alternating", ok}});
    }
    for (std::size_t i = 0; i < em.h1_groups.size(); ++i) {
        bool ok = alternating_check(em.h1, em.h1_groups[i]);
        all = all && ok;
        blocks.push_back({{"element", "h1"}, {"group", i + 1}, {"alternating", ok}});
    }
    all = all && em.separators_ok && em.proof_order;

    // Anderson trick on a random word supported on the first slots of the brick row
    SlotWord h;
    std::uniform_int_distribution<int> letter(1, letters), sign(0, 1), len(0, 3);
    const int support = std::max(1, std::min(8, depth - 1));
    for (int s = 0; s < support; ++s) {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
        h.set(s, w);
    }
    AndersonResult a = anderson(h, depth);
    all = all && a.check;

    // alternating pairs round trip
    SlotWord f;
    Split split;
    for (int i = 0; i < support; ++i) {
        Word w{sign(rng) ? letter(rng) : -letter(rng)};
        f.set(2 * i, w);
        f.set(2 * i + 1, inverse(w));
        split.a1.push_back(2 * i);
        split.a2.push_back(2 * i + 1);
        split.conj[2 * i] = 2 * i + 1;
    }
    CommutatorResult c = commutator_from_alternating(f, split);
    all = all && c.check;

    json j;
    j["schema"] = 1;
    j["letters"] = letters;
    j["depth"] = depth;
    j["seed"] = seed;
    j["layout"] = layout;
    j["separators"] = em.separators_ok;
    j["blocks"] = blocks;
    j["identity"] = {{"f = h1 h2", em.stated_order}, {"f = h2^-1 h1", em.proof_order}};
    j["anderson"] = {{"h", word_json(h)}, {"block", a.block}, {"window", depth}, {"check", a.check}};
    j["commutator"] = {{"pairs", support}, {"check", c.check}};
    j["ok"] = all;
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "layout   ";
        for (const auto& s : layout) std::cout << s.get<std::string>() << " ";
        std::cout << "\nblocks   ";
        for (const auto& b : blocks) std::cout << b["element"].get<std::string>() << "#" << b["group"] << "="
                                               << (b["alternating"].get<bool>() ? "ok" : "FAIL") << " ";
        std::cout << "\nf = h1 h2      " << (em.stated_order ? "holds" : "fails") << "\n";
        std::cout << "f = h2^-1 h1   " << (em.proof_order ? "holds" : "fails") << "\n";
        std::cout << "anderson       " << (a.check ? "ok" : "FAIL") << " (block " << a.block << ", window "
                  << depth << ")\n";
        std::cout << "commutator     " << (c.check ? "ok" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_constants(const std::string& format) {
    auto dag = constants();
    if (format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < dag.size(); ++i) {
            std::vector<DagNode> before(dag.begin(), dag.begin() + i);
            arr.push_back({{"node", dag[i].name},
                           {"expression", expression(dag[i], before)},
                           {"depends", dag[i].deps},
                           {"value", dag[i].value},
                           {"note", dag[i].quote}});
        }
        std::cout << json{{"schema", 1}, {"nodes", arr}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < dag.size(); ++i) {
        std::vector<DagNode> before(dag.begin(), dag.begin() + i);
        std::ostringstream line;
        line.setf(std::ios::left);
        line.width(24);
        line << dag[i].name;
        line.width(22);
        line << expression(dag[i], before);
        line << dag[i].value;
        std::cout << line.str() << "\n";
    }
    return 0;
}

Term term_arg(const std::string& arg) {
    std::ifstream probe(arg);
    std::string text = probe ? slurp(arg) : arg;
    Term t = parse_term(text);
    auto v = validate(t);
    if (!v.empty()) throw ValidationError(v.front().rule + " violated at " + v.front().subterm);
    return t;
}

int cmd_oracle(const std::vector<std::string>& pair, int depth) {
    Term a = term_arg(pair.at(0)), b = term_arg(pair.at(1));
    auto c = oracle::equiv_invariants(a, b, depth);
    std::cout << (c.same ? "same" : "differ") << ": " << c.witness << "\n";
    return c.same ? 0 : 1;
}

int cmd_examples(const std::string& name) {
    if (name.empty()) {
        for (const auto& n : builtin_names()) std::cout << n << "\n";
        return 0;
    }
    auto text = builtin_example(name);
    if (!text) {
        std::cerr << "endscope: no built-in example named '" << name << "'\n";
        return kUsage;
    }
    std::cout << *text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"endscope: end spaces, stability, telescoping and automatic-continuity verdicts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string file, format = "text", end, kind = "decomposition", brick = "(10)", check_file, name;
    int depth = default_depth(), letters = 2;
    std::uint64_t seed = 1;
    std::vector<std::string> compare;

    auto* parse_cmd = app.add_subcommand("parse", "parse and pretty-print an input");
    parse_cmd->add_option("file", file, "input file or - for stdin")->required();
    auto* norm_cmd = app.add_subcommand("normalize", "print the normal form");
    norm_cmd->add_option("file", file, "input file or - for stdin")->required();
    auto* classify_cmd = app.add_subcommand("classify", "dump the germ table");
    classify_cmd->add_option("file", file, "input file or - for stdin")->required();
    auto* verdict_cmd = app.add_subcommand("verdict", "automatic-continuity verdict");
    verdict_cmd->add_option("file", file, "input file or - for stdin")->required();
    verdict_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* certify_cmd = app.add_subcommand("certify", "emit or check a certificate");
    certify_cmd->add_option("file", file, "input file or - for stdin")->required();
    certify_cmd->add_option("--end", end, "class id of the basepoint");
    certify_cmd->add_option("--kind", kind, "decomposition, annuli or shift")
        ->check(CLI::IsMember({"decomposition", "annuli", "shift"}));
    certify_cmd->add_option("--brick", brick, "brick word prefix(period) for shift certificates");
    certify_cmd->add_option("--check", check_file, "certificate to replay");
    certify_cmd->add_option("--depth", depth, "checker depth")->check(CLI::PositiveNumber);
    auto* swindle_cmd = app.add_subcommand("swindle", "slot-model commutator checks");
    swindle_cmd->add_option("--letters", letters, "number of free generators")->required();
    swindle_cmd->add_option("--depth", depth, "window depth")->required()->check(CLI::PositiveNumber);
    swindle_cmd->add_option("--seed", seed, "seed for the random words");
    swindle_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* const_cmd = app.add_subcommand("constants", "evaluate the exponent DAG");
    const_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* oracle_cmd = app.add_subcommand("oracle", "compare truncation invariants of two terms");
    oracle_cmd->add_option("--compare", compare, "two terms (text or files)")->required()->expected(2);
    oracle_cmd->add_option("--depth", depth, "truncation depth")->check(CLI::PositiveNumber);
    auto* ex_cmd = app.add_subcommand("examples", "print a built-in example");
    ex_cmd->add_option("name", name, "example name; omit to list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*parse_cmd) return cmd_parse(file);
        if (*norm_cmd) return cmd_normalize(file);
        if (*classify_cmd) return cmd_classify(file);
        if (*verdict_cmd) return cmd_verdict(file, format);
        if (*certify_cmd) return cmd_certify(file, end, kind, brick, check_file, depth);
        if (*swindle_cmd) return cmd_swindle(letters, depth, seed, format);
        if (*const_cmd) return cmd_constants(format);
        if (*oracle_cmd) return cmd_oracle(compare, depth);
        if (*ex_cmd) return cmd_examples(name);
    } catch (const FileError& e) {
        std::cerr << "endscope: " << e.what() << "\n";
        return kUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "endscope: syntax error at " << e.what() << "\n";
        return kDataErr;
    } catch (const Error& e) {
        std::cerr << "endscope: " << e.what() << "\n";
        return kDataErr;
    } catch (const std::exception& e) {
        std::cerr << "endscope: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
