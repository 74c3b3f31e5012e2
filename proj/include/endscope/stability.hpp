#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "endscope/germs.hpp"
#include "endscope/termlang.hpp"

namespace endscope {

// checker depth: ENDSCOPE_DEPTH or 20
int default_depth();

// Piece Y_k (k >= 1) sits at address 1^(k-1)0 of the neighbourhood tree;
// N_j = [1^j] is the j-th basic neighbourhood of the basepoint.
struct Piece {
    std::size_t index = 0;
    std::string address;
    std::optional<Term> content;  // empty piece when absent
};

struct Decomposition {
    std::string basepoint;
    std::string scheme;  // "point-groups" | "clopen-shells" | "rank-shells" | "empty"
    Term nbhd;
    Color color = Color::planar;
    std::vector<Piece> pieces;
    std::vector<std::string> embed_witness;             // tag for Y_k -> Y_{k+1}
    std::vector<std::vector<std::size_t>> subsequences;  // index sequences used for reassembly
    std::vector<std::string> subsequence_witness;
};

enum class Stability { stable, unstable, unknown };
const char* to_string(Stability s);

struct StabilityResult {
    Stability status = Stability::unknown;
    std::optional<Decomposition> decomposition;
    std::string obstruction;
};

StabilityResult stable_nbhd(const GermTable& table, const std::string& x, int depth = default_depth());
Decomposition decompose(const Term& t, const std::string& x, int depth = default_depth());

struct CheckReport {
    bool ok = true;
    std::vector<std::pair<std::string, bool>> checks;
    void add(std::string name, bool pass) {
        ok = ok && pass;
        checks.emplace_back(std::move(name), pass);
    }
};

// true when a embeds as a clopen subset of b (term level)
bool embeds(const Term& a, const Term& b);

CheckReport check(const Decomposition& d);

// U' = U minus finitely many pieces
struct SubNeighborhood {
    std::set<std::size_t> removed;
    bool keeps_basepoint = true;
};

struct BlockMove {
    std::vector<std::size_t> from;
    std::vector<std::size_t> to;
};

struct ShrinkWitness {
    std::string basepoint;
    std::string recipe;  // "hilbert-hotel" | "block-absorption" | "identity"
    std::vector<BlockMove> moves;
    std::size_t fixed_from = 1;  // pieces from here on are not listed in a move
};

ShrinkWitness build_shrink_witness(const Term& t, const std::string& x, const SubNeighborhood& u,
                                   int depth = default_depth());
CheckReport check_shrink(const Decomposition& d, const SubNeighborhood& u, const ShrinkWitness& w);

// bijection of the blocks Y_1..Y_p; image[i-1] = h(i)
struct BlockBijection {
    std::size_t p = 0;
    std::vector<std::size_t> image;
};

// phi[i-1] is the block of Y[m] receiving Y_i
BlockBijection extend_embedding(std::size_t n, std::size_t m, const std::vector<std::size_t>& phi);
bool check_extension(std::size_t n, const std::vector<std::size_t>& phi, const BlockBijection& h);

// subset of the natural numbers with eventually periodic characteristic word
struct Brick {
    std::vector<bool> prefix;
    std::vector<bool> period;
    bool valid() const;  // infinite and co-infinite
    bool contains(std::uint64_t n) const;
    std::string to_string() const;
    static Brick parse(const std::string& text);  // "prefix(period)", e.g. "(10)"
};

// re-indexing of the naturals as Z x N with the brick on row 0; sigma moves rows by one
class ShiftMap {
public:
    explicit ShiftMap(Brick b);
    const Brick& brick() const { return b_; }
    std::pair<std::int64_t, std::uint64_t> position(std::uint64_t n) const;
    std::uint64_t index(std::int64_t row, std::uint64_t col) const;
    std::uint64_t apply(std::uint64_t n, std::int64_t power) const;

private:
    Brick b_;
    std::size_t ones_prefix_ = 0, ones_period_ = 0;
    std::uint64_t rank(std::uint64_t n, bool bit) const;
    std::uint64_t select(std::uint64_t j, bool bit) const;
};

ShiftMap shift(const Brick& b);
CheckReport check_shift(const ShiftMap& s, int depth = default_depth());

struct StablePart {
    Term part;
    std::string basepoint;
};

std::vector<StablePart> partition_stable(const Term& t);

struct Annulus {
    std::size_t index = 0;
    std::vector<std::string> content;
    bool genus = false;
};

struct AnnulusDecomposition {
    std::string basepoint;
    std::string tcase;
    std::vector<Annulus> annuli;
    std::vector<std::pair<std::size_t, std::size_t>> adjacency;
};

AnnulusDecomposition annuli(const SurfaceDescriptor& s, const std::string& x, int depth = default_depth());
CheckReport check_annuli(const GermTable& table, const AnnulusDecomposition& a);

nlohmann::ordered_json certificate(const Decomposition& d);
nlohmann::ordered_json certificate(const ShiftMap& s, int depth);
nlohmann::ordered_json certificate(const AnnulusDecomposition& a);
// replays a certificate; annulus certificates need the table of the surface
CheckReport check_certificate(const nlohmann::json& cert, const GermTable* table = nullptr);

}  // namespace endscope
