#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagmorph/polyring.hpp"

namespace flagmorph::chow {

/// A type-A flag variety: nested subspaces of dimensions dims[0] < ... in an
/// (n+1)-dimensional ambient space. Stored in dims form; the marked subset of
/// {1..n} is the dims set itself.
struct FlagVariety {
    int n = 0;
    std::vector<int> dims;

    FlagVariety(int rank, std::vector<int> marked);

    int block_count() const { return static_cast<int>(dims.size()); }
    int variable_count() const { return dims.back(); }
    /// Size of block l (1-based): dims[l-1] - dims[l-2].
    int block_size(int block) const;
    /// Last variable index covered by block l, i.e. dims[l-1].
    int block_end(int block) const { return dims[static_cast<std::size_t>(block) - 1]; }
    int block_start(int block) const { return block_end(block) - block_size(block) + 1; }

    bool operator==(const FlagVariety& other) const = default;
};

/// Flag varieties whose unmarked set {1..n} \ dims is one run of m-2
/// consecutive integers starting at i. For m == 2 the run is empty and the
/// variety is the complete flag.
struct ConsecutiveComplementForm {
    int n = 0;
    int m = 0;
    int i = 0;
};

FlagVariety to_flag_variety(const ConsecutiveComplementForm& form);

/// One unknown of the pullback problem: the degree-t elementary symmetric
/// polynomial of block l's variables. Its weighted degree is t.
struct BlockGenerator {
    int block = 0;
    int degree = 0;

    auto operator<=>(const BlockGenerator&) const = default;
};

std::string block_generator_name(const BlockGenerator& g);

/// Quotient presentation of the Chow ring: variables X1..X_{ds} split into
/// consecutive blocks (X_i is the first Chern class of the i-th universal
/// quotient line, dualized), with one complete homogeneous relation per
/// degree n+2-ds .. n+1.
struct ChowPresentation {
    FlagVariety fv;
    std::vector<std::pair<int, int>> blocks;              // [start, end] variable ranges
    std::vector<std::pair<int, Polynomial>> relations;    // (degree, polynomial)
};

ChowPresentation presentation(const FlagVariety& fv);

/// The effective generator classes: the degree-t elementary symmetric
/// polynomials of each prefix X1..X_{dl}, for t up to min(dl, degree_cap),
/// deduplicated by (prefix length, degree).
std::vector<std::pair<Polynomial, int>> schubert_generators(const FlagVariety& fv, int degree_cap);

/// Duality of the ambient space: dims map to n+1-d, re-sorted. Involution.
FlagVariety dualize(const FlagVariety& fv);

struct RunAnalysis {
    bool single_run = false;
    int max_run_length = 0;
    std::optional<int> start;  // set only when the complement is one run
};

/// Analyzes {1..n} \ I: whether it is a single consecutive run, the longest
/// run length, and the run start when single. The empty complement counts as
/// a single run of length 0 with no start.
RunAnalysis consecutive_run(int n, const std::vector<int>& marked);

/// Ordered block generators of weight at most weight_cap.
std::vector<BlockGenerator> block_generators(const FlagVariety& fv, int weight_cap);

/// Variable index used for a block generator in the generator ring:
/// dims[l-2] + t, which makes the generator variables 1..ds.
int generator_var_index(const FlagVariety& fv, const BlockGenerator& g);

/// Weight assignment of the generator ring (index of e_{l,t} maps to t).
WeightMap generator_weights(const FlagVariety& fv);

/// Rewrites a blockwise-symmetric polynomial in X variables as a polynomial
/// in the block generators, by per-block elementary symmetric reduction.
/// Rejects inputs that are not symmetric within every block. Weighted degree
/// is preserved.
Polynomial blockify(const FlagVariety& fv, const Polynomial& target);

/// All relation polynomials already written in the block generators,
/// restricted to degrees <= degree_cap. Computed from the generating
/// function: the complete homogeneous series is the truncated series inverse
/// of the alternating per-block elementary products.
std::vector<std::pair<int, Polynomial>> blockified_relations(const FlagVariety& fv, int degree_cap);

/// sigma_t of the prefix X1..X_{dl}, written in block generators (the
/// weight-t slice of the product of the per-block elementary series).
Polynomial blockified_prefix_elementary(const FlagVariety& fv, int prefix_block, int degree);

}  // namespace flagmorph::chow
