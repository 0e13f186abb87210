#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flagmorph::bundles {

/// Splitting type of a rank-r bundle restricted to lines of projective
/// m-space: a descending integer tuple, stored sorted.
struct SplittingType {
    int m = 0;
    std::vector<long long> entries;

    SplittingType(int base_dim, std::vector<long long> values);

    int rank() const { return static_cast<int>(entries.size()); }
};

enum class BundleOutcome { Splits, Inconclusive };

std::string bundle_outcome_name(BundleOutcome outcome);

/// The classifier is sound-only: the rules certify splitting, nothing
/// certifies unsplitness (the tangent bundle's type must stay inconclusive).
struct Classification {
    BundleOutcome outcome = BundleOutcome::Inconclusive;
    std::optional<std::string> rule;    // first rule that fired
    std::vector<std::string> matched;   // every rule that fired
};

/// Rules, checked in order:
///   "low-rank":   r <= m-1 (every uniform bundle of that rank splits);
///   "repeated-max": the maximum occurs k times, 1 <= k <= m-2, and the
///                   remaining entries are strictly decreasing;
///   "repeated-min": dually for the minimum.
Classification classify(const SplittingType& type);

/// Splitting type of the dual bundle: entries negated, re-sorted.
SplittingType dual_type(const SplittingType& type);

}  // namespace flagmorph::bundles
