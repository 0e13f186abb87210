#include "flagmorph/bundles.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagmorph::bundles {

SplittingType::SplittingType(int base_dim, std::vector<long long> values)
    : m(base_dim), entries(std::move(values)) {
    if (m < 1) throw std::invalid_argument("SplittingType: base dimension must be at least 1");
    if (entries.empty()) throw std::invalid_argument("SplittingType: rank must be at least 1");
    std::sort(entries.begin(), entries.end(), std::greater<>());
}

std::string bundle_outcome_name(BundleOutcome outcome) {
    return outcome == BundleOutcome::Splits ? "Splits" : "Inconclusive";
}

namespace {

bool strictly_decreasing(const std::vector<long long>& values) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] <= values[i]) return false;
    return true;
}

}  // namespace

Classification classify(const SplittingType& type) {
    Classification result;
    const int r = type.rank();
    const int m = type.m;

    if (r <= m - 1) result.matched.emplace_back("low-rank");

    int max_count = 0;
    while (max_count < r && type.entries[static_cast<std::size_t>(max_count)] == type.entries[0])
        ++max_count;
    std::vector<long long> below_max(type.entries.begin() + max_count, type.entries.end());
    if (max_count >= 1 && max_count <= m - 2 && strictly_decreasing(below_max))
        result.matched.emplace_back("repeated-max");

    int min_count = 0;
    while (min_count < r &&
           type.entries[static_cast<std::size_t>(r - 1 - min_count)] == type.entries.back())
        ++min_count;
    std::vector<long long> above_min(type.entries.begin(), type.entries.end() - min_count);
    if (min_count >= 1 && min_count <= m - 2 && strictly_decreasing(above_min))
        result.matched.emplace_back("repeated-min");

    if (!result.matched.empty()) {
        result.outcome = BundleOutcome::Splits;
        result.rule = result.matched.front();
    }
    return result;
}

SplittingType dual_type(const SplittingType& type) {
    std::vector<long long> negated;
    negated.reserve(type.entries.size());
    for (long long a : type.entries) negated.push_back(-a);
    return SplittingType(type.m, std::move(negated));
}

}  // namespace flagmorph::bundles
