#include "flagmorph/chow.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "flagmorph/symmetric.hpp"

namespace flagmorph::chow {

FlagVariety::FlagVariety(int rank, std::vector<int> marked) : n(rank), dims(std::move(marked)) {
    if (n < 1) throw std::invalid_argument("FlagVariety: rank must be at least 1");
    if (dims.empty()) throw std::invalid_argument("FlagVariety: dims must be nonempty");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1 || dims[i] > n)
            throw std::invalid_argument("FlagVariety: dims must lie in 1..n");
        if (i > 0 && dims[i] <= dims[i - 1])
            throw std::invalid_argument("FlagVariety: dims must be strictly increasing");
    }
}

int FlagVariety::block_size(int block) const {
    if (block < 1 || block > block_count())
        throw std::invalid_argument("FlagVariety: block index out of range");
    int prev = block == 1 ? 0 : dims[static_cast<std::size_t>(block) - 2];
    return dims[static_cast<std::size_t>(block) - 1] - prev;
}

FlagVariety to_flag_variety(const ConsecutiveComplementForm& form) {
    if (form.m < 2) throw std::invalid_argument("ConsecutiveComplementForm: m must be at least 2");
    if (form.i < 1 || form.i + form.m - 3 > form.n)
        throw std::invalid_argument("ConsecutiveComplementForm: run {i..i+m-3} must fit in 1..n");
    std::vector<int> dims;
    for (int d = 1; d <= form.n; ++d)
        if (d < form.i || d > form.i + form.m - 3) dims.push_back(d);
    if (dims.empty())
        throw std::invalid_argument("ConsecutiveComplementForm: every node unmarked, not a flag variety");
    return FlagVariety(form.n, std::move(dims));
}

std::string block_generator_name(const BlockGenerator& g) {
    return "e[" + std::to_string(g.block) + "," + std::to_string(g.degree) + "]";
}

ChowPresentation presentation(const FlagVariety& fv) {
    ChowPresentation pres{fv, {}, {}};
    for (int l = 1; l <= fv.block_count(); ++l)
        pres.blocks.emplace_back(fv.block_start(l), fv.block_end(l));
    int ds = fv.variable_count();
    for (int degree = fv.n + 2 - ds; degree <= fv.n + 1; ++degree)
        pres.relations.emplace_back(degree, sym::complete_homogeneous(degree, ds));
    return pres;
}

std::vector<std::pair<Polynomial, int>> schubert_generators(const FlagVariety& fv, int degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("schubert_generators: degree_cap must be >= 1");
    std::vector<std::pair<Polynomial, int>> out;
    std::set<std::pair<int, int>> seen;  // (prefix length, degree)
    for (int l = 1; l <= fv.block_count(); ++l) {
        int prefix = fv.block_end(l);
        for (int t = 1; t <= std::min(prefix, degree_cap); ++t) {
            if (!seen.emplace(prefix, t).second) continue;
            out.emplace_back(sym::elementary(t, prefix), t);
        }
    }
    return out;
}

FlagVariety dualize(const FlagVariety& fv) {
    std::vector<int> dual;
    dual.reserve(fv.dims.size());
    for (int d : fv.dims) dual.push_back(fv.n + 1 - d);
    std::sort(dual.begin(), dual.end());
    return FlagVariety(fv.n, std::move(dual));
}

RunAnalysis consecutive_run(int n, const std::vector<int>& marked) {
    std::vector<bool> in_marked(static_cast<std::size_t>(n) + 1, false);
    for (int d : marked) {
        if (d < 1 || d > n) throw std::invalid_argument("consecutive_run: marked set must lie in 1..n");
        in_marked[static_cast<std::size_t>(d)] = true;
    }
    RunAnalysis analysis;
    int runs = 0, current = 0, first_start = 0;
    for (int d = 1; d <= n + 1; ++d) {
        bool complement = d <= n && !in_marked[static_cast<std::size_t>(d)];
        if (complement) {
            if (current == 0) {
                ++runs;
                if (runs == 1) first_start = d;
            }
            ++current;
            analysis.max_run_length = std::max(analysis.max_run_length, current);
        } else {
            current = 0;
        }
    }
    analysis.single_run = runs <= 1;
    if (runs == 1) analysis.start = first_start;
    return analysis;
}

std::vector<BlockGenerator> block_generators(const FlagVariety& fv, int weight_cap) {
    std::vector<BlockGenerator> out;
    for (int l = 1; l <= fv.block_count(); ++l)
        for (int t = 1; t <= std::min(fv.block_size(l), weight_cap); ++t)
            out.push_back(BlockGenerator{l, t});
    return out;
}

int generator_var_index(const FlagVariety& fv, const BlockGenerator& g) {
    if (g.block < 1 || g.block > fv.block_count() || g.degree < 1 ||
        g.degree > fv.block_size(g.block))
        throw std::invalid_argument("generator_var_index: generator outside the block structure");
    int prev = g.block == 1 ? 0 : fv.block_end(g.block - 1);
    return prev + g.degree;
}

WeightMap generator_weights(const FlagVariety& fv) {
    WeightMap weights;
    for (const BlockGenerator& g : block_generators(fv, fv.variable_count())) {
        if (g.degree != 1) weights.emplace(generator_var_index(fv, g), g.degree);
    }
    return weights;
}

namespace {

// Temporary generator indices used while a polynomial still mixes X
// variables with already-reduced generators.
int temp_generator_index(const FlagVariety& fv, int block, int degree) {
    int prev = block == 1 ? 0 : fv.block_end(block - 1);
    return fv.variable_count() + prev + degree;
}

// Rewrites a polynomial symmetric in the variables of `block` as a
// polynomial in that block's elementary symmetric polynomials (temporary
// indices). Standard leading-term reduction; a leading exponent vector that
// is not weakly decreasing across the block proves the input asymmetric.
Polynomial reduce_block_symmetric(const FlagVariety& fv, int block, const Polynomial& input) {
    const int start = fv.block_start(block);
    const int size = fv.block_size(block);

    std::vector<Polynomial> sigma(static_cast<std::size_t>(size) + 1);
    for (int t = 1; t <= size; ++t) {
        std::map<int, int> shift;
        for (int j = 1; j <= size; ++j) shift.emplace(j, start + j - 1);
        sigma[static_cast<std::size_t>(t)] = sym::elementary(t, size).rename_variables(shift);
    }

    Polynomial remainder = input;
    Polynomial out;
    while (!remainder.is_zero()) {
        const auto& [mono, coef] = *remainder.terms().begin();
        std::vector<int> lambda(static_cast<std::size_t>(size), 0);
        for (const auto& [var, exp] : mono.factors())
            lambda[static_cast<std::size_t>(var - start)] = exp;
        std::vector<std::pair<int, int>> gen_factors;
        Polynomial subtract = Polynomial::term(coef, Monomial{});
        for (int j = 0; j < size; ++j) {
            int step = lambda[static_cast<std::size_t>(j)] -
                       (j + 1 < size ? lambda[static_cast<std::size_t>(j) + 1] : 0);
            if (step < 0)
                throw std::invalid_argument(
                    "blockify: polynomial is not symmetric within block " + std::to_string(block));
            if (step > 0) {
                gen_factors.emplace_back(temp_generator_index(fv, block, j + 1), step);
                subtract *= sigma[static_cast<std::size_t>(j) + 1].pow(step);
            }
        }
        out += Polynomial::term(coef, Monomial(std::move(gen_factors)));
        remainder -= subtract;
    }
    return out;
}

}  // namespace

Polynomial blockify(const FlagVariety& fv, const Polynomial& target) {
    const int ds = fv.variable_count();
    for (int var : target.variables())
        if (var < 1 || var > ds)
            throw std::invalid_argument("blockify: target uses a variable outside X1..X" +
                                        std::to_string(ds));

    Polynomial current = target;
    for (int block = 1; block <= fv.block_count(); ++block) {
        const int start = fv.block_start(block);
        const int end = fv.block_end(block);
        // Split every term into its in-block part and the rest, then reduce
        // each in-block slice independently.
        std::map<Monomial, Polynomial> groups;
        for (const auto& [mono, coef] : current.terms()) {
            std::vector<std::pair<int, int>> inside, outside;
            for (const auto& [var, exp] : mono.factors())
                (var >= start && var <= end ? inside : outside).emplace_back(var, exp);
            groups[Monomial(std::move(outside))] +=
                Polynomial::term(coef, Monomial(std::move(inside)));
        }
        Polynomial next;
        for (const auto& [context, slice] : groups)
            next += Polynomial::term(Int(1), context) * reduce_block_symmetric(fv, block, slice);
        current = next;
    }

    std::map<int, int> down;
    WeightMap weights = generator_weights(fv);
    Polynomial relabeled = current;
    for (int var = ds + 1; var <= 2 * ds; ++var) down.emplace(var, var - ds);
    relabeled = relabeled.rename_variables(down);
    Polynomial context = Polynomial::term(Int(1), Monomial{}, weights);
    return relabeled * context;  // attaches the generator-ring weights
}

namespace {

// Per-block elementary generating series, as a polynomial in the generator
// ring: 1 + e_{l,1} + ... + e_{l,size} (alternating signs when requested).
Polynomial block_series(const FlagVariety& fv, int block, bool alternating) {
    WeightMap weights = generator_weights(fv);
    Polynomial series = Polynomial::term(Int(1), Monomial{}, weights);
    for (int t = 1; t <= fv.block_size(block); ++t) {
        int sign = alternating && (t % 2 == 1) ? -1 : 1;
        series += Polynomial::term(Int(sign),
                                   Monomial::variable(generator_var_index(fv, BlockGenerator{block, t})),
                                   weights);
    }
    return series;
}

}  // namespace

std::vector<std::pair<int, Polynomial>> blockified_relations(const FlagVariety& fv, int degree_cap) {
    const int ds = fv.variable_count();
    const int lowest = fv.n + 2 - ds;
    std::vector<std::pair<int, Polynomial>> out;
    if (degree_cap < lowest) return out;
    const int highest = std::min(fv.n + 1, degree_cap);

    Polynomial series(1);
    for (int block = 1; block <= fv.block_count(); ++block)
        series = (series * block_series(fv, block, /*alternating=*/true).series_invert(highest))
                     .truncate(highest);
    for (int degree = lowest; degree <= highest; ++degree)
        out.emplace_back(degree, series.homogeneous_part(degree));
    return out;
}

Polynomial blockified_prefix_elementary(const FlagVariety& fv, int prefix_block, int degree) {
    if (prefix_block < 1 || prefix_block > fv.block_count())
        throw std::invalid_argument("blockified_prefix_elementary: block out of range");
    if (degree < 1 || degree > fv.block_end(prefix_block))
        throw std::invalid_argument("blockified_prefix_elementary: degree out of range");
    Polynomial series(1);
    for (int block = 1; block <= prefix_block; ++block)
        series = (series * block_series(fv, block, /*alternating=*/false)).truncate(degree);
    return series.homogeneous_part(degree);
}

}  // namespace flagmorph::chow
