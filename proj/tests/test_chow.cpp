#include <doctest.h>

#include <random>

#include "flagmorph/chow.hpp"
#include "flagmorph/symmetric.hpp"

using namespace flagmorph;
using namespace flagmorph::chow;

namespace {

Polynomial evar(const FlagVariety& fv, int block, int degree) {
    BlockGenerator g{block, degree};
    return Polynomial::variable(generator_var_index(fv, g), degree);
}

// h_i in variables first..first+count-1
Polynomial shifted_complete(int degree, int first, int count) {
    std::map<int, int> shift;
    for (int v = 1; v <= count; ++v) shift.emplace(v, first + v - 1);
    return sym::complete_homogeneous(degree, count).rename_variables(shift);
}

}  // namespace

TEST_CASE("flag variety validation and round trip") {
    CHECK_THROWS_AS(FlagVariety(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(FlagVariety(4, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FlagVariety(4, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FlagVariety(4, {5}), std::invalid_argument);

    FlagVariety fv = to_flag_variety({4, 3, 2});  // unmarked run {2}
    CHECK(fv.dims == std::vector<int>{1, 3, 4});
    RunAnalysis run = consecutive_run(fv.n, fv.dims);
    CHECK(run.single_run);
    CHECK(run.max_run_length == 1);
    CHECK(run.start == 2);

    // m == 2 gives the complete flag
    CHECK(to_flag_variety({3, 2, 1}).dims == std::vector<int>{1, 2, 3});
    // every node unmarked is not a flag variety
    CHECK_THROWS_AS(to_flag_variety({3, 5, 1}), std::invalid_argument);
}

TEST_CASE("presentation of the prefix family has relations m..n+1") {
    // dims 1..n-m+2 for (n, m) = (4, 3)
    FlagVariety fv(4, {1, 2, 3});
    ChowPresentation pres = presentation(fv);
    REQUIRE(pres.relations.size() == 3);
    CHECK(pres.relations.front().first == 3);
    CHECK(pres.relations.back().first == 5);
    for (const auto& [degree, poly] : pres.relations) {
        CHECK(poly == sym::complete_homogeneous(degree, 3));
        CHECK(poly.is_homogeneous());
        CHECK(poly.weighted_degree() == degree);
    }
}

TEST_CASE("presentation of the incidence family") {
    FlagVariety fv(4, {1, 4});  // k = 2
    ChowPresentation pres = presentation(fv);
    CHECK(pres.blocks == std::vector<std::pair<int, int>>{{1, 1}, {2, 4}});
    REQUIRE(pres.relations.size() == 4);
    CHECK(pres.relations.front().first == 2);
    CHECK(pres.relations.back().first == 5);
}

TEST_CASE("presentation of the projective line") {
    FlagVariety fv(1, {1});
    ChowPresentation pres = presentation(fv);
    REQUIRE(pres.relations.size() == 1);
    CHECK(pres.relations[0].first == 2);
    CHECK(pres.relations[0].second == Polynomial::variable(1).pow(2));
}

TEST_CASE("relation degrees are always n+2-ds .. n+1") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 20; ++round) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<int> dims;
        for (int d = 1; d <= n; ++d)
            if (rng() % 2 == 0) dims.push_back(d);
        if (dims.empty()) dims.push_back(1 + static_cast<int>(rng() % n));
        FlagVariety fv(n, dims);
        ChowPresentation pres = presentation(fv);
        CHECK(static_cast<int>(pres.relations.size()) == fv.variable_count());
        CHECK(pres.relations.front().first == fv.n + 2 - fv.variable_count());
        CHECK(pres.relations.back().first == fv.n + 1);
    }
}

TEST_CASE("schubert generators") {
    FlagVariety incidence(4, {1, 4});
    auto gens = schubert_generators(incidence, 1);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].first == Polynomial::variable(1));
    CHECK(gens[1].first == sym::elementary(1, 4));

    FlagVariety pn(5, {1});
    auto line = schubert_generators(pn, 5);
    REQUIRE(line.size() == 1);
    CHECK(line[0].first == Polynomial::variable(1));

    FlagVariety f13(3, {1, 3});
    auto all = schubert_generators(f13, 3);
    REQUIRE(all.size() == 4);  // X1 and e_1..e_3 of the full prefix
    for (const auto& [poly, degree] : all) {
        CHECK(degree <= 3);
        CHECK(poly.weighted_degree() == degree);
    }
}

TEST_CASE("dualize") {
    // prefix family maps to the terminal family
    FlagVariety fv(6, {1, 2, 3, 4});  // n-m+2 = 4 with m = 4
    CHECK(dualize(fv).dims == std::vector<int>{3, 4, 5, 6});
    CHECK(dualize(FlagVariety(4, {1, 3, 4})).dims == std::vector<int>{1, 2, 4});

    std::mt19937_64 rng(7);
    for (int round = 0; round < 25; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<int> dims;
        for (int d = 1; d <= n; ++d)
            if (rng() % 2 == 0) dims.push_back(d);
        if (dims.empty()) dims.push_back(1);
        FlagVariety x(n, dims);
        CHECK(dualize(dualize(x)) == x);
        CHECK(dualize(x).n == x.n);
    }
}

TEST_CASE("consecutive run analysis") {
    RunAnalysis a = consecutive_run(4, {1, 3, 4});
    CHECK(a.single_run);
    CHECK(a.max_run_length == 1);
    CHECK(a.start == 2);

    RunAnalysis b = consecutive_run(6, {3});
    CHECK(!b.single_run);
    CHECK(b.max_run_length == 3);
    CHECK(!b.start.has_value());

    RunAnalysis c = consecutive_run(5, {1, 2, 3, 4, 5});
    CHECK(c.single_run);
    CHECK(c.max_run_length == 0);
    CHECK(!c.start.has_value());

    CHECK_THROWS_AS(consecutive_run(4, {9}), std::invalid_argument);
}

TEST_CASE("blockify: first elementary is additive across blocks") {
    FlagVariety fv(5, {2, 3, 5});
    Polynomial target = sym::elementary(1, 5);
    Polynomial expected = evar(fv, 1, 1) + evar(fv, 2, 1) + evar(fv, 3, 1);
    CHECK(blockify(fv, target) == expected);
}

TEST_CASE("blockify h_2 for the line-hyperplane pair in rank 3") {
    FlagVariety fv(3, {1, 3});
    Polynomial a = evar(fv, 1, 1);
    Polynomial b1 = evar(fv, 2, 1);
    Polynomial b2 = evar(fv, 2, 2);
    Polynomial expected = (a + b1).pow(2) - (a * b1 + b2);
    CHECK(blockify(fv, sym::complete_homogeneous(2, 3)) == expected);
}

TEST_CASE("blockify the short complete homogeneous classes of the incidence family") {
    const int k = 2;
    FlagVariety fv(2 * k, {1, 2 * k});
    Polynomial a = evar(fv, 1, 1);
    Polynomial b1 = evar(fv, 2, 1);
    Polynomial b2 = evar(fv, 2, 2);

    // h_2 of the second block alone
    Polynomial h2_sub = shifted_complete(2, 2, 2 * k - 1);
    CHECK(blockify(fv, h2_sub) == b1 * b1 - b2);

    // h_2(X2..X2k) = h_2(X1..X2k) - X1 h_1(X1..X2k): modulo the degree-2
    // relation the image is -a(a+b1)
    Polynomial relation2 = blockify(fv, sym::complete_homogeneous(2, 2 * k));
    CHECK(blockify(fv, h2_sub) - (-a * (a + b1)) == relation2);
}

TEST_CASE("blockify preserves weighted degree and supports full weights") {
    FlagVariety fv(4, {1, 4});
    Polynomial target = sym::complete_homogeneous(3, 4);
    Polynomial image = blockify(fv, target);
    CHECK(image.is_homogeneous());
    CHECK(image.weighted_degree() == 3);
}

TEST_CASE("blockify rejects asymmetric input") {
    FlagVariety fv(3, {1, 3});
    CHECK_THROWS_AS(blockify(fv, Polynomial::variable(2)), std::invalid_argument);
    CHECK_THROWS_AS(blockify(fv, Polynomial::variable(2) * Polynomial::variable(2)),
                    std::invalid_argument);
    CHECK_NOTHROW(blockify(fv, Polynomial::variable(1)));
    CHECK_THROWS_AS(blockify(fv, Polynomial::variable(7)), std::invalid_argument);
}

TEST_CASE("series route and reduction route agree on relations") {
    for (const FlagVariety& fv :
         {FlagVariety(3, {1, 3}), FlagVariety(4, {1, 4}), FlagVariety(4, {1, 2, 3}),
          FlagVariety(5, {2, 4}), FlagVariety(5, {1, 3, 5}), FlagVariety(6, {2, 3, 6})}) {
        int cap = fv.n + 1;
        auto series_rel = blockified_relations(fv, cap);
        ChowPresentation pres = presentation(fv);
        REQUIRE(series_rel.size() == pres.relations.size());
        for (std::size_t idx = 0; idx < series_rel.size(); ++idx) {
            CHECK(series_rel[idx].first == pres.relations[idx].first);
            CHECK(series_rel[idx].second == blockify(fv, pres.relations[idx].second));
        }
    }
}

TEST_CASE("series route and reduction route agree on schubert prefixes") {
    for (const FlagVariety& fv :
         {FlagVariety(3, {1, 3}), FlagVariety(5, {2, 4}), FlagVariety(5, {1, 3, 5})}) {
        for (int l = 1; l <= fv.block_count(); ++l)
            for (int t = 1; t <= fv.block_end(l); ++t)
                CHECK(blockified_prefix_elementary(fv, l, t) ==
                      blockify(fv, sym::elementary(t, fv.block_end(l))));
    }
}

TEST_CASE("blockified classes evaluate consistently at integer roots") {
    std::mt19937_64 rng(41);
    for (const FlagVariety& fv :
         {FlagVariety(3, {1, 3}), FlagVariety(4, {2, 4}), FlagVariety(5, {1, 3, 5})}) {
        for (int round = 0; round < 30; ++round) {
            // integer roots per variable; generator values are the block
            // elementary symmetric values of those roots
            std::vector<Int> roots;
            for (int v = 0; v < fv.variable_count(); ++v)
                roots.push_back(Int(static_cast<long>(rng() % 7) - 3));
            std::map<int, Int> x_point;
            for (int v = 1; v <= fv.variable_count(); ++v)
                x_point[v] = roots[static_cast<std::size_t>(v) - 1];
            std::map<int, Int> e_point;
            for (const BlockGenerator& g : block_generators(fv, fv.variable_count())) {
                std::vector<Int> block_roots(
                    roots.begin() + fv.block_start(g.block) - 1,
                    roots.begin() + fv.block_end(g.block));
                e_point[generator_var_index(fv, g)] =
                    sym::elementary_value(g.degree, block_roots);
            }
            for (const auto& [degree, poly] : presentation(fv).relations)
                CHECK(blockify(fv, poly).eval(e_point) == poly.eval(x_point));
        }
    }
}

TEST_CASE("block generator bookkeeping") {
    FlagVariety fv(5, {2, 3, 5});
    auto gens = block_generators(fv, 5);
    REQUIRE(gens.size() == 5);  // sizes 2, 1, 2
    CHECK(gens[0] == BlockGenerator{1, 1});
    CHECK(gens[1] == BlockGenerator{1, 2});
    CHECK(gens[2] == BlockGenerator{2, 1});
    CHECK(gens[3] == BlockGenerator{3, 1});
    CHECK(gens[4] == BlockGenerator{3, 2});
    CHECK(generator_var_index(fv, gens[1]) == 2);
    CHECK(generator_var_index(fv, gens[4]) == 5);
    CHECK(block_generator_name(gens[4]) == "e[3,2]");
    CHECK(block_generators(fv, 1).size() == 3);
    CHECK_THROWS_AS(generator_var_index(fv, BlockGenerator{1, 3}), std::invalid_argument);
}
