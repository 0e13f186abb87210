#include <doctest.h>

#include <random>

#include "flagmorph/symmetric.hpp"

using namespace flagmorph;
using namespace flagmorph::sym;

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::vector<Int> random_tuple(std::mt19937_64& rng, int size, int radius) {
    std::vector<Int> t(static_cast<std::size_t>(size));
    for (Int& x : t) x = Int(static_cast<long>(rng() % (2 * radius + 1)) - radius);
    return t;
}

std::map<int, Int> as_point(const std::vector<Int>& t) {
    std::map<int, Int> point;
    for (std::size_t i = 0; i < t.size(); ++i) point[static_cast<int>(i) + 1] = t[i];
    return point;
}

}  // namespace

TEST_CASE("complete homogeneous generators") {
    Polynomial h22 = complete_homogeneous(2, 2);
    Polynomial expected = Polynomial::variable(1).pow(2) +
                          Polynomial::variable(1) * Polynomial::variable(2) +
                          Polynomial::variable(2).pow(2);
    CHECK(h22 == expected);
    CHECK(complete_homogeneous(0, 5) == Polynomial(1));
    // 4 monomials, each 1 at the all-ones point
    CHECK(complete_homogeneous(3, 2).eval({{1, Int(1)}, {2, Int(1)}}) == 4);
    CHECK_THROWS_AS(complete_homogeneous(-1, 2), std::invalid_argument);
}

TEST_CASE("complete homogeneous term count is C(u+k-1, k-1)") {
    for (int k = 1; k <= 5; ++k)
        for (int u = 0; u <= 6; ++u)
            CHECK(Int(static_cast<long>(complete_homogeneous(u, k).terms().size())) ==
                  binomial(u + k - 1, k - 1));
}

TEST_CASE("elementary generators") {
    Polynomial e23 = elementary(2, 3);
    Polynomial expected = Polynomial::variable(1) * Polynomial::variable(2) +
                          Polynomial::variable(1) * Polynomial::variable(3) +
                          Polynomial::variable(2) * Polynomial::variable(3);
    CHECK(e23 == expected);
    CHECK(elementary(4, 3).is_zero());
    CHECK(elementary(0, 3) == Polynomial(1));
    Polynomial linear;
    for (int v = 1; v <= 6; ++v) linear += Polynomial::variable(v);
    CHECK(elementary(1, 6) == linear);
    for (int k = 1; k <= 6; ++k)
        for (int u = 0; u <= k; ++u)
            CHECK(Int(static_cast<long>(elementary(u, k).terms().size())) == binomial(k, u));
}

TEST_CASE("squared-variable generators") {
    CHECK(q_poly(1, 2) ==
          Polynomial::variable(1).pow(2) + Polynomial::variable(2).pow(2));
    CHECK(q_poly(0, 4) == Polynomial(1));
    Polynomial q22 = q_poly(2, 2);
    Polynomial expected = Polynomial::variable(1).pow(4) +
                          Polynomial::variable(1).pow(2) * Polynomial::variable(2).pow(2) +
                          Polynomial::variable(2).pow(4);
    CHECK(q22 == expected);
    CHECK(q22.is_homogeneous());
    CHECK(q22.weighted_degree() == 4);
    for (const auto& [mono, coef] : q_poly(3, 3).terms()) CHECK(coef > 0);
}

TEST_CASE("q_poly values are nonnegative and vanish only at zero") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 200; ++round) {
        int k = 1 + static_cast<int>(rng() % 4);
        int v = 1 + static_cast<int>(rng() % 3);
        std::vector<Int> t = random_tuple(rng, k, 4);
        Int value = q_poly(v, k).eval(as_point(t));
        CHECK(value >= 0);
        bool zero_tuple = std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; });
        CHECK((value == 0) == zero_tuple);
    }
}

TEST_CASE("claim decomposition at (2,2) by hand") {
    // lhs X1^2+X1X2+X2^2; rhs e_0*Q_1 + e_2*Q_0 = (X1^2+X2^2) + X1X2
    Polynomial lhs = complete_homogeneous(2, 2);
    Polynomial rhs = q_poly(1, 2) + elementary(2, 2);
    CHECK(lhs == rhs);
    CHECK(claim_check(2, 2));
}

TEST_CASE("claim decomposition trivial degree") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(complete_homogeneous(1, k) == elementary(1, k));
        CHECK(claim_check(1, k));
    }
}

TEST_CASE("claim decomposition over the full desk grid") {
    for (int k = 1; k <= 6; ++k)
        for (int j = 1; j <= k; ++j) CHECK(claim_check(j, k));
    CHECK_THROWS_AS(claim_check(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(claim_check(0, 2), std::invalid_argument);
}

TEST_CASE("claim decomposition numerically at random points") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 100; ++round) {
        int k = 1 + static_cast<int>(rng() % 5);
        int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
        std::vector<Int> t = random_tuple(rng, k, 5);
        Int lhs = complete_homogeneous_value(j, t);
        std::vector<Int> squares;
        for (const Int& x : t) squares.push_back(x * x);
        Int rhs = 0;
        for (int v = 0; 2 * v <= j; ++v)
            rhs += elementary_value(j - 2 * v, t) * complete_homogeneous_value(v, squares);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generating function identities") {
    CHECK(genfun_check(2, 4));
    CHECK(genfun_check(1, 6));  // the geometric-series case
    CHECK(genfun_check(5, 8));
    CHECK_THROWS_AS(genfun_check(0, 4), std::invalid_argument);
}

TEST_CASE("alternating Newton sum vanishes") {
    for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 8; ++l) CHECK(newton_identity_check(l, k));
}

TEST_CASE("evaluators agree with the polynomial route") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 120; ++round) {
        int k = 1 + static_cast<int>(rng() % 4);
        int u = static_cast<int>(rng() % 6);
        std::vector<Int> t = random_tuple(rng, k, 4);
        CHECK(complete_homogeneous_value(u, t) == complete_homogeneous(u, k).eval(as_point(t)));
        CHECK(elementary_value(u, t) == elementary(u, k).eval(as_point(t)));
    }
}

TEST_CASE("even positivity oracle") {
    auto [v1, c1] = even_positivity_oracle(2, {Int(1), Int(-1)});
    CHECK(v1 == 1);  // 1 - 1 + 1
    CHECK(c1 == PositivityCertificate::Positive);

    auto [v2, c2] = even_positivity_oracle(4, {Int(0), Int(0), Int(0)});
    CHECK(v2 == 0);
    CHECK(c2 == PositivityCertificate::ZeroAtOrigin);

    // 16 - 8 + 4 - 2 + 1
    auto [v3, c3] = even_positivity_oracle(4, {Int(2), Int(-1)});
    CHECK(v3 == 11);
    CHECK(c3 == PositivityCertificate::Positive);

    CHECK_THROWS_AS(even_positivity_oracle(3, {Int(1)}), std::invalid_argument);
    CHECK_THROWS_AS(even_positivity_oracle(0, {Int(1)}), std::invalid_argument);
}

TEST_CASE("even positivity exhaustively on a small grid") {
    for (int m : {2, 4}) {
        for (int k = 1; k <= 3; ++k) {
            std::vector<Int> t(static_cast<std::size_t>(k), Int(-2));
            while (true) {
                auto result = even_positivity_oracle(m, t);
                bool zero_tuple =
                    std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; });
                CHECK((result.value == 0) == zero_tuple);
                int idx = 0;
                while (idx < k && t[static_cast<std::size_t>(idx)] == 2) {
                    t[static_cast<std::size_t>(idx)] = -2;
                    ++idx;
                }
                if (idx == k) break;
                ++t[static_cast<std::size_t>(idx)];
            }
        }
    }
}
