#include <doctest.h>

#include <random>

#include "flagmorph/polyring.hpp"
#include "flagmorph/symmetric.hpp"

using flagmorph::Int;
using flagmorph::Monomial;
using flagmorph::Polynomial;

namespace {

Polynomial X(int var) { return Polynomial::variable(var); }

// small random polynomials over X1..X10, total degree <= 6
Polynomial random_poly(std::mt19937_64& rng) {
    Polynomial p;
    int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<int, int>> factors;
        int degree_left = 6;
        int vars = static_cast<int>(rng() % 4);
        std::set<int> used;
        for (int v = 0; v < vars && degree_left > 0; ++v) {
            int var = 1 + static_cast<int>(rng() % 10);
            if (!used.insert(var).second) continue;
            int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(degree_left));
            factors.emplace_back(var, e);
            degree_left -= e;
        }
        long coef = static_cast<long>(rng() % 19) - 9;
        p += Polynomial::term(Int(coef), Monomial(factors));
    }
    return p;
}

std::map<int, Int> random_point(std::mt19937_64& rng) {
    std::map<int, Int> point;
    for (int var = 1; var <= 10; ++var) point[var] = Int(static_cast<long>(rng() % 9) - 4);
    return point;
}

}  // namespace

TEST_CASE("difference of squares") {
    Polynomial p = (X(1) + X(2)) * (X(1) - X(2));
    Polynomial expected = X(1) * X(1) - X(2) * X(2);
    CHECK(p == expected);
    CHECK(p.to_string() == "1*X1^2 + -1*X2^2");
}

TEST_CASE("multiplication by zero absorbs") {
    Polynomial p = X(1) * X(2) + Polynomial(7);
    CHECK((p * Polynomial()).is_zero());
    CHECK((Polynomial() * p).is_zero());
}

TEST_CASE("trinomial square expands to six terms with cross coefficient 2") {
    // multinomial expansion by hand:
    // (x+y+z)^2 = x^2+y^2+z^2 + 2xy + 2xz + 2yz
    Polynomial p = (X(1) + X(2) + X(3)).pow(2);
    CHECK(p.terms().size() == 6);
    CHECK(p.coefficient(Monomial({{1, 2}})) == 2 - 1 + 0);  // 1
    CHECK(p.coefficient(Monomial({{1, 1}, {2, 1}})) == 2);
    CHECK(p.coefficient(Monomial({{1, 1}, {3, 1}})) == 2);
    CHECK(p.coefficient(Monomial({{2, 1}, {3, 1}})) == 2);
    CHECK(p.coefficient(Monomial({{2, 2}})) == 1);
    CHECK(p.coefficient(Monomial({{3, 2}})) == 1);
}

TEST_CASE("eval substitutes exactly") {
    Polynomial p = X(1) * X(1) + X(1) * X(2) + X(2) * X(2);
    CHECK(p.eval({{1, Int(1)}, {2, Int(1)}}) == 3);

    // h_2(1,-1) = 1 - 1 + 1
    Polynomial h2 = flagmorph::sym::complete_homogeneous(2, 2);
    CHECK(h2.eval({{1, Int(1)}, {2, Int(-1)}}) == 1);

    Polynomial q = p + Polynomial(42);
    CHECK(q.eval({{1, Int(0)}, {2, Int(0)}}) == q.constant_term());

    CHECK_THROWS_AS(p.eval({{1, Int(1)}}), std::invalid_argument);
}

TEST_CASE("weight assignment mismatch is rejected") {
    Polynomial a = Polynomial::variable(3, 2);
    Polynomial b = Polynomial::variable(3, 5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_NOTHROW(a + Polynomial::variable(3, 2));
}

TEST_CASE("truncate drops high weighted degrees") {
    Polynomial p = Polynomial(1) + X(1) + X(1) * X(1);
    CHECK(p.truncate(1) == Polynomial(1) + X(1));
    CHECK(p.truncate(100) == p);

    Polynomial h3 = flagmorph::sym::complete_homogeneous(3, 2);
    CHECK(h3.truncate(2).is_zero());

    // weighted: X1 of weight 3 exceeds a degree-2 cut
    Polynomial w = Polynomial::variable(1, 3) + Polynomial(5);
    CHECK(w.truncate(2) == Polynomial(5));
}

TEST_CASE("truncate is idempotent and linear") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        Polynomial p = random_poly(rng);
        Polynomial q = random_poly(rng);
        long d = static_cast<long>(rng() % 7);
        CHECK(p.truncate(d).truncate(d) == p.truncate(d));
        CHECK((p + q).truncate(d) == p.truncate(d) + q.truncate(d));
    }
}

TEST_CASE("series inversion: geometric series") {
    Polynomial p = Polynomial(1) - X(1);
    Polynomial inv = p.series_invert(3);
    Polynomial expected = Polynomial(1) + X(1) + X(1).pow(2) + X(1).pow(3);
    CHECK(inv == expected);
    CHECK(Polynomial(1).series_invert(8) == Polynomial(1));
}

TEST_CASE("series inversion matches the product of geometric series") {
    Polynomial p = (Polynomial(1) - X(1)) * (Polynomial(1) - X(2));
    Polynomial inv = p.series_invert(2);
    // independent oracle: 1 + h_1 + h_2 built by direct enumeration
    Polynomial expected = Polynomial(1) + flagmorph::sym::complete_homogeneous(1, 2) +
                          flagmorph::sym::complete_homogeneous(2, 2);
    CHECK(inv == expected);
}

TEST_CASE("series inversion rejects non-unit constant") {
    CHECK_THROWS_AS((Polynomial(2) + X(1)).series_invert(3), std::invalid_argument);
    CHECK_THROWS_AS(X(1).series_invert(3), std::invalid_argument);
}

TEST_CASE("series inversion against -1 constant") {
    Polynomial p = Polynomial(-1) + X(1);
    CHECK((p * p.series_invert(5)).truncate(5) == Polynomial(1));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        Polynomial a = random_poly(rng);
        Polynomial b = random_poly(rng);
        Polynomial c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 40; ++round) {
        Polynomial a = random_poly(rng);
        Polynomial b = random_poly(rng);
        auto point = random_point(rng);
        CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
        CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
    }
}

TEST_CASE("series inverses verify against their source") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 25; ++round) {
        Polynomial p = random_poly(rng).truncate(4);
        p -= Polynomial(p.constant_term());
        p += Polynomial(rng() % 2 == 0 ? 1 : -1);
        long d = 3 + static_cast<long>(rng() % 4);
        CHECK((p * p.series_invert(d)).truncate(d) == Polynomial(1));
    }
}

TEST_CASE("canonical text form is deterministic") {
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial(-3).to_string() == "-3");
    Polynomial p = Polynomial(1) + X(1) + X(1) * X(1);
    CHECK(p.to_string() == "1*X1^2 + 1*X1 + 1");
    Polynomial q = X(2) * X(3).pow(2) * Polynomial(5) - X(1) * Polynomial(7);
    CHECK(q.to_string() == "-7*X1 + 5*X2*X3^2");
    CHECK(flagmorph::sym::complete_homogeneous(2, 2).to_string() ==
          "1*X1^2 + 1*X1*X2 + 1*X2^2");
}

TEST_CASE("monomial order: earlier variable with higher exponent first") {
    Polynomial p = X(2).pow(2) + X(1) * X(2) + X(1).pow(2);
    CHECK(p.to_string() == "1*X1^2 + 1*X1*X2 + 1*X2^2");
}

TEST_CASE("homogeneous parts and weighted degree") {
    Polynomial p = X(1).pow(3) + X(1) * X(2) + Polynomial(9);
    CHECK(p.weighted_degree() == 3);
    CHECK(!p.is_homogeneous());
    CHECK(p.homogeneous_part(2) == X(1) * X(2));
    CHECK(flagmorph::sym::elementary(2, 4).is_homogeneous());

    Polynomial w = Polynomial::variable(1, 2) * Polynomial::variable(2, 3);
    CHECK(w.weighted_degree() == 5);
}
