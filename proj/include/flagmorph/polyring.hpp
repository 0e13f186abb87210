#pragma once

#include <compare>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace flagmorph {

/// Arbitrary-precision integer coefficient type.
using Int = mpz_class;

/// Int from a 64-bit value; gmpxx has no long long constructor.
inline Int to_int(long long value) {
    if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max())
        return Int(static_cast<long>(value));
    return Int(std::to_string(value));
}

/// Variable weights for the graded ring context. Variables absent from the
/// map have weight 1. Weight-1 entries are never stored.
using WeightMap = std::map<int, int>;

/// A monomial X_{v1}^{e1}...X_{vk}^{ek}, kept as (variable, exponent) pairs
/// sorted by variable index. Zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> factors);

    static Monomial variable(int var, int exponent = 1);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }
    int exponent(int var) const;

    Monomial operator*(const Monomial& other) const;

    /// Total weighted degree: sum of exponent * weight(var).
    long weighted_degree(const WeightMap& weights) const;

    /// Canonical term order: a monomial with the larger exponent at the
    /// smallest differing variable index comes first. Constants sort last.
    /// This drives both map iteration and the serialized text form.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

private:
    std::vector<std::pair<int, int>> factors_;
};

/// Sparse multivariate polynomial over arbitrary-precision integers with a
/// weighted grading attached to its ring context. Values are immutable after
/// construction in the sense that all operations return fresh polynomials.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long constant);  // NOLINT(google-explicit-constructor)
    explicit Polynomial(Int constant);

    static Polynomial variable(int var, int weight = 1);
    static Polynomial term(Int coefficient, Monomial monomial, WeightMap weights = {});

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    const WeightMap& weights() const { return weights_; }
    int weight_of(int var) const;

    /// Coefficient of a monomial (zero when absent).
    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient(Monomial{}); }

    std::set<int> variables() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    /// Equality is equality of canonical term maps.
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    Polynomial pow(int exponent) const;

    /// Exact evaluation. Every variable occurring in the polynomial must be
    /// assigned, otherwise the call is rejected.
    Int eval(const std::map<int, Int>& point) const;

    /// Drop all terms of weighted degree greater than max_degree.
    Polynomial truncate(long max_degree) const;

    /// Truncated power-series inverse: returns q with (p*q) truncated to
    /// max_degree equal to 1. The constant term must be a unit in Z (+-1).
    Polynomial series_invert(long max_degree) const;

    /// Largest weighted degree among terms (zero polynomial reports -1).
    long weighted_degree() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_part(long degree) const;

    /// Rename variables through `mapping` (old index -> new index). Weights
    /// follow the variables. Mapping must be injective on the variables used.
    Polynomial rename_variables(const std::map<int, int>& mapping) const;

    /// Canonical text form "coef*X1^a*X2^b + ..." in the deterministic term
    /// order; the zero polynomial prints "0".
    std::string to_string() const;

private:
    void insert_term(const Monomial& m, const Int& coefficient);
    static WeightMap merge_weights(const WeightMap& a, const WeightMap& b);

    std::map<Monomial, Int> terms_;
    WeightMap weights_;
};

}  // namespace flagmorph
