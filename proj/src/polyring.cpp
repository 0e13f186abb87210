#include "flagmorph/polyring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace flagmorph {

Monomial::Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second <= 0)
            throw std::invalid_argument("Monomial: exponents must be positive");
        if (i > 0 && factors_[i].first == factors_[i - 1].first)
            throw std::invalid_argument("Monomial: duplicate variable");
    }
}

Monomial Monomial::variable(int var, int exponent) {
    return Monomial({{var, exponent}});
}

int Monomial::exponent(int var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::make_pair(var, 0));
    if (it != factors_.end() && it->first == var) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::pair<int, int>> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    Monomial result;
    result.factors_ = std::move(merged);
    return result;
}

long Monomial::weighted_degree(const WeightMap& weights) const {
    long degree = 0;
    for (const auto& [var, exp] : factors_) {
        auto it = weights.find(var);
        degree += static_cast<long>(exp) * (it == weights.end() ? 1 : it->second);
    }
    return degree;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        int va = a == factors_.end() ? std::numeric_limits<int>::max() : a->first;
        int vb = b == other.factors_.end() ? std::numeric_limits<int>::max() : b->first;
        int ea = 0, eb = 0;
        if (va <= vb) ea = a->second;
        if (vb <= va) eb = b->second;
        if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
        if (va <= vb) ++a;
        if (vb <= va) ++b;
    }
    return std::strong_ordering::equal;
}

Polynomial::Polynomial(long constant) {
    if (constant != 0) terms_.emplace(Monomial{}, Int(constant));
}

Polynomial::Polynomial(Int constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::variable(int var, int weight) {
    if (weight <= 0) throw std::invalid_argument("Polynomial: weights must be positive");
    Polynomial p;
    p.terms_.emplace(Monomial::variable(var), Int(1));
    if (weight != 1) p.weights_.emplace(var, weight);
    return p;
}

Polynomial Polynomial::term(Int coefficient, Monomial monomial, WeightMap weights) {
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(std::move(monomial), std::move(coefficient));
    std::erase_if(weights, [](const auto& kv) { return kv.second == 1; });
    p.weights_ = std::move(weights);
    return p;
}

int Polynomial::weight_of(int var) const {
    auto it = weights_.find(var);
    return it == weights_.end() ? 1 : it->second;
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

std::set<int> Polynomial::variables() const {
    std::set<int> vars;
    for (const auto& [mono, coef] : terms_)
        for (const auto& [var, exp] : mono.factors()) vars.insert(var);
    return vars;
}

WeightMap Polynomial::merge_weights(const WeightMap& a, const WeightMap& b) {
    WeightMap merged = a;
    for (const auto& [var, w] : b) {
        auto [it, inserted] = merged.emplace(var, w);
        if (!inserted && it->second != w)
            throw std::invalid_argument("Polynomial: variable weight assignments disagree");
    }
    return merged;
}

void Polynomial::insert_term(const Monomial& m, const Int& coefficient) {
    auto [it, inserted] = terms_.emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial result = *this;
    result += other;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    weights_ = merge_weights(weights_, other.weights_);
    for (const auto& [mono, coef] : other.terms_) insert_term(mono, coef);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial result = *this;
    result -= other;
    return result;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    weights_ = merge_weights(weights_, other.weights_);
    for (const auto& [mono, coef] : other.terms_) insert_term(mono, -coef);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial result;
    result.weights_ = weights_;
    for (const auto& [mono, coef] : terms_) result.terms_.emplace(mono, -coef);
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial result;
    result.weights_ = merge_weights(weights_, other.weights_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            result.insert_term(ma * mb, ca * cb);
        }
    }
    return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial result(1);
    result.weights_ = weights_;
    Polynomial base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Int Polynomial::eval(const std::map<int, Int>& point) const {
    Int total = 0;
    for (const auto& [mono, coef] : terms_) {
        Int value = coef;
        for (const auto& [var, exp] : mono.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw std::invalid_argument("Polynomial::eval: variable X" + std::to_string(var) +
                                            " has no assigned value");
            Int p;
            mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(exp));
            value *= p;
        }
        total += value;
    }
    return total;
}

Polynomial Polynomial::truncate(long max_degree) const {
    if (max_degree < 0) throw std::invalid_argument("Polynomial::truncate: negative degree bound");
    Polynomial result;
    result.weights_ = weights_;
    for (const auto& [mono, coef] : terms_)
        if (mono.weighted_degree(weights_) <= max_degree) result.terms_.emplace(mono, coef);
    return result;
}

Polynomial Polynomial::series_invert(long max_degree) const {
    if (max_degree < 0) throw std::invalid_argument("Polynomial::series_invert: negative degree bound");
    Int c0 = constant_term();
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument(
            "Polynomial::series_invert: constant term must be a unit (+1 or -1) in Z, got " +
            c0.get_str());
    Polynomial unit(c0);
    unit.weights_ = weights_;
    // p = c0 (1 + u), so 1/p = c0 * sum (-u)^j; u has weighted degree >= 1.
    Polynomial u = ((*this - unit) * unit).truncate(max_degree);
    Polynomial result(1);
    result.weights_ = weights_;
    Polynomial power(1);
    power.weights_ = weights_;
    for (long j = 1; j <= max_degree; ++j) {
        power = (power * (-u)).truncate(max_degree);
        if (power.is_zero()) break;
        result += power;
    }
    return result * unit;
}

long Polynomial::weighted_degree() const {
    long degree = -1;
    for (const auto& [mono, coef] : terms_)
        degree = std::max(degree, mono.weighted_degree(weights_));
    return degree;
}

bool Polynomial::is_homogeneous() const {
    long degree = -1;
    for (const auto& [mono, coef] : terms_) {
        long d = mono.weighted_degree(weights_);
        if (degree == -1) degree = d;
        if (d != degree) return false;
    }
    return true;
}

Polynomial Polynomial::homogeneous_part(long degree) const {
    Polynomial result;
    result.weights_ = weights_;
    for (const auto& [mono, coef] : terms_)
        if (mono.weighted_degree(weights_) == degree) result.terms_.emplace(mono, coef);
    return result;
}

Polynomial Polynomial::rename_variables(const std::map<int, int>& mapping) const {
    Polynomial result;
    for (const auto& [var, weight] : weights_) {
        auto it = mapping.find(var);
        int target = it == mapping.end() ? var : it->second;
        if (weight != 1) result.weights_.emplace(target, weight);
    }
    for (const auto& [mono, coef] : terms_) {
        std::vector<std::pair<int, int>> factors;
        factors.reserve(mono.factors().size());
        for (const auto& [var, exp] : mono.factors()) {
            auto it = mapping.find(var);
            factors.emplace_back(it == mapping.end() ? var : it->second, exp);
        }
        result.insert_term(Monomial(std::move(factors)), coef);
    }
    if (result.terms_.size() != terms_.size())
        throw std::invalid_argument("Polynomial::rename_variables: mapping is not injective");
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << coef.get_str();
        for (const auto& [var, exp] : mono.factors()) {
            out << "*X" << var;
            if (exp != 1) out << "^" << exp;
        }
    }
    return out.str();
}

}  // namespace flagmorph
