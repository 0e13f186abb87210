#include "flagmorph/symmetric.hpp"

#include <functional>
#include <stdexcept>

namespace flagmorph::sym {

namespace {

// Walk all exponent vectors (a_1,...,a_k) with nonnegative entries summing to
// `degree` and hand each one to `emit`.
void for_each_composition(int degree, int var_count,
                          const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> exps(static_cast<std::size_t>(var_count), 0);
    std::function<void(int, int)> walk = [&](int var, int remaining) {
        if (var == var_count - 1) {
            exps[static_cast<std::size_t>(var)] = remaining;
            emit(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            walk(var + 1, remaining - e);
        }
    };
    if (var_count == 0) {
        if (degree == 0) emit(exps);
        return;
    }
    walk(0, degree);
}

Polynomial from_exponents(const std::vector<int>& exps, int multiplier = 1) {
    std::vector<std::pair<int, int>> factors;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) factors.emplace_back(static_cast<int>(i) + 1, exps[i] * multiplier);
    return Polynomial::term(Int(1), Monomial(std::move(factors)));
}

}  // namespace

Polynomial complete_homogeneous(int degree, int var_count) {
    if (degree < 0) throw std::invalid_argument("complete_homogeneous: degree must be nonnegative");
    if (var_count < 1) throw std::invalid_argument("complete_homogeneous: need at least one variable");
    Polynomial result;
    for_each_composition(degree, var_count,
                         [&](const std::vector<int>& exps) { result += from_exponents(exps); });
    return result;
}

Polynomial elementary(int degree, int var_count) {
    if (degree < 0) throw std::invalid_argument("elementary: degree must be nonnegative");
    if (var_count < 1) throw std::invalid_argument("elementary: need at least one variable");
    if (degree > var_count) return Polynomial();
    Polynomial result;
    std::vector<int> chosen;
    std::function<void(int)> walk = [&](int next) {
        if (static_cast<int>(chosen.size()) == degree) {
            std::vector<std::pair<int, int>> factors;
            for (int var : chosen) factors.emplace_back(var, 1);
            result += Polynomial::term(Int(1), Monomial(std::move(factors)));
            return;
        }
        int needed = degree - static_cast<int>(chosen.size());
        for (int var = next; var + needed - 1 <= var_count; ++var) {
            chosen.push_back(var);
            walk(var + 1);
            chosen.pop_back();
        }
    };
    walk(1);
    return result;
}

Polynomial q_poly(int index, int var_count) {
    if (index < 0) throw std::invalid_argument("q_poly: index must be nonnegative");
    if (var_count < 1) throw std::invalid_argument("q_poly: need at least one variable");
    Polynomial result;
    for_each_composition(index, var_count,
                         [&](const std::vector<int>& exps) { result += from_exponents(exps, 2); });
    return result;
}

Polynomial generator(SymKind kind, int degree, int var_count) {
    switch (kind) {
        case SymKind::CompleteHomogeneous: return complete_homogeneous(degree, var_count);
        case SymKind::Elementary: return elementary(degree, var_count);
        case SymKind::SquaredComplete: return q_poly(degree, var_count);
    }
    throw std::invalid_argument("generator: unknown kind");
}

Int complete_homogeneous_value(int degree, const std::vector<Int>& point) {
    if (degree < 0) throw std::invalid_argument("complete_homogeneous_value: negative degree");
    if (point.empty()) throw std::invalid_argument("complete_homogeneous_value: empty point");
    // accumulate sum over variables of a_i^e * (value of the tail at degree - e)
    std::function<Int(std::size_t, int)> walk = [&](std::size_t var, int remaining) -> Int {
        if (var == point.size() - 1) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), point[var].get_mpz_t(), static_cast<unsigned long>(remaining));
            return p;
        }
        Int total = 0;
        Int power = 1;
        for (int e = 0; e <= remaining; ++e) {
            total += power * walk(var + 1, remaining - e);
            power *= point[var];
        }
        return total;
    };
    return walk(0, degree);
}

Int elementary_value(int degree, const std::vector<Int>& point) {
    if (degree < 0) throw std::invalid_argument("elementary_value: negative degree");
    if (point.empty()) throw std::invalid_argument("elementary_value: empty point");
    if (degree > static_cast<int>(point.size())) return 0;
    std::vector<Int> e(static_cast<std::size_t>(degree) + 1, Int(0));
    e[0] = 1;
    for (const Int& x : point)
        for (std::size_t u = e.size() - 1; u >= 1; --u) e[u] += x * e[u - 1];
    return e[static_cast<std::size_t>(degree)];
}

bool claim_check(int j, int k) {
    if (j < 1 || j > k)
        throw std::invalid_argument("claim_check: requires 1 <= j <= k");
    Polynomial lhs = complete_homogeneous(j, k);
    Polynomial rhs;
    for (int v = 0; 2 * v <= j; ++v) {
        int u = j - 2 * v;
        Polynomial e = elementary(u, k);
        if (e.is_zero()) continue;
        rhs += e * q_poly(v, k);
    }
    return lhs == rhs;
}

namespace {

using Series = std::vector<Polynomial>;  // index = power of the series variable

Series series_mul(const Series& a, const Series& b, int max_degree) {
    Series out(static_cast<std::size_t>(max_degree) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(max_degree); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

bool genfun_check(int k, int max_degree) {
    if (k < 1 || max_degree < 1)
        throw std::invalid_argument("genfun_check: requires k >= 1 and max_degree >= 1");
    const auto D = static_cast<std::size_t>(max_degree);
    Series complete(D + 1), elem_alt(D + 1), elem(D + 1), squared(D + 1);
    for (std::size_t j = 0; j <= D; ++j) complete[j] = complete_homogeneous(static_cast<int>(j), k);
    for (std::size_t u = 0; u <= D; ++u) {
        elem[u] = elementary(static_cast<int>(u), k);
        elem_alt[u] = (u % 2 == 0) ? elem[u] : -elem[u];
    }
    for (std::size_t v = 0; 2 * v <= D; ++v) squared[2 * v] = q_poly(static_cast<int>(v), k);

    Series lhs1 = series_mul(complete, elem_alt, max_degree);
    if (!(lhs1[0] == Polynomial(1))) return false;
    for (std::size_t t = 1; t <= D; ++t)
        if (!lhs1[t].is_zero()) return false;

    Series lhs2 = series_mul(elem, squared, max_degree);
    for (std::size_t t = 0; t <= D; ++t)
        if (!(lhs2[t] == complete[t])) return false;
    return true;
}

bool newton_identity_check(int l, int k) {
    if (l < 1 || k < 1)
        throw std::invalid_argument("newton_identity_check: requires l >= 1 and k >= 1");
    Polynomial total;
    for (int i = 0; i <= l; ++i) {
        Polynomial term = elementary(i, k) * complete_homogeneous(l - i, k);
        if (i % 2 == 1) term = -term;
        total += term;
    }
    return total.is_zero();
}

PositivityResult even_positivity_oracle(int m, const std::vector<Int>& point) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("even_positivity_oracle: degree must be even and >= 2");
    if (point.empty()) throw std::invalid_argument("even_positivity_oracle: empty point");
    Int value = complete_homogeneous_value(m, point);
    bool all_zero = true;
    for (const Int& a : point)
        if (a != 0) { all_zero = false; break; }
    if (value < 0 || (value == 0 && !all_zero) || (value != 0 && all_zero))
        throw std::logic_error("even_positivity_oracle: nonnegativity invariant violated at " +
                               value.get_str() + "; this falsifies a trusted theorem");
    return {value, all_zero ? PositivityCertificate::ZeroAtOrigin : PositivityCertificate::Positive};
}

}  // namespace flagmorph::sym
