#include "flagmorph/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

#include "flagmorph/symmetric.hpp"

namespace flagmorph::obstruction {

ConstraintSystem build_system(const chow::FlagVariety& fv, int m) {
    if (m < 2) throw std::invalid_argument("build_system: m must be at least 2");
    ConstraintSystem system{fv, m, {}, {}, {}, {}};
    system.unknowns = chow::block_generators(fv, m);
    for (const auto& g : system.unknowns) system.unknown_names.push_back(chow::block_generator_name(g));
    system.equalities = chow::blockified_relations(fv, m);
    std::set<std::pair<int, int>> seen;  // (prefix length, degree)
    for (int l = 1; l <= fv.block_count(); ++l) {
        int prefix = fv.block_end(l);
        for (int t = 1; t <= std::min(prefix, m); ++t) {
            if (!seen.emplace(prefix, t).second) continue;
            system.inequalities.emplace_back(t, chow::blockified_prefix_elementary(fv, l, t));
        }
    }
    return system;
}

namespace {

struct CompiledConstraint {
    int degree = 0;
    // (coefficient, [(unknown position, exponent)])
    std::vector<std::pair<Int, std::vector<std::pair<int, int>>>> terms;
};

CompiledConstraint compile_constraint(const ConstraintSystem& system, int degree,
                                      const Polynomial& poly) {
    std::map<int, int> var_to_pos;
    for (std::size_t pos = 0; pos < system.unknowns.size(); ++pos)
        var_to_pos.emplace(chow::generator_var_index(system.fv, system.unknowns[pos]),
                           static_cast<int>(pos));
    CompiledConstraint compiled;
    compiled.degree = degree;
    for (const auto& [mono, coef] : poly.terms()) {
        std::vector<std::pair<int, int>> factors;
        for (const auto& [var, exp] : mono.factors()) {
            auto it = var_to_pos.find(var);
            if (it == var_to_pos.end())
                throw std::logic_error("bounded_search: constraint mentions an unindexed generator");
            factors.emplace_back(it->second, exp);
        }
        compiled.terms.emplace_back(coef, std::move(factors));
    }
    return compiled;
}

Int evaluate(const CompiledConstraint& constraint, const std::vector<Int>& values) {
    Int total = 0;
    for (const auto& [coef, factors] : constraint.terms) {
        Int term = coef;
        for (const auto& [pos, exp] : factors)
            for (int e = 0; e < exp; ++e) term *= values[static_cast<std::size_t>(pos)];
        total += term;
    }
    return total;
}

void enumerate_box(const std::vector<CompiledConstraint>& equalities,
                   const std::vector<CompiledConstraint>& inequalities, long long bound,
                   long long first_lo, long long first_hi, std::size_t arity,
                   std::vector<std::vector<long long>>& sink) {
    std::vector<long long> values(arity, 0);
    std::vector<Int> int_values(arity, Int(0));
    // values[0] runs over the worker's slice, the rest over the full box
    std::vector<long long> lows(arity, -bound), highs(arity, bound);
    lows[0] = first_lo;
    highs[0] = first_hi;
    auto admissible = [&]() {
        for (const auto& eq : equalities)
            if (evaluate(eq, int_values) != 0) return false;
        for (const auto& ineq : inequalities)
            if (evaluate(ineq, int_values) < 0) return false;
        return true;
    };
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos == arity) {
            if (admissible()) sink.push_back(values);
            return;
        }
        for (long long v = lows[pos]; v <= highs[pos]; ++v) {
            values[pos] = v;
            int_values[pos] = to_int(v);
            walk(pos + 1);
        }
    };
    walk(0);
}

}  // namespace

std::vector<PullbackAssignment> bounded_search(const ConstraintSystem& system, long long bound,
                                               const SearchLimits& limits) {
    if (bound < 0) throw std::invalid_argument("bounded_search: bound must be nonnegative");
    const std::size_t arity = system.unknowns.size();
    if (arity == 0) throw std::invalid_argument("bounded_search: system has no unknowns");

    Int candidates = 1;
    for (std::size_t i = 0; i < arity; ++i) candidates *= to_int(2 * bound + 1);
    Int cap = to_int(static_cast<long long>(limits.candidate_cap));
    if (candidates > cap)
        throw std::invalid_argument("bounded_search: search space of " + candidates.get_str() +
                                    " candidate tuples exceeds the cap of " + cap.get_str());

    std::vector<CompiledConstraint> equalities, inequalities;
    for (const auto& [degree, poly] : system.equalities)
        equalities.push_back(compile_constraint(system, degree, poly));
    for (const auto& [degree, poly] : system.inequalities)
        inequalities.push_back(compile_constraint(system, degree, poly));
    // cheapest first: lower degree, then fewer terms; stable so ties keep
    // their construction order
    auto cheaper = [](const CompiledConstraint& a, const CompiledConstraint& b) {
        return std::make_pair(a.degree, a.terms.size()) < std::make_pair(b.degree, b.terms.size());
    };
    std::stable_sort(equalities.begin(), equalities.end(), cheaper);
    std::stable_sort(inequalities.begin(), inequalities.end(), cheaper);

    const long long range = 2 * bound + 1;
    int workers = std::max(1, limits.threads);
    workers = static_cast<int>(std::min<long long>(workers, range));

    std::vector<std::vector<std::vector<long long>>> chunks(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    long long chunk_base = -bound;
    for (int w = 0; w < workers; ++w) {
        long long chunk_size = range / workers + (w < range % workers ? 1 : 0);
        long long lo = chunk_base, hi = chunk_base + chunk_size - 1;
        chunk_base += chunk_size;
        auto& sink = chunks[static_cast<std::size_t>(w)];
        if (workers == 1) {
            enumerate_box(equalities, inequalities, bound, lo, hi, arity, sink);
        } else {
            pool.emplace_back([&equalities, &inequalities, bound, lo, hi, arity, &sink]() {
                enumerate_box(equalities, inequalities, bound, lo, hi, arity, sink);
            });
        }
    }
    for (auto& worker : pool) worker.join();

    std::vector<PullbackAssignment> results;
    for (const auto& chunk : chunks) {
        for (const auto& values : chunk) {
            PullbackAssignment assignment;
            for (std::size_t i = 0; i < arity; ++i)
                assignment.values.emplace(system.unknowns[i], values[i]);
            results.push_back(std::move(assignment));
        }
    }
    return results;
}

std::vector<Int> recurrence_sequence(long long a, long long b1, int length) {
    if (length < 2) throw std::invalid_argument("recurrence_sequence: length must be at least 2");
    std::vector<Int> b(static_cast<std::size_t>(length) + 1);
    b[0] = 1;
    b[1] = to_int(b1);
    Int step = to_int(a) * (to_int(a) + to_int(b1));
    for (int l = 2; l <= length; ++l)
        b[static_cast<std::size_t>(l)] =
            b[static_cast<std::size_t>(l) - 1] * b[1] + b[static_cast<std::size_t>(l) - 2] * step;
    return b;
}

namespace {

std::optional<RecurrenceCounterexample> check_parity_facts(long long a, long long b1,
                                                           const std::vector<Int>& seq, int l_max) {
    for (int l = 1; l <= l_max; ++l) {
        const Int& bl = seq[static_cast<std::size_t>(l)];
        if (l % 2 == 1) {
            if (to_int(b1) * bl < 0)
                return RecurrenceCounterexample{a, b1, l, "odd index: b1*b_l < 0"};
        } else if (bl < 0) {
            return RecurrenceCounterexample{a, b1, l, "even index: b_l < 0"};
        }
    }
    return std::nullopt;
}

}  // namespace

RecurrenceCertificate recurrence_certificate(int k, long long a_max, long long b_abs_max,
                                             int parity_l_max) {
    if (k < 1) throw std::invalid_argument("recurrence_certificate: k must be at least 1");
    RecurrenceCertificate cert;
    cert.k = k;
    const int length = std::max(2 * k, parity_l_max);
    for (long long a = 0; a <= a_max; ++a) {
        for (long long b1 = -b_abs_max; b1 <= b_abs_max; ++b1) {
            if (a + b1 < 0) continue;  // effectivity of the two degree-1 classes
            ++cert.pairs_checked;
            std::vector<Int> seq = recurrence_sequence(a, b1, length);
            if (auto bad = check_parity_facts(a, b1, seq, length)) {
                cert.counterexample = bad;
                return cert;
            }
            if (seq[static_cast<std::size_t>(2 * k)] == 0 && !(a == 0 && b1 == 0)) {
                cert.counterexample =
                    RecurrenceCounterexample{a, b1, 2 * k, "b_{2k} = 0 without a = b1 = 0"};
                return cert;
            }
        }
    }
    cert.pass = true;
    return cert;
}

ParityReport parity_facts_check(long long a_max, long long b_abs_max, int l_max) {
    if (l_max < 2) throw std::invalid_argument("parity_facts_check: l_max must be at least 2");
    ParityReport report;
    for (long long a = 0; a <= a_max; ++a) {
        for (long long b1 = -b_abs_max; b1 <= b_abs_max; ++b1) {
            if (a + b1 < 0) continue;
            ++report.pairs_checked;
            std::vector<Int> seq = recurrence_sequence(a, b1, l_max);
            if (auto bad = check_parity_facts(a, b1, seq, l_max)) {
                report.counterexample = bad;
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

OddCaseTrace odd_case_certificate(const std::vector<Int>& a, int m) {
    if (m < 1 || m % 2 != 1) throw std::invalid_argument("odd_case_certificate: m must be odd");
    if (a.empty()) throw std::invalid_argument("odd_case_certificate: empty tuple");

    OddCaseTrace trace;
    if (sym::complete_homogeneous_value(m, a) != 0)
        throw std::invalid_argument("odd_case_certificate: hypothesis h_m(a) = 0 fails");
    for (int u = 1; u <= m; ++u)
        if (sym::elementary_value(u, a) < 0)
            throw std::invalid_argument("odd_case_certificate: hypothesis e_" + std::to_string(u) +
                                        "(a) >= 0 fails");
    trace.hypothesis_ok = true;
    trace.steps.push_back("hypotheses verified: h_m(a) = 0 and e_u(a) >= 0 for u = 1.." +
                          std::to_string(m));

    std::vector<Int> squares;
    squares.reserve(a.size());
    for (const Int& x : a) squares.push_back(x * x);

    for (int v = 0; 2 * v <= m; ++v) {
        int u = m - 2 * v;
        Int product = sym::elementary_value(u, a) * sym::complete_homogeneous_value(v, squares);
        if (product != 0) {
            trace.steps.push_back("FAILED: e_" + std::to_string(u) + "(a) * Q_" + std::to_string(v) +
                                  "(a) = " + product.get_str() + " is nonzero");
            return trace;
        }
        trace.steps.push_back("e_" + std::to_string(u) + "(a) * Q_" + std::to_string(v) + "(a) = 0");
    }

    bool all_zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
    Int q_mid = sym::complete_homogeneous_value((m - 1) / 2, squares);
    if (q_mid == 0 && m > 1) {
        trace.steps.push_back("Q_{(m-1)/2}(a) = 0, so every entry vanishes");
    } else {
        Int e1 = sym::elementary_value(1, a);
        if (e1 != 0) {
            trace.steps.push_back("FAILED: neither Q_{(m-1)/2}(a) nor e_1(a) vanishes");
            return trace;
        }
        trace.steps.push_back("e_1(a) = 0");
        Int h2 = sym::complete_homogeneous_value(2, a);
        Int e2 = sym::elementary_value(2, a);
        if (h2 + e2 != 0) {
            trace.steps.push_back("FAILED: h_2(a) + e_2(a) = e_1(a)^2 does not vanish");
            return trace;
        }
        trace.steps.push_back("h_2(a) + e_2(a) = 0");
        if (h2 != 0) {
            trace.steps.push_back("FAILED: h_2(a) = " + h2.get_str() + " is nonzero");
            return trace;
        }
        trace.steps.push_back("h_2(a) = 0, so every entry vanishes");
    }
    if (!all_zero) {
        trace.steps.push_back("FAILED: deduction reached the zero tuple but the input is nonzero");
        return trace;
    }
    trace.steps.push_back("conclusion: a = 0");
    trace.ok = true;
    return trace;
}

std::string outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::ConstantByTheorem: return "ConstantByTheorem";
        case Outcome::NonconstantExists: return "NonconstantExists";
        case Outcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

std::vector<int> normalize_marked(int n, const std::vector<int>& marked) {
    std::vector<int> sorted = marked;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > n)
            throw std::invalid_argument("marked set must lie in 1..n");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("marked set has a repeated entry");
    }
    return sorted;
}

}  // namespace

Verdict decide_pm_to_flag(int n, int m, const std::vector<int>& marked,
                          const DecideOptions& options) {
    if (m < 2) throw std::invalid_argument("decide_pm_to_flag: m must be at least 2");
    std::vector<int> dims = normalize_marked(n, marked);
    if (dims.empty())
        throw std::invalid_argument("decide_pm_to_flag: marked set must be nonempty");
    chow::RunAnalysis run = chow::consecutive_run(n, dims);
    if (!run.single_run || run.max_run_length != m - 2)
        throw std::invalid_argument(
            "decide_pm_to_flag: the unmarked set must be one consecutive run of length m-2");
    // empty run (m == 2) is the complete flag; treat it as starting at 1
    const int i = run.start.value_or(1);

    Verdict verdict;
    if (i == 1) {
        verdict = {Outcome::ConstantByTheorem, "run-at-start", std::nullopt};
    } else if (i == n - m + 3) {
        verdict = {Outcome::ConstantByTheorem, "run-at-end", std::nullopt};
    } else if (i == 2 && n == m && m % 2 == 0) {
        verdict = {Outcome::ConstantByTheorem, "incidence-recurrence", std::nullopt};
    } else if (m % 2 == 1 && i > 1 && i < n - m + 3) {
        verdict = {Outcome::NonconstantExists, "symplectic-witness", std::nullopt};
    } else {
        verdict = {Outcome::Unknown, "open-question", std::nullopt};
        if (options.attach_evidence) {
            chow::FlagVariety fv(n, dims);
            ConstraintSystem system = build_system(fv, m);
            try {
                auto solutions = bounded_search(system, options.bound, options.limits);
                SearchEvidence evidence;
                evidence.bound = options.bound;
                evidence.unknown_names = system.unknown_names;
                for (const auto& assignment : solutions) {
                    std::vector<long long> row;
                    row.reserve(system.unknowns.size());
                    for (const auto& g : system.unknowns) row.push_back(assignment.values.at(g));
                    evidence.solutions.push_back(std::move(row));
                }
                verdict.evidence = std::move(evidence);
            } catch (const std::invalid_argument&) {
                // search space above the cap: report the open outcome without evidence
            }
        }
    }
    return verdict;
}

Verdict decide_flag_to_flag(int source_rank, const std::vector<int>& source_marked, int n, int m,
                            const std::vector<int>& target_marked) {
    Verdict target = decide_pm_to_flag(n, m, target_marked, DecideOptions{false, 0, {}});
    if (target.outcome != Outcome::ConstantByTheorem)
        throw std::invalid_argument(
            "decide_flag_to_flag: target is not certified constant for this m");
    std::vector<int> source = normalize_marked(source_rank, source_marked);
    chow::RunAnalysis run = chow::consecutive_run(source_rank, source);
    if (run.max_run_length <= m - 1) return {Outcome::ConstantByTheorem, "linear-cover", std::nullopt};
    return {Outcome::Unknown, "uncovered-source", std::nullopt};
}

bool duality_consistency(int n, int m, const std::vector<int>& marked) {
    std::vector<int> dims = normalize_marked(n, marked);
    std::vector<int> dual;
    dual.reserve(dims.size());
    for (int d : dims) dual.push_back(n + 1 - d);
    std::sort(dual.begin(), dual.end());
    DecideOptions options{false, 0, {}};
    Verdict primal_verdict = decide_pm_to_flag(n, m, dims, options);
    Verdict dual_verdict = decide_pm_to_flag(n, m, dual, options);
    return primal_verdict.outcome == dual_verdict.outcome;
}

}  // namespace flagmorph::obstruction
