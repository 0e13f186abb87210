#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagmorph/chow.hpp"
#include "flagmorph/polyring.hpp"

namespace flagmorph::obstruction {

/// Integer images of the block generators under a hypothetical pullback to
/// the degree ring of projective m-space. Generators of weight above m never
/// appear; their constraints are vacuous.
struct PullbackAssignment {
    std::map<chow::BlockGenerator, long long> values;
};

/// The integer constraint system induced on block generators: pulled-back
/// relations must vanish, pulled-back effective classes must be nonnegative.
/// Only constraints of weighted degree <= m are kept.
struct ConstraintSystem {
    chow::FlagVariety fv;
    int m = 0;
    std::vector<chow::BlockGenerator> unknowns;  // ordered by (block, degree)
    std::vector<std::string> unknown_names;
    std::vector<std::pair<int, Polynomial>> equalities;    // (degree, polynomial == 0)
    std::vector<std::pair<int, Polynomial>> inequalities;  // (degree, polynomial >= 0)
};

ConstraintSystem build_system(const chow::FlagVariety& fv, int m);

struct SearchLimits {
    double candidate_cap = 1e9;  // reject searches with more candidate tuples
    int threads = 1;             // workers for the outermost variable split
};

/// Exhaustively enumerates assignments with every unknown in [-bound, bound],
/// in lexicographic order, keeping those satisfying all equalities and
/// inequalities. Deterministic regardless of thread count.
std::vector<PullbackAssignment> bounded_search(const ConstraintSystem& system, long long bound,
                                               const SearchLimits& limits = {});

/// b_0, b_1, ..., b_length with b_0 = 1, b_1 = b1 and
/// b_l = b_{l-1} b1 + b_{l-2} (a^2 + a b1) for l >= 2.
std::vector<Int> recurrence_sequence(long long a, long long b1, int length);

struct RecurrenceCounterexample {
    long long a = 0;
    long long b1 = 0;
    int index = 0;
    std::string fact;
};

struct RecurrenceCertificate {
    bool pass = false;
    int k = 0;
    long long pairs_checked = 0;
    std::optional<RecurrenceCounterexample> counterexample;
};

/// Replays the constancy argument for the incidence variety of lines inside
/// hyperplanes in even dimension 2k: over every admissible (a, b1) in the
/// box [0, a_max] x [-b_abs_max, b_abs_max] with a + b1 >= 0, checks the
/// parity sign facts for l <= max(2k, parity_l_max) and that b_{2k} = 0
/// forces a = b1 = 0.
RecurrenceCertificate recurrence_certificate(int k, long long a_max = 6, long long b_abs_max = 6,
                                             int parity_l_max = 10);

struct ParityReport {
    bool pass = false;
    long long pairs_checked = 0;
    std::optional<RecurrenceCounterexample> counterexample;
};

/// The two sign facts on their own: l odd implies b1*b_l >= 0 and l even
/// implies b_l >= 0, over the same admissible box.
ParityReport parity_facts_check(long long a_max, long long b_abs_max, int l_max);

struct OddCaseTrace {
    bool ok = false;
    bool hypothesis_ok = false;
    std::vector<std::string> steps;
};

/// Replays the odd-degree cascade: given a tuple with vanishing complete
/// homogeneous value of odd degree m and nonnegative elementary values, every
/// product e_u * Q_v (u + 2v = m) vanishes and the dichotomy forces the zero
/// tuple. Rejects tuples violating the hypotheses.
OddCaseTrace odd_case_certificate(const std::vector<Int>& a, int m);

enum class Outcome { ConstantByTheorem, NonconstantExists, Unknown };

std::string outcome_name(Outcome outcome);

struct SearchEvidence {
    long long bound = 0;
    std::vector<std::string> unknown_names;
    std::vector<std::vector<long long>> solutions;
};

/// The engine's answer for one decision instance. Constant / nonconstant
/// outcomes carry the tag of the rule that fired; Unknown carries search
/// evidence when a search was run.
struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string reason;
    std::optional<SearchEvidence> evidence;
};

struct DecideOptions {
    bool attach_evidence = true;  // run a bounded search on Unknown outcomes
    long long bound = 4;
    SearchLimits limits{};
};

/// Decision procedure for morphisms from projective m-space into the flag
/// variety with marked set `marked`, whose unmarked set must be one run of
/// m-2 consecutive integers.
///
/// Rule table (run start i): i == 1 -> constant ("run-at-start");
/// i == n-m+3 -> constant ("run-at-end"); i == 2 and n == m even ->
/// constant ("incidence-recurrence"); m odd and 1 < i < n-m+3 ->
/// nonconstant ("symplectic-witness"); otherwise unknown ("open-question").
Verdict decide_pm_to_flag(int n, int m, const std::vector<int>& marked,
                          const DecideOptions& options = {});

/// Source-side reduction: if every run of the source's unmarked set has
/// length at most m-1, the source is covered by projective m-spaces and any
/// morphism into a target certified constant for m is constant.
Verdict decide_flag_to_flag(int source_rank, const std::vector<int>& source_marked, int n, int m,
                            const std::vector<int>& target_marked);

/// True when the decision outcome is unchanged by passing to the dual flag
/// variety. Evidence is not attached on either side.
bool duality_consistency(int n, int m, const std::vector<int>& marked);

}  // namespace flagmorph::obstruction
