#ifndef SYMDECOMP_HARNESS_HPP
#define SYMDECOMP_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symdecomp/json_io.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

enum class Constraint { nonnegative, H, S, symmetric, small_degree };

/// Which dilation factors a verifier tries, relative to its theorem's bound.
enum class RPolicy { at_bound, above_bound, below_bound, explicit_list };

struct TrialSpec {
    std::size_t d_min = 1;
    std::size_t d_max = 8;
    std::size_t s_min = 0;
    std::size_t s_max = 64; // clipped to d per trial
    RPolicy r_policy = RPolicy::above_bound;
    std::vector<std::size_t> r_list;
    long coeff_bound = 6;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    std::set<Constraint> constraints;
    std::size_t workers = 1;
    /// Rejection-sampling attempts allowed per trial.
    std::size_t retry_budget = 100'000;
};

struct Trial {
    std::size_t index = 0;
    Polynomial h;
    std::size_t d = 0;
    std::size_t attempts = 0;
};

/// Trial `index` of the stream; depends only on (spec, index).
Trial generate_trial(const TrialSpec &spec, std::size_t index);

/// The first spec.count trials. Throws ConstraintUnsatisfiable when one trial
/// exhausts the retry budget.
std::vector<Trial> generate(const TrialSpec &spec);

/// r values of a policy for a theorem whose bound is `bound`.
std::vector<std::size_t> r_values(const TrialSpec &spec, std::size_t bound);

struct FailureRecord {
    std::size_t index = 0;
    Polynomial h;
    std::size_t d = 0;
    std::size_t r = 0;
    json facts = json::object();
};

struct VerificationReport {
    std::string theorem;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::size_t generation_attempts = 0;
    std::vector<FailureRecord> failures;   // theorem assertions that did not hold
    std::vector<FailureRecord> candidates; // open-question hits, never failures
    json summary = json::object();
    double wall_ms = 0;

    bool passed() const { return failures.empty(); }
    /// 0 all assertions held, 1 assertion failure, 3 open-question candidate.
    int exit_code() const;
    /// Deterministic: wall time is left out.
    json to_json() const;
    /// Human-readable table, including wall time.
    std::string table() const;
};

VerificationReport verify_theorem_1_1(const TrialSpec &spec);
VerificationReport verify_theorem_1_2(const TrialSpec &spec);
VerificationReport verify_prop_5_1(const TrialSpec &spec);
/// Also checks that p~ is real-rooted at r = ceil((d+1)/2).
VerificationReport verify_prop_5_2(const TrialSpec &spec);
VerificationReport verify_lemma_4_1(const TrialSpec &spec);

enum class Sharpness { cor33_ii, interlacing_bound };
VerificationReport probe_sharpness(Sharpness which, const TrialSpec &spec);

inline constexpr std::uint64_t default_search_budget = 5'000'000;

/// Exhaustive search over nonnegative integer h with (H) and (S), d <= d_max,
/// coefficients <= coeff_bound, r in [max{s, d+1-s}, d+1]. Reports but never
/// asserts; throws BudgetExceeded when the enumeration exceeds the budget.
VerificationReport search_question_5_4(std::size_t d_max, long coeff_bound,
                                       std::uint64_t budget = default_search_budget, std::size_t workers = 1);

/// Interlacing decomposition checked twice: directly on (p~, q~) and through
/// U h interlacing U(I_{d+1} h). Returns both verdicts.
struct InterlacingVerdict {
    bool direct = false;
    bool criterion = false;
};
InterlacingVerdict interlacing_verdicts(const Polynomial &h, std::size_t d, std::size_t r);

} // namespace symdecomp

#endif
