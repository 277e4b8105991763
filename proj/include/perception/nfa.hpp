#pragma once

#include <cstdint>

namespace perception {

/// Score reported for every point when the fitted indicator mass is zero.
/// With no indicator mass there is no random process left to violate, so
/// nothing is ever flagged.
inline constexpr double kDegenerateScore = -1.0e9;

/// Score reported when a tested count exceeds the fitted indicator sum.
/// Counts larger than anything seen at fit time are maximally unexpected.
inline constexpr double kSaturatedScore = 1.0e9;

/// Parameters of the tuple-occurrence expectation: a total indicator mass
/// distributed uniformly and independently across a number of windows, with
/// one window holding the count under test.
struct TupleExpectationParams {
    std::int64_t indicator_sum = 0;  // total indicator mass
    std::int64_t window_count = 1;   // number of windows
    std::int64_t tuple_size = 0;     // count under test
};

/// ln(m!). Exact cumulative-log table for m <= 20, Stirling expansion above.
double log_factorial(std::int64_t m);

/// Raw Stirling expansion m*ln(m) - m + 0.5*ln(m) + 0.5*ln(2*pi).
/// Exposed separately so its accuracy can be checked against an exact sum;
/// undefined for m < 1.
double stirling_log_factorial(std::int64_t m);

/// ln C(total, chosen) via three log-factorials. Never materializes the
/// coefficient itself. Throws std::domain_error unless 0 <= chosen <= total.
double log_binomial(std::int64_t total, std::int64_t chosen);

/// Expected number of tuple_size-tuples landing in one window:
/// C(indicator_sum, tuple_size) / window_count^(tuple_size - 1).
/// Computed in log domain; may overflow to +inf for extreme parameters.
double tuple_expectation(const TupleExpectationParams& params);

/// Log-domain anomaly score
///   -(1/S) * (ln C(S, n) - (n - 1) * ln W)
/// with S = indicator_sum, W = window_count, n = tuple_size. Positive scores
/// flag anomalies, larger is more anomalous. S == 0 yields kDegenerateScore;
/// n > S saturates to kSaturatedScore.
double perception_score(const TupleExpectationParams& params);

/// Binomial tail B(N, k, p) = sum_{i=k..N} C(N,i) p^i (1-p)^(N-i).
/// Per-term log-space evaluation, summed largest term first; result clamped
/// to [0, 1]. Throws std::domain_error for k > N, k < 0, or p outside [0,1].
double binomial_tail(std::int64_t trials, std::int64_t threshold, double p_success);

/// The generic Helmholtz meaningfulness test: configuration_count objects
/// tested, object_count of which hold the quality with probability
/// quality_probability each, shared_count observed sharing it.
struct EpsilonMeaningfulQuery {
    std::int64_t configuration_count = 1;  // number of tested configurations
    std::int64_t object_count = 1;         // number of objects
    std::int64_t shared_count = 0;         // objects sharing the quality
    double quality_probability = 0.0;
    double epsilon = 1.0;
};

struct MeaningfulResult {
    double nfa = 0.0;       // configuration_count * B(N, k, p)
    bool meaningful = false;  // nfa < epsilon, strictly
};

MeaningfulResult is_epsilon_meaningful(const EpsilonMeaningfulQuery& query);

/// Expected number of success runs of a given length in a trial sequence:
/// (trials - (run_length - 1)) * p^run_length.
struct RunExpectationParams {
    std::int64_t trials = 1;
    std::int64_t run_length = 1;
    double p_success = 0.0;
};

double expected_run_occurrences(const RunExpectationParams& params);

}  // namespace perception
