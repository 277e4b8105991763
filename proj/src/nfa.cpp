#include "perception/nfa.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace perception {

namespace {

constexpr int kExactTableSize = 21;  // ln(m!) exact for m <= 20

const std::array<double, kExactTableSize>& exact_log_factorials() {
    static const std::array<double, kExactTableSize> table = [] {
        std::array<double, kExactTableSize> t{};
        t[0] = 0.0;
        double acc = 0.0;
        for (int i = 1; i < kExactTableSize; ++i) {
            acc += std::log(static_cast<double>(i));
            t[i] = acc;
        }
        return t;
    }();
    return table;
}

}  // namespace

double stirling_log_factorial(std::int64_t m) {
    const double x = static_cast<double>(m);
    return x * std::log(x) - x + 0.5 * std::log(x) + 0.5 * std::log(2.0 * M_PI);
}

double log_factorial(std::int64_t m) {
    if (m < 0) throw std::domain_error("log_factorial: negative argument");
    if (m < kExactTableSize) return exact_log_factorials()[static_cast<std::size_t>(m)];
    return stirling_log_factorial(m);
}

double log_binomial(std::int64_t total, std::int64_t chosen) {
    if (chosen < 0 || chosen > total)
        throw std::domain_error("log_binomial: need 0 <= chosen <= total, got chosen=" +
                                std::to_string(chosen) + " total=" + std::to_string(total));
    return log_factorial(total) - log_factorial(total - chosen) - log_factorial(chosen);
}

namespace {

// Shared log-domain quantity ln C(S, n) - (n - 1) ln W. Both the expectation
// and the score derive from it, which keeps their decision boundaries
// consistent by construction.
double log_expectation(const TupleExpectationParams& p) {
    return log_binomial(p.indicator_sum, p.tuple_size) -
           static_cast<double>(p.tuple_size - 1) * std::log(static_cast<double>(p.window_count));
}

}  // namespace

double tuple_expectation(const TupleExpectationParams& params) {
    if (params.window_count < 1) throw std::domain_error("tuple_expectation: window_count must be >= 1");
    if (params.tuple_size < 0 || params.tuple_size > params.indicator_sum)
        throw std::domain_error("tuple_expectation: need 0 <= tuple_size <= indicator_sum");
    // n = 0 and n = 1 have closed forms; returning them exactly keeps desk
    // checks like E(C_1) = S free of exp/log round-trip error.
    if (params.tuple_size == 0) return static_cast<double>(params.window_count);
    if (params.tuple_size == 1) return static_cast<double>(params.indicator_sum);
    return std::exp(log_expectation(params));
}

double perception_score(const TupleExpectationParams& params) {
    if (params.window_count < 1) throw std::domain_error("perception_score: window_count must be >= 1");
    if (params.tuple_size < 0) throw std::domain_error("perception_score: tuple_size must be >= 0");
    if (params.indicator_sum < 0) throw std::domain_error("perception_score: indicator_sum must be >= 0");
    if (params.indicator_sum == 0) return kDegenerateScore;
    if (params.tuple_size > params.indicator_sum) return kSaturatedScore;
    return -log_expectation(params) / static_cast<double>(params.indicator_sum);
}

double binomial_tail(std::int64_t trials, std::int64_t threshold, double p_success) {
    if (threshold < 0 || threshold > trials)
        throw std::domain_error("binomial_tail: need 0 <= threshold <= trials");
    if (!(p_success >= 0.0 && p_success <= 1.0))
        throw std::domain_error("binomial_tail: probability outside [0, 1]");
    if (threshold == 0) return 1.0;
    if (p_success == 0.0) return 0.0;          // threshold >= 1 here
    if (p_success == 1.0) return 1.0;          // all mass at i = trials
    if (threshold == trials) return std::exp(static_cast<double>(trials) * std::log(p_success));

    const double log_p = std::log(p_success);
    const double log_q = std::log1p(-p_success);

    auto log_term = [&](std::int64_t i) {
        return log_binomial(trials, i) + static_cast<double>(i) * log_p +
               static_cast<double>(trials - i) * log_q;
    };

    // The tail's largest term sits at the PMF mode clamped into [threshold, trials].
    const auto mode = static_cast<std::int64_t>(static_cast<double>(trials + 1) * p_success);
    const std::int64_t peak = std::clamp(mode, threshold, trials);
    const double log_peak = log_term(peak);

    // Factor the peak out and walk outwards from it, so terms are accumulated
    // largest first and underflow never wipes the result.
    double sum = 1.0;
    for (std::int64_t i = peak - 1; i >= threshold; --i) {
        const double r = std::exp(log_term(i) - log_peak);
        sum += r;
        if (r < 1e-18 * sum) break;
    }
    for (std::int64_t i = peak + 1; i <= trials; ++i) {
        const double r = std::exp(log_term(i) - log_peak);
        sum += r;
        if (r < 1e-18 * sum) break;
    }
    return std::clamp(std::exp(log_peak) * sum, 0.0, 1.0);
}

MeaningfulResult is_epsilon_meaningful(const EpsilonMeaningfulQuery& query) {
    if (query.configuration_count < 1)
        throw std::domain_error("is_epsilon_meaningful: configuration_count must be >= 1");
    if (query.epsilon <= 0.0) throw std::domain_error("is_epsilon_meaningful: epsilon must be > 0");
    MeaningfulResult result;
    result.nfa = static_cast<double>(query.configuration_count) *
                 binomial_tail(query.object_count, query.shared_count, query.quality_probability);
    result.meaningful = result.nfa < query.epsilon;
    return result;
}

double expected_run_occurrences(const RunExpectationParams& params) {
    if (params.run_length < 1 || params.run_length > params.trials)
        throw std::domain_error("expected_run_occurrences: need 1 <= run_length <= trials");
    if (!(params.p_success >= 0.0 && params.p_success <= 1.0))
        throw std::domain_error("expected_run_occurrences: probability outside [0, 1]");
    const double positions = static_cast<double>(params.trials - (params.run_length - 1));
    return positions * std::pow(params.p_success, static_cast<double>(params.run_length));
}

}  // namespace perception
