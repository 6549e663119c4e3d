#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "predint/binning.hpp"
#include "predint/errors.hpp"
#include "predint/intervals.hpp"
#include "predint/probs.hpp"

namespace predint {

struct calibration_config {
    double target_alpha = 0.0;
    double epsilon = 0.001;
    int max_iterations = 50;
    double bracket_lo = 1.0 / 64.0;
    double bracket_hi = 64.0;
    int max_bracket_expansions = 20;
};

enum class calibration_method { empirical, temperature };

struct calibration_result {
    calibration_method method = calibration_method::empirical;
    double parameter = 0.0;          // fitted alpha0 or T
    double achieved_coverage = 0.0;  // validation coverage at the parameter
    bool converged = false;
    int iterations = 0;
    std::vector<std::pair<double, double>> trace;  // (parameter, coverage) per evaluation
};

namespace detail {

inline void check_config(const calibration_config& config) {
    if (std::isnan(config.target_alpha) || config.target_alpha <= 0.0 ||
        config.target_alpha >= 1.0)
        throw alpha_out_of_range(config.target_alpha);
    if (!(config.epsilon > 0.0) || config.max_iterations < 1 || !(config.bracket_lo > 0.0) ||
        !(config.bracket_lo < config.bracket_hi) || config.max_bracket_expansions < 0)
        throw error("invalid calibration config");
}

// Tracks the best evaluated parameter: smallest |coverage - alpha|, ties
// broken toward the smaller parameter.
struct best_seen {
    double parameter = 0.0;
    double coverage = 0.0;
    double miss = std::numeric_limits<double>::infinity();

    void offer(double param, double cov, double alpha) {
        const double m = std::fabs(cov - alpha);
        if (m < miss || (m == miss && param < parameter)) {
            parameter = param;
            coverage = cov;
            miss = m;
        }
    }
};

}  // namespace detail

// Coverage of posterior alpha0-intervals built from the probabilities as
// given (temperature 1).
inline double coverage_at_alpha0(const prob_matrix& probs, std::span<const double> labels,
                                 const binning_scheme& scheme, double alpha0) {
    return coverage(posterior_intervals(probs, scheme, alpha0), labels);
}

// Binary search for the posterior mass level alpha0 whose validation
// coverage hits the target. Coverage is non-decreasing in alpha0 (intervals
// nest), so plain bisection on [0, 1] applies; the best evaluated point is
// returned even when the tolerance is unreachable on a finite sample.
inline calibration_result empirical_calibration(const prob_matrix& val_probs,
                                                std::span<const double> val_labels,
                                                const binning_scheme& scheme,
                                                const calibration_config& config) {
    detail::check_config(config);
    if (val_labels.empty()) throw empty_validation_set();

    calibration_result result;
    result.method = calibration_method::empirical;
    detail::best_seen best;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < config.max_iterations; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double cov = coverage_at_alpha0(val_probs, val_labels, scheme, mid);
        result.trace.emplace_back(mid, cov);
        best.offer(mid, cov, config.target_alpha);
        if (best.miss < config.epsilon) {
            result.converged = true;
            break;
        }
        if (cov < config.target_alpha)
            lo = mid;
        else
            hi = mid;
    }
    result.parameter = best.parameter;
    result.achieved_coverage = best.coverage;
    result.iterations = static_cast<int>(result.trace.size());
    return result;
}

// F_alpha(T): coverage of posterior alpha-intervals after rescaling the
// logits to temperature T. Both y_hat and t_hat are recomputed under T.
inline double coverage_at_temperature(const logit_matrix& val_logits,
                                      std::span<const double> val_labels,
                                      const binning_scheme& scheme, double alpha, double t) {
    return coverage(posterior_intervals(apply_temperature(val_logits, t), scheme, alpha),
                    val_labels);
}

// Bracketed binary search for the temperature whose alpha-interval coverage
// hits alpha. The bracket grows geometrically until it encloses the target;
// midpoints are geometric means. F is only near-monotone here (t_hat drifts
// with T), so the search never assumes strictness and keeps the best seen.
inline calibration_result temperature_scaling(const logit_matrix& val_logits,
                                              std::span<const double> val_labels,
                                              const binning_scheme& scheme,
                                              const calibration_config& config) {
    detail::check_config(config);
    if (val_labels.empty()) throw empty_validation_set();

    calibration_result result;
    result.method = calibration_method::temperature;
    detail::best_seen best;
    const double alpha = config.target_alpha;
    auto evaluate = [&](double t) {
        const double cov = coverage_at_temperature(val_logits, val_labels, scheme, alpha, t);
        result.trace.emplace_back(t, cov);
        best.offer(t, cov, alpha);
        return cov;
    };

    double t_lo = config.bracket_lo, t_hi = config.bracket_hi;
    double f_lo = evaluate(t_lo);
    double f_hi = evaluate(t_hi);
    for (int i = 0; i < config.max_bracket_expansions && f_lo > alpha; ++i) {
        t_lo *= 0.5;
        f_lo = evaluate(t_lo);
    }
    for (int i = 0; i < config.max_bracket_expansions && f_hi < alpha; ++i) {
        t_hi *= 2.0;
        f_hi = evaluate(t_hi);
    }
    if (f_lo > alpha || f_hi < alpha)
        throw bracketing_failed(alpha, t_lo, t_hi, f_lo, f_hi);

    for (int iter = 0; iter < config.max_iterations && best.miss >= config.epsilon; ++iter) {
        const double mid = std::sqrt(t_lo * t_hi);
        const double cov = evaluate(mid);
        if (cov < alpha)
            t_lo = mid;
        else
            t_hi = mid;
    }
    result.converged = best.miss < config.epsilon;
    result.parameter = best.parameter;
    result.achieved_coverage = best.coverage;
    result.iterations = static_cast<int>(result.trace.size());
    return result;
}

// Applies a fitted calibration to test logits. Empirical: posterior
// alpha0-intervals at temperature 1. Temperature: posterior
// target_alpha-intervals at the fitted temperature.
inline std::vector<prediction_interval> apply_calibration(const logit_matrix& test_logits,
                                                          const binning_scheme& scheme,
                                                          const calibration_result& result,
                                                          double target_alpha) {
    if (test_logits.cols() != static_cast<std::size_t>(scheme.num_bins))
        throw scheme_mismatch(test_logits.cols(), scheme.num_bins);
    if (result.method == calibration_method::empirical)
        return posterior_intervals(apply_temperature(test_logits, 1.0), scheme,
                                   result.parameter);
    return posterior_intervals(apply_temperature(test_logits, result.parameter), scheme,
                               target_alpha);
}

}  // namespace predint
