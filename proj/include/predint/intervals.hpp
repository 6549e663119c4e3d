#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "predint/binning.hpp"
#include "predint/errors.hpp"
#include "predint/parallel.hpp"
#include "predint/probs.hpp"

namespace predint {

// One prediction interval (lower, upper) whose endpoints are bin edges;
// lower_idx/upper_idx index into scheme.edges.
struct prediction_interval {
    double lower = 0.0;
    double upper = 0.0;
    int lower_idx = 0;
    int upper_idx = 0;

    friend bool operator==(const prediction_interval&, const prediction_interval&) = default;
};

// Smallest symmetric interval of whole bins around t_hat whose probability
// mass reaches alpha. Expansion indices are clamped at the ends of the bin
// range; once the window spans every bin the interval is returned even if
// the accumulated mass is a float hair short of alpha.
inline prediction_interval posterior_interval(std::span<const double> probs_row, int t_hat,
                                              const binning_scheme& scheme, double alpha) {
    if (std::isnan(alpha) || alpha <= 0.0 || alpha > 1.0) throw alpha_out_of_range(alpha);
    const int m = scheme.num_bins;
    int lo = t_hat, hi = t_hat;
    double mass = probs_row[static_cast<std::size_t>(t_hat)];
    for (int i = 1; mass < alpha && (lo > 0 || hi < m - 1); ++i) {
        if (t_hat - i >= 0) mass += probs_row[static_cast<std::size_t>(t_hat - i)];
        if (t_hat + i <= m - 1) mass += probs_row[static_cast<std::size_t>(t_hat + i)];
        lo = std::max(0, t_hat - i);
        hi = std::min(m - 1, t_hat + i);
    }
    return {scheme.edges[lo], scheme.edges[hi + 1], lo, hi + 1};
}

// Batch form: expected prediction then posterior interval per row.
inline std::vector<prediction_interval> posterior_intervals(const prob_matrix& probs,
                                                            const binning_scheme& scheme,
                                                            double alpha) {
    if (std::isnan(alpha) || alpha <= 0.0 || alpha > 1.0) throw alpha_out_of_range(alpha);
    if (probs.cols() != static_cast<std::size_t>(scheme.num_bins))
        throw scheme_mismatch(probs.cols(), scheme.num_bins);
    std::vector<prediction_interval> out(probs.rows());
    for_each_block(probs.rows(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const auto pred = expected_prediction(probs.row(r), scheme);
            out[r] = posterior_interval(probs.row(r), pred.t_hat, scheme, alpha);
        }
    });
    return out;
}

// Fraction of labels strictly inside their interval: u < y < v.
inline double coverage(std::span<const prediction_interval> intervals,
                       std::span<const double> labels) {
    if (intervals.size() != labels.size()) throw length_mismatch(intervals.size(), labels.size());
    if (intervals.empty()) throw empty_input();
    const std::size_t hits = ordered_count(labels.size(), [&](std::size_t i) {
        return intervals[i].lower < labels[i] && labels[i] < intervals[i].upper;
    });
    return static_cast<double>(hits) / static_cast<double>(labels.size());
}

// v - u with the infinite outer edges replaced by the finite label extremes,
// so averages stay finite.
inline double interval_width(const prediction_interval& interval, const binning_scheme& scheme) {
    const double u = std::isinf(interval.lower) ? scheme.finite_lo : interval.lower;
    const double v = std::isinf(interval.upper) ? scheme.finite_hi : interval.upper;
    return v - u;
}

}  // namespace predint
