#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "predint/binning.hpp"
#include "predint/errors.hpp"
#include "predint/matrix.hpp"
#include "predint/parallel.hpp"

namespace predint {

// Raw top-layer scores and normalized class probabilities, one example per
// row, one class per column.
using logit_matrix = matrix;
using prob_matrix = matrix;

struct point_prediction {
    double y_hat = 0.0;
    int t_hat = 0;
};

// pr_i = exp(z_i / t) / sum_j exp(z_j / t), with the row maximum subtracted
// before exponentiation so large |z| and small t stay finite.
inline void softmax_with_temperature(std::span<const double> logits, double t,
                                     std::span<double> out) {
    if (!(t > 0.0) || !std::isfinite(t)) throw non_positive_temperature(t);
    double zmax = -std::numeric_limits<double>::infinity();
    for (double z : logits) {
        if (!std::isfinite(z)) throw non_finite_logit();
        zmax = std::max(zmax, z);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out[i] = std::exp((logits[i] - zmax) / t);
        sum += out[i];
    }
    for (std::size_t i = 0; i < logits.size(); ++i) out[i] /= sum;
}

inline std::vector<double> softmax_with_temperature(std::span<const double> logits, double t) {
    std::vector<double> out(logits.size());
    softmax_with_temperature(logits, t, out);
    return out;
}

inline prob_matrix apply_temperature(const logit_matrix& logits, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw non_positive_temperature(t);
    prob_matrix probs(logits.rows(), logits.cols());
    for_each_block(logits.rows(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
            softmax_with_temperature(logits.row(r), t, probs.row(r));
    });
    return probs;
}

// y_hat = sum_i pr_i * c_i; t_hat is the bin containing y_hat under the same
// half-open rule used for labels.
inline point_prediction expected_prediction(std::span<const double> probs_row,
                                            const binning_scheme& scheme) {
    if (probs_row.size() != scheme.centers.size())
        throw length_mismatch(probs_row.size(), scheme.centers.size());
    double y_hat = 0.0;
    for (std::size_t i = 0; i < probs_row.size(); ++i) y_hat += probs_row[i] * scheme.centers[i];
    return {y_hat, label_to_class(scheme, y_hat)};
}

}  // namespace predint
