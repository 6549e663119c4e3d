#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "predint/binning.hpp"
#include "predint/errors.hpp"
#include "predint/matrix.hpp"
#include "predint/parallel.hpp"
#include "predint/probs.hpp"
#include "predint/rng.hpp"

namespace predint {

enum class task_kind { linear, noisy_sine };

struct task_spec {
    task_kind kind = task_kind::linear;
    std::size_t n_train = 20000;
    std::size_t n_val = 5000;
    std::size_t n_test = 5000;
    std::size_t dim = 8;
    double noise_std = 1.0;
    std::uint64_t seed = 0;
};

struct synthetic_task {
    task_spec spec;
    matrix x_train, x_val, x_test;
    std::vector<double> y_train, y_val, y_test;
    std::vector<double> w_star;  // unit-norm true signal direction
    double b_star = 0.0;
    double sine_scale = 0.0;  // amplitude used by the noisy-sine task, 0 otherwise
};

namespace detail {

inline void validate_spec(const task_spec& spec) {
    if (spec.n_train == 0 || spec.n_val == 0 || spec.n_test == 0)
        throw invalid_spec("every split must contain at least one example");
    if (spec.dim == 0) throw invalid_spec("feature dimension must be positive");
    if (!(spec.noise_std >= 0.0) || !std::isfinite(spec.noise_std))
        throw invalid_spec("noise standard deviation must be finite and non-negative");
}

inline void fill_split(gaussian_rng& rng, const synthetic_task& task, std::size_t n, matrix& x,
                       std::vector<double>& y) {
    const std::size_t d = task.spec.dim;
    x = matrix(n, d);
    y.resize(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) x(r, c) = rng.normal();
    for (std::size_t r = 0; r < n; ++r) {
        double signal = task.b_star;
        double dot = 0.0;
        for (std::size_t c = 0; c < d; ++c) dot += x(r, c) * task.w_star[c];
        if (task.spec.kind == task_kind::linear)
            signal += dot;
        else
            signal += std::sin(dot) * task.sine_scale;
        y[r] = signal + task.spec.noise_std * rng.normal();
    }
}

}  // namespace detail

// Draws the ground-truth direction first, then each split (features before
// noise) in train/val/test order, so a given seed always produces the same
// task regardless of how the result is used afterwards.
inline synthetic_task generate_task(const task_spec& spec) {
    detail::validate_spec(spec);
    synthetic_task task;
    task.spec = spec;
    task.b_star = 0.5;
    task.sine_scale = spec.kind == task_kind::noisy_sine ? 2.0 : 0.0;

    gaussian_rng rng(spec.seed);
    task.w_star.resize(spec.dim);
    double norm_sq = 0.0;
    for (auto& w : task.w_star) {
        w = rng.normal();
        norm_sq += w * w;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) throw invalid_spec("degenerate ground-truth direction");
    for (auto& w : task.w_star) w /= norm;

    detail::fill_split(rng, task, spec.n_train, task.x_train, task.y_train);
    detail::fill_split(rng, task, spec.n_val, task.x_val, task.y_val);
    detail::fill_split(rng, task, spec.n_test, task.x_test, task.y_test);
    return task;
}

// Linear-softmax classifier over label bins.
struct softmax_model {
    matrix weights;  // num_bins x dim
    std::vector<double> bias;
    binning_scheme scheme;
    std::vector<double> loss_history;  // mean cross-entropy per epoch

    logit_matrix logits(const matrix& x) const {
        if (x.cols() != weights.cols()) throw length_mismatch(x.cols(), weights.cols());
        const std::size_t m = weights.rows();
        logit_matrix out(x.rows(), m);
        for_each_block(x.rows(), [&](std::size_t, std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r)
                for (std::size_t k = 0; k < m; ++k) {
                    double z = bias[k];
                    for (std::size_t c = 0; c < x.cols(); ++c) z += weights(k, c) * x(r, c);
                    out(r, k) = z;
                }
        });
        return out;
    }
};

// Full-batch gradient descent on mean cross-entropy from zero-initialised
// parameters. Gradients are accumulated per fixed-size block and merged in
// block order, so results are identical for any thread count.
inline softmax_model train_softmax(const matrix& x, std::span<const double> y,
                                   const binning_scheme& scheme, int epochs,
                                   double learning_rate) {
    if (x.rows() != y.size()) throw length_mismatch(x.rows(), y.size());
    if (x.rows() == 0) throw empty_training_set();
    if (epochs < 0) throw invalid_spec("epoch count must be non-negative");
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
        throw invalid_spec("learning rate must be positive and finite");

    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    const std::size_t m = static_cast<std::size_t>(scheme.num_bins);

    std::vector<int> classes(n);
    for (std::size_t i = 0; i < n; ++i) classes[i] = label_to_class(scheme, y[i]);

    softmax_model model;
    model.weights = matrix(m, d);
    model.bias.assign(m, 0.0);
    model.scheme = scheme;
    model.loss_history.reserve(static_cast<std::size_t>(epochs));

    const std::size_t blocks = block_count(n);
    const std::size_t params = m * (d + 1);
    std::vector<double> block_grad(blocks * params);
    std::vector<double> block_loss(blocks);

    for (int epoch = 0; epoch < epochs; ++epoch) {
        std::fill(block_grad.begin(), block_grad.end(), 0.0);
        std::fill(block_loss.begin(), block_loss.end(), 0.0);
        for_each_block(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
            double* grad = block_grad.data() + block * params;
            std::vector<double> row(m), pr(m);
            double loss = 0.0;
            for (std::size_t r = begin; r < end; ++r) {
                for (std::size_t k = 0; k < m; ++k) {
                    double z = model.bias[k];
                    for (std::size_t c = 0; c < d; ++c) z += model.weights(k, c) * x(r, c);
                    row[k] = z;
                }
                softmax_with_temperature(row, 1.0, pr);
                loss -= std::log(pr[static_cast<std::size_t>(classes[r])]);
                for (std::size_t k = 0; k < m; ++k) {
                    const double g =
                        pr[k] - (static_cast<std::size_t>(classes[r]) == k ? 1.0 : 0.0);
                    double* gk = grad + k * (d + 1);
                    for (std::size_t c = 0; c < d; ++c) gk[c] += g * x(r, c);
                    gk[d] += g;
                }
            }
            block_loss[block] = loss;
        });

        double loss = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) loss += block_loss[b];
        loss /= static_cast<double>(n);
        if (!std::isfinite(loss)) throw diverged_loss(epoch);
        model.loss_history.push_back(loss);

        const double scale = learning_rate / static_cast<double>(n);
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t c = 0; c <= d; ++c) {
                double g = 0.0;
                for (std::size_t b = 0; b < blocks; ++b)
                    g += block_grad[b * params + k * (d + 1) + c];
                if (c < d)
                    model.weights(k, c) -= scale * g;
                else
                    model.bias[k] -= scale * g;
            }
        }
    }
    return model;
}

// Plain linear least-squares head used as the accuracy baseline.
struct standard_regressor {
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<double> loss_history;  // mean squared error per epoch

    double predict(std::span<const double> x) const {
        if (x.size() != weights.size()) throw length_mismatch(x.size(), weights.size());
        double z = bias;
        for (std::size_t c = 0; c < x.size(); ++c) z += weights[c] * x[c];
        return z;
    }

    std::vector<double> predict(const matrix& x) const {
        if (x.cols() != weights.size()) throw length_mismatch(x.cols(), weights.size());
        std::vector<double> out(x.rows());
        for_each_block(x.rows(), [&](std::size_t, std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r) out[r] = predict(x.row(r));
        });
        return out;
    }
};

inline standard_regressor train_regressor(const matrix& x, std::span<const double> y, int epochs,
                                          double learning_rate) {
    if (x.rows() != y.size()) throw length_mismatch(x.rows(), y.size());
    if (x.rows() == 0) throw empty_training_set();
    if (epochs < 0) throw invalid_spec("epoch count must be non-negative");
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
        throw invalid_spec("learning rate must be positive and finite");

    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    standard_regressor model;
    model.weights.assign(d, 0.0);
    model.loss_history.reserve(static_cast<std::size_t>(epochs));

    const std::size_t blocks = block_count(n);
    std::vector<double> block_grad(blocks * (d + 1));
    std::vector<double> block_loss(blocks);

    for (int epoch = 0; epoch < epochs; ++epoch) {
        std::fill(block_grad.begin(), block_grad.end(), 0.0);
        std::fill(block_loss.begin(), block_loss.end(), 0.0);
        for_each_block(n, [&](std::size_t block, std::size_t begin, std::size_t end) {
            double* grad = block_grad.data() + block * (d + 1);
            double loss = 0.0;
            for (std::size_t r = begin; r < end; ++r) {
                double z = model.bias;
                for (std::size_t c = 0; c < d; ++c) z += model.weights[c] * x(r, c);
                const double e = z - y[r];
                loss += e * e;
                for (std::size_t c = 0; c < d; ++c) grad[c] += e * x(r, c);
                grad[d] += e;
            }
            block_loss[block] = loss;
        });

        double loss = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) loss += block_loss[b];
        loss /= static_cast<double>(n);
        if (!std::isfinite(loss)) throw diverged_loss(epoch);
        model.loss_history.push_back(loss);

        const double scale = 2.0 * learning_rate / static_cast<double>(n);
        for (std::size_t c = 0; c <= d; ++c) {
            double g = 0.0;
            for (std::size_t b = 0; b < blocks; ++b) g += block_grad[b * (d + 1) + c];
            if (c < d)
                model.weights[c] -= scale * g;
            else
                model.bias -= scale * g;
        }
    }
    return model;
}

// Sharpens (factor > 1) or flattens (factor < 1) the classifier's confidence
// by scaling every logit; used to manufacture miscalibrated inputs.
inline logit_matrix distort_confidence(const logit_matrix& logits, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw non_positive_factor(factor);
    logit_matrix out(logits.rows(), logits.cols());
    const std::size_t total = logits.rows() * logits.cols();
    for_each_block(total, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out.data()[i] = logits.data()[i] * factor;
    });
    return out;
}

}  // namespace predint
