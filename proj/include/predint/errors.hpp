#pragma once

#include <stdexcept>
#include <string>

namespace predint {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_training_set : error {
    empty_training_set() : error("training label set is empty") {}
};

struct degenerate_labels : error {
    degenerate_labels()
        : error("all training labels are equal; cannot place more than one bin") {}
};

struct non_positive_bin_count : error {
    explicit non_positive_bin_count(int m)
        : error("bin count must be >= 1, got " + std::to_string(m)) {}
};

struct invalid_label : error {
    invalid_label() : error("label is NaN") {}
};

struct non_positive_temperature : error {
    explicit non_positive_temperature(double t)
        : error("temperature must be a positive finite real, got " + std::to_string(t)) {}
};

struct non_finite_logit : error {
    non_finite_logit() : error("logit matrix contains a non-finite value") {}
};

struct length_mismatch : error {
    length_mismatch(std::size_t a, std::size_t b)
        : error("sequence lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct alpha_out_of_range : error {
    explicit alpha_out_of_range(double a)
        : error("confidence level out of range: " + std::to_string(a)) {}
};

struct empty_input : error {
    empty_input() : error("input sequence is empty") {}
};

struct empty_validation_set : error {
    empty_validation_set() : error("validation set is empty") {}
};

struct bracketing_failed : error {
    double coverage_lo;
    double coverage_hi;
    bracketing_failed(double target, double t_lo, double t_hi, double cov_lo, double cov_hi)
        : error("temperature bracketing failed: target coverage " + std::to_string(target) +
                " not enclosed by [F(" + std::to_string(t_lo) + ") = " + std::to_string(cov_lo) +
                ", F(" + std::to_string(t_hi) + ") = " + std::to_string(cov_hi) + "]"),
          coverage_lo(cov_lo),
          coverage_hi(cov_hi) {}
};

struct scheme_mismatch : error {
    scheme_mismatch(std::size_t cols, int bins)
        : error("matrix has " + std::to_string(cols) + " columns but scheme has " +
                std::to_string(bins) + " bins") {}
};

struct inconsistent_lengths : error {
    inconsistent_lengths() : error("report inputs were computed on differently sized splits") {}
};

struct invalid_spec : error {
    explicit invalid_spec(const std::string& what) : error("invalid task spec: " + what) {}
};

struct diverged_loss : error {
    explicit diverged_loss(int epoch)
        : error("training loss became non-finite at epoch " + std::to_string(epoch)) {}
};

struct non_positive_factor : error {
    explicit non_positive_factor(double f)
        : error("distortion factor must be a positive finite real, got " + std::to_string(f)) {}
};

struct io_error : error {
    explicit io_error(const std::string& what) : error("io error: " + what) {}
};

}  // namespace predint
