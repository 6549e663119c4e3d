#pragma once

#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "predint/binning.hpp"
#include "predint/errors.hpp"
#include "predint/intervals.hpp"
#include "predint/parallel.hpp"

namespace predint {

enum class report_method { posterior, empirical, temperature };

inline const char* method_name(report_method m) {
    switch (m) {
        case report_method::posterior: return "Posterior";
        case report_method::empirical: return "Empirical";
        default: return "Temperature";
    }
}

// One evaluation cell: a (dataset, confidence level, bin count, method)
// combination with its measured quality numbers.
struct evaluation_report {
    std::string dataset_name;
    double alpha = 0.0;
    int num_bins = 0;
    report_method method = report_method::posterior;
    double coverage = 0.0;
    double calibration_error = 0.0;  // percentage points
    double mean_width = 0.0;         // label units
    double rmse = 0.0;               // label units
    std::size_t n_examples = 0;
};

// |coverage - alpha| in percentage points.
inline double calibration_error(double cov, double alpha) {
    return std::fabs(cov - alpha) * 100.0;
}

inline double mean_interval_width(std::span<const prediction_interval> intervals,
                                  const binning_scheme& scheme) {
    if (intervals.empty()) throw empty_input();
    const double total = compensated_sum(
        intervals.size(), [&](std::size_t i) { return interval_width(intervals[i], scheme); });
    return total / static_cast<double>(intervals.size());
}

inline double rmse(std::span<const double> predictions, std::span<const double> labels) {
    if (predictions.size() != labels.size())
        throw length_mismatch(predictions.size(), labels.size());
    if (predictions.empty()) throw empty_input();
    const double total = compensated_sum(predictions.size(), [&](std::size_t i) {
        const double e = predictions[i] - labels[i];
        return e * e;
    });
    return std::sqrt(total / static_cast<double>(predictions.size()));
}

inline evaluation_report build_report(const std::string& dataset_name, double alpha, int num_bins,
                                      report_method method,
                                      std::span<const prediction_interval> intervals,
                                      std::span<const double> labels,
                                      std::span<const double> predictions,
                                      const binning_scheme& scheme) {
    if (intervals.size() != labels.size() || predictions.size() != labels.size())
        throw inconsistent_lengths();
    evaluation_report report;
    report.dataset_name = dataset_name;
    report.alpha = alpha;
    report.num_bins = num_bins;
    report.method = method;
    report.coverage = coverage(intervals, labels);
    report.calibration_error = calibration_error(report.coverage, alpha);
    report.mean_width = mean_interval_width(intervals, scheme);
    report.rmse = rmse(predictions, labels);
    report.n_examples = labels.size();
    return report;
}

// Aligned text table: one row per report cell, grouped the way the rows are
// passed in (callers sort by dataset, confidence, bins).
inline std::string report_table(std::span<const evaluation_report> rows) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %6s %5s %-12s %9s %9s %9s %9s\n", "dataset",
                  "alpha", "bins", "method", "coverage", "cal_err", "width", "rmse");
    out += line;
    out.append(76, '-');
    out += '\n';
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%-12s %6.2f %5d %-12s %9.4f %9.2f %9.4f %9.4f\n",
                      r.dataset_name.c_str(), r.alpha, r.num_bins, method_name(r.method),
                      r.coverage, r.calibration_error, r.mean_width, r.rmse);
        out += line;
    }
    return out;
}

}  // namespace predint
