#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "predint/errors.hpp"

namespace predint {

// Discretization of the real label line into num_bins classes. The outer
// edges are infinite; the interior edges are equally spaced between the
// minimum and maximum training label. centers[i] is the mean training label
// of bin i and is what expected predictions are built from. finite_lo and
// finite_hi keep the original label extremes for width clipping.
struct binning_scheme {
    int num_bins = 0;
    std::vector<double> edges;    // num_bins + 1 entries, first -inf, last +inf
    std::vector<double> centers;  // num_bins entries
    double finite_lo = 0.0;
    double finite_hi = 0.0;
};

// Bins are left-closed/right-open: returns the unique t with
// edges[t] <= y < edges[t+1]. Total over all finite reals.
inline int label_to_class(const binning_scheme& scheme, double y) {
    if (std::isnan(y)) throw invalid_label();
    auto it = std::upper_bound(scheme.edges.begin(), scheme.edges.end(), y);
    return static_cast<int>(it - scheme.edges.begin()) - 1;
}

inline binning_scheme build_bins(std::span<const double> train_labels, int m) {
    if (train_labels.empty()) throw empty_training_set();
    if (m < 1) throw non_positive_bin_count(m);

    const auto [lo_it, hi_it] = std::minmax_element(train_labels.begin(), train_labels.end());
    const double lo = *lo_it, hi = *hi_it;
    if (m >= 2 && lo == hi) throw degenerate_labels();

    constexpr double inf = std::numeric_limits<double>::infinity();
    binning_scheme scheme;
    scheme.num_bins = m;
    scheme.finite_lo = lo;
    scheme.finite_hi = hi;
    scheme.edges.resize(m + 1);
    scheme.edges.front() = -inf;
    scheme.edges.back() = inf;
    for (int k = 1; k < m; ++k) scheme.edges[k] = lo + (hi - lo) * k / m;

    std::vector<double> sum(m, 0.0);
    std::vector<std::size_t> count(m, 0);
    for (double y : train_labels) {
        const int t = label_to_class(scheme, y);
        sum[t] += y;
        ++count[t];
    }
    scheme.centers.resize(m);
    for (int i = 0; i < m; ++i) {
        if (count[i] > 0) {
            scheme.centers[i] = sum[i] / static_cast<double>(count[i]);
        } else if (i == 0) {
            scheme.centers[i] = lo;
        } else if (i == m - 1) {
            scheme.centers[i] = hi;
        } else {
            scheme.centers[i] = 0.5 * (scheme.edges[i] + scheme.edges[i + 1]);
        }
    }
    return scheme;
}

}  // namespace predint
