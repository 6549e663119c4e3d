#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "predint/binning.hpp"
#include "predint/calibrate.hpp"
#include "predint/errors.hpp"
#include "predint/matrix.hpp"
#include "predint/metrics.hpp"
#include "predint/synth.hpp"

namespace predint {

namespace detail {

// Shortest round-trip decimal form, so write→read reproduces bits exactly.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& path) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc())
        throw io_error(path + ": cannot parse number '" + std::string(text) + "'");
    return v;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(path + ": cannot open for writing");
    return out;
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error(path + ": cannot open for reading");
    return in;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Headerless CSV: one example per row, comma-separated full-precision floats.
// ---------------------------------------------------------------------------

inline void write_matrix_csv(const std::string& path, const matrix& m) {
    auto out = detail::open_out(path);
    std::string line;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        line.clear();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) line += ',';
            line += detail::format_double(m(r, c));
        }
        line += '\n';
        out << line;
    }
    if (!out) throw io_error(path + ": write failed");
}

inline matrix read_matrix_csv(const std::string& path) {
    auto in = detail::open_in(path);
    std::vector<double> values;
    std::size_t rows = 0, cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t row_cols = 0;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            values.push_back(
                detail::parse_double(std::string_view(line).substr(pos, comma - pos), path));
            ++row_cols;
            pos = comma + 1;
            if (comma == line.size()) break;
        }
        if (rows == 0)
            cols = row_cols;
        else if (row_cols != cols)
            throw io_error(path + ": ragged rows");
        ++rows;
    }
    matrix m(rows, cols);
    std::copy(values.begin(), values.end(), m.data().begin());
    return m;
}

inline void write_vector_csv(const std::string& path, std::span<const double> v) {
    auto out = detail::open_out(path);
    for (double x : v) out << detail::format_double(x) << '\n';
    if (!out) throw io_error(path + ": write failed");
}

inline std::vector<double> read_vector_csv(const std::string& path) {
    auto in = detail::open_in(path);
    std::vector<double> v;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        v.push_back(detail::parse_double(line, path));
    }
    return v;
}

inline void write_intervals_csv(const std::string& path,
                                std::span<const prediction_interval> intervals,
                                const binning_scheme& scheme) {
    auto out = detail::open_out(path);
    for (const auto& iv : intervals) {
        out << iv.lower_idx << ',' << iv.upper_idx << ',' << detail::format_double(iv.lower)
            << ',' << detail::format_double(iv.upper) << ','
            << detail::format_double(interval_width(iv, scheme)) << '\n';
    }
    if (!out) throw io_error(path + ": write failed");
}

// ---------------------------------------------------------------------------
// JSON sidecars. Infinite bin edges are stored as "-inf"/"+inf" strings since
// JSON has no infinity literal.
// ---------------------------------------------------------------------------

using json = nlohmann::json;

inline json edge_to_json(double e) {
    if (std::isinf(e)) return e < 0 ? json("-inf") : json("+inf");
    return json(e);
}

inline double edge_from_json(const json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "+inf" || s == "inf") return std::numeric_limits<double>::infinity();
        throw io_error("unknown edge sentinel '" + s + "'");
    }
    return j.get<double>();
}

inline json scheme_to_json(const binning_scheme& scheme) {
    json edges = json::array();
    for (double e : scheme.edges) edges.push_back(edge_to_json(e));
    return json{{"num_bins", scheme.num_bins},
                {"edges", edges},
                {"centers", scheme.centers},
                {"finite_lo", scheme.finite_lo},
                {"finite_hi", scheme.finite_hi}};
}

inline binning_scheme scheme_from_json(const json& j) {
    binning_scheme scheme;
    scheme.num_bins = j.at("num_bins").get<int>();
    for (const auto& e : j.at("edges")) scheme.edges.push_back(edge_from_json(e));
    scheme.centers = j.at("centers").get<std::vector<double>>();
    scheme.finite_lo = j.at("finite_lo").get<double>();
    scheme.finite_hi = j.at("finite_hi").get<double>();
    return scheme;
}

inline json calibration_to_json(const calibration_result& r) {
    json trace = json::array();
    for (const auto& [param, cov] : r.trace) trace.push_back(json::array({param, cov}));
    return json{{"method", r.method == calibration_method::empirical ? "Empirical" : "Temperature"},
                {"parameter", r.parameter},
                {"achieved_coverage", r.achieved_coverage},
                {"converged", r.converged},
                {"iterations", r.iterations},
                {"trace", trace}};
}

inline calibration_result calibration_from_json(const json& j) {
    calibration_result r;
    const auto method = j.at("method").get<std::string>();
    if (method == "Empirical")
        r.method = calibration_method::empirical;
    else if (method == "Temperature")
        r.method = calibration_method::temperature;
    else
        throw io_error("unknown calibration method '" + method + "'");
    r.parameter = j.at("parameter").get<double>();
    r.achieved_coverage = j.at("achieved_coverage").get<double>();
    r.converged = j.at("converged").get<bool>();
    r.iterations = j.at("iterations").get<int>();
    for (const auto& entry : j.at("trace"))
        r.trace.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    return r;
}

inline json softmax_model_to_json(const softmax_model& model) {
    json weights = json::array();
    for (std::size_t r = 0; r < model.weights.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < model.weights.cols(); ++c) row.push_back(model.weights(r, c));
        weights.push_back(std::move(row));
    }
    return json{{"weights", weights},
                {"bias", model.bias},
                {"loss_history", model.loss_history},
                {"scheme", scheme_to_json(model.scheme)}};
}

inline softmax_model softmax_model_from_json(const json& j) {
    softmax_model model;
    const auto& weights = j.at("weights");
    const std::size_t rows = weights.size();
    const std::size_t cols = rows ? weights.at(0).size() : 0;
    model.weights = matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) model.weights(r, c) = weights.at(r).at(c);
    model.bias = j.at("bias").get<std::vector<double>>();
    model.loss_history = j.at("loss_history").get<std::vector<double>>();
    model.scheme = scheme_from_json(j.at("scheme"));
    return model;
}

inline json regressor_to_json(const standard_regressor& model) {
    return json{{"weights", model.weights},
                {"bias", model.bias},
                {"loss_history", model.loss_history}};
}

inline standard_regressor regressor_from_json(const json& j) {
    standard_regressor model;
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    model.loss_history = j.at("loss_history").get<std::vector<double>>();
    return model;
}

inline json task_spec_to_json(const task_spec& spec) {
    return json{{"kind", spec.kind == task_kind::linear ? "linear" : "noisy-sine"},
                {"n_train", spec.n_train},
                {"n_val", spec.n_val},
                {"n_test", spec.n_test},
                {"dim", spec.dim},
                {"noise_std", spec.noise_std},
                {"seed", spec.seed}};
}

inline task_spec task_spec_from_json(const json& j) {
    task_spec spec;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "linear")
        spec.kind = task_kind::linear;
    else if (kind == "noisy-sine")
        spec.kind = task_kind::noisy_sine;
    else
        throw io_error("unknown task kind '" + kind + "'");
    spec.n_train = j.at("n_train").get<std::size_t>();
    spec.n_val = j.at("n_val").get<std::size_t>();
    spec.n_test = j.at("n_test").get<std::size_t>();
    spec.dim = j.at("dim").get<std::size_t>();
    spec.noise_std = j.at("noise_std").get<double>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    return spec;
}

inline json report_to_json(const evaluation_report& r) {
    return json{{"dataset", r.dataset_name},
                {"alpha", r.alpha},
                {"num_bins", r.num_bins},
                {"method", method_name(r.method)},
                {"coverage", r.coverage},
                {"calibration_error", r.calibration_error},
                {"mean_width", r.mean_width},
                {"rmse", r.rmse},
                {"n_examples", r.n_examples}};
}

inline evaluation_report report_from_json(const json& j) {
    evaluation_report r;
    r.dataset_name = j.at("dataset").get<std::string>();
    r.alpha = j.at("alpha").get<double>();
    r.num_bins = j.at("num_bins").get<int>();
    const auto method = j.at("method").get<std::string>();
    if (method == "Posterior")
        r.method = report_method::posterior;
    else if (method == "Empirical")
        r.method = report_method::empirical;
    else if (method == "Temperature")
        r.method = report_method::temperature;
    else
        throw io_error("unknown report method '" + method + "'");
    r.coverage = j.at("coverage").get<double>();
    r.calibration_error = j.at("calibration_error").get<double>();
    r.mean_width = j.at("mean_width").get<double>();
    r.rmse = j.at("rmse").get<double>();
    r.n_examples = j.at("n_examples").get<std::size_t>();
    return r;
}

inline void write_json(const std::string& path, const json& j) {
    auto out = detail::open_out(path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error(path + ": write failed");
}

inline json read_json(const std::string& path) {
    auto in = detail::open_in(path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    return j;
}

}  // namespace predint
