// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Criteria mix exact property checks with a scaled-down end-to-end experiment
// on a seeded linear task whose classifier confidence is distorted by 3x.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracle_helpers.hpp"
#include "predint/predint.hpp"

using namespace predint;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

struct bin_setup {
    binning_scheme scheme;
    softmax_model model;
    logit_matrix val_logits;    // distorted 3x
    logit_matrix test_logits;   // distorted 3x
    prob_matrix val_probs;      // T=1 probabilities of the distorted logits
    prob_matrix test_probs;
};

struct experiment {
    synthetic_task task;
    std::map<int, bin_setup> by_bins;
    standard_regressor regressor;
};

experiment build_experiment() {
    experiment ex;
    task_spec spec;
    spec.kind = task_kind::linear;
    spec.n_train = 20000;
    spec.n_val = 5000;
    spec.n_test = 5000;
    spec.dim = 8;
    spec.noise_std = 1.3;
    spec.seed = 10;
    ex.task = generate_task(spec);
    for (const int m : {10, 30, 60}) {
        bin_setup setup;
        setup.scheme = build_bins(ex.task.y_train, m);
        setup.model = train_softmax(ex.task.x_train, ex.task.y_train, setup.scheme, 300, 2.0);
        setup.val_logits = distort_confidence(setup.model.logits(ex.task.x_val), 3.0);
        setup.test_logits = distort_confidence(setup.model.logits(ex.task.x_test), 3.0);
        setup.val_probs = apply_temperature(setup.val_logits, 1.0);
        setup.test_probs = apply_temperature(setup.test_logits, 1.0);
        ex.by_bins.emplace(m, std::move(setup));
    }
    ex.regressor = train_regressor(ex.task.x_train, ex.task.y_train, 300, 0.2);
    return ex;
}

calibration_config config_for(double alpha) {
    calibration_config config;
    config.target_alpha = alpha;
    return config;
}

// ---- criterion 1: brute-force oracle equivalence --------------------------
void criterion_1() {
    std::mt19937_64 eng(101);
    int mismatches = 0;
    const int total = 500;
    for (int trial = 0; trial < total; ++trial) {
        const int m = (trial % 3 == 0) ? 5 : (trial % 3 == 1) ? 10 : 30;
        const auto scheme = build_bins(std::vector<double>{-1.0, 1.0}, m);
        const auto probs = testing::random_probs(eng, m);
        const int t_hat = testing::rand_int(eng, 0, m - 1);
        const double alpha = (trial % 10 == 0) ? 1.0 : 0.01 + 0.98 * testing::rand_unit(eng);
        const auto got = posterior_interval(probs, t_hat, scheme, alpha);
        const auto want = testing::brute_force_interval(probs, t_hat, scheme, alpha);
        if (!(got == want)) ++mismatches;
    }
    report(1, mismatches == 0,
           "posterior intervals equal brute-force enumeration on " +
               std::to_string(total - mismatches) + "/" + std::to_string(total) +
               " random instances (M in {5,10,30})");
}

// ---- criterion 2: exact monotonicity of empirical coverage ----------------
void criterion_2() {
    std::mt19937_64 eng(202);
    int violations = 0;
    for (int dataset = 0; dataset < 20; ++dataset) {
        const int m = testing::rand_int(eng, 3, 25);
        std::vector<double> anchor{0.0, static_cast<double>(m)};
        const auto scheme = build_bins(anchor, m);
        const std::size_t n = 300;
        prob_matrix probs(n, static_cast<std::size_t>(m));
        std::vector<double> labels(n);
        for (std::size_t r = 0; r < n; ++r) {
            const auto p = testing::random_probs(eng, m);
            std::copy(p.begin(), p.end(), probs.row(r).begin());
            labels[r] = -0.5 + (m + 1.0) * testing::rand_unit(eng);
        }
        double prev = -1.0;
        for (int g = 1; g <= 19; ++g) {
            const double cov = coverage_at_alpha0(probs, labels, scheme, 0.05 * g);
            if (cov < prev) ++violations;
            prev = cov;
        }
    }
    report(2, violations == 0,
           "coverage_at_alpha0 non-decreasing on 20 datasets x 19-point grid (" +
               std::to_string(violations) + " violations)");
}

// ---- criterion 3: near-monotonicity of F_alpha(T) --------------------------
void criterion_3(const experiment& ex) {
    const auto& setup = ex.by_bins.at(30);
    const double alpha = 0.8;
    std::vector<double> covs;
    for (int j = 0; j < 30; ++j) {
        const double t =
            std::exp(std::log(1.0 / 64.0) + (std::log(64.0) - std::log(1.0 / 64.0)) * j / 29.0);
        covs.push_back(
            coverage_at_temperature(setup.val_logits, ex.task.y_val, setup.scheme, alpha, t));
    }
    int violations = 0;
    double worst = 0.0;
    for (std::size_t j = 1; j < covs.size(); ++j)
        if (covs[j] < covs[j - 1]) {
            ++violations;
            worst = std::max(worst, covs[j - 1] - covs[j]);
        }
    const bool pass = violations <= 2 && worst <= 0.005;
    report(3, pass,
           "F_0.80(T) over 30 log-spaced T in [1/64,64] at M=30: " + std::to_string(violations) +
               " adjacent dips (allowed 2), worst " + fmt(worst * 100.0) +
               "pp (allowed 0.50pp)");
}

// ---- criterion 4: calibration efficacy table ------------------------------
void criterion_4(const experiment& ex,
                 std::map<std::pair<int, double>, calibration_result>& emp_results,
                 std::map<std::pair<int, double>, calibration_result>& tmp_results) {
    const double eps_val = 0.001 + 1.0 / static_cast<double>(ex.task.spec.n_val) + 1e-12;
    int cells_ok = 0;
    std::string failures;
    for (const int m : {10, 30, 60}) {
        const auto& setup = ex.by_bins.at(m);
        for (const double alpha : {0.66, 0.80, 0.90}) {
            const auto posterior = posterior_intervals(setup.test_probs, setup.scheme, alpha);
            const double post_err =
                calibration_error(coverage(posterior, ex.task.y_test), alpha);

            const auto emp = empirical_calibration(setup.val_probs, ex.task.y_val, setup.scheme,
                                                   config_for(alpha));
            const double emp_val_miss = std::fabs(emp.achieved_coverage - alpha);
            const double emp_err = calibration_error(
                coverage(apply_calibration(setup.test_logits, setup.scheme, emp, alpha),
                         ex.task.y_test),
                alpha);

            const auto tmp = temperature_scaling(setup.val_logits, ex.task.y_val, setup.scheme,
                                                 config_for(alpha));
            const double tmp_val_miss = std::fabs(tmp.achieved_coverage - alpha);
            const double tmp_err = calibration_error(
                coverage(apply_calibration(setup.test_logits, setup.scheme, tmp, alpha),
                         ex.task.y_test),
                alpha);

            emp_results.emplace(std::make_pair(m, alpha), emp);
            tmp_results.emplace(std::make_pair(m, alpha), tmp);

            std::string cell_failures;
            if (!(post_err >= 5.0))
                cell_failures += " posterior error " + fmt(post_err) + "pp < 5.00pp;";
            if (!(emp_err <= 3.0))
                cell_failures += " empirical test error " + fmt(emp_err) + "pp > 3.00pp;";
            if (!(tmp_err <= 3.0))
                cell_failures += " temperature test error " + fmt(tmp_err) + "pp > 3.00pp;";
            if (!(emp_val_miss <= eps_val))
                cell_failures += " empirical val miss " + fmt(emp_val_miss * 100.0, 3) + "pp;";
            if (!(tmp_val_miss <= eps_val))
                cell_failures += " temperature val miss " + fmt(tmp_val_miss * 100.0, 3) + "pp;";

            std::printf("    cell M=%-2d alpha=%.2f: posterior %.2fpp, empirical %.2fpp, "
                        "temperature %.2fpp%s\n",
                        m, alpha, post_err, emp_err, tmp_err,
                        cell_failures.empty() ? "" : "  <-- FAIL");
            if (cell_failures.empty())
                ++cells_ok;
            else
                failures += " [M=" + std::to_string(m) + " alpha=" + fmt(alpha) + ":" +
                            cell_failures + "]";
        }
    }
    report(4, cells_ok == 9,
           "calibration efficacy " + std::to_string(cells_ok) + "/9 cells" +
               (failures.empty() ? "" : ";" + failures));
}

// ---- criterion 5: search within 0.2pp of dense sweeps ---------------------
void criterion_5(const experiment& ex,
                 const std::map<std::pair<int, double>, calibration_result>& emp_results,
                 const std::map<std::pair<int, double>, calibration_result>& tmp_results) {
    const auto& setup = ex.by_bins.at(30);
    bool pass = true;
    std::string detail;
    double worst_gap = 0.0;
    for (const double alpha : {0.66, 0.80, 0.90}) {
        double emp_best = 1.0;
        for (int g = 1; g <= 1000; ++g) {
            const double cov =
                coverage_at_alpha0(setup.val_probs, ex.task.y_val, setup.scheme, 0.001 * g);
            emp_best = std::min(emp_best, std::fabs(cov - alpha));
        }
        const double emp_miss =
            std::fabs(emp_results.at({30, alpha}).achieved_coverage - alpha);
        worst_gap = std::max(worst_gap, emp_miss - emp_best);
        if (emp_miss > emp_best + 0.002) pass = false;

        double tmp_best = 1.0;
        for (int g = 0; g < 200; ++g) {
            const double t = std::exp(std::log(1.0 / 64.0) +
                                      (std::log(64.0) - std::log(1.0 / 64.0)) * g / 199.0);
            const double cov = coverage_at_temperature(setup.val_logits, ex.task.y_val,
                                                       setup.scheme, alpha, t);
            tmp_best = std::min(tmp_best, std::fabs(cov - alpha));
        }
        const double tmp_miss =
            std::fabs(tmp_results.at({30, alpha}).achieved_coverage - alpha);
        worst_gap = std::max(worst_gap, tmp_miss - tmp_best);
        if (tmp_miss > tmp_best + 0.002) pass = false;
    }
    report(5, pass,
           "fitted alpha0/T at M=30 within 0.2pp of dense sweeps for all levels (worst gap " +
               fmt(std::max(worst_gap, 0.0) * 100.0, 3) + "pp)");
}

// ---- criterion 6: width/bins trend -----------------------------------------
void criterion_6(const experiment& ex,
                 const std::map<std::pair<int, double>, calibration_result>& emp_results,
                 const std::map<std::pair<int, double>, calibration_result>& tmp_results) {
    const double alpha = 0.80;
    auto width_of = [&](int m, const calibration_result& r) {
        const auto& setup = ex.by_bins.at(m);
        return mean_interval_width(apply_calibration(setup.test_logits, setup.scheme, r, alpha),
                                   setup.scheme);
    };
    const double emp_ratio =
        width_of(60, emp_results.at({60, alpha})) / width_of(10, emp_results.at({10, alpha}));
    const double tmp_ratio =
        width_of(60, tmp_results.at({60, alpha})) / width_of(10, tmp_results.at({10, alpha}));
    const bool pass = emp_ratio <= 1.05 && tmp_ratio <= 1.05;
    report(6, pass,
           "mean calibrated width M=60/M=10 at alpha=0.80: empirical " + fmt(emp_ratio, 3) +
               ", temperature " + fmt(tmp_ratio, 3) + " (allowed 1.050)");
}

// ---- criterion 7: RMSE parity ----------------------------------------------
void criterion_7(const experiment& ex) {
    const auto reg_preds = ex.regressor.predict(ex.task.x_test);
    const double reg_rmse = rmse(reg_preds, ex.task.y_test);
    bool pass = true;
    std::string ratios;
    for (const int m : {10, 30, 60}) {
        const auto& setup = ex.by_bins.at(m);
        const prob_matrix probs = apply_temperature(setup.model.logits(ex.task.x_test), 1.0);
        std::vector<double> preds(probs.rows());
        for (std::size_t r = 0; r < probs.rows(); ++r)
            preds[r] = expected_prediction(probs.row(r), setup.scheme).y_hat;
        const double ratio = rmse(preds, ex.task.y_test) / reg_rmse;
        if (!(ratio <= 1.15 && ratio >= 1.0 / 1.15)) pass = false;
        ratios += " M=" + std::to_string(m) + ": " + fmt(ratio, 4);
    }
    report(7, pass, "classifier-vs-regressor RMSE ratio within 15% --" + ratios);
}

// ---- criterion 8: softmax/temperature algebra ------------------------------
void criterion_8() {
    std::mt19937_64 eng(808);
    bool shift_ok = true, norm_ok = true, dual_ok = true, flat_ok = true, cold_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = testing::rand_int(eng, 2, 40);
        std::vector<double> z(static_cast<std::size_t>(m));
        for (auto& v : z) v = 40.0 * (2.0 * testing::rand_unit(eng) - 1.0);
        const double t = std::exp(2.0 * (2.0 * testing::rand_unit(eng) - 1.0));

        const auto p = softmax_with_temperature(z, t);
        double sum = 0.0;
        for (double v : p) sum += v;
        if (std::fabs(sum - 1.0) > 1e-9) norm_ok = false;

        auto shifted = z;
        const double c = 300.0 * (2.0 * testing::rand_unit(eng) - 1.0);
        for (auto& v : shifted) v += c;
        const auto q = softmax_with_temperature(shifted, t);
        for (int i = 0; i < m; ++i)
            if (std::fabs(p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)]) >
                1e-12)
                shift_ok = false;

        logit_matrix one_row(1, static_cast<std::size_t>(m));
        std::copy(z.begin(), z.end(), one_row.row(0).begin());
        const double k = 0.2 + 5.0 * testing::rand_unit(eng);
        const auto left = apply_temperature(distort_confidence(one_row, k), t);
        const auto right = apply_temperature(one_row, t / k);
        for (int i = 0; i < m; ++i)
            if (std::fabs(left(0, static_cast<std::size_t>(i)) -
                          right(0, static_cast<std::size_t>(i))) > 1e-12)
                dual_ok = false;

        const auto flat = softmax_with_temperature(z, 1e6);
        for (double v : flat)
            if (std::fabs(v - 1.0 / m) > 1e-3) flat_ok = false;

        const auto cold = softmax_with_temperature(z, 1e-6);
        const auto arg = static_cast<std::size_t>(std::max_element(z.begin(), z.end()) -
                                                  z.begin());
        if (!(cold[arg] > 0.999)) cold_ok = false;
    }
    const bool pass = shift_ok && norm_ok && dual_ok && flat_ok && cold_ok;
    report(8, pass,
           std::string("softmax algebra: shift ") + (shift_ok ? "ok" : "FAIL") +
               ", normalization " + (norm_ok ? "ok" : "FAIL") + ", duality " +
               (dual_ok ? "ok" : "FAIL") + ", uniform limit " + (flat_ok ? "ok" : "FAIL") +
               ", argmax limit " + (cold_ok ? "ok" : "FAIL"));
}

// ---- criterion 9: gradient correctness -------------------------------------
void criterion_9() {
    std::mt19937_64 eng(909);
    const std::size_t n = 5, d = 3;
    const int m = 3;
    matrix x(n, d);
    std::vector<double> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) x(r, c) = 2.0 * testing::rand_unit(eng) - 1.0;
        y[r] = 3.0 * testing::rand_unit(eng);
    }
    y[0] = 0.0;
    y[1] = 3.0;
    const auto scheme = build_bins(y, m);
    std::vector<int> classes(n);
    for (std::size_t i = 0; i < n; ++i) classes[i] = label_to_class(scheme, y[i]);

    auto ce_loss = [&](const matrix& w, const std::vector<double>& b) {
        double loss = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<double> z(w.rows());
            for (std::size_t k = 0; k < w.rows(); ++k) {
                z[k] = b[k];
                for (std::size_t c = 0; c < d; ++c) z[k] += w(k, c) * x(r, c);
            }
            double zmax = z[0];
            for (double v : z) zmax = std::max(zmax, v);
            double denom = 0.0;
            for (double v : z) denom += std::exp(v - zmax);
            loss -= z[static_cast<std::size_t>(classes[r])] - zmax - std::log(denom);
        }
        return loss / static_cast<double>(n);
    };
    auto mse_loss = [&](const std::vector<double>& w, double b) {
        double loss = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double z = b;
            for (std::size_t c = 0; c < d; ++c) z += w[c] * x(r, c);
            loss += (z - y[r]) * (z - y[r]);
        }
        return loss / static_cast<double>(n);
    };

    const double lr = 0.7, h = 1e-5;
    const auto c1 = train_softmax(x, y, scheme, 1, lr);
    const auto c2 = train_softmax(x, y, scheme, 2, lr);
    double ce_rel = 0.0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k)
        for (std::size_t c = 0; c <= d; ++c) {
            const double analytic = c < d ? (c1.weights(k, c) - c2.weights(k, c)) / lr
                                          : (c1.bias[k] - c2.bias[k]) / lr;
            matrix wp = c1.weights, wm = c1.weights;
            std::vector<double> bp = c1.bias, bm = c1.bias;
            if (c < d) {
                wp(k, c) += h;
                wm(k, c) -= h;
            } else {
                bp[k] += h;
                bm[k] -= h;
            }
            const double fd = (ce_loss(wp, bp) - ce_loss(wm, bm)) / (2.0 * h);
            ce_rel = std::max(ce_rel,
                              std::fabs(analytic - fd) / std::max(std::fabs(fd), 1e-6));
        }

    const auto r1 = train_regressor(x, y, 1, lr);
    const auto r2 = train_regressor(x, y, 2, lr);
    double mse_rel = 0.0;
    for (std::size_t c = 0; c <= d; ++c) {
        const double analytic =
            c < d ? (r1.weights[c] - r2.weights[c]) / lr : (r1.bias - r2.bias) / lr;
        std::vector<double> wp = r1.weights, wm = r1.weights;
        double bp = r1.bias, bm = r1.bias;
        if (c < d) {
            wp[c] += h;
            wm[c] -= h;
        } else {
            bp += h;
            bm -= h;
        }
        const double fd = (mse_loss(wp, bp) - mse_loss(wm, bm)) / (2.0 * h);
        mse_rel = std::max(mse_rel,
                           std::fabs(analytic - fd) / std::max(std::fabs(fd), 1e-6));
    }

    const bool pass = ce_rel <= 1e-4 && mse_rel <= 1e-4;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "gradients vs central differences: cross-entropy %.2e, squared error %.2e "
                  "(allowed 1e-4)",
                  ce_rel, mse_rel);
    report(9, pass, buf);
}

// ---- criterion 10: byte-identical pipeline reruns --------------------------
void run_pipeline(const fs::path& dir) {
    fs::create_directories(dir);
    task_spec spec;
    spec.kind = task_kind::linear;
    spec.n_train = 2000;
    spec.n_val = 800;
    spec.n_test = 800;
    spec.dim = 8;
    spec.noise_std = 1.3;
    spec.seed = 5;
    const auto task = generate_task(spec);
    write_matrix_csv((dir / "x_train.csv").string(), task.x_train);
    write_vector_csv((dir / "y_train.csv").string(), task.y_train);
    write_matrix_csv((dir / "x_val.csv").string(), task.x_val);
    write_vector_csv((dir / "y_val.csv").string(), task.y_val);
    write_matrix_csv((dir / "x_test.csv").string(), task.x_test);
    write_vector_csv((dir / "y_test.csv").string(), task.y_test);
    write_json((dir / "task.json").string(), task_spec_to_json(spec));

    const auto x_train = read_matrix_csv((dir / "x_train.csv").string());
    const auto y_train = read_vector_csv((dir / "y_train.csv").string());
    const auto scheme = build_bins(y_train, 20);
    const auto model = train_softmax(x_train, y_train, scheme, 80, 2.0);
    write_json((dir / "scheme.json").string(), scheme_to_json(scheme));
    write_json((dir / "model.json").string(), softmax_model_to_json(model));
    const auto val_logits = distort_confidence(
        model.logits(read_matrix_csv((dir / "x_val.csv").string())), 3.0);
    const auto test_logits = distort_confidence(
        model.logits(read_matrix_csv((dir / "x_test.csv").string())), 3.0);
    write_matrix_csv((dir / "logits_val.csv").string(), val_logits);
    write_matrix_csv((dir / "logits_test.csv").string(), test_logits);

    const auto y_val = read_vector_csv((dir / "y_val.csv").string());
    const auto y_test = read_vector_csv((dir / "y_test.csv").string());
    std::vector<evaluation_report> rows;
    for (const double alpha : {0.66, 0.8}) {
        const auto emp = empirical_calibration(apply_temperature(val_logits, 1.0), y_val, scheme,
                                               config_for(alpha));
        const auto tmp = temperature_scaling(val_logits, y_val, scheme, config_for(alpha));
        write_json((dir / ("calibration_empirical_" + fmt(alpha) + ".json")).string(),
                   calibration_to_json(emp));
        write_json((dir / ("calibration_temperature_" + fmt(alpha) + ".json")).string(),
                   calibration_to_json(tmp));

        const prob_matrix probs = apply_temperature(test_logits, 1.0);
        std::vector<double> preds(probs.rows());
        for (std::size_t r = 0; r < probs.rows(); ++r)
            preds[r] = expected_prediction(probs.row(r), scheme).y_hat;
        rows.push_back(build_report("determinism", alpha, 20, report_method::posterior,
                                    posterior_intervals(probs, scheme, alpha), y_test, preds,
                                    scheme));
        rows.push_back(build_report("determinism", alpha, 20, report_method::empirical,
                                    apply_calibration(test_logits, scheme, emp, alpha), y_test,
                                    preds, scheme));
        rows.push_back(build_report("determinism", alpha, 20, report_method::temperature,
                                    apply_calibration(test_logits, scheme, tmp, alpha), y_test,
                                    preds, scheme));
    }
    json report = json::array();
    for (const auto& row : rows) report.push_back(report_to_json(row));
    write_json((dir / "report.json").string(), report);
    std::ofstream((dir / "report.txt").string(), std::ios::binary) << report_table(rows);
}

bool same_directory_bytes(const fs::path& a, const fs::path& b, std::string& first_diff) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(a)) names.push_back(entry.path().filename());
    std::sort(names.begin(), names.end());
    for (const auto& name : names) {
        std::ifstream fa(a / name, std::ios::binary), fb(b / name, std::ios::binary);
        const std::string sa((std::istreambuf_iterator<char>(fa)),
                             std::istreambuf_iterator<char>());
        const std::string sb((std::istreambuf_iterator<char>(fb)),
                             std::istreambuf_iterator<char>());
        if (sa != sb || sa.empty()) {
            first_diff = name;
            return false;
        }
    }
    return true;
}

void criterion_10() {
    const fs::path base = fs::temp_directory_path() / "predint_acceptance";
    fs::remove_all(base);
    run_pipeline(base / "run1");
    run_pipeline(base / "run2");
    setenv("CALIB_THREADS", "4", 1);
    run_pipeline(base / "run4t");
    unsetenv("CALIB_THREADS");

    std::string diff1, diff2;
    const bool rerun_ok = same_directory_bytes(base / "run1", base / "run2", diff1);
    const bool threads_ok = same_directory_bytes(base / "run1", base / "run4t", diff2);
    report(10, rerun_ok && threads_ok,
           std::string("pipeline reruns byte-identical: fixed-seed rerun ") +
               (rerun_ok ? "ok" : ("differs at " + diff1)) + ", CALIB_THREADS=4 " +
               (threads_ok ? "ok" : ("differs at " + diff2)));
    fs::remove_all(base);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::printf("building shared experiment (linear task, 3x distortion, M in {10,30,60})...\n");
    const experiment ex = build_experiment();

    criterion_1();
    criterion_2();
    criterion_3(ex);
    std::map<std::pair<int, double>, calibration_result> emp_results, tmp_results;
    criterion_4(ex, emp_results, tmp_results);
    criterion_5(ex, emp_results, tmp_results);
    criterion_6(ex, emp_results, tmp_results);
    criterion_7(ex);
    criterion_8();
    criterion_9();
    criterion_10();

    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("%d/10 criteria passed in %llds\n", 10 - g_failures,
                static_cast<long long>(seconds));
    return g_failures == 0 ? 0 : 1;
}
