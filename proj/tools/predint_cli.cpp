// Command-line pipeline: synthesize a task, train the binned classifier (or
// the baseline regressor), fit a calibration on the validation split, and
// evaluate calibrated intervals on the test split.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "predint/predint.hpp"

namespace fs = std::filesystem;
using namespace predint;

namespace {

// Confidence levels are accepted as fractions (0.8) or percentages (80) and
// normalized to fractions.
std::vector<double> parse_alphas(const std::string& list) {
    std::vector<double> alphas;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        const std::string token = list.substr(pos, comma - pos);
        if (!token.empty()) {
            double v = 0.0;
            try {
                v = std::stod(token);
            } catch (const std::exception&) {
                throw invalid_spec("cannot parse confidence level '" + token + "'");
            }
            if (v > 1.0) v /= 100.0;
            if (!(v > 0.0) || !(v < 1.0))
                throw alpha_out_of_range(v);
            alphas.push_back(v);
        }
        pos = comma + 1;
        if (comma == list.size()) break;
    }
    if (alphas.empty()) throw invalid_spec("no confidence levels given");
    return alphas;
}

std::string fmt_alpha(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", alpha);
    return buf;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error(dir + ": cannot create directory (" + ec.message() + ")");
}

std::vector<calibration_method> parse_methods(const std::string& method) {
    if (method == "empirical") return {calibration_method::empirical};
    if (method == "temperature") return {calibration_method::temperature};
    if (method == "both") return {calibration_method::empirical, calibration_method::temperature};
    throw invalid_spec("unknown method '" + method + "'");
}

const char* method_file_tag(calibration_method m) {
    return m == calibration_method::empirical ? "empirical" : "temperature";
}

std::vector<double> predictions_at(const logit_matrix& logits, const binning_scheme& scheme,
                                   double temperature) {
    const prob_matrix probs = apply_temperature(logits, temperature);
    std::vector<double> preds(probs.rows());
    for_each_block(probs.rows(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
            preds[r] = expected_prediction(probs.row(r), scheme).y_hat;
    });
    return preds;
}

struct synth_options {
    std::string out_dir;
    std::string task = "linear";
    task_spec spec;
};

int run_synth(const synth_options& opt) {
    task_spec spec = opt.spec;
    if (opt.task == "linear")
        spec.kind = task_kind::linear;
    else if (opt.task == "noisy-sine")
        spec.kind = task_kind::noisy_sine;
    else
        throw invalid_spec("unknown task '" + opt.task + "'");

    const synthetic_task task = generate_task(spec);
    ensure_dir(opt.out_dir);
    const fs::path dir = opt.out_dir;
    write_matrix_csv((dir / "x_train.csv").string(), task.x_train);
    write_vector_csv((dir / "y_train.csv").string(), task.y_train);
    write_matrix_csv((dir / "x_val.csv").string(), task.x_val);
    write_vector_csv((dir / "y_val.csv").string(), task.y_val);
    write_matrix_csv((dir / "x_test.csv").string(), task.x_test);
    write_vector_csv((dir / "y_test.csv").string(), task.y_test);
    write_json((dir / "task.json").string(), task_spec_to_json(spec));
    std::cout << "wrote " << opt.out_dir << ": " << task.y_train.size() << " train / "
              << task.y_val.size() << " val / " << task.y_test.size() << " test examples\n";
    return 0;
}

struct train_options {
    std::string data_dir;
    std::string out_dir;
    int bins = 10;
    std::string model = "softmax";
    int epochs = 300;
    double learning_rate = 2.0;
};

int run_train(const train_options& opt) {
    const fs::path data = opt.data_dir;
    const matrix x_train = read_matrix_csv((data / "x_train.csv").string());
    const std::vector<double> y_train = read_vector_csv((data / "y_train.csv").string());
    const matrix x_val = read_matrix_csv((data / "x_val.csv").string());
    const matrix x_test = read_matrix_csv((data / "x_test.csv").string());
    ensure_dir(opt.out_dir);
    const fs::path out = opt.out_dir;

    if (opt.model == "standard") {
        const standard_regressor model =
            train_regressor(x_train, y_train, opt.epochs, opt.learning_rate);
        write_json((out / "regressor.json").string(), regressor_to_json(model));
        write_vector_csv((out / "pred_val.csv").string(), model.predict(x_val));
        write_vector_csv((out / "pred_test.csv").string(), model.predict(x_test));
        std::cout << "regressor trained: final mse "
                  << (model.loss_history.empty() ? 0.0 : model.loss_history.back()) << "\n";
        return 0;
    }
    if (opt.model != "softmax") throw invalid_spec("unknown model '" + opt.model + "'");

    const binning_scheme scheme = build_bins(y_train, opt.bins);
    const softmax_model model =
        train_softmax(x_train, y_train, scheme, opt.epochs, opt.learning_rate);
    write_json((out / "scheme.json").string(), scheme_to_json(scheme));
    write_json((out / "model.json").string(), softmax_model_to_json(model));
    write_matrix_csv((out / "logits_val.csv").string(), model.logits(x_val));
    write_matrix_csv((out / "logits_test.csv").string(), model.logits(x_test));
    std::cout << "classifier trained: " << opt.bins << " bins, final cross-entropy "
              << (model.loss_history.empty() ? std::log(static_cast<double>(opt.bins))
                                             : model.loss_history.back())
              << "\n";
    return 0;
}

struct calibrate_options {
    std::string data_dir;
    std::string model_dir;
    std::string out_dir;
    std::string alphas = "0.66,0.8,0.9";
    std::string method = "both";
    double epsilon = 0.001;
    int max_iterations = 50;
    double distort = 1.0;
    bool strict = false;
};

int run_calibrate(const calibrate_options& opt) {
    const fs::path model_dir = opt.model_dir;
    const binning_scheme scheme = scheme_from_json(read_json((model_dir / "scheme.json").string()));
    logit_matrix logits = read_matrix_csv((model_dir / "logits_val.csv").string());
    const std::vector<double> y_val =
        read_vector_csv((fs::path(opt.data_dir) / "y_val.csv").string());
    if (opt.distort != 1.0) logits = distort_confidence(logits, opt.distort);

    ensure_dir(opt.out_dir);
    bool all_converged = true;
    for (const double alpha : parse_alphas(opt.alphas)) {
        for (const calibration_method method : parse_methods(opt.method)) {
            calibration_config config;
            config.target_alpha = alpha;
            config.epsilon = opt.epsilon;
            config.max_iterations = opt.max_iterations;
            const calibration_result result =
                method == calibration_method::empirical
                    ? empirical_calibration(apply_temperature(logits, 1.0), y_val, scheme,
                                            config)
                    : temperature_scaling(logits, y_val, scheme, config);
            const std::string name = std::string("calibration_") + method_file_tag(method) + "_" +
                                     fmt_alpha(alpha) + ".json";
            write_json((fs::path(opt.out_dir) / name).string(), calibration_to_json(result));
            std::cout << name << ": parameter " << result.parameter << ", coverage "
                      << result.achieved_coverage << ", iterations " << result.iterations << "\n";
            if (!result.converged) {
                all_converged = false;
                std::cerr << "warning: " << name << " did not reach the tolerance (|coverage - "
                          << alpha << "| = "
                          << std::fabs(result.achieved_coverage - alpha) << ")\n";
            }
        }
    }
    if (!all_converged && opt.strict) {
        std::cerr << "error: calibration did not converge and --strict is set\n";
        return 1;
    }
    return 0;
}

struct evaluate_options {
    std::string data_dir;
    std::string model_dir;
    std::string calib_dir;
    std::string out_dir;
    std::string alphas = "0.66,0.8,0.9";
    std::string method = "both";
    double distort = 1.0;
    std::string name = "synthetic";
};

int run_evaluate(const evaluate_options& opt) {
    const fs::path model_dir = opt.model_dir;
    const binning_scheme scheme = scheme_from_json(read_json((model_dir / "scheme.json").string()));
    logit_matrix logits = read_matrix_csv((model_dir / "logits_test.csv").string());
    const std::vector<double> y_test =
        read_vector_csv((fs::path(opt.data_dir) / "y_test.csv").string());
    if (opt.distort != 1.0) logits = distort_confidence(logits, opt.distort);

    const std::vector<double> base_predictions = predictions_at(logits, scheme, 1.0);
    std::vector<evaluation_report> rows;
    for (const double alpha : parse_alphas(opt.alphas)) {
        const prob_matrix probs = apply_temperature(logits, 1.0);
        const auto posterior = posterior_intervals(probs, scheme, alpha);
        rows.push_back(build_report(opt.name, alpha, scheme.num_bins, report_method::posterior,
                                    posterior, y_test, base_predictions, scheme));
        for (const calibration_method method : parse_methods(opt.method)) {
            const std::string name = std::string("calibration_") + method_file_tag(method) + "_" +
                                     fmt_alpha(alpha) + ".json";
            const calibration_result result =
                calibration_from_json(read_json((fs::path(opt.calib_dir) / name).string()));
            const auto intervals = apply_calibration(logits, scheme, result, alpha);
            const std::vector<double>& predictions =
                method == calibration_method::empirical ? base_predictions
                                                        : predictions_at(logits, scheme,
                                                                         result.parameter);
            const report_method row_method = method == calibration_method::empirical
                                                 ? report_method::empirical
                                                 : report_method::temperature;
            rows.push_back(build_report(opt.name, alpha, scheme.num_bins, row_method, intervals,
                                        y_test, predictions, scheme));
        }
    }

    ensure_dir(opt.out_dir);
    json report = json::array();
    for (const auto& row : rows) report.push_back(report_to_json(row));
    write_json((fs::path(opt.out_dir) / "report.json").string(), report);
    const std::string table = report_table(rows);
    {
        auto out = detail::open_out((fs::path(opt.out_dir) / "report.txt").string());
        out << table;
    }
    std::cout << table;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calibrated prediction intervals from binned classification"};
    app.require_subcommand(1);

    synth_options synth_opt;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic regression task");
    synth->add_option("--out-dir", synth_opt.out_dir, "Output directory")->required();
    synth->add_option("--task", synth_opt.task, "Task family: linear or noisy-sine");
    synth->add_option("--n-train", synth_opt.spec.n_train, "Training examples");
    synth->add_option("--n-val", synth_opt.spec.n_val, "Validation examples");
    synth->add_option("--n-test", synth_opt.spec.n_test, "Test examples");
    synth->add_option("--dim", synth_opt.spec.dim, "Feature dimension");
    synth->add_option("--noise-std", synth_opt.spec.noise_std, "Label noise std deviation");
    synth->add_option("--seed", synth_opt.spec.seed, "RNG seed");

    train_options train_opt;
    auto* train = app.add_subcommand("train", "Train the binned classifier or baseline regressor");
    train->add_option("--data-dir", train_opt.data_dir, "Directory written by synth")->required();
    train->add_option("--out-dir", train_opt.out_dir, "Output directory")->required();
    train->add_option("--bins", train_opt.bins, "Number of label bins");
    train->add_option("--model", train_opt.model, "Model: softmax or standard");
    train->add_option("--epochs", train_opt.epochs, "Gradient-descent epochs");
    train->add_option("--lr", train_opt.learning_rate, "Learning rate");

    calibrate_options cal_opt;
    auto* calibrate = app.add_subcommand("calibrate", "Fit calibration on the validation split");
    calibrate->add_option("--data-dir", cal_opt.data_dir, "Directory written by synth")
        ->required();
    calibrate->add_option("--model-dir", cal_opt.model_dir, "Directory written by train")
        ->required();
    calibrate->add_option("--out-dir", cal_opt.out_dir, "Output directory")->required();
    calibrate->add_option("--alpha", cal_opt.alphas, "Comma list of confidence levels");
    calibrate->add_option("--method", cal_opt.method, "empirical, temperature, or both");
    calibrate->add_option("--epsilon", cal_opt.epsilon, "Coverage tolerance");
    calibrate->add_option("--max-iter", cal_opt.max_iterations, "Max search iterations");
    calibrate->add_option("--distort", cal_opt.distort, "Logit sharpening factor");
    calibrate->add_flag("--strict", cal_opt.strict, "Fail on non-convergence");

    evaluate_options eval_opt;
    auto* evaluate = app.add_subcommand("evaluate", "Evaluate intervals on the test split");
    evaluate->add_option("--data-dir", eval_opt.data_dir, "Directory written by synth")
        ->required();
    evaluate->add_option("--model-dir", eval_opt.model_dir, "Directory written by train")
        ->required();
    evaluate->add_option("--calib-dir", eval_opt.calib_dir, "Directory written by calibrate")
        ->required();
    evaluate->add_option("--out-dir", eval_opt.out_dir, "Output directory")->required();
    evaluate->add_option("--alpha", eval_opt.alphas, "Comma list of confidence levels");
    evaluate->add_option("--method", eval_opt.method, "empirical, temperature, or both");
    evaluate->add_option("--distort", eval_opt.distort, "Logit sharpening factor");
    evaluate->add_option("--name", eval_opt.name, "Dataset name in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return run_synth(synth_opt);
        if (train->parsed()) return run_train(train_opt);
        if (calibrate->parsed()) return run_calibrate(cal_opt);
        if (evaluate->parsed()) return run_evaluate(eval_opt);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
