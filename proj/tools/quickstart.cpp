// Minimal end-to-end library walkthrough: generate a synthetic task, train a
// binned classifier, distort its confidence, then repair coverage with both
// calibration methods and print the evaluation table.

#include <cstdio>
#include <vector>

#include "predint/predint.hpp"

int main() {
    using namespace predint;

    task_spec spec;
    spec.kind = task_kind::linear;
    spec.n_train = 4000;
    spec.n_val = 1500;
    spec.n_test = 1500;
    spec.dim = 8;
    spec.noise_std = 1.3;
    spec.seed = 7;
    const synthetic_task task = generate_task(spec);

    const binning_scheme scheme = build_bins(task.y_train, 30);
    const softmax_model model = train_softmax(task.x_train, task.y_train, scheme, 120, 2.0);

    // Triple the logits to mimic an overconfident network.
    const logit_matrix val_logits = distort_confidence(model.logits(task.x_val), 3.0);
    const logit_matrix test_logits = distort_confidence(model.logits(task.x_test), 3.0);

    const prob_matrix test_probs = apply_temperature(test_logits, 1.0);
    std::vector<double> y_hat(test_probs.rows());
    for (std::size_t r = 0; r < test_probs.rows(); ++r)
        y_hat[r] = expected_prediction(test_probs.row(r), scheme).y_hat;

    std::vector<evaluation_report> rows;
    for (const double alpha : {0.66, 0.80, 0.90}) {
        calibration_config config;
        config.target_alpha = alpha;

        rows.push_back(build_report("quickstart", alpha, scheme.num_bins,
                                    report_method::posterior,
                                    posterior_intervals(test_probs, scheme, alpha),
                                    task.y_test, y_hat, scheme));

        const calibration_result emp = empirical_calibration(
            apply_temperature(val_logits, 1.0), task.y_val, scheme, config);
        rows.push_back(build_report("quickstart", alpha, scheme.num_bins,
                                    report_method::empirical,
                                    apply_calibration(test_logits, scheme, emp, alpha),
                                    task.y_test, y_hat, scheme));

        const calibration_result tmp =
            temperature_scaling(val_logits, task.y_val, scheme, config);
        rows.push_back(build_report("quickstart", alpha, scheme.num_bins,
                                    report_method::temperature,
                                    apply_calibration(test_logits, scheme, tmp, alpha),
                                    task.y_test, y_hat, scheme));

        std::printf("alpha %.2f: empirical alpha0 = %.4f (%d evals), temperature T = %.4f "
                    "(%d evals)\n",
                    alpha, emp.parameter, emp.iterations, tmp.parameter, tmp.iterations);
    }

    std::printf("\n%s", report_table(rows).c_str());
    return 0;
}
