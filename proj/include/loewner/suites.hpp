#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/report.hpp"

namespace loewner {

/// One experiment: a family (or sampler) with an index range, a finite
/// viewpoint grid standing in for the countable dense set, the metrics
/// to evaluate and the reproducibility seed.  Empty psi_grid or
/// metrics select the per-family defaults.
struct ExperimentConfig {
    std::string suite = "convergence";  // convergence | roundtrip | law
    std::string family = "smooth";      // convergence: smooth | ladder |
                                        // three_segment | hooks | figure_eight
    std::size_t j_min = 1;
    std::size_t j_max = 0;  // 0 selects the per-family default
    std::vector<ComplexPoint> psi_grid;
    std::vector<std::string> metrics;

    // law suite
    std::string law_pair = "viewpoint";  // viewpoint | reversal | self
    double kappa = 2.0;
    std::size_t samples = 400;
    std::size_t trace_steps = 600;
    std::vector<double> law_times;  // capacity times; empty -> {0.06, 0.12}
    ComplexPoint law_x = ComplexPoint(0.4, 0.7);

    std::uint64_t seed = 0;
    std::string out_path;
};

/// Reads the JSON config format used by the CLI; unknown keys are
/// rejected so typos fail loudly.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

/// Deterministic-convergence suite: for each index j and viewpoint x
/// the configured metrics against the family's limit curve, with one
/// trend verdict per (metric, x) series.  Viewpoint-free metrics
/// (d_f, d_b, d_strong, hausdorff) are recorded once per j under
/// x = infinity.
Report run_convergence_suite(const ExperimentConfig& cfg);

/// Round trips drive -> trace -> unzip and trace -> unzip -> trace
/// across step counts n in {250, 500, 1000, 2000}, with the fitted
/// error exponent per driving in the metadata.
Report run_roundtrip_suite(const ExperimentConfig& cfg);

/// Statistical law comparison: per (x, t) cell the two-sample KS
/// distance between driving marginals of the configured generator
/// pair.  Refuses sample counts below 50.
Report run_law_convergence(const ExperimentConfig& cfg);

/// Documented verdict expectations per family; empty when every
/// expectation holds, one message per mismatch otherwise.
std::vector<std::string> verdict_mismatches(const ExperimentConfig& cfg,
                                            const Report& r);

}  // namespace loewner
