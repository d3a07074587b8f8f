#ifndef QMEX_LEARN_HPP
#define QMEX_LEARN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qmex/circuits.hpp"
#include "qmex/rng.hpp"

namespace qmex {

/// Regular 2-D grid over [-pi, pi]^2 (inclusive endpoints). p is factored
/// into the rows x cols pair closest to square, with the larger count on x1.
struct Dataset {
    std::vector<DataPoint> points;
    int rows = 0;  // x1 axis
    int cols = 0;  // x2 axis
};

Dataset make_grid_dataset(int p);

using LabelSet = std::vector<double>;

enum class OptimizerKind { ADAM, SGD };

const char* to_string(OptimizerKind kind);
OptimizerKind optimizer_from_string(const std::string& name);

struct TrainConfig {
    double learning_rate = 0.1;
    int max_epochs = 300;
    double convergence_tol = 1e-6;  // loss improvement threshold over 10 epochs
    OptimizerKind optimizer = OptimizerKind::ADAM;
    RngSeed init_seed{1};
};

struct TrainResult {
    std::vector<double> params;
    std::vector<double> loss_curve;  // one entry per epoch actually run
    int epochs_used = 0;
};

/// <psi(x)| Z_measured |psi(x)>; always in [-1, 1].
double predict(const CircuitTemplate& tmpl, std::span<const double> params, DataPoint x);

/// Batch predictions over a dataset. Encoded states are prepared once and
/// each parameter setting costs one conjugated-observable build plus p
/// quadratic forms; equal to calling predict() pointwise.
LabelSet predict_all(const CircuitTemplate& tmpl, std::span<const double> params,
                     const Dataset& data);

/// Gradient of (predict - y_target)^2 by the exact half-turn shift identity
/// df/dtheta_j = [f(theta_j + pi/2) - f(theta_j - pi/2)] / 2, valid because
/// every parameterized rotation generator has eigenvalues +-1/2.
std::vector<double> gradient(const CircuitTemplate& tmpl, std::span<const double> params,
                             DataPoint x, double y_target);

/// Full-batch mean-squared-error training. Stops at max_epochs or when the
/// loss improved by less than convergence_tol over the last 10 epochs.
/// Throws TrainingFailure (with the epoch) if the loss becomes non-finite.
TrainResult train_student(const CircuitTemplate& student, const Dataset& data,
                          const LabelSet& labels, const TrainConfig& cfg);

/// Mean absolute difference of the prediction maps after rescaling labels
/// from [-1, 1] to [0, 1] via (y + 1) / 2.
double map_difference(const LabelSet& y_teacher, const LabelSet& y_student);

struct TSReplicate {
    std::uint64_t teacher_seed = 0;
    std::uint64_t student_seed = 0;
    double delta_y = 0.0;
    double final_loss = 0.0;
    int epochs_used = 0;
    bool failed = false;  // training diverged; excluded from aggregates
};

struct TSRunResult {
    std::vector<TSReplicate> replicates;
    double mean_delta_y = 0.0;
    double std_delta_y = 0.0;  // sample standard deviation over replicates
    int n_failed = 0;
    // prediction maps of the first replicate: (x1, x2, y_teacher, y_student)
    std::vector<std::array<double, 4>> prediction_map;
};

/// Per replicate: teacher angles uniform in [0, 2 pi), labels generated,
/// student initialized from its own seed and trained, delta-y computed.
/// Teacher/student seeds are child_seed(seed, 2r) and child_seed(seed, 2r+1).
TSRunResult ts_experiment(const CircuitTemplate& teacher, const CircuitTemplate& student,
                          int n_replicates, int dataset_size, const TrainConfig& cfg, RngSeed seed,
                          int n_threads = 0, bool record_map = true);

}  // namespace qmex

#endif
