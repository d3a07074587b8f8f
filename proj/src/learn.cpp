#include "qmex/learn.hpp"

#include <cmath>
#include <numbers>

#include "qmex/parallel.hpp"
#include "qmex/simulator.hpp"

namespace qmex {

namespace {

constexpr double kHalfTurn = std::numbers::pi / 2;

/// Precomputed encoded states; predictions cost one observable build plus
/// one quadratic form per point.
class BatchEvaluator {
  public:
    BatchEvaluator(const CircuitTemplate& tmpl, const Dataset& data)
        : tmpl_(tmpl), obs_(measurement_observable(tmpl)) {
        const std::int64_t dim = std::int64_t(1) << tmpl.n_qubits;
        Vector zero = Vector::Zero(dim);
        zero(0) = 1.0;
        encoded_.reserve(data.points.size());
        for (const auto& x : data.points) encoded_.push_back(encoding_unitary(tmpl, x) * zero);
    }

    void predictions(std::span<const double> params, std::vector<double>& out) const {
        const Matrix u = processing_unitary(tmpl_, params);
        const Matrix o = u.adjoint() * obs_.matrix * u;
        out.resize(encoded_.size());
        for (std::size_t k = 0; k < encoded_.size(); ++k)
            out[k] = encoded_[k].dot(o * encoded_[k]).real();
    }

  private:
    const CircuitTemplate& tmpl_;
    Observable obs_;
    std::vector<Vector> encoded_;
};

double mean_sq(const std::vector<double>& pred, const LabelSet& y) {
    double s = 0;
    for (std::size_t k = 0; k < pred.size(); ++k) s += (pred[k] - y[k]) * (pred[k] - y[k]);
    return s / static_cast<double>(pred.size());
}

}  // namespace

const char* to_string(OptimizerKind kind) { return kind == OptimizerKind::ADAM ? "adam" : "sgd"; }

OptimizerKind optimizer_from_string(const std::string& name) {
    if (name == "adam" || name == "ADAM") return OptimizerKind::ADAM;
    if (name == "sgd" || name == "SGD") return OptimizerKind::SGD;
    throw Error("unknown optimizer: " + name + " (expected adam|sgd)");
}

Dataset make_grid_dataset(int p) {
    if (p < 4) throw DimensionError("dataset size must be >= 4");
    int best_r = 0;
    for (int r = 2; r * r <= p; ++r)
        if (p % r == 0) best_r = r;
    if (best_r == 0) throw DimensionError("dataset size " + std::to_string(p) +
                                          " has no 2-D grid factorization (is it prime?)");
    const int cols = best_r;        // smaller factor on x2
    const int rows = p / best_r;    // larger factor on x1
    Dataset d;
    d.rows = rows;
    d.cols = cols;
    d.points.reserve(p);
    for (int i = 0; i < rows; ++i) {
        double x1 = -std::numbers::pi + 2 * std::numbers::pi * i / (rows - 1);
        for (int j = 0; j < cols; ++j) {
            double x2 = -std::numbers::pi + 2 * std::numbers::pi * j / (cols - 1);
            d.points.push_back({x1, x2});
        }
    }
    return d;
}

double predict(const CircuitTemplate& tmpl, std::span<const double> params, DataPoint x) {
    return expectation(run_circuit(tmpl, params, x), measurement_observable(tmpl));
}

LabelSet predict_all(const CircuitTemplate& tmpl, std::span<const double> params,
                     const Dataset& data) {
    BatchEvaluator eval(tmpl, data);
    std::vector<double> out;
    eval.predictions(params, out);
    return out;
}

std::vector<double> gradient(const CircuitTemplate& tmpl, std::span<const double> params,
                             DataPoint x, double y_target) {
    const double f = predict(tmpl, params, x);
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t j = 0; j < params.size(); ++j) {
        const double original = shifted[j];
        shifted[j] = original + kHalfTurn;
        const double fp = predict(tmpl, shifted, x);
        shifted[j] = original - kHalfTurn;
        const double fm = predict(tmpl, shifted, x);
        shifted[j] = original;
        grad[j] = 2.0 * (f - y_target) * (fp - fm) / 2.0;
    }
    return grad;
}

TrainResult train_student(const CircuitTemplate& student, const Dataset& data,
                          const LabelSet& labels, const TrainConfig& cfg) {
    if (labels.size() != data.points.size())
        throw DimensionError("label count does not match dataset size");
    if (cfg.learning_rate < 0) throw Error("learning_rate must be >= 0");
    if (cfg.max_epochs < 1) throw Error("max_epochs must be >= 1");

    const int n_params = student.n_params();
    BatchEvaluator eval(student, data);

    Rng rng(cfg.init_seed);
    std::vector<double> params(n_params);
    for (double& v : params) v = rng.uniform(0, 2 * std::numbers::pi);

    std::vector<double> adam_m(n_params, 0.0), adam_v(n_params, 0.0);
    constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

    TrainResult result;
    std::vector<double> pred, pred_plus, pred_minus, grad(n_params);
    std::vector<double> shifted(params);
    const double inv_p = 1.0 / static_cast<double>(data.points.size());

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        eval.predictions(params, pred);
        const double loss = mean_sq(pred, labels);
        if (!std::isfinite(loss)) throw TrainingFailure(epoch);
        result.loss_curve.push_back(loss);
        if (epoch >= 10 &&
            result.loss_curve[epoch - 10] - loss < cfg.convergence_tol)
            break;

        for (int j = 0; j < n_params; ++j) {
            const double original = params[j];
            shifted = params;
            shifted[j] = original + kHalfTurn;
            eval.predictions(shifted, pred_plus);
            shifted[j] = original - kHalfTurn;
            eval.predictions(shifted, pred_minus);
            double gj = 0;
            for (std::size_t k = 0; k < pred.size(); ++k)
                gj += 2.0 * (pred[k] - labels[k]) * (pred_plus[k] - pred_minus[k]) / 2.0;
            grad[j] = gj * inv_p;
        }

        if (cfg.optimizer == OptimizerKind::ADAM) {
            for (int j = 0; j < n_params; ++j) {
                adam_m[j] = beta1 * adam_m[j] + (1 - beta1) * grad[j];
                adam_v[j] = beta2 * adam_v[j] + (1 - beta2) * grad[j] * grad[j];
                const double mh = adam_m[j] / (1 - std::pow(beta1, epoch + 1));
                const double vh = adam_v[j] / (1 - std::pow(beta2, epoch + 1));
                params[j] -= cfg.learning_rate * mh / (std::sqrt(vh) + eps);
            }
        } else {
            for (int j = 0; j < n_params; ++j) params[j] -= cfg.learning_rate * grad[j];
        }
    }

    result.params = std::move(params);
    result.epochs_used = static_cast<int>(result.loss_curve.size());
    return result;
}

double map_difference(const LabelSet& y_teacher, const LabelSet& y_student) {
    if (y_teacher.size() != y_student.size())
        throw DimensionError("label sets have different lengths");
    if (y_teacher.empty()) throw DimensionError("label sets are empty");
    double s = 0;
    for (std::size_t k = 0; k < y_teacher.size(); ++k) {
        const double t = (y_teacher[k] + 1.0) / 2.0;
        const double u = (y_student[k] + 1.0) / 2.0;
        s += std::abs(t - u);
    }
    return s / static_cast<double>(y_teacher.size());
}

TSRunResult ts_experiment(const CircuitTemplate& teacher, const CircuitTemplate& student,
                          int n_replicates, int dataset_size, const TrainConfig& cfg, RngSeed seed,
                          int n_threads, bool record_map) {
    if (n_replicates < 1) throw DimensionError("n_replicates must be >= 1");
    const Dataset data = make_grid_dataset(dataset_size);

    TSRunResult run;
    run.replicates.resize(n_replicates);
    std::vector<LabelSet> teacher_maps(record_map ? 1 : 0);
    std::vector<LabelSet> student_maps(record_map ? 1 : 0);

    parallel_for(n_replicates, n_threads, [&](int r) {
        TSReplicate rep;
        rep.teacher_seed = child_seed(seed.value, 2 * static_cast<std::uint64_t>(r));
        rep.student_seed = child_seed(seed.value, 2 * static_cast<std::uint64_t>(r) + 1);

        Rng trng(rep.teacher_seed);
        std::vector<double> teacher_params(teacher.n_params());
        for (double& v : teacher_params) v = trng.uniform(0, 2 * std::numbers::pi);
        const LabelSet labels = predict_all(teacher, teacher_params, data);

        TrainConfig rep_cfg = cfg;
        rep_cfg.init_seed = RngSeed{rep.student_seed};
        try {
            TrainResult tr = train_student(student, data, labels, rep_cfg);
            const LabelSet student_labels = predict_all(student, tr.params, data);
            rep.delta_y = map_difference(labels, student_labels);
            rep.final_loss = tr.loss_curve.back();
            rep.epochs_used = tr.epochs_used;
            if (record_map && r == 0) {
                teacher_maps[0] = labels;
                student_maps[0] = student_labels;
            }
        } catch (const TrainingFailure& failure) {
            rep.failed = true;
            rep.epochs_used = failure.epoch;
        }
        run.replicates[r] = rep;
    });

    double sum = 0;
    int n_ok = 0;
    for (const auto& rep : run.replicates) {
        if (rep.failed) {
            ++run.n_failed;
            continue;
        }
        sum += rep.delta_y;
        ++n_ok;
    }
    run.mean_delta_y = n_ok > 0 ? sum / n_ok : 0.0;
    if (n_ok > 1) {
        double sq = 0;
        for (const auto& rep : run.replicates)
            if (!rep.failed) sq += std::pow(rep.delta_y - run.mean_delta_y, 2);
        run.std_delta_y = std::sqrt(sq / (n_ok - 1));
    }
    if (record_map && !run.replicates.empty() && !run.replicates[0].failed) {
        run.prediction_map.reserve(data.points.size());
        for (std::size_t k = 0; k < data.points.size(); ++k)
            run.prediction_map.push_back(
                {data.points[k].x1, data.points[k].x2, teacher_maps[0][k], student_maps[0][k]});
    }
    return run;
}

}  // namespace qmex
