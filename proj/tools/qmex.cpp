// qmex: experiment runner for the circuit-expressivity toolkit.
//
// Subcommands: opsize, fourier, ts, haar-check, repro. Every command is
// deterministic for a fixed --seed and thread-count independent; standard
// output carries machine-readable JSON summaries, progress goes to stderr.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmex/fourier.hpp"
#include "qmex/haar.hpp"
#include "qmex/io.hpp"
#include "qmex/learn.hpp"
#include "qmex/pauli.hpp"

namespace {

using nlohmann::json;
using namespace qmex;

constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
    std::string circuit = "2q";
    int layers = 1;
    int samples = 2000;
    int draws = 1000;
    int replicates = 20;
    int grid = 8;
    int points = 500;
    int measure_qubit = -1;  // family default
    std::string cnot_position = "after_rot";
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    int threads = 0;
    int restarts = 50;
    double lr = 0.1;
    int epochs = 300;
    double tol = 1e-6;
    std::string optimizer = "adam";
    int dim = 2;
    bool dump_config = false;
};

CircuitTemplate make_template(const Options& o, int layers) {
    if (o.circuit == "2q")
        return circuit_2q(layers, cnot_position_from_string(o.cnot_position),
                          o.measure_qubit < 0 ? 1 : o.measure_qubit);
    if (o.circuit == "3q") return circuit_3q(layers);
    if (o.circuit == "toy") return circuit_toy(o.measure_qubit < 0 ? 0 : o.measure_qubit);
    throw CLI::ValidationError("--circuit", "unknown circuit '" + o.circuit +
                                                "' (expected 2q|3q|toy)");
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "RNG seed (fixed default for reproducibility)")
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)")
        ->capture_default_str();
    sub->add_option("--out", o.out, "Output path");
    sub->set_config("--config", "", "Config file, flat key=value lines mirroring flag names");
    sub->add_flag("--dump-config", o.dump_config,
                  "Print the effective configuration and exit");
}

void add_circuit_opts(CLI::App* sub, Options& o) {
    sub->add_option("--circuit", o.circuit, "Circuit family: 2q|3q|toy")->capture_default_str();
    sub->add_option("--layers", o.layers, "Layer count (sweeps start at 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--measure-qubit", o.measure_qubit,
                    "Measured qubit (-1 = family default)")
        ->capture_default_str();
    sub->add_option("--cnot-position", o.cnot_position,
                    "2q entangler placement: after_rot|before_rot")
        ->check(CLI::IsMember({"after_rot", "before_rot"}))
        ->capture_default_str();
}

bool handle_dump(CLI::App* sub, const Options& o) {
    if (!o.dump_config) return false;
    std::cout << sub->config_to_str(true, false);
    return true;
}

void emit(const json& summary, const std::string& out_path) {
    std::string text = summary.dump(2);
    text.push_back('\n');
    if (!out_path.empty()) write_text_file(out_path, text);
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_opsize(CLI::App* sub, Options& o) {
    if (handle_dump(sub, o)) return 0;
    json results = json::array();
    for (int layer = 1; layer <= o.layers; ++layer) {
        std::cerr << "opsize: " << o.circuit << " layer " << layer << "/" << o.layers << "\n";
        CircuitTemplate tmpl = make_template(o, layer);
        Observable m = measurement_observable(tmpl);
        OpSizeEstimate est = averaged_operator_size(tmpl, m, o.samples,
                                                    RngSeed{child_seed(o.seed, layer)}, o.threads);
        json entry{{"layers", layer},
                   {"n_params", tmpl.n_params()},
                   {"mean", est.mean},
                   {"std_dev", est.std_dev},
                   {"max_found", est.max_found}};
        if (o.restarts > 0) {
            auto [mx, angles] = max_operator_size(tmpl, m, o.restarts,
                                                  RngSeed{child_seed(o.seed, 1000 + layer)});
            entry["max_opt"] = mx;
            entry["argmax_params"] = angles;
        }
        results.push_back(entry);
    }
    json summary{{"command", "opsize"},
                 {"circuit", o.circuit},
                 {"cnot_position", o.cnot_position},
                 {"samples", o.samples},
                 {"restarts", o.restarts},
                 {"seed", o.seed},
                 {"results", results}};
    emit(summary, o.out);
    return 0;
}

int cmd_fourier(CLI::App* sub, Options& o) {
    if (handle_dump(sub, o)) return 0;
    if (o.out.empty()) throw CLI::ValidationError("--out", "fourier requires an output CSV path");
    CircuitTemplate tmpl = make_template(o, o.layers);
    std::cerr << "fourier: " << o.circuit << " layers=" << o.layers << " draws=" << o.draws
              << "\n";
    CoefficientCloud cloud = coefficient_cloud(tmpl, o.draws, RngSeed{o.seed}, o.threads, o.grid);
    write_text_file(o.out, coefficient_csv(cloud));

    json freqs = json::array();
    for (int n1 = -1; n1 <= 1; ++n1)
        for (int n2 = -1; n2 <= 1; ++n2) {
            const auto& s = cloud.summary[FourierSpectrum::index(n1, n2)];
            freqs.push_back({{"n1", n1},
                             {"n2", n2},
                             {"mean_re", s.mean_re},
                             {"std_re", s.std_re},
                             {"mean_im", s.mean_im},
                             {"std_im", s.std_im}});
        }
    json summary{{"command", "fourier"}, {"circuit", o.circuit},   {"layers", o.layers},
                 {"draws", o.draws},     {"grid", o.grid},         {"seed", o.seed},
                 {"csv", o.out},         {"summary", freqs}};
    std::cout << summary.dump(2) << "\n";
    return 0;
}

json ts_sweep(const std::string& teacher_name, const std::string& student_name, int max_layers,
              const Options& o, const TrainConfig& cfg,
              std::vector<std::pair<std::string, std::string>>& map_files) {
    json sweep{{"teacher", teacher_name}, {"student", student_name}};
    json per_layer = json::array();
    for (int layer = 1; layer <= max_layers; ++layer) {
        std::cerr << "ts: teacher " << teacher_name << " student " << student_name << " layers "
                  << layer << "/" << max_layers << "\n";
        CircuitTemplate teacher =
            teacher_name == "2q" ? circuit_2q(1) : circuit_3q(1);  // teacher fixed at one layer
        CircuitTemplate student = student_name == "2q" ? circuit_2q(layer) : circuit_3q(layer);
        std::uint64_t sweep_seed =
            child_seed(o.seed, (teacher_name == "2q" ? 0x2000 : 0x3000) + layer);
        TSRunResult run = ts_experiment(teacher, student, o.replicates, o.points, cfg,
                                        RngSeed{sweep_seed}, o.threads, true);
        json reps = json::array();
        for (const auto& rep : run.replicates)
            reps.push_back({{"teacher_seed", rep.teacher_seed},
                            {"student_seed", rep.student_seed},
                            {"delta_y", rep.delta_y},
                            {"final_loss", rep.final_loss},
                            {"epochs_used", rep.epochs_used},
                            {"failed", rep.failed}});
        per_layer.push_back({{"layers", layer},
                             {"student_params", student.n_params()},
                             {"mean_delta_y", run.mean_delta_y},
                             {"std_delta_y", run.std_delta_y},
                             {"n_failed", run.n_failed},
                             {"replicates", reps}});
        if (!o.out.empty() && !run.prediction_map.empty()) {
            std::string path = o.out + "_map_" + teacher_name + "-teacher_" + student_name +
                               "-student_L" + std::to_string(layer) + ".csv";
            write_text_file(path, prediction_map_csv(run.prediction_map));
            map_files.emplace_back(teacher_name + "->" + student_name + " L" +
                                       std::to_string(layer),
                                   path);
        }
    }
    sweep["results"] = per_layer;
    return sweep;
}

int cmd_ts(CLI::App* sub, Options& o) {
    if (handle_dump(sub, o)) return 0;
    TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.max_epochs = o.epochs;
    cfg.convergence_tol = o.tol;
    cfg.optimizer = optimizer_from_string(o.optimizer);

    std::vector<std::pair<std::string, std::string>> map_files;
    json sweeps = json::array();
    sweeps.push_back(ts_sweep("2q", "3q", o.layers, o, cfg, map_files));
    sweeps.push_back(ts_sweep("3q", "2q", o.layers, o, cfg, map_files));

    json maps = json::array();
    for (const auto& [label, path] : map_files) maps.push_back({{"sweep", label}, {"csv", path}});
    json summary{{"command", "ts"},
                 {"replicates", o.replicates},
                 {"points", o.points},
                 {"max_layers", o.layers},
                 {"learning_rate", o.lr},
                 {"max_epochs", o.epochs},
                 {"convergence_tol", o.tol},
                 {"optimizer", o.optimizer},
                 {"seed", o.seed},
                 {"sweeps", sweeps},
                 {"prediction_maps", maps}};
    emit(summary, o.out.empty() ? std::string{} : o.out + ".json");
    return 0;
}

int cmd_haar_check(CLI::App* sub, Options& o) {
    if (handle_dump(sub, o)) return 0;
    std::cerr << "haar-check: dim=" << o.dim << " samples=" << o.samples << "\n";
    const int dim = o.dim;
    double sum_abs00_sq = 0, max_residual = 0;
    cx trace_sum = 0;
    for (int i = 0; i < o.samples; ++i) {
        Rng rng(child_seed(o.seed, i));
        Matrix u = sample_haar_unitary(dim, rng);
        sum_abs00_sq += std::norm(u(0, 0));
        trace_sum += u.trace() / static_cast<double>(dim);
        double residual =
            (u * u.adjoint() - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
        max_residual = std::max(max_residual, residual);
    }
    json summary{{"command", "haar-check"},
                 {"dim", dim},
                 {"samples", o.samples},
                 {"seed", o.seed},
                 {"mean_abs_u00_sq", sum_abs00_sq / o.samples},
                 {"expected_abs_u00_sq", 1.0 / dim},
                 {"mean_trace_over_dim_re", trace_sum.real() / static_cast<double>(o.samples)},
                 {"mean_trace_over_dim_im", trace_sum.imag() / static_cast<double>(o.samples)},
                 {"max_unitarity_residual", max_residual}};
    emit(summary, o.out);
    return 0;
}

int cmd_repro(CLI::App* sub, Options& o) {
    if (handle_dump(sub, o)) return 0;
    if (o.out.empty()) throw CLI::ValidationError("--out", "repro requires an output directory");
    namespace fs = std::filesystem;
    fs::create_directories(o.out);
    auto path = [&](const std::string& name) { return (fs::path(o.out) / name).string(); };
    json outputs = json::array();

    // averaged + maximum operator size vs depth
    for (auto [circ, pos, name] :
         {std::tuple{"2q", "after_rot", "opsize_2q.json"},
          std::tuple{"2q", "before_rot", "opsize_2q_cnot_first.json"},
          std::tuple{"3q", "after_rot", "opsize_3q.json"}}) {
        Options lo = o;
        lo.circuit = circ;
        lo.cnot_position = pos;
        lo.layers = 4;
        lo.samples = 2000;
        lo.restarts = 20;
        lo.out = path(name);
        lo.dump_config = false;
        cmd_opsize(sub, lo);
        outputs.push_back(lo.out);
    }
    // coefficient clouds
    for (auto [circ, layers, mq, name] :
         {std::tuple{"2q", 1, -1, "coeffs_2q_L1.csv"}, std::tuple{"3q", 1, -1, "coeffs_3q_L1.csv"},
          std::tuple{"3q", 2, -1, "coeffs_3q_L2.csv"}, std::tuple{"toy", 1, 0, "coeffs_toy_q0.csv"},
          std::tuple{"toy", 1, 1, "coeffs_toy_q1.csv"}}) {
        Options lo = o;
        lo.circuit = circ;
        lo.layers = layers;
        lo.measure_qubit = mq;
        lo.draws = 1000;
        lo.out = path(name);
        lo.dump_config = false;
        cmd_fourier(sub, lo);
        outputs.push_back(lo.out);
    }
    // teacher-student sweep, desk scale
    {
        Options lo = o;
        lo.layers = 4;
        lo.replicates = 20;
        lo.points = 500;
        lo.out = path("ts_sweep");
        lo.dump_config = false;
        cmd_ts(sub, lo);
        outputs.push_back(lo.out + ".json");
    }
    // haar sampler diagnostics
    for (int dim : {2, 4}) {
        Options lo = o;
        lo.dim = dim;
        lo.samples = 10000;
        lo.out = path("haar_check_dim" + std::to_string(dim) + ".json");
        lo.dump_config = false;
        cmd_haar_check(sub, lo);
        outputs.push_back(lo.out);
    }
    json summary{{"command", "repro"}, {"out_dir", o.out}, {"seed", o.seed}, {"outputs", outputs}};
    std::cout << summary.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expressivity toolkit for small variational circuits"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* opsize = app.add_subcommand(
        "opsize", "Haar-averaged and maximum operator size over a layer sweep");
    add_circuit_opts(opsize, opt);
    opsize->add_option("--samples", opt.samples, "Monte-Carlo samples per layer")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    opsize->add_option("--restarts", opt.restarts,
                       "Nelder-Mead restarts for the maximum (0 disables)")
        ->capture_default_str();
    add_common(opsize, opt);

    CLI::App* fourier = app.add_subcommand("fourier", "Fourier-coefficient cloud to CSV");
    add_circuit_opts(fourier, opt);
    fourier->add_option("--draws", opt.draws, "Random parameter draws")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fourier->add_option("--grid", opt.grid, "DFT grid size per axis")
        ->check(CLI::Range(3, 64))
        ->capture_default_str();
    add_common(fourier, opt);

    CLI::App* ts = app.add_subcommand(
        "ts", "Teacher-student map-difference sweep, both role assignments");
    ts->add_option("--layers", opt.layers, "Student layer sweep upper bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ts->add_option("--replicates", opt.replicates, "Replicates per configuration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ts->add_option("--points", opt.points, "Dataset size (near-square grid)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ts->add_option("--lr", opt.lr, "Learning rate")->capture_default_str();
    ts->add_option("--epochs", opt.epochs, "Max training epochs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ts->add_option("--tol", opt.tol, "Convergence tolerance (10-epoch loss improvement)")
        ->capture_default_str();
    ts->add_option("--optimizer", opt.optimizer, "adam|sgd")
        ->check(CLI::IsMember({"adam", "sgd"}))
        ->capture_default_str();
    add_common(ts, opt);

    CLI::App* haar = app.add_subcommand("haar-check", "Haar sampler moment diagnostics");
    haar->add_option("--dim", opt.dim, "Unitary dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    haar->add_option("--samples", opt.samples, "Sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(haar, opt);

    CLI::App* repro = app.add_subcommand(
        "repro", "Full desk-scale reproduction suite into a directory");
    add_common(repro, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (opsize->parsed()) return cmd_opsize(opsize, opt);
        if (fourier->parsed()) return cmd_fourier(fourier, opt);
        if (ts->parsed()) return cmd_ts(ts, opt);
        if (haar->parsed()) return cmd_haar_check(haar, opt);
        if (repro->parsed()) return cmd_repro(repro, opt);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
