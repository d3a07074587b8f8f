#include "qmex/haar.hpp"

#include <cmath>

#include "qmex/optim.hpp"
#include "qmex/parallel.hpp"
#include "qmex/pauli.hpp"

namespace qmex {

Matrix sample_haar_unitary(int dim, Rng& rng) {
    if (dim < 1) throw DimensionError("haar dimension must be >= 1");
    Matrix a(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = rng.complex_gaussian();
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        double mag = std::abs(r(i, i));
        cx phase = mag > 1e-300 ? r(i, i) / mag : cx(1, 0);
        q.col(i) *= phase;
    }
    return q;
}

Observable conjugated_observable(const CircuitTemplate& tmpl,
                                 const std::vector<Matrix>& gate_unitaries, const Observable& m) {
    if (static_cast<int>(gate_unitaries.size()) != tmpl.n_rot_slots())
        throw DimensionError("expected " + std::to_string(tmpl.n_rot_slots()) +
                             " gate unitaries, got " + std::to_string(gate_unitaries.size()));
    const std::int64_t dim = std::int64_t(1) << tmpl.n_qubits;
    if (m.matrix.rows() != dim) throw DimensionError("observable dimension does not match template");
    Matrix u = Matrix::Identity(dim, dim);
    std::size_t next = 0;
    for (const auto& slot : tmpl.processing) {
        if (slot.kind == ProcessingSlot::Kind::PARAM_ROT) {
            std::vector<int> qs{slot.qubit};
            u = embed_gate(gate_unitaries[next++], qs, tmpl.n_qubits) * u;
        } else {
            u = embed_gate(gate_matrix(slot.entangler), slot.entangler.qubits, tmpl.n_qubits) * u;
        }
    }
    return Observable{u.adjoint() * m.matrix * u};
}

OpSizeEstimate averaged_operator_size(const CircuitTemplate& tmpl, const Observable& m,
                                      int n_samples, RngSeed seed, int n_threads) {
    if (n_samples < 1) throw DimensionError("n_samples must be >= 1");
    const int slots = tmpl.n_rot_slots();
    std::vector<double> sizes(n_samples);
    auto sample_unitaries = [&](int i) {
        Rng rng(child_seed(seed.value, static_cast<std::uint64_t>(i)));
        std::vector<Matrix> us;
        us.reserve(slots);
        for (int g = 0; g < slots; ++g) us.push_back(sample_haar_unitary(2, rng));
        return us;
    };
    parallel_for(n_samples, n_threads, [&](int i) {
        sizes[i] = operator_size(conjugated_observable(tmpl, sample_unitaries(i), m));
    });

    OpSizeEstimate est;
    est.n_samples = n_samples;
    double sum = 0;
    int argmax = 0;
    for (int i = 0; i < n_samples; ++i) {
        sum += sizes[i];
        if (sizes[i] > sizes[argmax]) argmax = i;
    }
    est.mean = sum / n_samples;
    double sq = 0;
    for (double s : sizes) sq += (s - est.mean) * (s - est.mean);
    est.std_dev = std::sqrt(sq / n_samples);
    est.max_found = sizes[argmax];
    for (const auto& u : sample_unitaries(argmax)) {
        auto [phi, theta, omega] = euler_zyz(u);
        est.argmax_params.insert(est.argmax_params.end(), {phi, theta, omega});
    }
    return est;
}

std::pair<double, std::vector<double>> max_operator_size(const CircuitTemplate& tmpl,
                                                         const Observable& m, int restarts,
                                                         RngSeed seed) {
    if (restarts < 1) throw DimensionError("restarts must be >= 1");
    const int n_params = tmpl.n_params();
    auto objective = [&](const std::vector<double>& angles) {
        std::vector<Matrix> us;
        us.reserve(tmpl.n_rot_slots());
        for (int g = 0; g < tmpl.n_rot_slots(); ++g) {
            Gate rot = Gate::rot(angles[3 * g], angles[3 * g + 1], angles[3 * g + 2], 0);
            us.push_back(gate_matrix(rot));
        }
        return -operator_size(conjugated_observable(tmpl, us, m));
    };

    double best = -1;
    std::vector<double> best_angles(n_params, 0.0);
    NelderMeadOptions opts;
    opts.tolerance = 1e-8;
    opts.max_iterations = 400 * std::max(1, n_params);
    for (int r = 0; r < restarts; ++r) {
        Rng rng(child_seed(seed.value, 0x6d61780000ULL + r));
        std::vector<double> x0(n_params);
        for (double& v : x0) v = rng.uniform(0, 2 * std::numbers::pi);
        NelderMeadResult res = nelder_mead(objective, std::move(x0), opts);
        if (-res.fmin > best) {
            best = -res.fmin;
            best_angles = std::move(res.x);
        }
    }
    return {best, best_angles};
}

std::array<double, 3> euler_zyz(const Matrix& u) {
    if (u.rows() != 2 || u.cols() != 2) throw DimensionError("euler_zyz expects a 2x2 matrix");
    // strip the global phase: v in SU(2)
    cx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    cx phase = std::sqrt(det);
    Matrix v = u / phase;
    // v = [[e^{-i(phi+omega)/2} cos(theta/2), -e^{i(phi-omega)/2} sin(theta/2)],
    //      [e^{-i(phi-omega)/2} sin(theta/2),  e^{i(phi+omega)/2} cos(theta/2)]]
    double theta = 2.0 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
    double sum, diff;  // (phi+omega)/2 and (phi-omega)/2
    if (std::abs(v(0, 0)) > 1e-12)
        sum = -std::arg(v(0, 0));
    else
        sum = 0.0;
    if (std::abs(v(1, 0)) > 1e-12)
        diff = -std::arg(v(1, 0));
    else
        diff = sum;  // theta ~ 0: only phi+omega is determined; pick phi = omega
    return {sum + diff, theta, sum - diff};
}

}  // namespace qmex
