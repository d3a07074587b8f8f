#ifndef QMEX_HAAR_HPP
#define QMEX_HAAR_HPP

#include <array>
#include <utility>
#include <vector>

#include "qmex/circuits.hpp"
#include "qmex/rng.hpp"
#include "qmex/simulator.hpp"

namespace qmex {

/// Monte-Carlo estimate of the operator size distribution. std_dev is the
/// standard deviation of the sample (the spread, not the standard error).
struct OpSizeEstimate {
    double mean = 0.0;
    double std_dev = 0.0;
    int n_samples = 0;
    double max_found = 0.0;
    std::vector<double> argmax_params;  // Rot angles reproducing the best sample
};

/// Haar-distributed dim x dim unitary: Gaussian matrix, QR decomposition,
/// then the phase fix U = Q D with D_ii = R_ii / |R_ii|.
Matrix sample_haar_unitary(int dim, Rng& rng);

/// U_theta^dagger M U_theta where U_theta is assembled from the template's
/// fixed entanglers plus one supplied 2x2 unitary per Rot slot (encoding
/// excluded). Throws DimensionError when the unitary count does not match.
Observable conjugated_observable(const CircuitTemplate& tmpl,
                                 const std::vector<Matrix>& gate_unitaries, const Observable& m);

/// Eq.-style Haar average of Size(U^dagger M U): every parameterized
/// single-qubit slot is drawn independently Haar on U(2), entanglers stay
/// fixed. Deterministic for a given seed, independent of thread count.
OpSizeEstimate averaged_operator_size(const CircuitTemplate& tmpl, const Observable& m,
                                      int n_samples, RngSeed seed, int n_threads = 0);

/// Best operator size over all Rot angles, found by Nelder-Mead restarts.
/// Returns (size, flattened angles: 3 per Rot slot).
std::pair<double, std::vector<double>> max_operator_size(const CircuitTemplate& tmpl,
                                                         const Observable& m, int restarts,
                                                         RngSeed seed);

/// ZYZ Euler angles (phi, theta, omega) with Rot(phi,theta,omega) equal to
/// the given U(2) element up to global phase.
std::array<double, 3> euler_zyz(const Matrix& u);

}  // namespace qmex

#endif
