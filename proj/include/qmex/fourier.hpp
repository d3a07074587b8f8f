#ifndef QMEX_FOURIER_HPP
#define QMEX_FOURIER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qmex/circuits.hpp"
#include "qmex/rng.hpp"
#include "qmex/simulator.hpp"

namespace qmex {

// Sign convention, fixed repo-wide: the model function is
//   f(x) = sum_{n1,n2 in {-1,0,1}} c_{n1 n2} exp(-i n1 x1) exp(-i n2 x2),
// anchored by c_{1,0} = 1/2 for the bare f(x) = cos x1 model. Extractors on
// the DFT path and the matrix path must both obey it.

/// Table of the nine complex coefficients, keyed by (n1, n2) in {-1,0,1}^2.
struct FourierSpectrum {
    std::array<cx, 9> coeffs{};

    static int index(int n1, int n2) { return (n1 + 1) * 3 + (n2 + 1); }
    cx& c(int n1, int n2) { return coeffs[index(n1, n2)]; }
    cx c(int n1, int n2) const { return coeffs[index(n1, n2)]; }

    /// Reconstructed f(x); throws if the imaginary residue exceeds 1e-10.
    double eval(double x1, double x2) const;
    /// max |c_{-n1,-n2} - conj(c_{n1,n2})|
    double hermitian_asymmetry() const;
};

/// Samples f on the uniform grid x_k = 2 pi k / grid_size, takes the 2-D
/// discrete transform c_n = (1/G^2) sum f(x) exp(+i n.x), and reads the nine
/// {-1,0,1}^2 bins. Throws if grid_size < 3 or if any bin outside that band
/// reaches 1e-10 (the circuit families here are band-limited by
/// construction, one encoding per data component).
FourierSpectrum extract_spectrum_dft(const CircuitTemplate& tmpl, std::span<const double> params,
                                     int grid_size = 8);

/// The processing+measurement block expressed in the eigenbasis of the
/// encoding Hamiltonians (sigma_x/2 per encoded qubit, eigenvalues +-1/2):
/// m_bar = V (U^dagger M U) V^dagger with V the tensor product of per-qubit
/// Hadamard-type eigenvector matrices (identity on non-encoded qubits),
/// psi_prime = V|0...0>, and lambdas_j holding each basis state's eigenvalue
/// tuple over the data components (bit 0 -> +1/2, bit 1 -> -1/2).
struct VariationalMeasurement {
    Matrix m_bar;
    Vector psi_prime;
    std::vector<std::array<double, 2>> lambdas;
};

/// Throws UnsupportedEncodingError unless every encoding gate is RX.
VariationalMeasurement variational_measurement(const CircuitTemplate& tmpl,
                                               std::span<const double> params);

/// c_n = sum over (j,k) with Lambda_k - Lambda_j = n of
///       conj(psi'_j) m_bar_{jk} psi'_k.
/// The initial-state amplitudes are folded in, which makes the result match
/// extract_spectrum_dft elementwise.
FourierSpectrum spectrum_from_matrix(const VariationalMeasurement& vm);

/// Closed-form c11 reference expressions for the one-layer circuit families,
/// transcribed verbatim from their published form; angles ordered
/// (phi1, theta1, omega1, phi2, theta2, omega2).
///
/// Convention note (documented, verified by tests): for the two-qubit
/// circuit the expression evaluates to -conj(c11) under this repo's sign
/// convention. For the three-qubit circuit the printed expression is
/// internally inconsistent and matches no conjugation/negation/relabeling
/// of the extracted coefficient; see derived_c11_3q for the closed form that
/// the circuit actually realizes.
cx analytic_c11_2q(const std::array<double, 6>& angles);
cx analytic_c11_3q(const std::array<double, 6>& angles);

/// Independently derived closed forms (verified against the DFT extractor):
///   c11_2q = (1/4) (cos t1 - i sin t1 sin p1)(cos t2 - i sin t2 sin p2)
///   c11_3q = -(1/2) c11_2q
cx derived_c11_2q(const std::array<double, 6>& angles);
cx derived_c11_3q(const std::array<double, 6>& angles);

/// Spectra for n_draws independent parameter vectors with every angle
/// uniform in [0, 2 pi), plus per-frequency summary statistics (mean and
/// sample standard deviation of the real and imaginary parts).
struct CoefficientCloud {
    struct Draw {
        std::uint64_t seed = 0;
        FourierSpectrum spectrum;
    };
    struct Stats {
        double mean_re = 0, std_re = 0, mean_im = 0, std_im = 0;
    };
    std::vector<Draw> draws;
    std::array<Stats, 9> summary{};

    static std::array<Stats, 9> summarize(const std::vector<Draw>& draws);
};

CoefficientCloud coefficient_cloud(const CircuitTemplate& tmpl, int n_draws, RngSeed seed,
                                   int n_threads = 0, int grid_size = 8);

}  // namespace qmex

#endif
