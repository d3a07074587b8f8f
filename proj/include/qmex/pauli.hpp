#ifndef QMEX_PAULI_HPP
#define QMEX_PAULI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmex/simulator.hpp"

namespace qmex {

/// Tensor product of single-qubit Paulis, one letter per qubit.
/// Letters: 0 = I, 1 = X, 2 = Y, 3 = Z.
struct PauliString {
    std::vector<std::uint8_t> letters;

    std::string to_string() const;
    static PauliString from_string(const std::string& s);
};

/// Number of non-identity letters, l(alpha).
int weight(const PauliString& s);

Matrix pauli_string_matrix(const PauliString& s);

/// Expansion of a Hermitian operator over all 4^n Pauli strings; terms with
/// |coefficient| < 1e-12 are dropped. Coefficients are kept complex so that
/// Hermiticity shows up as a checkable property instead of an assumption.
struct PauliDecomposition {
    int n_qubits = 0;
    std::vector<std::pair<PauliString, cx>> terms;

    Matrix reconstruct() const;
    double max_imag_coeff() const;
    double coeff_norm_sq() const;  // sum |c_alpha|^2
};

/// c_alpha = Tr(O sigma_alpha) / 2^n for every string.
PauliDecomposition pauli_decompose(const Observable& obs);

/// Size(O) = sum_alpha |c_alpha|^2 l(alpha).
double operator_size(const Observable& obs);

}  // namespace qmex

#endif
