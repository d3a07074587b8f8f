#ifndef QMEX_SIMULATOR_HPP
#define QMEX_SIMULATOR_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qmex/errors.hpp"

namespace qmex {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Repo-wide convention: qubit 0 is the most significant bit of the basis
// index, so |q0 q1 ... q_{n-1}> lives at index q0*2^{n-1} + ... + q_{n-1}.
// Kronecker products are taken in qubit order: A on qubit 0, B on qubit 1
// gives A (x) B.

enum class GateKind { RX, RY, RZ, ROT, CNOT, TOFFOLI, FIXED_UNITARY };

const char* to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

/// A gate instance: kind, Euler angles (radians), target/control qubits.
/// Multi-qubit gates list qubits most-significant-first with respect to the
/// gate's own matrix (CNOT: {control, target}; TOFFOLI: {c0, c1, target}).
struct Gate {
    GateKind kind = GateKind::RX;
    std::vector<double> angles;
    std::vector<int> qubits;
    Matrix matrix;  // FIXED_UNITARY only

    static Gate rx(double angle, int qubit) { return {GateKind::RX, {angle}, {qubit}, {}}; }
    static Gate ry(double angle, int qubit) { return {GateKind::RY, {angle}, {qubit}, {}}; }
    static Gate rz(double angle, int qubit) { return {GateKind::RZ, {angle}, {qubit}, {}}; }
    /// Rot(phi, theta, omega) = Rz(omega) Ry(theta) Rz(phi); Rz(phi) acts first.
    static Gate rot(double phi, double theta, double omega, int qubit) {
        return {GateKind::ROT, {phi, theta, omega}, {qubit}, {}};
    }
    static Gate cnot(int control, int target) {
        return {GateKind::CNOT, {}, {control, target}, {}};
    }
    static Gate toffoli(int control0, int control1, int target) {
        return {GateKind::TOFFOLI, {}, {control0, control1, target}, {}};
    }
    static Gate fixed(Matrix unitary, std::vector<int> qubits) {
        return {GateKind::FIXED_UNITARY, {}, std::move(qubits), std::move(unitary)};
    }
};

struct Statevector {
    int n_qubits = 0;
    Vector amps;

    static Statevector zero(int n_qubits);
    double norm_sq() const { return amps.squaredNorm(); }
};

/// Dense Hermitian measurement operator on the full register.
struct Observable {
    Matrix matrix;

    int n_qubits() const;
    /// Throws DimensionError unless the matrix is square with power-of-two
    /// dimension, and Error if it is not Hermitian within 1e-12.
    void validate() const;
};

/// The gate's own unitary (2x2, 4x4 or 8x8). Throws InvalidGateError on a
/// malformed angle count or, for FIXED_UNITARY, a non-unitary matrix.
Matrix gate_matrix(const Gate& gate);

/// Embeds a k-qubit gate matrix into the full 2^n space at the given
/// (distinct, arbitrary-order) qubit positions.
Matrix embed_gate(const Matrix& gate, std::span<const int> qubits, int n_qubits);

/// Applies the gate by full-matrix embedding and checks norm preservation
/// (|norm^2 - 1| < 1e-12).
Statevector apply_gate(Statevector state, const Gate& gate);

/// Real expectation value <psi|M|psi>. The imaginary residue must be below
/// 1e-10 and is discarded.
double expectation(const Statevector& state, const Observable& obs);

}  // namespace qmex

#endif
