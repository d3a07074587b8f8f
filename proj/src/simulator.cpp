#include "qmex/simulator.hpp"

#include <cmath>
#include <string>

namespace qmex {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kUnitaryTol = 1e-12;

Matrix rx_matrix(double a) {
    Matrix m(2, 2);
    double c = std::cos(a / 2), s = std::sin(a / 2);
    m << cx(c, 0), cx(0, -s), cx(0, -s), cx(c, 0);
    return m;
}

Matrix ry_matrix(double a) {
    Matrix m(2, 2);
    double c = std::cos(a / 2), s = std::sin(a / 2);
    m << cx(c, 0), cx(-s, 0), cx(s, 0), cx(c, 0);
    return m;
}

Matrix rz_matrix(double a) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::exp(cx(0, -a / 2));
    m(1, 1) = std::exp(cx(0, a / 2));
    return m;
}

void require_angles(const Gate& gate, std::size_t n) {
    if (gate.angles.size() != n)
        throw InvalidGateError("gate " + std::string(to_string(gate.kind)) + " expects " +
                               std::to_string(n) + " angle(s), got " +
                               std::to_string(gate.angles.size()));
}

void require_qubits(const Gate& gate, std::size_t n) {
    if (gate.qubits.size() != n)
        throw InvalidGateError("gate " + std::string(to_string(gate.kind)) + " expects " +
                               std::to_string(n) + " qubit(s), got " +
                               std::to_string(gate.qubits.size()));
}

bool is_unitary(const Matrix& m, double tol) {
    return (m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

const char* to_string(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::ROT: return "ROT";
        case GateKind::CNOT: return "CNOT";
        case GateKind::TOFFOLI: return "TOFFOLI";
        case GateKind::FIXED_UNITARY: return "FIXED_UNITARY";
    }
    return "?";
}

GateKind gate_kind_from_string(const std::string& name) {
    if (name == "RX") return GateKind::RX;
    if (name == "RY") return GateKind::RY;
    if (name == "RZ") return GateKind::RZ;
    if (name == "ROT") return GateKind::ROT;
    if (name == "CNOT") return GateKind::CNOT;
    if (name == "TOFFOLI") return GateKind::TOFFOLI;
    if (name == "FIXED_UNITARY") return GateKind::FIXED_UNITARY;
    throw InvalidGateError("unknown gate kind: " + name);
}

Statevector Statevector::zero(int n_qubits) {
    Statevector s;
    s.n_qubits = n_qubits;
    s.amps = Vector::Zero(std::int64_t(1) << n_qubits);
    s.amps(0) = 1.0;
    return s;
}

int Observable::n_qubits() const {
    int n = 0;
    while ((std::int64_t(1) << n) < matrix.rows()) ++n;
    return n;
}

void Observable::validate() const {
    if (matrix.rows() != matrix.cols())
        throw DimensionError("observable matrix is not square");
    auto dim = matrix.rows();
    if (dim <= 0 || (dim & (dim - 1)) != 0)
        throw DimensionError("observable dimension is not a power of two");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() >= kUnitaryTol)
        throw Error("observable is not Hermitian within 1e-12");
}

Matrix gate_matrix(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::RX:
            require_angles(gate, 1);
            require_qubits(gate, 1);
            return rx_matrix(gate.angles[0]);
        case GateKind::RY:
            require_angles(gate, 1);
            require_qubits(gate, 1);
            return ry_matrix(gate.angles[0]);
        case GateKind::RZ:
            require_angles(gate, 1);
            require_qubits(gate, 1);
            return rz_matrix(gate.angles[0]);
        case GateKind::ROT: {
            require_angles(gate, 3);
            require_qubits(gate, 1);
            // Rz(omega) . Ry(theta) . Rz(phi), rightmost applied first
            return rz_matrix(gate.angles[2]) * ry_matrix(gate.angles[1]) *
                   rz_matrix(gate.angles[0]);
        }
        case GateKind::CNOT: {
            require_angles(gate, 0);
            require_qubits(gate, 2);
            Matrix m = Matrix::Identity(4, 4);
            m(2, 2) = m(3, 3) = 0;
            m(2, 3) = m(3, 2) = 1;
            return m;
        }
        case GateKind::TOFFOLI: {
            require_angles(gate, 0);
            require_qubits(gate, 3);
            Matrix m = Matrix::Identity(8, 8);
            m(6, 6) = m(7, 7) = 0;
            m(6, 7) = m(7, 6) = 1;
            return m;
        }
        case GateKind::FIXED_UNITARY: {
            require_angles(gate, 0);
            if (gate.qubits.empty()) throw InvalidGateError("FIXED_UNITARY needs target qubits");
            auto dim = std::int64_t(1) << gate.qubits.size();
            if (gate.matrix.rows() != dim || gate.matrix.cols() != dim)
                throw InvalidGateError("FIXED_UNITARY matrix dimension does not match qubit count");
            if (!is_unitary(gate.matrix, kUnitaryTol))
                throw InvalidGateError("FIXED_UNITARY matrix is not unitary within 1e-12");
            return gate.matrix;
        }
    }
    throw InvalidGateError("unhandled gate kind");
}

Matrix embed_gate(const Matrix& gate, std::span<const int> qubits, int n_qubits) {
    const int k = static_cast<int>(qubits.size());
    const std::int64_t dim = std::int64_t(1) << n_qubits;
    const std::int64_t gdim = std::int64_t(1) << k;
    if (gate.rows() != gdim || gate.cols() != gdim)
        throw DimensionError("gate matrix does not match qubit list");
    std::uint64_t seen = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits) throw InvalidGateError("qubit index out of range");
        if (seen & (std::uint64_t(1) << q)) throw InvalidGateError("duplicate qubit index");
        seen |= std::uint64_t(1) << q;
    }
    // bit position of qubit q in the global index (qubit 0 = MSB)
    auto bitpos = [n_qubits](int q) { return n_qubits - 1 - q; };

    Matrix full = Matrix::Zero(dim, dim);
    std::int64_t rest_mask = dim - 1;
    for (int q : qubits) rest_mask &= ~(std::int64_t(1) << bitpos(q));

    for (std::int64_t row = 0; row < dim; ++row) {
        std::int64_t rest = row & rest_mask;
        std::int64_t grow = 0;
        for (int i = 0; i < k; ++i)
            grow |= ((row >> bitpos(qubits[i])) & 1) << (k - 1 - i);
        for (std::int64_t gcol = 0; gcol < gdim; ++gcol) {
            cx v = gate(grow, gcol);
            if (v == cx(0, 0)) continue;
            std::int64_t col = rest;
            for (int i = 0; i < k; ++i)
                col |= ((gcol >> (k - 1 - i)) & 1) << bitpos(qubits[i]);
            full(row, col) = v;
        }
    }
    return full;
}

Statevector apply_gate(Statevector state, const Gate& gate) {
    Matrix full = embed_gate(gate_matrix(gate), gate.qubits, state.n_qubits);
    state.amps = full * state.amps;
    if (std::abs(state.norm_sq() - 1.0) >= kNormTol)
        throw Error("statevector norm drifted beyond 1e-12 after gate application");
    return state;
}

double expectation(const Statevector& state, const Observable& obs) {
    if (obs.matrix.rows() != state.amps.size())
        throw DimensionError("observable dimension does not match state");
    cx value = state.amps.dot(obs.matrix * state.amps);
    if (std::abs(value.imag()) >= 1e-10)
        throw Error("expectation has imaginary residue >= 1e-10; observable not Hermitian?");
    return value.real();
}

}  // namespace qmex
