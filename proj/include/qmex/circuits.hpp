#ifndef QMEX_CIRCUITS_HPP
#define QMEX_CIRCUITS_HPP

#include <span>
#include <string>
#include <vector>

#include "qmex/simulator.hpp"

namespace qmex {

/// Two-dimensional input sample, components in radians.
struct DataPoint {
    double x1 = 0.0;
    double x2 = 0.0;
};

/// One data-encoding rotation: kind(x[data_index]) applied to `qubit`.
/// The circuit families built here use RX only.
struct EncodingGate {
    GateKind kind = GateKind::RX;
    int qubit = 0;
    int data_index = 0;
};

/// A processing slot is either a parameterized Rot (consumes 3 angles from
/// the parameter vector) or a fixed entangling gate.
struct ProcessingSlot {
    enum class Kind { PARAM_ROT, ENTANGLER };
    Kind kind = Kind::PARAM_ROT;
    int qubit = -1;   // PARAM_ROT
    Gate entangler;   // ENTANGLER

    static ProcessingSlot param_rot(int qubit) {
        ProcessingSlot s;
        s.kind = Kind::PARAM_ROT;
        s.qubit = qubit;
        return s;
    }
    static ProcessingSlot fixed(Gate gate) {
        ProcessingSlot s;
        s.kind = Kind::ENTANGLER;
        s.entangler = std::move(gate);
        return s;
    }
};

/// Measurement is always a Pauli Z expectation on one qubit.
struct Measurement {
    int qubit = 0;
};

/// Declarative circuit: encoding slots, ordered processing slots, and the
/// measured qubit. Instances are immutable after construction and freely
/// shareable across threads.
struct CircuitTemplate {
    int n_qubits = 0;
    std::vector<EncodingGate> encoding;
    std::vector<ProcessingSlot> processing;
    Measurement measurement;

    int n_rot_slots() const;
    int n_params() const { return 3 * n_rot_slots(); }
    int data_dim() const;
    std::vector<int> encoded_qubits() const;  // one entry per data component
};

enum class CnotPosition { AFTER_ROT, BEFORE_ROT };

const char* to_string(CnotPosition pos);
CnotPosition cnot_position_from_string(const std::string& name);

/// Two-qubit family: encoding RX(x1) (x) RX(x2); each layer holds a Rot on
/// both qubits and a CNOT(0->1). AFTER_ROT places the entangler after the
/// rotations (so the last gate before measurement is a CNOT), BEFORE_ROT
/// places it first. Default measurement: qubit 1, the CNOT target.
CircuitTemplate circuit_2q(int n_layers, CnotPosition cnot_position = CnotPosition::AFTER_ROT,
                           int measure_qubit = 1);

/// Three-qubit family: qubits 0,1 carry the encoding, qubit 2 is an ancilla
/// starting in |0>. Layers act on the data qubits as in circuit_2q, except
/// that the final layer's entangler is a Toffoli (controls 0,1 -> target 2).
/// Measurement: Z on the ancilla.
CircuitTemplate circuit_3q(int n_layers);

/// Measurement-position toy: two layers of Rot pairs with entanglers of
/// alternating orientation, CNOT(0->1) then CNOT(1->0), measured on the
/// chosen qubit. Both choices see the same gate list.
CircuitTemplate circuit_toy(int measure_qubit);

/// Z on the template's measured qubit, embedded in the full register.
Observable measurement_observable(const CircuitTemplate& tmpl);

/// S(x): the tensor product of the encoding rotations.
Matrix encoding_unitary(const CircuitTemplate& tmpl, const DataPoint& x);

/// U_theta: the processing slots composed in template order (3 angles per
/// Rot slot). Throws DimensionError if params.size() != n_params().
Matrix processing_unitary(const CircuitTemplate& tmpl, std::span<const double> params);

/// U_theta S(x) |0...0>, gates applied in template order through the
/// statevector simulator.
Statevector run_circuit(const CircuitTemplate& tmpl, std::span<const double> params,
                        const DataPoint& x);

/// JSON circuit description (lossless round-trip):
/// {"n_qubits": n, "encoding": [{"gate": "RX", "qubit": q, "data": d}, ...],
///  "processing": [{"type": "rot", "qubit": q} |
///                 {"type": "entangler", "gate": "CNOT", "qubits": [c, t]}, ...],
///  "measurement": {"pauli": "Z", "qubit": q}}
std::string to_json_string(const CircuitTemplate& tmpl, int indent = -1);
CircuitTemplate template_from_json(const std::string& json_text);

}  // namespace qmex

#endif
