#include "qmex/circuits.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace qmex {

using nlohmann::json;

int CircuitTemplate::n_rot_slots() const {
    return static_cast<int>(std::count_if(processing.begin(), processing.end(), [](const auto& s) {
        return s.kind == ProcessingSlot::Kind::PARAM_ROT;
    }));
}

int CircuitTemplate::data_dim() const {
    int dim = 0;
    for (const auto& e : encoding) dim = std::max(dim, e.data_index + 1);
    return dim;
}

std::vector<int> CircuitTemplate::encoded_qubits() const {
    std::vector<int> qubits(data_dim(), -1);
    for (const auto& e : encoding) qubits[e.data_index] = e.qubit;
    return qubits;
}

const char* to_string(CnotPosition pos) {
    return pos == CnotPosition::AFTER_ROT ? "after_rot" : "before_rot";
}

CnotPosition cnot_position_from_string(const std::string& name) {
    if (name == "after_rot") return CnotPosition::AFTER_ROT;
    if (name == "before_rot") return CnotPosition::BEFORE_ROT;
    throw Error("unknown cnot position: " + name + " (expected after_rot|before_rot)");
}

CircuitTemplate circuit_2q(int n_layers, CnotPosition cnot_position, int measure_qubit) {
    if (n_layers < 1) throw Error("n_layers must be >= 1");
    if (measure_qubit != 0 && measure_qubit != 1) throw Error("measure_qubit must be 0 or 1");
    CircuitTemplate t;
    t.n_qubits = 2;
    t.encoding = {{GateKind::RX, 0, 0}, {GateKind::RX, 1, 1}};
    for (int l = 0; l < n_layers; ++l) {
        if (cnot_position == CnotPosition::BEFORE_ROT)
            t.processing.push_back(ProcessingSlot::fixed(Gate::cnot(0, 1)));
        t.processing.push_back(ProcessingSlot::param_rot(0));
        t.processing.push_back(ProcessingSlot::param_rot(1));
        if (cnot_position == CnotPosition::AFTER_ROT)
            t.processing.push_back(ProcessingSlot::fixed(Gate::cnot(0, 1)));
    }
    t.measurement.qubit = measure_qubit;
    return t;
}

CircuitTemplate circuit_3q(int n_layers) {
    if (n_layers < 1) throw Error("n_layers must be >= 1");
    CircuitTemplate t;
    t.n_qubits = 3;
    t.encoding = {{GateKind::RX, 0, 0}, {GateKind::RX, 1, 1}};
    for (int l = 0; l < n_layers; ++l) {
        t.processing.push_back(ProcessingSlot::param_rot(0));
        t.processing.push_back(ProcessingSlot::param_rot(1));
        if (l + 1 < n_layers)
            t.processing.push_back(ProcessingSlot::fixed(Gate::cnot(0, 1)));
        else
            t.processing.push_back(ProcessingSlot::fixed(Gate::toffoli(0, 1, 2)));
    }
    t.measurement.qubit = 2;
    return t;
}

CircuitTemplate circuit_toy(int measure_qubit) {
    if (measure_qubit != 0 && measure_qubit != 1) throw Error("measure_qubit must be 0 or 1");
    CircuitTemplate t;
    t.n_qubits = 2;
    t.encoding = {{GateKind::RX, 0, 0}, {GateKind::RX, 1, 1}};
    t.processing.push_back(ProcessingSlot::param_rot(0));
    t.processing.push_back(ProcessingSlot::param_rot(1));
    t.processing.push_back(ProcessingSlot::fixed(Gate::cnot(0, 1)));
    t.processing.push_back(ProcessingSlot::param_rot(0));
    t.processing.push_back(ProcessingSlot::param_rot(1));
    t.processing.push_back(ProcessingSlot::fixed(Gate::cnot(1, 0)));
    t.measurement.qubit = measure_qubit;
    return t;
}

Observable measurement_observable(const CircuitTemplate& tmpl) {
    if (tmpl.measurement.qubit < 0 || tmpl.measurement.qubit >= tmpl.n_qubits)
        throw DimensionError("measurement qubit out of range");
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    std::vector<int> qs{tmpl.measurement.qubit};
    return Observable{embed_gate(z, qs, tmpl.n_qubits)};
}

Matrix encoding_unitary(const CircuitTemplate& tmpl, const DataPoint& x) {
    const double comps[2] = {x.x1, x.x2};
    Matrix s = Matrix::Identity(std::int64_t(1) << tmpl.n_qubits, std::int64_t(1) << tmpl.n_qubits);
    for (const auto& e : tmpl.encoding) {
        if (e.data_index < 0 || e.data_index >= 2)
            throw DimensionError("encoding data index out of range for 2-D data");
        Gate g{e.kind, {comps[e.data_index]}, {e.qubit}, {}};
        s = embed_gate(gate_matrix(g), g.qubits, tmpl.n_qubits) * s;
    }
    return s;
}

Matrix processing_unitary(const CircuitTemplate& tmpl, std::span<const double> params) {
    if (static_cast<int>(params.size()) != tmpl.n_params())
        throw DimensionError("parameter vector length " + std::to_string(params.size()) +
                             " != " + std::to_string(tmpl.n_params()));
    const std::int64_t dim = std::int64_t(1) << tmpl.n_qubits;
    Matrix u = Matrix::Identity(dim, dim);
    std::size_t p = 0;
    for (const auto& slot : tmpl.processing) {
        if (slot.kind == ProcessingSlot::Kind::PARAM_ROT) {
            Gate g = Gate::rot(params[p], params[p + 1], params[p + 2], slot.qubit);
            p += 3;
            u = embed_gate(gate_matrix(g), g.qubits, tmpl.n_qubits) * u;
        } else {
            u = embed_gate(gate_matrix(slot.entangler), slot.entangler.qubits, tmpl.n_qubits) * u;
        }
    }
    return u;
}

Statevector run_circuit(const CircuitTemplate& tmpl, std::span<const double> params,
                        const DataPoint& x) {
    if (static_cast<int>(params.size()) != tmpl.n_params())
        throw DimensionError("parameter vector length " + std::to_string(params.size()) +
                             " != " + std::to_string(tmpl.n_params()));
    Statevector state = Statevector::zero(tmpl.n_qubits);
    const double comps[2] = {x.x1, x.x2};
    for (const auto& e : tmpl.encoding) {
        if (e.data_index < 0 || e.data_index >= 2)
            throw DimensionError("encoding data index out of range for 2-D data");
        state = apply_gate(std::move(state), Gate{e.kind, {comps[e.data_index]}, {e.qubit}, {}});
    }
    std::size_t p = 0;
    for (const auto& slot : tmpl.processing) {
        if (slot.kind == ProcessingSlot::Kind::PARAM_ROT) {
            state = apply_gate(std::move(state),
                               Gate::rot(params[p], params[p + 1], params[p + 2], slot.qubit));
            p += 3;
        } else {
            state = apply_gate(std::move(state), slot.entangler);
        }
    }
    return state;
}

std::string to_json_string(const CircuitTemplate& tmpl, int indent) {
    json j;
    j["n_qubits"] = tmpl.n_qubits;
    j["encoding"] = json::array();
    for (const auto& e : tmpl.encoding)
        j["encoding"].push_back({{"gate", to_string(e.kind)}, {"qubit", e.qubit}, {"data", e.data_index}});
    j["processing"] = json::array();
    for (const auto& s : tmpl.processing) {
        if (s.kind == ProcessingSlot::Kind::PARAM_ROT)
            j["processing"].push_back({{"type", "rot"}, {"qubit", s.qubit}});
        else
            j["processing"].push_back({{"type", "entangler"},
                                       {"gate", to_string(s.entangler.kind)},
                                       {"qubits", s.entangler.qubits}});
    }
    j["measurement"] = {{"pauli", "Z"}, {"qubit", tmpl.measurement.qubit}};
    return j.dump(indent);
}

CircuitTemplate template_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    CircuitTemplate t;
    t.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& e : j.at("encoding")) {
        GateKind kind = gate_kind_from_string(e.at("gate").get<std::string>());
        if (kind != GateKind::RX)
            throw UnsupportedEncodingError("encoding gates must be RX, got " +
                                           e.at("gate").get<std::string>());
        t.encoding.push_back({kind, e.at("qubit").get<int>(), e.at("data").get<int>()});
    }
    for (const auto& s : j.at("processing")) {
        std::string type = s.at("type").get<std::string>();
        if (type == "rot") {
            t.processing.push_back(ProcessingSlot::param_rot(s.at("qubit").get<int>()));
        } else if (type == "entangler") {
            Gate g;
            g.kind = gate_kind_from_string(s.at("gate").get<std::string>());
            g.qubits = s.at("qubits").get<std::vector<int>>();
            t.processing.push_back(ProcessingSlot::fixed(std::move(g)));
        } else {
            throw Error("unknown processing slot type: " + type);
        }
    }
    const auto& m = j.at("measurement");
    if (m.at("pauli").get<std::string>() != "Z")
        throw Error("only Pauli Z measurements are supported");
    t.measurement.qubit = m.at("qubit").get<int>();
    if (t.measurement.qubit < 0 || t.measurement.qubit >= t.n_qubits)
        throw DimensionError("measurement qubit out of range");
    return t;
}

}  // namespace qmex
