#include "qmex/pauli.hpp"

namespace qmex {

namespace {

constexpr double kDropTol = 1e-12;
constexpr const char kLetters[] = "IXYZ";

// <r| sigma |c> for a single-qubit Pauli is nonzero at exactly one row per
// column: r = c ^ flip, with value phase(letter, c).
inline int letter_flip(std::uint8_t letter) { return (letter == 1 || letter == 2) ? 1 : 0; }

inline cx letter_phase(std::uint8_t letter, int col_bit) {
    switch (letter) {
        case 0: return {1, 0};
        case 1: return {1, 0};
        case 2: return col_bit ? cx(0, -1) : cx(0, 1);
        default: return col_bit ? cx(-1, 0) : cx(1, 0);
    }
}

// Trace(O sigma) using the one-nonzero-per-column structure of sigma:
// Tr(O sigma) = sum_c O(c, c ^ flip_mask) * phase(c).
cx trace_with_pauli(const Matrix& o, const PauliString& s) {
    const int n = static_cast<int>(s.letters.size());
    const std::int64_t dim = std::int64_t(1) << n;
    std::int64_t flip_mask = 0;
    for (int q = 0; q < n; ++q)
        if (letter_flip(s.letters[q])) flip_mask |= std::int64_t(1) << (n - 1 - q);
    cx total = 0;
    for (std::int64_t c = 0; c < dim; ++c) {
        cx phase(1, 0);
        for (int q = 0; q < n; ++q)
            phase *= letter_phase(s.letters[q], static_cast<int>((c >> (n - 1 - q)) & 1));
        total += o(c, c ^ flip_mask) * phase;
    }
    return total;
}

PauliString string_from_index(std::uint64_t index, int n) {
    PauliString s;
    s.letters.resize(n);
    for (int q = n - 1; q >= 0; --q) {
        s.letters[q] = static_cast<std::uint8_t>(index & 3);
        index >>= 2;
    }
    return s;
}

}  // namespace

std::string PauliString::to_string() const {
    std::string out;
    out.reserve(letters.size());
    for (auto l : letters) out.push_back(kLetters[l]);
    return out;
}

PauliString PauliString::from_string(const std::string& s) {
    PauliString p;
    p.letters.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case 'I': p.letters.push_back(0); break;
            case 'X': p.letters.push_back(1); break;
            case 'Y': p.letters.push_back(2); break;
            case 'Z': p.letters.push_back(3); break;
            default: throw Error(std::string("invalid Pauli letter: ") + c);
        }
    }
    return p;
}

int weight(const PauliString& s) {
    int w = 0;
    for (auto l : s.letters) w += (l != 0);
    return w;
}

Matrix pauli_string_matrix(const PauliString& s) {
    const int n = static_cast<int>(s.letters.size());
    const std::int64_t dim = std::int64_t(1) << n;
    std::int64_t flip_mask = 0;
    for (int q = 0; q < n; ++q)
        if (letter_flip(s.letters[q])) flip_mask |= std::int64_t(1) << (n - 1 - q);
    Matrix m = Matrix::Zero(dim, dim);
    for (std::int64_t c = 0; c < dim; ++c) {
        cx phase(1, 0);
        for (int q = 0; q < n; ++q)
            phase *= letter_phase(s.letters[q], static_cast<int>((c >> (n - 1 - q)) & 1));
        m(c ^ flip_mask, c) = phase;
    }
    return m;
}

Matrix PauliDecomposition::reconstruct() const {
    const std::int64_t dim = std::int64_t(1) << n_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& [s, c] : terms) m += c * pauli_string_matrix(s);
    return m;
}

double PauliDecomposition::max_imag_coeff() const {
    double mx = 0;
    for (const auto& [s, c] : terms) mx = std::max(mx, std::abs(c.imag()));
    return mx;
}

double PauliDecomposition::coeff_norm_sq() const {
    double t = 0;
    for (const auto& [s, c] : terms) t += std::norm(c);
    return t;
}

PauliDecomposition pauli_decompose(const Observable& obs) {
    obs.validate();
    const int n = obs.n_qubits();
    const double inv_dim = 1.0 / static_cast<double>(std::int64_t(1) << n);
    PauliDecomposition d;
    d.n_qubits = n;
    const std::uint64_t count = std::uint64_t(1) << (2 * n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PauliString s = string_from_index(idx, n);
        cx c = trace_with_pauli(obs.matrix, s) * inv_dim;
        if (std::abs(c) >= kDropTol) d.terms.emplace_back(std::move(s), c);
    }
    return d;
}

double operator_size(const Observable& obs) {
    PauliDecomposition d = pauli_decompose(obs);
    double size = 0;
    for (const auto& [s, c] : d.terms) size += std::norm(c) * weight(s);
    return size;
}

}  // namespace qmex
