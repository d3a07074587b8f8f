#include "qmex/fourier.hpp"

#include <cmath>
#include <numbers>

#include "qmex/parallel.hpp"

namespace qmex {

namespace {

constexpr double kBandTol = 1e-10;

Matrix hadamard() {
    Matrix h(2, 2);
    const double r = 1.0 / std::numbers::sqrt2;
    h << r, r, r, -r;
    return h;
}

}  // namespace

double FourierSpectrum::eval(double x1, double x2) const {
    cx f = 0;
    for (int n1 = -1; n1 <= 1; ++n1)
        for (int n2 = -1; n2 <= 1; ++n2)
            f += c(n1, n2) * std::exp(cx(0, -(n1 * x1 + n2 * x2)));
    if (std::abs(f.imag()) >= 1e-10)
        throw Error("reconstructed f(x) has imaginary residue >= 1e-10");
    return f.real();
}

double FourierSpectrum::hermitian_asymmetry() const {
    double mx = 0;
    for (int n1 = -1; n1 <= 1; ++n1)
        for (int n2 = -1; n2 <= 1; ++n2)
            mx = std::max(mx, std::abs(c(-n1, -n2) - std::conj(c(n1, n2))));
    return mx;
}

FourierSpectrum extract_spectrum_dft(const CircuitTemplate& tmpl, std::span<const double> params,
                                     int grid_size) {
    if (grid_size < 3)
        throw Error("grid_size must be >= 3 to resolve the {-1,0,1} spectrum");
    const int g = grid_size;
    const Observable m = measurement_observable(tmpl);

    std::vector<double> f(static_cast<std::size_t>(g) * g);
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            DataPoint x{2 * std::numbers::pi * a / g, 2 * std::numbers::pi * b / g};
            f[a * g + b] = expectation(run_circuit(tmpl, params, x), m);
        }
    }

    // full two-sided bin table: bins n in [-g/2, g/2)
    std::vector<cx> phase(static_cast<std::size_t>(g) * g);  // phase[n_idx*g + k] = e^{+i n x_k}
    const int n_lo = -g / 2, n_hi = (g - 1) / 2;
    auto n_index = [&](int n) { return n - n_lo; };
    for (int n = n_lo; n <= n_hi; ++n)
        for (int k = 0; k < g; ++k)
            phase[n_index(n) * g + k] = std::exp(cx(0, n * 2 * std::numbers::pi * k / g));

    // row pass: partial[a][n2] = sum_b f(a,b) e^{+i n2 x_b}
    std::vector<cx> partial(static_cast<std::size_t>(g) * g);
    for (int a = 0; a < g; ++a)
        for (int n2 = n_lo; n2 <= n_hi; ++n2) {
            cx s = 0;
            for (int b = 0; b < g; ++b) s += f[a * g + b] * phase[n_index(n2) * g + b];
            partial[a * g + n_index(n2)] = s;
        }

    FourierSpectrum spec;
    double off_band_max = 0;
    const double norm = 1.0 / (static_cast<double>(g) * g);
    for (int n1 = n_lo; n1 <= n_hi; ++n1)
        for (int n2 = n_lo; n2 <= n_hi; ++n2) {
            cx s = 0;
            for (int a = 0; a < g; ++a) s += partial[a * g + n_index(n2)] * phase[n_index(n1) * g + a];
            s *= norm;
            if (std::abs(n1) <= 1 && std::abs(n2) <= 1)
                spec.c(n1, n2) = s;
            else
                off_band_max = std::max(off_band_max, std::abs(s));
        }
    if (off_band_max >= kBandTol)
        throw Error("spectrum is not band-limited to {-1,0,1}^2: off-band bin magnitude " +
                    std::to_string(off_band_max));
    return spec;
}

VariationalMeasurement variational_measurement(const CircuitTemplate& tmpl,
                                               std::span<const double> params) {
    for (const auto& e : tmpl.encoding)
        if (e.kind != GateKind::RX)
            throw UnsupportedEncodingError(
                "variational measurement requires RX encoding, got " +
                std::string(to_string(e.kind)));
    if (tmpl.data_dim() != 2) throw DimensionError("expected 2-D data encoding");

    const std::int64_t dim = std::int64_t(1) << tmpl.n_qubits;
    Matrix v = Matrix::Identity(dim, dim);
    const Matrix h = hadamard();
    for (const auto& e : tmpl.encoding) {
        std::vector<int> qs{e.qubit};
        v = embed_gate(h, qs, tmpl.n_qubits) * v;
    }

    const Matrix u = processing_unitary(tmpl, params);
    const Matrix m = measurement_observable(tmpl).matrix;

    VariationalMeasurement vm;
    vm.m_bar = v * (u.adjoint() * m * u) * v.adjoint();
    Vector zero = Vector::Zero(dim);
    zero(0) = 1.0;
    vm.psi_prime = v * zero;

    const auto qubits = tmpl.encoded_qubits();
    vm.lambdas.resize(dim);
    for (std::int64_t j = 0; j < dim; ++j)
        for (int d = 0; d < 2; ++d) {
            int bit = static_cast<int>((j >> (tmpl.n_qubits - 1 - qubits[d])) & 1);
            vm.lambdas[j][d] = bit == 0 ? 0.5 : -0.5;
        }
    return vm;
}

FourierSpectrum spectrum_from_matrix(const VariationalMeasurement& vm) {
    const std::int64_t dim = vm.m_bar.rows();
    FourierSpectrum spec;
    for (std::int64_t j = 0; j < dim; ++j)
        for (std::int64_t k = 0; k < dim; ++k) {
            int n1 = static_cast<int>(std::lround(vm.lambdas[k][0] - vm.lambdas[j][0]));
            int n2 = static_cast<int>(std::lround(vm.lambdas[k][1] - vm.lambdas[j][1]));
            spec.c(n1, n2) += std::conj(vm.psi_prime(j)) * vm.m_bar(j, k) * vm.psi_prime(k);
        }
    return spec;
}

cx analytic_c11_2q(const std::array<double, 6>& a) {
    const double p1 = a[0], t1 = a[1], o1 = a[2], p2 = a[3], t2 = a[4], o2 = a[5];
    using std::cos;
    using std::sin;
    const double bracket2 = sin(p2 / 2 + o2 / 2) * cos(-p2 / 2 + o2 / 2) -
                            cos(p2 / 2 + o2 / 2) * sin(-p2 / 2 + o2 / 2);
    const double re =
        sin(t2 / 2) * sin(p1 / 2 + o1 / 2) * cos(t1 / 2) * cos(t2 / 2) * sin(t1 / 2) *
            cos(-p1 / 2 + o1 / 2) * bracket2 -
        sin(t2 / 2) * sin(-p1 / 2 + o1 / 2) * cos(t1 / 2) * cos(t2 / 2) * sin(t1 / 2) *
            cos(p1 / 2 + o1 / 2) * bracket2 +
        0.25 * (-4 * cos(t2 / 2) * cos(t2 / 2) + 2) * cos(t1 / 2) * cos(t1 / 2) +
        0.5 * cos(t2 / 2) * cos(t2 / 2) - 0.25;
    const double im =
        -(cos(t2 / 2) * cos(t2 / 2) - 0.5) * sin(t1 / 2) * sin(p1 / 2 + o1 / 2) * cos(t1 / 2) *
            cos(-p1 / 2 + o1 / 2) +
        (cos(t2 / 2) * cos(t2 / 2) - 0.5) * sin(-p1 / 2 + o1 / 2) * sin(t1 / 2) * cos(t1 / 2) *
            cos(p1 / 2 + o1 / 2) -
        sin(t2 / 2) * cos(t2 / 2) * bracket2 * (cos(t1 / 2) * cos(t1 / 2) - 0.5);
    return {re, im};
}

cx analytic_c11_3q(const std::array<double, 6>& a) {
    const double p1 = a[0], t1 = a[1], p2 = a[3], t2 = a[4];
    using std::cos;
    using std::sin;
    const double re = -1.0 / 8 -
                      1.0 / 8 * (-2 + 4 * cos(t2 / 2) * cos(t2 / 2)) * cos(t1 / 2) * cos(t1 / 2) +
                      0.5 * sin(p2) * sin(t1) * sin(t1 / 2) * sin(t2 / 2) * cos(t2 / 2) *
                          cos(t1 / 2) +
                      0.25 * cos(t2 / 2) * cos(t2 / 2);
    const double im = 0.5 * sin(p2) * sin(t2 / 2) * cos(t2 / 2) * cos(t1 / 2) * cos(t1 / 2) -
                      0.5 * sin(p1) * (cos(t2 / 2) * cos(t2 / 2) - 0.5) * sin(t1 / 2) * cos(t1 / 2) +
                      0.25 * sin(t2 / 2) * cos(t2 / 2) * sin(t2);
    return {re, im};
}

cx derived_c11_2q(const std::array<double, 6>& a) {
    const double p1 = a[0], t1 = a[1], p2 = a[3], t2 = a[4];
    const cx f1(std::cos(t1), -std::sin(t1) * std::sin(p1));
    const cx f2(std::cos(t2), -std::sin(t2) * std::sin(p2));
    return 0.25 * f1 * f2;
}

cx derived_c11_3q(const std::array<double, 6>& a) { return -0.5 * derived_c11_2q(a); }

std::array<CoefficientCloud::Stats, 9> CoefficientCloud::summarize(const std::vector<Draw>& draws) {
    std::array<Stats, 9> out{};
    const int n = static_cast<int>(draws.size());
    if (n == 0) return out;
    for (int idx = 0; idx < 9; ++idx) {
        double sr = 0, si = 0;
        for (const auto& d : draws) {
            sr += d.spectrum.coeffs[idx].real();
            si += d.spectrum.coeffs[idx].imag();
        }
        Stats s;
        s.mean_re = sr / n;
        s.mean_im = si / n;
        if (n > 1) {
            double vr = 0, vi = 0;
            for (const auto& d : draws) {
                vr += std::pow(d.spectrum.coeffs[idx].real() - s.mean_re, 2);
                vi += std::pow(d.spectrum.coeffs[idx].imag() - s.mean_im, 2);
            }
            s.std_re = std::sqrt(vr / (n - 1));
            s.std_im = std::sqrt(vi / (n - 1));
        }
        out[idx] = s;
    }
    return out;
}

CoefficientCloud coefficient_cloud(const CircuitTemplate& tmpl, int n_draws, RngSeed seed,
                                   int n_threads, int grid_size) {
    if (n_draws < 1) throw DimensionError("n_draws must be >= 1");
    CoefficientCloud cloud;
    cloud.draws.resize(n_draws);
    const int n_params = tmpl.n_params();
    parallel_for(n_draws, n_threads, [&](int i) {
        std::uint64_t ds = child_seed(seed.value, static_cast<std::uint64_t>(i));
        Rng rng(ds);
        std::vector<double> angles(n_params);
        for (double& a : angles) a = rng.uniform(0, 2 * std::numbers::pi);
        cloud.draws[i] = {ds, extract_spectrum_dft(tmpl, angles, grid_size)};
    });
    cloud.summary = CoefficientCloud::summarize(cloud.draws);
    return cloud;
}

}  // namespace qmex
