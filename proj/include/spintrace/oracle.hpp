#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "spintrace/dynamics.hpp"
#include "spintrace/model.hpp"
#include "spintrace/summation.hpp"
#include "spintrace/two_qubit.hpp"

namespace spintrace {

namespace detail {

using Cplx = std::complex<double>;

// Local basis convention everywhere: index 0 = |->, index 1 = |+>, so
// sigma_z = diag(-1, +1).
inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}
inline Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << Cplx(0, 0), Cplx(0, 1), Cplx(0, -1), Cplx(0, 0);
    return m;
}
inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << -1, 0, 0, 1;
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

// op acting on one site of an n-site chain, Kronecker-placed.
inline Eigen::MatrixXcd site_operator(int n_sites, int site, const Eigen::Matrix2cd& op) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int s = 0; s < n_sites; ++s)
        out = kron(out, s == site ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    return out;
}

// Collective J_z = (1/2) sum_i sigma_z^(i) of an n-site bath.
inline Eigen::MatrixXcd bath_jz(int n_sites) {
    const Eigen::Index dim = Eigen::Index(1) << n_sites;
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(dim, dim);
    for (int s = 0; s < n_sites; ++s) jz += 0.5 * site_operator(n_sites, s, pauli_z());
    return jz;
}

}  // namespace detail

// The fully explicit model: two qubits, two baths of N spin-1/2 sites each,
// ordered qubit1 (x) qubit2 (x) bath1 sites (x) bath2 sites. Dimension
// 4 * 4^N, capped at 4096 (N <= 5). The Hamiltonian keeps every term,
// including delta and the bath field.
struct FullSystem {
    ModelParams params;
    Eigen::Index dimension = 0;
    Eigen::MatrixXcd hamiltonian;
    Eigen::VectorXd bath_weights;  // thermal diagonal of the initial bath state, length 4^N
    Eigen::VectorXd evals;         // spectral decomposition, fixed at build time
    Eigen::MatrixXcd evecs;
};

inline FullSystem build_full(const ModelParams& p) {
    p.validate();
    const int n = p.n_bath;
    const Eigen::Index bath_dim = Eigen::Index(1) << (2 * n);
    const Eigen::Index dim = 4 * bath_dim;
    if (dim > 4096) throw std::invalid_argument("build_full: dimension cap 4096 exceeded (N <= 5)");

    using detail::kron;
    const Eigen::MatrixXcd sx = detail::pauli_x();
    const Eigen::MatrixXcd sy = detail::pauli_y();
    const Eigen::MatrixXcd sz = detail::pauli_z();
    const Eigen::MatrixXcd id2 = Eigen::Matrix2cd::Identity();
    const Eigen::MatrixXcd idb = Eigen::MatrixXcd::Identity(bath_dim, bath_dim);
    const Eigen::MatrixXcd idb1 = Eigen::MatrixXcd::Identity(bath_dim >> n, bath_dim >> n);

    const Eigen::MatrixXcd jz = detail::bath_jz(n);
    const Eigen::MatrixXcd jz1 = kron(jz, idb1);  // bath 1 inside bath1 (x) bath2
    const Eigen::MatrixXcd jz2 = kron(idb1, jz);

    const double gs = p.scaled_coupling();
    const double sign2 = p.bath_type == BathType::DeltaZ ? -1.0 : 1.0;
    const Eigen::MatrixXcd h_bath = p.h * (jz1 + sign2 * jz2);

    FullSystem sys;
    sys.params = p;
    sys.dimension = dim;
    sys.hamiltonian = p.lambda * kron(kron(sx, sx) + kron(sy, sy), idb) +
                      p.delta * kron(kron(sz, sz), idb) +
                      gs * (kron(kron(sz, id2), jz1) + kron(kron(id2, sz), jz2)) +
                      p.mu * kron(kron(sz, id2) + kron(id2, sz), idb) +
                      kron(Eigen::MatrixXcd(Eigen::Matrix4cd::Identity()), h_bath);

    if ((sys.hamiltonian - sys.hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("build_full: Hamiltonian is not Hermitian");

    // Thermal bath diagonal, normalized against its own enumerated sum.
    Eigen::VectorXd energies(bath_dim);
    for (Eigen::Index b = 0; b < bath_dim; ++b) energies(b) = h_bath(b, b).real();
    const double shift = energies.minCoeff();
    Eigen::VectorXd w = (-(p.beta) * (energies.array() - shift)).exp();
    sys.bath_weights = w / w.sum();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sys.hamiltonian);
    if (es.info() != Eigen::Success) throw std::runtime_error("build_full: eigensolver failed");
    sys.evals = es.eigenvalues();
    sys.evecs = es.eigenvectors();
    return sys;
}

// Exact evolution: rho_total(0) = rho_qubits (x) rho_bath, conjugated by
// e^{-iHt} through the stored spectral decomposition, then traced over the
// 2N bath sites.
inline TwoQubitState exact_evolve(const FullSystem& sys, const TwoQubitState& rho_qubits0, double t) {
    rho_qubits0.require_valid();
    const Eigen::Index bath_dim = sys.dimension / 4;

    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(sys.dimension, sys.dimension);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (Eigen::Index e = 0; e < bath_dim; ++e)
                rho0(a * bath_dim + e, b * bath_dim + e) = rho_qubits0(a, b) * sys.bath_weights(e);

    // rho(t) = V E A E^* V^dagger with A = V^dagger rho0 V and E = diag(e^{-i lambda t}).
    Eigen::MatrixXcd a = sys.evecs.adjoint() * rho0 * sys.evecs;
    for (Eigen::Index r = 0; r < sys.dimension; ++r)
        for (Eigen::Index c = 0; c < sys.dimension; ++c)
            a(r, c) *= std::polar(1.0, -t * (sys.evals(r) - sys.evals(c)));
    const Eigen::MatrixXcd rho_t = sys.evecs * a * sys.evecs.adjoint();

    Eigen::Matrix4cd reduced = Eigen::Matrix4cd::Zero();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            KahanSum<std::complex<double>> acc;
            for (Eigen::Index e = 0; e < bath_dim; ++e) acc += rho_t(r * bath_dim + e, c * bath_dim + e);
            reduced(r, c) = acc.value();
        }
    return TwoQubitState(reduced);
}

struct ComparisonEntry {
    std::size_t index = 0;
    double max_element_dev = 0.0;
    double concurrence_dev = 0.0;
    int worst_row = 0;
    int worst_col = 0;
    bool pass = false;
};

struct ComparisonReport {
    double tol = 0.0;
    bool phase_insensitive = false;
    std::vector<ComparisonEntry> entries;
    bool all_pass = true;
    double worst_dev = 0.0;

    const ComparisonEntry* first_failure() const {
        for (const auto& e : entries)
            if (!e.pass) return &e;
        return nullptr;
    }
};

// Elementwise and concurrence deviations between two evolutions. In
// phase-insensitive mode only |rho_ij| is compared, for runs where the
// analytic side drops pure-phase contributions.
inline ComparisonReport compare_report(const std::vector<TwoQubitState>& analytic,
                                       const std::vector<TwoQubitState>& exact, double tol,
                                       bool phase_insensitive = false) {
    if (analytic.size() != exact.size())
        throw std::invalid_argument("compare_report: series lengths differ");

    ComparisonReport report;
    report.tol = tol;
    report.phase_insensitive = phase_insensitive;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        ComparisonEntry entry;
        entry.index = i;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const double dev = phase_insensitive
                                       ? std::abs(std::abs(analytic[i](r, c)) - std::abs(exact[i](r, c)))
                                       : std::abs(analytic[i](r, c) - exact[i](r, c));
                if (dev > entry.max_element_dev) {
                    entry.max_element_dev = dev;
                    entry.worst_row = r;
                    entry.worst_col = c;
                }
            }
        entry.concurrence_dev = std::abs(concurrence(analytic[i]) - concurrence(exact[i]));
        entry.pass = entry.max_element_dev <= tol && entry.concurrence_dev <= tol;
        report.all_pass = report.all_pass && entry.pass;
        report.worst_dev = std::max(report.worst_dev, std::max(entry.max_element_dev, entry.concurrence_dev));
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace spintrace
