#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spintrace/collective.hpp"
#include "spintrace/exact.hpp"
#include "spintrace/half_int.hpp"
#include "spintrace/model.hpp"
#include "spintrace/summation.hpp"
#include "spintrace/two_qubit.hpp"

namespace spintrace {

namespace detail {

// ln(2 cosh x), stable for large |x|.
inline double ln_2cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a));
}

// sin(t w)/w with the removable singularity at w = 0.
inline double sinc_omega(double t, double omega) { return omega == 0.0 ? t : std::sin(t * omega) / omega; }

}  // namespace detail

// Distribution of the bath z-imbalance d = m1 - m2 (an integer in -N..N for
// equal bath sizes) in the initial thermal bath state. Degeneracies are exact
// binomial pair counts; the thermal factor depends on the bath Hamiltonian:
// exp(-h beta d) for the DeltaZ bath, exp(-h beta (m1 + m2)) for SigmaZ.
struct DeltaWeight {
    HalfInt d;
    double weight = 0.0;
};

struct DeltaDistribution {
    int n_bath = 0;
    std::vector<DeltaWeight> entries;  // d = -N .. N in increasing order

    double weight_sum() const {
        KahanSum<double> s;
        for (const auto& e : entries) s += e.weight;
        return s.value();
    }
};

inline DeltaDistribution delta_distribution(const ModelParams& p) {
    p.validate();
    const int n = p.n_bath;
    const double hb = p.h_beta();
    // Partition function from the closed form, independently of the pair sum
    // below; the final normalization check is a real crosscheck.
    const double ln_z = 2.0 * n * detail::ln_2cosh(hb / 2.0);

    std::vector<double> ln_choose(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) ln_choose[static_cast<std::size_t>(k)] = log_value(binomial(n, k));

    std::vector<KahanSum<double>> buckets(static_cast<std::size_t>(2 * n) + 1);
    for (int k1 = 0; k1 <= n; ++k1) {
        for (int k2 = 0; k2 <= n; ++k2) {
            const int d = k1 - k2;                 // 2 m1/2 difference: m1 - m2
            const int s = k1 + k2 - n;             // m1 + m2
            const double energy = p.bath_type == BathType::DeltaZ ? static_cast<double>(d) : static_cast<double>(s);
            const double ln_w = ln_choose[static_cast<std::size_t>(k1)] + ln_choose[static_cast<std::size_t>(k2)] -
                                hb * energy - ln_z;
            buckets[static_cast<std::size_t>(d + n)] += std::exp(ln_w);
        }
    }

    DeltaDistribution dist;
    dist.n_bath = n;
    dist.entries.reserve(buckets.size());
    KahanSum<double> total;
    for (int d = -n; d <= n; ++d) {
        const double w = buckets[static_cast<std::size_t>(d + n)].value();
        dist.entries.push_back({HalfInt(d), w});
        total += w;
    }
    if (std::abs(total.value() - 1.0) > 1e-9)
        throw std::runtime_error("delta_distribution: weights do not sum to 1 against the closed-form Z");
    return dist;
}

// rho14(t)/rho14(0) for the DeltaZ bath, evaluated from the closed product
// form e^{4 i mu t} [1 + (cos^2(g t) - 1)/cosh^2(h beta / 2)]^N with
// g the scaled coupling.
inline std::complex<double> rho14_ratio(const ModelParams& p, double t) {
    const double g = p.scaled_coupling();
    const double c = std::cos(g * t);
    const double sech = 1.0 / std::cosh(p.h_beta() / 2.0);
    const double bracket = std::max(0.0, 1.0 - (1.0 - c * c) * sech * sech);
    const double mag = std::pow(bracket, p.n_bath);
    return std::polar(mag, 4.0 * p.mu * t);
}

// Same quantity evaluated the slow way: the full double sum over the
// collective quantum numbers of the two baths, with exact multiplicities.
// Exponentials are assembled in log space so large h beta N stays finite.
inline std::complex<double> rho14_double_sum(const ModelParams& p, double t) {
    p.validate();
    if (p.bath_type != BathType::DeltaZ)
        throw std::invalid_argument("rho14_double_sum: defined for the DeltaZ bath");
    if (p.n_bath > 60) throw std::invalid_argument("rho14_double_sum: exact sums are limited to N <= 60");

    const int n = p.n_bath;
    const double g = p.scaled_coupling();
    const double hb = p.h_beta();
    const double ln_z = 2.0 * n * detail::ln_2cosh(hb / 2.0);

    struct JM {
        double m;
        double ln_nu;
    };
    std::vector<JM> pairs;
    for (HalfInt j : allowed_j(n)) {
        const double ln_nu = log_value(multiplicity(n, j));
        for (int tm = -j.twice(); tm <= j.twice(); tm += 2) pairs.push_back({0.5 * tm, ln_nu});
    }

    KahanSum<std::complex<double>> acc;
    for (const JM& a : pairs) {
        for (const JM& b : pairs) {
            const double ln_mag = a.ln_nu + b.ln_nu - hb * (a.m - b.m) - ln_z;
            const double phase = 2.0 * t * (2.0 * p.mu + g * (a.m + b.m));
            acc += std::polar(std::exp(ln_mag), phase);
        }
    }
    return acc.value();
}

// rho14(t)/rho14(0) for the SigmaZ bath:
// e^{4 i mu t} [cos(g t) - i sin(g t) tanh(h beta / 2)]^{2N}, with the power
// taken in log-polar form so N ~ 1e5 is routine.
inline std::complex<double> rho14_sigma_bath(const ModelParams& p, double t) {
    const double g = p.scaled_coupling();
    const double th = std::tanh(p.h_beta() / 2.0);
    const double sech = 1.0 / std::cosh(p.h_beta() / 2.0);
    const double c = std::cos(g * t);
    const double s = std::sin(g * t);
    // |c - i s th|^2 = 1 - s^2 sech^2
    const double ln_r2 = std::log1p(-(s * s) * (sech * sech));
    const double mag = std::exp(p.n_bath * ln_r2);  // (r^2)^{2N/2}
    const double ph = std::atan2(-s * th, c);
    return std::polar(mag, 4.0 * p.mu * t + 2.0 * p.n_bath * ph);
}

// One-configuration propagator of the inner block, with the bath imbalance
// treated as the scalar d. Omega = sqrt(4 lambda^2 + g^2 d^2).
struct PseudoSpinU {
    std::complex<double> u22, u23, u33;
};

inline PseudoSpinU u2_elements(const ModelParams& p, double d, double t) {
    const double g = p.scaled_coupling();
    const double omega = std::hypot(2.0 * p.lambda, g * d);
    const double c = std::cos(t * omega);
    const double sc = detail::sinc_omega(t, omega);
    return {{c, g * d * sc}, {0.0, -2.0 * p.lambda * sc}, {c, -g * d * sc}};
}

// Thermal traces driving the inner block:
//   g(t) = sum_d w_d 4 lambda g d sin^2(t O_d)/O_d^2
//   f(t) = sum_d w_d [2 g^2 d^2 sin^2(t O_d)/O_d^2 - i g d sin(2 t O_d)/O_d]
struct ThermalFG {
    std::complex<double> f;
    double g = 0.0;
};

inline ThermalFG f_and_g(const DeltaDistribution& dist, const ModelParams& p, double t) {
    const double gs = p.scaled_coupling();
    KahanSum<double> f_re, f_im, g_acc;
    for (const auto& e : dist.entries) {
        const double d = e.d.value();
        const double omega = std::hypot(2.0 * p.lambda, gs * d);
        const double sc = detail::sinc_omega(t, omega);        // sin(t O)/O
        const double sc2 = detail::sinc_omega(2.0 * t, omega); // sin(2 t O)/O
        f_re += e.weight * 2.0 * gs * gs * d * d * sc * sc;
        f_im += e.weight * -(gs * d * sc2);
        g_acc += e.weight * 4.0 * p.lambda * gs * d * sc * sc;
    }
    return {{f_re.value(), f_im.value()}, g_acc.value()};
}

inline ThermalFG f_and_g(const ModelParams& p, double t) { return f_and_g(delta_distribution(p), p, t); }

class block_form_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::complex<double> rho14_evolution_factor(const ModelParams& p, double t) {
    return p.bath_type == BathType::DeltaZ ? rho14_ratio(p, t) : rho14_sigma_bath(p, t);
}

}  // namespace detail

// Full state at the requested times. The outer corners keep their
// populations, the coherence follows the bath-appropriate closed form, and
// the inner block is the thermal average of U(d, t) rho U(d, t)^dagger over
// the imbalance distribution. The initial state must be in block form, or
// the two pseudo-spin sectors would mix.
inline std::vector<TwoQubitState> evolve(const ModelParams& p, const TwoQubitState& rho0,
                                         const std::vector<double>& times) {
    p.validate();
    rho0.require_valid();
    if (!rho0.block_form())
        throw block_form_error("evolve: initial state is not in block form; the two blocks would not decouple");

    const Eigen::Matrix2cd inner0{{rho0(1, 1), rho0(1, 2)}, {rho0(2, 1), rho0(2, 2)}};
    const bool inner_empty = inner0.cwiseAbs().maxCoeff() <= 1e-15;
    // the O(N^2) imbalance enumeration is only needed when the central block
    // is populated; corner-only states work at any bath size
    const DeltaDistribution dist = inner_empty ? DeltaDistribution{} : delta_distribution(p);

    std::vector<TwoQubitState> out;
    out.reserve(times.size());
    for (double t : times) {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 0) = rho0(0, 0);
        m(3, 3) = rho0(3, 3);
        const std::complex<double> r14 = rho0(0, 3) * detail::rho14_evolution_factor(p, t);
        m(0, 3) = r14;
        m(3, 0) = std::conj(r14);

        Eigen::Matrix2cd inner = Eigen::Matrix2cd::Zero();
        for (const auto& e : dist.entries) {
            const PseudoSpinU u = u2_elements(p, e.d.value(), t);
            Eigen::Matrix2cd U{{u.u22, u.u23}, {u.u23, u.u33}};
            inner += e.weight * (U * inner0 * U.adjoint());
        }
        m(1, 1) = inner(0, 0);
        m(1, 2) = inner(0, 1);
        m(2, 1) = inner(1, 0);
        m(2, 2) = inner(1, 1);

        TwoQubitState state(m);
        state.require_valid();
        out.push_back(std::move(state));
    }
    return out;
}

// Wootters concurrence. For block-form states the spin-flip spectrum has
// closed-form square roots, which are evaluated directly: the eigensolver
// route loses sqrt(eps) ~ 1e-8 whenever one of them approaches zero. General
// states go through the Hermitian form sqrt(rho) rho~ sqrt(rho), whose
// eigenvalues coincide with those of rho rho~.
inline double concurrence(const TwoQubitState& state) {
    using Matrix = Eigen::Matrix4cd;
    const Matrix& rho = state.matrix();

    if (state.block_form(1e-13)) {
        const double outer = std::sqrt(std::max(0.0, rho(0, 0).real() * rho(3, 3).real()));
        const double outer_coh = std::abs(rho(0, 3));
        const double inner = std::sqrt(std::max(0.0, rho(1, 1).real() * rho(2, 2).real()));
        const double inner_coh = std::abs(rho(1, 2));
        const double roots[4] = {outer + outer_coh, std::abs(outer - outer_coh), inner + inner_coh,
                                 std::abs(inner - inner_coh)};
        double sum = 0.0, top = 0.0;
        for (double r : roots) {
            sum += r;
            top = std::max(top, r);
        }
        return std::max(0.0, 2.0 * top - sum);
    }

    Matrix yy = Matrix::Zero();  // sigma_y x sigma_y in the |-->..|++> ordering
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Matrix flipped = yy * rho.conjugate() * yy;

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
    Eigen::Vector4d vals = es.eigenvalues();
    // Eigenvalues at the noise floor must be flushed to zero, or their square
    // roots inject sqrt(eps) ~ 1e-8 junk into sqrt(rho).
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, vals.maxCoeff());
    for (int i = 0; i < 4; ++i) {
        if (vals(i) < -1e-10) throw std::invalid_argument("concurrence: state has a negative eigenvalue");
        vals(i) = vals(i) < floor ? 0.0 : vals(i);
    }
    const Matrix sqrt_rho =
        es.eigenvectors() * vals.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

    Eigen::SelfAdjointEigenSolver<Matrix> es2(sqrt_rho * flipped * sqrt_rho);
    Eigen::Vector4d lam = es2.eigenvalues();  // ascending
    const double lam_floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, lam.maxCoeff());
    double sum = 0.0, top = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (lam(i) < -1e-10) throw std::invalid_argument("concurrence: spin-flipped spectrum is negative");
        const double root = std::sqrt(lam(i) < lam_floor ? 0.0 : lam(i));
        sum += root;
        top = std::max(top, root);
    }
    return std::max(0.0, 2.0 * top - sum);
}

// Gaussian decay scale of the outer coherence, cosh(h beta / 2)/|gamma|.
// With the 1/N coupling the decay disappears in the large-N limit, which is
// reported as infinity.
inline double decoherence_time(const ModelParams& p) {
    if (p.gamma == 0.0) return std::numeric_limits<double>::infinity();
    if (p.scaling == CouplingScaling::LinearN) return std::numeric_limits<double>::infinity();
    return std::cosh(p.h_beta() / 2.0) / std::abs(p.gamma);
}

}  // namespace spintrace
