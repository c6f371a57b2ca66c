#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "spintrace/erfcx.hpp"
#include "spintrace/model.hpp"
#include "spintrace/quadrature.hpp"
#include "spintrace/summation.hpp"

namespace spintrace {

// Large-N envelope of |rho14(t)/rho14(0)| for the DeltaZ bath with sqrt(N)
// coupling: exp(-gamma^2 t^2 / cosh^2(h beta / 2)).
inline double gaussian_envelope(const ModelParams& p, double t) {
    const double sech = 1.0 / std::cosh(p.h_beta() / 2.0);
    const double gt = p.gamma * t * sech;
    return std::exp(-gt * gt);
}

// Large-N limit of the SigmaZ-bath coherence with the 1/N coupling. Taking
// N -> infinity in the finite-N product gives the pure phase
// exp(i t [4 mu - 2 gamma tanh(h beta / 2)]); the magnitude is exactly 1.
inline std::complex<double> coherent_phase(const ModelParams& p, double t) {
    return std::polar(1.0, t * (4.0 * p.mu - 2.0 * p.gamma * std::tanh(p.h_beta() / 2.0)));
}

// Default node budget: the integrand oscillates like sin(t sqrt(...)), so
// the rule grows with |gamma| t before the convergence doubling kicks in.
inline QuadratureSpec default_quadrature(double gamma, double t) {
    const double suggested = 12.0 * (1.0 + std::abs(gamma) * t);
    int n = std::max(64, static_cast<int>(std::ceil(suggested)));
    if (n % 2 != 0) ++n;  // symmetric rules without a node at the origin
    return QuadratureSpec{n};
}

namespace detail {

inline double f_infinite_eval(double lambda, double gamma, double t, int nodes) {
    const auto rule = hermite_rule(nodes);
    KahanSum<double> acc;
    for (int i = 0; i < rule->node_count; ++i) {
        const double u = rule->nodes[static_cast<std::size_t>(i)];
        const double denom = 4.0 * lambda * lambda + gamma * gamma * u * u;
        if (denom == 0.0) continue;  // lambda = 0 node at the origin contributes nothing
        const double s = std::sin(t * std::sqrt(denom));
        acc += rule->weights[static_cast<std::size_t>(i)] * u * u * s * s / denom;
    }
    return 2.0 * gamma * gamma / std::sqrt(std::numbers::pi) * acc.value();
}

}  // namespace detail

// Infinite-size, infinite-temperature inner-block trace
//   f(t) = (2 gamma^2/sqrt(pi)) Int e^{-u^2} u^2 sin^2(t sqrt(4 l^2 + g^2 u^2))
//          / (4 l^2 + g^2 u^2) du,
// evaluated with a Gauss-Hermite rule whose size is doubled until two
// successive values agree to 1e-9.
inline double f_infinite_n(double lambda, double gamma, double t, QuadratureSpec spec) {
    spec.validate();
    if (gamma == 0.0) return 0.0;
    double prev = detail::f_infinite_eval(lambda, gamma, t, spec.node_count);
    for (int n = 2 * spec.node_count; n <= (1 << 20); n *= 2) {
        const double cur = detail::f_infinite_eval(lambda, gamma, t, n);
        if (std::abs(cur - prev) <= 1e-9) return cur;
        prev = cur;
    }
    throw std::runtime_error("f_infinite_n: quadrature failed to converge under node doubling");
}

inline double f_infinite_n(double lambda, double gamma, double t) {
    return f_infinite_n(lambda, gamma, t, default_quadrature(gamma, t));
}

// Long-time average of f: 1 - 2 sqrt(pi) (lambda/gamma) e^{4 lambda^2/gamma^2}
// erfc(2 lambda/gamma), written through erfcx so large lambda/gamma cannot
// overflow. Even in both couplings, hence the absolute values.
inline double f_asymptote(double lambda, double gamma) {
    if (gamma == 0.0) throw std::domain_error("f_asymptote: gamma must be nonzero");
    const double r = 2.0 * std::abs(lambda) / std::abs(gamma);
    return 1.0 - std::sqrt(std::numbers::pi) * r * erfcx(r);
}

// Asymptotic concurrence 1 - f_asymptote, increasing in |lambda/gamma| from 0
// toward 1.
inline double c_infinity(double lambda, double gamma) {
    if (gamma == 0.0) throw std::domain_error("c_infinity: gamma must be nonzero");
    const double r = 2.0 * std::abs(lambda) / std::abs(gamma);
    return std::sqrt(std::numbers::pi) * r * erfcx(r);
}

}  // namespace spintrace
