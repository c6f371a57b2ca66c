#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace spintrace {

// Which combination of the two baths' z angular momenta the bath field acts
// on: H_B = h (J_z - Jz') or h (J_z + Jz').
enum class BathType { DeltaZ, SigmaZ };

// Divisor applied to the qubit-bath coupling: gamma / sqrt(N) or gamma / N.
enum class CouplingScaling { SqrtN, LinearN };

inline std::string to_string(BathType b) { return b == BathType::DeltaZ ? "deltaz" : "sigmaz"; }
inline std::string to_string(CouplingScaling s) { return s == CouplingScaling::SqrtN ? "sqrtn" : "linearn"; }

struct ModelParams {
    double lambda = 0.0;  // qubit-qubit XY coupling
    double delta = 0.0;   // qubit-qubit Ising coupling
    double gamma = 0.0;   // qubit-bath coupling (before scaling)
    double mu = 0.0;      // field on the qubits
    double h = 0.0;       // field on the baths
    double beta = 0.0;    // inverse temperature, >= 0
    int n_bath = 1;       // spins per bath
    BathType bath_type = BathType::DeltaZ;
    CouplingScaling scaling = CouplingScaling::SqrtN;

    double scaled_coupling() const {
        return scaling == CouplingScaling::SqrtN ? gamma / std::sqrt(static_cast<double>(n_bath))
                                                 : gamma / static_cast<double>(n_bath);
    }

    // h and beta are stored separately; only their product enters thermal weights.
    double h_beta() const { return h * beta; }

    void validate() const {
        if (n_bath < 1) throw std::invalid_argument("ModelParams: n_bath must be >= 1");
        if (beta < 0.0) throw std::invalid_argument("ModelParams: beta must be >= 0");
        for (double v : {lambda, delta, gamma, mu, h, beta})
            if (!std::isfinite(v)) throw std::invalid_argument("ModelParams: couplings must be finite");
    }
};

}  // namespace spintrace
