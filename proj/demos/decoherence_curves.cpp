// Minimal tour of the dynamics API: evolve a corner Bell state against
// thermal baths, print the coherence, its concurrence and the large-N
// Gaussian envelope side by side.

#include <cstdio>
#include <vector>

#include "spintrace/dynamics.hpp"
#include "spintrace/limits.hpp"

using namespace spintrace;

int main() {
    ModelParams params;
    params.n_bath = 100;
    params.gamma = 2.0;
    params.mu = 4.0;
    params.h = 1.0;
    params.beta = 1.0;

    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(1.5 * i / 20.0);

    const auto states = evolve(params, TwoQubitState::bell_outer(), times);

    std::printf("decay time tau_d = %.6f\n", decoherence_time(params));
    std::printf("%8s %14s %14s %14s\n", "t", "re rho14/rho0", "concurrence", "envelope");
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::printf("%8.3f %14.6f %14.6f %14.6f\n", times[i], 2.0 * states[i](0, 3).real(),
                    concurrence(states[i]), gaussian_envelope(params, times[i]));
    }
    return 0;
}
