#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "spintrace/exact.hpp"
#include "spintrace/half_int.hpp"
#include "spintrace/summation.hpp"

namespace spintrace {

// Rows of the cached Pascal triangle. Larger n falls back to the exact
// multiplicative product, so binomial() works for any n >= 0.
inline constexpr int kPascalRows = 512;

namespace detail {

inline const std::vector<std::vector<BigCount>>& pascal_table() {
    static const std::vector<std::vector<BigCount>> table = [] {
        std::vector<std::vector<BigCount>> t(kPascalRows);
        for (int n = 0; n < kPascalRows; ++n) {
            t[n].resize(static_cast<std::size_t>(n) + 1);
            t[n][0] = 1;
            t[n][static_cast<std::size_t>(n)] = 1;
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace detail

// C(n, k), exact; 0 outside 0 <= k <= n.
inline BigCount binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (n < kPascalRows) return detail::pascal_table()[n][static_cast<std::size_t>(k)];
    if (k > n - k) k = n - k;
    BigCount c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact at every step
    }
    return c;
}

// Total-spin values j that occur for n spin-1/2 sites: kappa, kappa+1, ..., n/2
// with kappa = 0 (n even) or 1/2 (n odd).
inline std::vector<HalfInt> allowed_j(int n_spins) {
    if (n_spins < 1) throw std::invalid_argument("allowed_j: need at least one spin");
    std::vector<HalfInt> js;
    js.reserve(static_cast<std::size_t>(n_spins / 2) + 1);
    for (int tj = n_spins % 2; tj <= n_spins; tj += 2) js.push_back(HalfInt::from_twice(tj));
    return js;
}

// Number of spin-j irreducible blocks in the n-fold product of spin-1/2
// spaces: C(n, n/2 - j) - C(n, n/2 - j - 1).
inline BigCount multiplicity(int n_spins, HalfInt j) {
    if (n_spins < 1) throw std::invalid_argument("multiplicity: need at least one spin");
    const int twice_r = n_spins - j.twice();  // 2*(n/2 - j)
    if (j.twice() < 0 || twice_r < 0 || twice_r % 2 != 0)
        throw std::invalid_argument("multiplicity: j = " + to_string(j) + " is not in the allowed range for N = " +
                                    std::to_string(n_spins));
    const int r = twice_r / 2;
    return binomial(n_spins, r) - binomial(n_spins, r - 1);
}

// Trace of an operator diagonal in the |j, m> basis with matrix elements
// weight(j, m): sum_j nu(N, j) sum_m weight(j, m). Multiplicities are exact;
// the accumulation is compensated double precision.
template <class G>
std::complex<double> collective_trace(int n_spins, G&& weight) {
    KahanSum<std::complex<double>> acc;
    for (HalfInt j : allowed_j(n_spins)) {
        const double nu = to_double(multiplicity(n_spins, j));
        for (int tm = -j.twice(); tm <= j.twice(); tm += 2)
            acc += nu * std::complex<double>(weight(j, HalfInt::from_twice(tm)));
    }
    return acc.value();
}

// Same trace evaluated in the product (computational) basis, where only the
// total z-projection m = k - N/2 matters: sum_k C(N, k) diag(k - N/2).
template <class Fn>
std::complex<double> computational_trace(int n_spins, Fn&& diag) {
    KahanSum<std::complex<double>> acc;
    for (int k = 0; k <= n_spins; ++k) {
        const double deg = to_double(binomial(n_spins, k));
        acc += deg * std::complex<double>(diag(HalfInt::from_twice(2 * k - n_spins)));
    }
    return acc.value();
}

struct IdentityCheck {
    std::string name;
    BigCount lhs;
    BigCount rhs;
    bool pass = false;
};

struct IdentityReport {
    int n_spins = 0;
    std::array<IdentityCheck, 4> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Exact multiplicity sum rules:
//   (a) sum_j nu            = C(N, floor(N/2))
//   (b) sum_j (2j+1) nu     = 2^N
//   (c) sum_j nu^2          = (2N)! / ((N+1) (N!)^2)   (a Catalan number)
//   (d) every nu on the allowed range is strictly positive
// Everything is integer arithmetic; pass means equality, not closeness.
inline IdentityReport identity_report(int n_spins) {
    IdentityReport report;
    report.n_spins = n_spins;

    BigCount sum_nu = 0, sum_dim = 0, sum_sq = 0;
    BigCount min_nu;
    bool first = true;
    for (HalfInt j : allowed_j(n_spins)) {
        const BigCount nu = multiplicity(n_spins, j);
        sum_nu += nu;
        sum_dim += BigCount(j.twice() + 1) * nu;
        sum_sq += nu * nu;
        if (first || nu < min_nu) min_nu = nu;
        first = false;
    }

    const BigCount count_rhs = binomial(n_spins, n_spins / 2);
    const BigCount dim_rhs = BigCount(1) << n_spins;
    const BigCount central = binomial(2 * n_spins, n_spins);
    if (central % (n_spins + 1) != 0)
        throw std::logic_error("identity_report: central binomial not divisible by N + 1");
    const BigCount catalan = central / (n_spins + 1);

    report.checks[0] = {"sum nu = C(N, floor(N/2))", sum_nu, count_rhs, sum_nu == count_rhs};
    report.checks[1] = {"sum (2j+1) nu = 2^N", sum_dim, dim_rhs, sum_dim == dim_rhs};
    report.checks[2] = {"sum nu^2 = Catalan(N)", sum_sq, catalan, sum_sq == catalan};
    report.checks[3] = {"all nu > 0", min_nu, BigCount(1), min_nu >= 1};
    return report;
}

}  // namespace spintrace
