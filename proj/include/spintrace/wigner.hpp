#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spintrace/collective.hpp"
#include "spintrace/exact.hpp"
#include "spintrace/half_int.hpp"
#include "spintrace/root_rational.hpp"

namespace spintrace {

namespace detail {

// Factorials are memoized once up to a fixed cap; anything larger than the
// desk-scale quantum numbers this library targets is rejected loudly.
inline constexpr int kFactorialCap = 256;

inline const BigCount& factorial(int n) {
    static const std::vector<BigCount> table = [] {
        std::vector<BigCount> t(kFactorialCap);
        t[0] = 1;
        for (int i = 1; i < kFactorialCap; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n >= kFactorialCap)
        throw std::invalid_argument("factorial: argument out of the supported range");
    return table[static_cast<std::size_t>(n)];
}

inline int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace detail

struct ThreeJArgs {
    HalfInt j1, j2, j3;
    HalfInt m1, m2, m3;

    bool pairs_valid() const { return valid_jm(j1, m1) && valid_jm(j2, m2) && valid_jm(j3, m3); }

    bool triangle_ok() const {
        const int a = j1.twice(), b = j2.twice(), c = j3.twice();
        return std::abs(a - b) <= c && c <= a + b && (a + b + c) % 2 == 0;
    }

    bool selection_ok() const {
        return pairs_valid() && (m1 + m2 + m3).twice() == 0 && triangle_ok();
    }
};

// Exact Wigner 3j symbol. The single-sum (Racah) form is evaluated entirely
// in big-integer rationals: the alternating sum S is rational and the
// prefactor is the square root of a rational R, so the symbol is
// sign(phase * S) * sqrt(S^2 * R).
inline RootRational wigner3j(const ThreeJArgs& a) {
    if (!a.pairs_valid()) throw std::invalid_argument("wigner3j: malformed (j, m) pair");
    if (!a.selection_ok()) return RootRational::zero();

    const int tj1 = a.j1.twice(), tj2 = a.j2.twice(), tj3 = a.j3.twice();
    const int tm1 = a.m1.twice(), tm2 = a.m2.twice(), tm3 = a.m3.twice();

    using detail::factorial;
    const int jjj = (tj1 + tj2 + tj3) / 2;
    BigRational root_sq(factorial((tj1 + tj2 - tj3) / 2) * factorial((tj1 - tj2 + tj3) / 2) *
                            factorial((-tj1 + tj2 + tj3) / 2),
                        factorial(jjj + 1));
    root_sq *= BigRational(factorial((tj1 + tm1) / 2) * factorial((tj1 - tm1) / 2) *
                           factorial((tj2 + tm2) / 2) * factorial((tj2 - tm2) / 2) *
                           factorial((tj3 + tm3) / 2) * factorial((tj3 - tm3) / 2));

    const int k_min = std::max({0, (tj2 - tj3 - tm1) / 2, (tj1 - tj3 + tm2) / 2});
    const int k_max = std::min({(tj1 + tj2 - tj3) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    BigRational sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        const BigCount den = factorial(k) * factorial((tj1 + tj2 - tj3) / 2 - k) *
                             factorial((tj1 - tm1) / 2 - k) * factorial((tj2 + tm2) / 2 - k) *
                             factorial((tj3 - tj2 + tm1) / 2 + k) * factorial((tj3 - tj1 - tm2) / 2 + k);
        if (k % 2 == 0)
            sum += BigRational(1, den);
        else
            sum -= BigRational(1, den);
    }
    if (sum == 0) return RootRational::zero();

    int sign = detail::parity_sign((tj1 - tj2 - tm3) / 2);
    if (sum < 0) sign = -sign;
    return RootRational(sign, root_sq * sum * sum);
}

// Closed form of the symbol whose third column is (0, 0):
// (-1)^(j1 - m1) / sqrt(2 j1 + 1) when j1 = j2 and m2 = -m1, zero otherwise.
inline RootRational wigner3j_zero(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    if (!valid_jm(j1, m1) || !valid_jm(j2, m2))
        throw std::invalid_argument("wigner3j_zero: malformed (j, m) pair");
    if (j1 != j2 || (m1 + m2).twice() != 0) return RootRational::zero();
    const int sign = detail::parity_sign((j1.twice() - m1.twice()) / 2);
    return RootRational(sign, BigRational(1, j1.twice() + 1));
}

// Right-hand side of the multiplicity composition rule for two groups of
// N1 and N2 spins recombined at total spin J:
//   sum over (j1, m1, j2, m2) with m1 + m2 = J of
//     nu(N1, j1) nu(N2, j2) (-1)^(2(j1 - j2 + J)) (2J + 1) [3j(j1 j2 J; m1 m2 -J)]^2
// evaluated exactly; the result is an integer-valued rational.
inline BigRational decomposition_rhs(int n1, int n2, HalfInt total_j) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("decomposition_rhs: group sizes must be positive");
    const int tJ = total_j.twice();
    if (tJ < 0 || tJ > n1 + n2 || (n1 + n2 - tJ) % 2 != 0)
        throw std::invalid_argument("decomposition_rhs: J = " + to_string(total_j) +
                                    " is not an allowed total spin for N = " + std::to_string(n1 + n2));

    const BigCount two_j_plus_1 = tJ + 1;
    BigRational total = 0;
    for (HalfInt j1 : allowed_j(n1)) {
        const BigCount nu1 = multiplicity(n1, j1);
        for (HalfInt j2 : allowed_j(n2)) {
            const BigCount nu2 = multiplicity(n2, j2);
            const int phase_exp = j1.twice() - j2.twice() + tJ;  // exponent of (-1)^{2(j1 - j2 + J)}
            const int phase = detail::parity_sign(((phase_exp % 2) + 2) % 2);
            const BigCount weight = nu1 * nu2 * two_j_plus_1;
            for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2) {
                const int tm2 = tJ - tm1;
                if (tm2 < -j2.twice() || tm2 > j2.twice()) continue;
                const RootRational w = wigner3j({j1, j2, total_j, HalfInt::from_twice(tm1),
                                                 HalfInt::from_twice(tm2), -total_j});
                if (w.is_zero()) continue;
                total += BigRational(phase * weight) * w.square();
            }
        }
    }
    return total;
}

struct DecompositionRow {
    HalfInt total_j;
    BigRational rhs;
    BigCount expected;
    bool pass = false;
};

struct DecompositionReport {
    int n1 = 0;
    int n2 = 0;
    std::vector<DecompositionRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// Checks, exactly and for every allowed J, that the recombination sum above
// reproduces multiplicity(N1 + N2, J).
inline DecompositionReport verify_decomposition(int n1, int n2) {
    DecompositionReport report;
    report.n1 = n1;
    report.n2 = n2;
    for (HalfInt J : allowed_j(n1 + n2)) {
        DecompositionRow row;
        row.total_j = J;
        row.rhs = decomposition_rhs(n1, n2, J);
        row.expected = multiplicity(n1 + n2, J);
        row.pass = boost::multiprecision::denominator(row.rhs) == 1 &&
                   boost::multiprecision::numerator(row.rhs) == row.expected;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace spintrace
