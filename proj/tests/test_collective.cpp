#include "doctest.h"

#include <chrono>
#include <complex>
#include <random>
#include <thread>
#include <vector>

#include "spintrace/collective.hpp"

using namespace spintrace;

namespace {

// Independent binomial oracle: plain Pascal recurrence, no shared code with
// the library path.
std::vector<BigCount> pascal_row(int n) {
    std::vector<BigCount> row{1};
    for (int r = 1; r <= n; ++r) {
        std::vector<BigCount> next(static_cast<std::size_t>(r) + 1, 0);
        next[0] = 1;
        next[static_cast<std::size_t>(r)] = 1;
        for (int k = 1; k < r; ++k) next[static_cast<std::size_t>(k)] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return row;
}

// Independent multiplicity oracle: count paths in the branching diagram via
// nu(N, j) = nu(N-1, j-1/2) + nu(N-1, j+1/2).
std::vector<std::vector<BigCount>> branching_table(int n_max) {
    // table[n] indexed by twice_j/1 steps: twice_j = n%2, n%2+2, ..., n
    std::vector<std::vector<BigCount>> table(static_cast<std::size_t>(n_max) + 1);
    table[1] = {BigCount(1)};  // single spin: j = 1/2
    for (int n = 2; n <= n_max; ++n) {
        const auto& prev = table[static_cast<std::size_t>(n - 1)];
        auto prev_nu = [&](int twice_j) -> BigCount {
            if (twice_j < (n - 1) % 2 || twice_j > n - 1) return 0;
            return prev[static_cast<std::size_t>((twice_j - (n - 1) % 2) / 2)];
        };
        std::vector<BigCount> cur;
        for (int tj = n % 2; tj <= n; tj += 2) cur.push_back(prev_nu(tj - 1) + prev_nu(tj + 1));
        table[static_cast<std::size_t>(n)] = std::move(cur);
    }
    return table;
}

// Enumeration oracle for traces of functions of the total z projection:
// walk all 2^N basis states.
template <class Fn>
std::complex<double> enumerate_trace(int n, Fn&& g) {
    std::complex<double> sum = 0.0;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        const int ups = __builtin_popcountll(mask);
        sum += g(HalfInt::from_twice(2 * ups - n));
    }
    return sum;
}

}  // namespace

TEST_SUITE_BEGIN("collective");

TEST_CASE("binomial small values and out-of-range convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial matches the Pascal recurrence oracle") {
    const auto row60 = pascal_row(60);
    for (int k = 0; k <= 60; ++k) CHECK(binomial(60, k) == row60[static_cast<std::size_t>(k)]);
    CHECK(binomial(60, 30).str().size() == 18);

    // Beyond the cached rows the multiplicative fallback must agree too.
    const auto row600 = pascal_row(600);
    for (int k : {0, 1, 7, 123, 300, 599, 600})
        CHECK(binomial(600, k) == row600[static_cast<std::size_t>(k)]);
}

TEST_CASE("allowed_j ladders") {
    auto tw = [](const std::vector<HalfInt>& v) {
        std::vector<int> out;
        for (auto j : v) out.push_back(j.twice());
        return out;
    };
    CHECK(tw(allowed_j(2)) == std::vector<int>{0, 2});
    CHECK(tw(allowed_j(3)) == std::vector<int>{1, 3});
    CHECK(tw(allowed_j(5)) == std::vector<int>{1, 3, 5});
}

TEST_CASE("multiplicity values") {
    CHECK(multiplicity(1, HalfInt::from_twice(1)) == 1);
    CHECK(multiplicity(4, HalfInt(1)) == 3);
    CHECK(multiplicity(4, HalfInt(0)) == 2);
    CHECK(multiplicity(4, HalfInt(2)) == 1);
    CHECK(multiplicity(3, HalfInt::from_twice(1)) == 2);
    CHECK_THROWS_AS(multiplicity(4, HalfInt::from_twice(1)), std::invalid_argument);  // parity mismatch
    CHECK_THROWS_AS(multiplicity(4, HalfInt(3)), std::invalid_argument);              // j > N/2
    CHECK_THROWS_AS(multiplicity(4, HalfInt(-1)), std::invalid_argument);
}

TEST_CASE("multiplicity matches the branching-diagram recurrence up to N = 60") {
    const auto table = branching_table(60);
    for (int n = 1; n <= 60; ++n) {
        const auto js = allowed_j(n);
        REQUIRE(js.size() == table[static_cast<std::size_t>(n)].size());
        for (std::size_t i = 0; i < js.size(); ++i)
            CHECK(multiplicity(n, js[i]) == table[static_cast<std::size_t>(n)][i]);
    }
}

TEST_CASE("stretched multiplet is unique for every N") {
    for (int n = 1; n <= 60; ++n) CHECK(multiplicity(n, HalfInt::from_twice(n)) == 1);
}

TEST_CASE("collective trace examples") {
    auto one = [](HalfInt, HalfInt) { return 1.0; };
    CHECK(collective_trace(2, one).real() == doctest::Approx(4.0).epsilon(1e-14));

    auto just_m = [](HalfInt, HalfInt m) { return m.value(); };
    CHECK(std::abs(collective_trace(3, just_m)) < 1e-14);

    auto m_sq = [](HalfInt, HalfInt m) { return m.value() * m.value(); };
    const auto expected = enumerate_trace(4, [](HalfInt m) { return m.value() * m.value(); });
    CHECK(expected.real() == doctest::Approx(16.0));  // frozen from the enumeration oracle
    CHECK(collective_trace(4, m_sq).real() == doctest::Approx(expected.real()).epsilon(1e-13));
}

TEST_CASE("computational trace examples against the enumeration oracle") {
    auto one = [](HalfInt) { return 1.0; };
    CHECK(computational_trace(2, one).real() == doctest::Approx(4.0));

    auto m_sq = [](HalfInt m) { return m.value() * m.value(); };
    CHECK(computational_trace(2, m_sq).real() == doctest::Approx(2.0));  // 2*(1/2)^2 * 2 states + 0
    for (int n : {1, 2, 3, 4, 8, 12}) {
        const auto expected = enumerate_trace(n, m_sq);
        CHECK(computational_trace(n, m_sq).real() == doctest::Approx(expected.real()).epsilon(1e-13));
    }
}

TEST_CASE("collective and computational traces agree for low-degree polynomials") {
    std::mt19937 rng(7031);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int n = 1; n <= 30; ++n) {
        std::vector<double> c(7);
        for (auto& x : c) x = coeff(rng);
        auto poly = [&](double m) {
            double acc = 0.0, p = 1.0;
            for (double ck : c) {
                acc += ck * p;
                p *= m;
            }
            return acc;
        };
        const auto a = collective_trace(n, [&](HalfInt, HalfInt m) { return poly(m.value()); });
        const auto b = computational_trace(n, [&](HalfInt m) { return poly(m.value()); });
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("identity report: worked N = 3, 4 values") {
    const auto r4 = identity_report(4);
    CHECK(r4.all_pass());
    CHECK(r4.checks[0].lhs == 6);
    CHECK(r4.checks[0].rhs == 6);
    CHECK(r4.checks[1].lhs == 16);
    CHECK(r4.checks[2].lhs == 14);  // Catalan number for N = 4

    const auto r3 = identity_report(3);
    CHECK(r3.all_pass());
    CHECK(r3.checks[0].lhs == 3);
    CHECK(r3.checks[1].lhs == 8);
}

TEST_CASE("identity report passes exactly for N = 1..60, and N = 40 is quick") {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 60; ++n) CHECK(identity_report(n).all_pass());
    const auto n40_start = std::chrono::steady_clock::now();
    CHECK(identity_report(40).all_pass());
    const auto n40_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - n40_start);
    CHECK(n40_ms.count() < 1000);
    (void)start;
}

TEST_CASE("shared tables are safe under concurrent first use") {
    std::vector<std::thread> workers;
    std::vector<BigCount> results(8);
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&results, w] {
            BigCount acc = 0;
            for (int n = 1; n <= 40; ++n)
                for (HalfInt j : allowed_j(n)) acc += multiplicity(n, j);
            results[static_cast<std::size_t>(w)] = acc;
        });
    for (auto& t : workers) t.join();
    for (int w = 1; w < 8; ++w) CHECK(results[static_cast<std::size_t>(w)] == results[0]);
}

TEST_SUITE_END();
