#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spintrace {

// Gauss-Hermite rule: sum_i w_i f(x_i) ~ integral of e^{-x^2} f(x) over the
// real line. Nodes are symmetric about zero, stored largest-first on the
// positive side.
struct HermiteRule {
    int node_count = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Descriptor used by the quadrature-based evaluators; the weight is always
// e^{-u^2} on the whole line.
struct QuadratureSpec {
    int node_count = 64;

    void validate() const {
        if (node_count < 16) throw std::invalid_argument("QuadratureSpec: need at least 16 nodes");
    }
};

namespace detail {

// p_n and p_{n-1} of the orthonormal Hermite family at x, rescaled on the fly;
// ln_scale carries the common factor taken out of both values.
struct HermitePair {
    double pn = 0.0;
    double pnm1 = 0.0;
    double ln_scale = 0.0;
};

class HermiteEvaluator {
public:
    explicit HermiteEvaluator(int n) : n_(n), ca_(static_cast<std::size_t>(n)), cb_(static_cast<std::size_t>(n)) {
        for (int k = 0; k < n; ++k) {
            ca_[static_cast<std::size_t>(k)] = std::sqrt(2.0 / (k + 1));
            cb_[static_cast<std::size_t>(k)] = std::sqrt(static_cast<double>(k) / (k + 1));
        }
    }

    HermitePair operator()(double x) const {
        HermitePair r;
        double prev = 0.0;
        double cur = 0.7511255444649425;  // pi^{-1/4}
        for (int k = 0; k < n_; ++k) {
            const double next = x * ca_[static_cast<std::size_t>(k)] * cur - cb_[static_cast<std::size_t>(k)] * prev;
            prev = cur;
            cur = next;
            if (std::abs(cur) > 1e100 || std::abs(prev) > 1e100) {
                cur *= 1e-100;
                prev *= 1e-100;
                r.ln_scale += 230.2585092994046;  // ln(1e100)
            }
        }
        r.pn = cur;
        r.pnm1 = prev;
        return r;
    }

    int order() const { return n_; }

private:
    int n_;
    std::vector<double> ca_, cb_;
};

// Safeguarded Newton inside a sign-change bracket of p_n.
inline HermitePair polish_root(const HermiteEvaluator& eval, double lo, double hi, double& root) {
    const int n = eval.order();
    double xl = lo, xh = hi;
    {
        const double flo = eval(lo).pn;
        if (flo > 0.0) std::swap(xl, xh);  // keep f(xl) < 0 < f(xh)
    }
    double rts = 0.5 * (lo + hi);
    double dxold = std::abs(hi - lo), dx = dxold;
    HermitePair e = eval(rts);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = e.pn;
        const double df = std::sqrt(2.0 * n) * e.pnm1;
        const bool newton_ok = (((rts - xh) * df - f) * ((rts - xl) * df - f) < 0.0) &&
                               (std::abs(2.0 * f) <= std::abs(dxold * df));
        dxold = dx;
        if (newton_ok) {
            dx = f / df;
            const double tmp = rts;
            rts -= dx;
            if (tmp == rts) break;
        } else {
            dx = 0.5 * (xh - xl);
            rts = xl + dx;
            if (rts == xl) break;
        }
        e = eval(rts);
        if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(rts))) break;
        if (e.pn < 0.0)
            xl = rts;
        else
            xh = rts;
    }
    root = rts;
    return e;
}

inline double rule_weight(int n, const HermitePair& at_root) {
    // w = 1 / (n p_{n-1}^2); p_{n-1} = pnm1 * e^{ln_scale}
    const double ln_pnm1 = std::log(std::abs(at_root.pnm1)) + at_root.ln_scale;
    return std::exp(-std::log(static_cast<double>(n)) - 2.0 * ln_pnm1);
}

inline HermiteRule build_hermite_rule(int n) {
    if (n < 1) throw std::invalid_argument("hermite_rule: node count must be positive");
    HermiteRule rule;
    rule.node_count = n;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);

    const HermiteEvaluator eval(n);
    const int positive = n / 2;  // strictly positive zeros; odd n adds one at the origin
    const double edge = std::sqrt(2.0 * n + 1.0);

    // Scan from beyond the largest zero toward the origin, stepping a quarter
    // of the local oscillation wavelength, and bracket every sign change.
    std::vector<std::pair<double, double>> brackets;
    for (double refine = 1.0; refine <= 8.0; refine *= 2.0) {
        brackets.clear();
        double x = edge + 1.0;
        double sign_prev = eval(x).pn > 0.0 ? 1.0 : -1.0;
        while (x > 0.0 && static_cast<int>(brackets.size()) < positive) {
            const double wavenumber = std::sqrt(std::max(2.0 * n + 1.0 - x * x, 4.0));
            double x_next = x - 0.25 * 3.141592653589793 / (wavenumber * refine);
            if (x_next < 0.0) x_next = 0.0;
            const double f_next = eval(x_next).pn;
            const double sign_next = f_next > 0.0 ? 1.0 : (f_next < 0.0 ? -1.0 : 0.0);
            if (sign_next == 0.0) {
                brackets.emplace_back(x_next, x_next);
                sign_prev = -sign_prev;
            } else {
                if (sign_next != sign_prev) brackets.emplace_back(x_next, x);
                sign_prev = sign_next;
            }
            x = x_next;
        }
        if (static_cast<int>(brackets.size()) == positive) break;
    }
    if (static_cast<int>(brackets.size()) != positive)
        throw std::runtime_error("hermite_rule: failed to bracket all positive zeros");

    for (int i = 0; i < positive; ++i) {
        double root = 0.0;
        HermitePair at_root;
        const auto [lo, hi] = brackets[static_cast<std::size_t>(i)];
        if (lo == hi) {
            root = lo;
            at_root = eval(root);
        } else {
            at_root = polish_root(eval, lo, hi, root);
        }
        const double w = rule_weight(n, at_root);
        rule.nodes[static_cast<std::size_t>(i)] = root;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -root;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 != 0) {
        const auto at_zero = eval(0.0);
        rule.nodes[static_cast<std::size_t>(positive)] = 0.0;
        rule.weights[static_cast<std::size_t>(positive)] = rule_weight(n, at_zero);
    }
    return rule;
}

}  // namespace detail

// Cached rules; tables are immutable once built, so concurrent evaluation
// over shared rules is safe.
inline std::shared_ptr<const HermiteRule> hermite_rule(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const HermiteRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_shared<const HermiteRule>(detail::build_hermite_rule(n))).first;
    return it->second;
}

}  // namespace spintrace
