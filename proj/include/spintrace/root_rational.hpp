#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spintrace/exact.hpp"

namespace spintrace {

// Exact value sign * sqrt(p/q). Squares of angular momentum coupling
// coefficients are rational, so carrying the radicand exactly keeps every
// identity check in integer arithmetic; floats only appear in to_float().
class RootRational {
public:
    RootRational() = default;  // zero

    RootRational(int sign, BigRational radicand) : sign_(sign), radicand_(std::move(radicand)) {
        if (radicand_ < 0) throw std::invalid_argument("RootRational: radicand must be nonnegative");
        if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("RootRational: sign must be -1, 0 or +1");
        if (radicand_ == 0) sign_ = 0;
        if (sign_ == 0) radicand_ = 0;
    }

    static RootRational zero() { return RootRational(); }

    int sign() const { return sign_; }
    const BigRational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    // sign^2 * (p/q): the exact square.
    BigRational square() const { return sign_ == 0 ? BigRational(0) : radicand_; }

    double to_float() const { return sign_ * std::sqrt(to_double(radicand_)); }

    RootRational negated() const { return RootRational(-sign_, radicand_); }
    friend RootRational operator-(const RootRational& r) { return r.negated(); }

    friend bool operator==(const RootRational& a, const RootRational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const RootRational& a, const RootRational& b) { return !(a == b); }

private:
    int sign_ = 0;
    BigRational radicand_ = 0;
};

inline std::string to_string(const RootRational& r) {
    if (r.is_zero()) return "0";
    std::ostringstream os;
    os << (r.sign() < 0 ? "-" : "+") << "sqrt(" << boost::multiprecision::numerator(r.radicand()) << "/"
       << boost::multiprecision::denominator(r.radicand()) << ")";
    return os.str();
}

}  // namespace spintrace
