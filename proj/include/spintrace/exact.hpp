#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spintrace {

// Exact state counts / multiplicities. Nonnegative by construction in all
// counting code; signed storage lets intermediate differences be expressed.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, always kept in lowest terms with positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

// Lossless-as-possible conversions. Values far beyond double range come back
// as +/-inf rather than throwing; callers that care check std::isfinite.
inline double to_double(const BigCount& v) {
    if (v == 0) return 0.0;
    const bool neg = v < 0;
    BigCount a = neg ? BigCount(-v) : v;
    const std::size_t bits = boost::multiprecision::msb(a);
    int shift = 0;
    if (bits > 1000) {
        shift = static_cast<int>(bits - 1000);
        a >>= shift;
    }
    const double d = std::ldexp(a.convert_to<double>(), shift);
    return neg ? -d : d;
}

inline double to_double(const BigRational& r) {
    BigCount num = boost::multiprecision::numerator(r);
    const BigCount& den = boost::multiprecision::denominator(r);
    if (num == 0) return 0.0;
    const bool neg = num < 0;
    if (neg) num = -num;

    const std::size_t bn = boost::multiprecision::msb(num);
    const std::size_t bd = boost::multiprecision::msb(den);
    int sn = bn > 500 ? static_cast<int>(bn - 500) : 0;
    int sd = bd > 500 ? static_cast<int>(bd - 500) : 0;
    const double dn = BigCount(num >> sn).convert_to<double>();
    const double dd = BigCount(den >> sd).convert_to<double>();
    const double q = std::ldexp(dn / dd, sn - sd);
    return neg ? -q : q;
}

// Natural log of a positive big integer, good to ~1e-15 relative.
inline double log_value(const BigCount& v) {
    if (v <= 0) throw std::domain_error("log_value: argument must be positive");
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits <= 900) return std::log(v.convert_to<double>());
    const int shift = static_cast<int>(bits - 900);
    return std::log(BigCount(v >> shift).convert_to<double>()) + shift * std::numbers::ln2;
}

}  // namespace spintrace
