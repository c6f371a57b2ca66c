#pragma once

#include <complex>

namespace spintrace {

// Compensated (Kahan) accumulator. Works for double and std::complex<double>;
// complex compensation happens per component through complex arithmetic.
template <class T>
class KahanSum {
public:
    void add(const T& v) {
        const T y = v - comp_;
        const T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    KahanSum& operator+=(const T& v) {
        add(v);
        return *this;
    }
    const T& value() const { return sum_; }

private:
    T sum_{};
    T comp_{};
};

}  // namespace spintrace
