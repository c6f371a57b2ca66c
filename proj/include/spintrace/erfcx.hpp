#pragma once

#include <cmath>
#include <stdexcept>

namespace spintrace {

namespace detail {

// Rational approximations for the error-function family on three ranges,
// coefficients from W. J. Cody's SPECFUN (netlib). Max relative error of the
// scaled function is a few ulps across the nonnegative axis.
inline constexpr double kErfA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                                    3209.37758913846947, 0.185777706184603153};
inline constexpr double kErfB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                                    2844.23683343917062};
inline constexpr double kErfC[9] = {0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                                    298.635138197400131,  881.95222124176909,  1712.04761263407058,
                                    2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
inline constexpr double kErfD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                                    1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                                    3439.36767414372164, 1230.33935480374942};
inline constexpr double kErfP[6] = {0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
                                    0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
inline constexpr double kErfQ[5] = {2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
                                    0.0605183413124413191, 0.00233520497626869185};

inline constexpr double kInvSqrtPi = 0.56418958354775628695;

}  // namespace detail

// Scaled complementary error function e^{x^2} erfc(x) for x >= 0, without
// the overflow of the two separate factors.
inline double erfcx(double x) {
    if (!(x >= 0.0)) throw std::domain_error("erfcx: defined here for x >= 0");
    using namespace detail;

    if (x <= 0.46875) {
        const double ysq = x > 1.11e-16 ? x * x : 0.0;
        double xnum = kErfA[4] * ysq;
        double xden = ysq;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + kErfA[i]) * ysq;
            xden = (xden + kErfB[i]) * ysq;
        }
        const double erf = x * (xnum + kErfA[3]) / (xden + kErfB[3]);
        return std::exp(ysq) * (1.0 - erf);
    }

    if (x <= 4.0) {
        double xnum = kErfC[8] * x;
        double xden = x;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + kErfC[i]) * x;
            xden = (xden + kErfD[i]) * x;
        }
        return (xnum + kErfC[7]) / (xden + kErfD[7]);
    }

    if (x >= 6.71e7) return kInvSqrtPi / x;  // tail correction below epsilon

    const double ysq = 1.0 / (x * x);
    double xnum = kErfP[5] * ysq;
    double xden = ysq;
    for (int i = 0; i < 4; ++i) {
        xnum = (xnum + kErfP[i]) * ysq;
        xden = (xden + kErfQ[i]) * ysq;
    }
    const double r = ysq * (xnum + kErfP[4]) / (xden + kErfQ[4]);
    return (kInvSqrtPi - r) / x;
}

}  // namespace spintrace
