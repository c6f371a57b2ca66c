#pragma once

// Umbrella header: exact collective-spin combinatorics, Wigner 3j symbols,
// closed-form two-qubit spin-bath dynamics, thermodynamic limits, and the
// brute-force crosscheck machinery.

#include "spintrace/collective.hpp"
#include "spintrace/dynamics.hpp"
#include "spintrace/erfcx.hpp"
#include "spintrace/exact.hpp"
#include "spintrace/half_int.hpp"
#include "spintrace/limits.hpp"
#include "spintrace/model.hpp"
#include "spintrace/oracle.hpp"
#include "spintrace/quadrature.hpp"
#include "spintrace/root_rational.hpp"
#include "spintrace/summation.hpp"
#include "spintrace/time_series.hpp"
#include "spintrace/two_qubit.hpp"
#include "spintrace/wigner.hpp"
