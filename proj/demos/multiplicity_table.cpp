// Exact combinatorics tour: multiplicity ladder for a handful of spins, the
// integer sum rules, and the recombination of two groups checked against the
// direct formula.

#include <iostream>

#include "spintrace/collective.hpp"
#include "spintrace/wigner.hpp"

using namespace spintrace;

int main() {
    const int n = 8;
    std::cout << "total-spin multiplicities for " << n << " spins\n";
    for (HalfInt j : allowed_j(n))
        std::cout << "  j = " << to_string(j) << "  nu = " << multiplicity(n, j) << "\n";

    std::cout << "\nsum rules:\n";
    for (const auto& check : identity_report(n).checks)
        std::cout << "  " << check.name << ": " << check.lhs << " = " << check.rhs << "  "
                  << (check.pass ? "ok" : "BROKEN") << "\n";

    std::cout << "\nrecombining 3 + 5 spins:\n";
    const auto report = verify_decomposition(3, 5);
    for (const auto& row : report.rows)
        std::cout << "  J = " << to_string(row.total_j) << "  sum = " << row.rhs
                  << "  direct = " << row.expected << "  " << (row.pass ? "ok" : "BROKEN") << "\n";
    return report.all_pass() ? 0 : 1;
}
