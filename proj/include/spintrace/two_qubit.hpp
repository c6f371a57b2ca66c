#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace spintrace {

// Two-qubit density matrix in the ordered basis {|-->, |-+>, |+->, |++>}
// (indices 0..3). "Outer" refers to the {|-->, |++>} corners, "inner" to the
// central {|-+>, |+->} block; a state is in block form when everything
// outside those two blocks vanishes.
class TwoQubitState {
public:
    using Matrix = Eigen::Matrix4cd;

    TwoQubitState() : rho_(Matrix::Zero()) {}
    explicit TwoQubitState(const Matrix& m) : rho_(m) {}

    static TwoQubitState bell_outer() {  // (|--> + |++>)/sqrt(2)
        Matrix m = Matrix::Zero();
        m(0, 0) = m(3, 3) = m(0, 3) = m(3, 0) = 0.5;
        return TwoQubitState(m);
    }

    static TwoQubitState bell_inner() {  // (|-+> + |+->)/sqrt(2)
        Matrix m = Matrix::Zero();
        m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = 0.5;
        return TwoQubitState(m);
    }

    const Matrix& matrix() const { return rho_; }
    Matrix& matrix() { return rho_; }
    std::complex<double> operator()(int r, int c) const { return rho_(r, c); }

    double hermiticity_error() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }
    double trace_error() const { return std::abs(rho_.trace() - std::complex<double>(1.0)); }

    double min_eigenvalue() const {
        const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

    // True when nothing lives outside the outer corners and the inner block.
    bool block_form(double tol = 1e-12) const {
        static constexpr bool allowed[4][4] = {{true, false, false, true},
                                               {false, true, true, false},
                                               {false, true, true, false},
                                               {true, false, false, true}};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (!allowed[r][c] && std::abs(rho_(r, c)) > tol) return false;
        return true;
    }

    bool is_valid(double herm_tol = 1e-12, double trace_tol = 1e-12, double eig_floor = -1e-10) const {
        return hermiticity_error() <= herm_tol && trace_error() <= trace_tol && min_eigenvalue() >= eig_floor;
    }

    void require_valid(double herm_tol = 1e-12, double trace_tol = 1e-12, double eig_floor = -1e-10) const {
        if (hermiticity_error() > herm_tol) throw std::invalid_argument("TwoQubitState: not Hermitian");
        if (trace_error() > trace_tol) throw std::invalid_argument("TwoQubitState: trace is not 1");
        if (min_eigenvalue() < eig_floor) throw std::invalid_argument("TwoQubitState: negative eigenvalue");
    }

private:
    Matrix rho_;
};

}  // namespace spintrace
