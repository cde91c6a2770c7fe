#include <Eigen/SparseCholesky>
#include <algorithm>
#include <random>
#include <stdexcept>

#include "lgtt/spectral.hpp"

namespace lgtt {

// Shift-invert block subspace iteration. The operator is positive
// semi-definite, so H - sigma I with sigma < 0 is positive definite and a
// sparse Cholesky factorization applies. Multiplicities are resolved by the
// block; the reduction order is fixed, so runs are deterministic per seed.
SpectralResult lowest_eigenpairs(const AssembledOperator& op, int k, double tol, unsigned seed,
                                 int max_outer) {
    require_quadratic_selftest();
    const SparseC& h = op.h;
    long dim = h.rows();
    if (k <= 0 || k >= dim) throw std::invalid_argument("bad eigenpair count");
    int block = std::min<long>(dim, k + 6);

    // the spectrum is bounded below by the potential minimum, so a shift just
    // under it keeps H - sigma positive definite without flattening the
    // separation ratios of the low states
    double lap_diag = 1.0 / (op.grid.spacing * op.grid.spacing);
    double pot_min = std::numeric_limits<double>::infinity();
    for (long i = 0; i < dim; ++i)
        pot_min = std::min(pot_min, h.coeff(i, i).real() - lap_diag);
    double sigma = pot_min - 1.0;

    SparseC shifted = h;
    for (long i = 0; i < dim; ++i) shifted.coeffRef(i, i) -= sigma;
    shifted.makeCompressed();
    Eigen::SimplicialLDLT<SparseC, Eigen::Lower> solver;
    solver.compute(shifted);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sparse factorization of the shifted operator failed");

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd x(dim, block);
    for (long j = 0; j < block; ++j)
        for (long i = 0; i < dim; ++i) x(i, j) = std::complex<double>(gauss(rng), gauss(rng));

    Eigen::VectorXd ritz(block);
    std::vector<double> resid(static_cast<std::size_t>(k), 1e300);
    Eigen::MatrixXcd hv;

    int outer = 0;
    for (; outer < max_outer; ++outer) {
        // orthonormalize (thin QR)
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(x);
        x = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, block);
        // apply (H - sigma)^{-1}
        Eigen::MatrixXcd y(dim, block);
        for (int j = 0; j < block; ++j) y.col(j) = solver.solve(x.col(j));
        // Rayleigh-Ritz on the subspace w.r.t. H
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr2(y);
        Eigen::MatrixXcd q = qr2.householderQ() * Eigen::MatrixXcd::Identity(dim, block);
        hv = h * q;
        Eigen::MatrixXcd small = q.adjoint() * hv;
        small = std::complex<double>(0.5, 0.0) * (small + small.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(small);
        Eigen::MatrixXcd rot = es.eigenvectors();
        x = q * rot;
        hv = hv * rot;
        ritz = es.eigenvalues();
        // residuals of the k requested pairs
        bool done = true;
        for (int j = 0; j < k; ++j) {
            double r = (hv.col(j) - ritz(j) * x.col(j)).norm();
            resid[static_cast<std::size_t>(j)] = r / std::max(1.0, std::abs(ritz(j)));
            if (resid[static_cast<std::size_t>(j)] > tol) done = false;
        }
        if (done) break;
    }
    if (outer == max_outer)
        throw std::runtime_error("eigen-iteration did not reach the residual tolerance");

    SpectralResult out;
    out.grid = op.grid;
    out.degree = op.degree;
    long nn = op.grid.interior_count();
    for (int j = 0; j < k; ++j) {
        out.eigenvalues.push_back(ritz(j));
        out.residuals.push_back(resid[static_cast<std::size_t>(j)]);
        FormField f;
        f.degree = op.degree;
        f.grid = op.grid;
        if (op.degree == 1) {
            f.u.assign(nn, 0.0);
            f.v.assign(nn, 0.0);
            for (long i = 0; i < nn; ++i) {
                f.u[i] = x(i, j);
                f.v[i] = x(nn + i, j);
            }
        } else {
            f.u.assign(nn, 0.0);
            for (long i = 0; i < nn; ++i) f.u[i] = x(i, j);
        }
        f.normalize();
        out.eigenfields.push_back(std::move(f));
    }
    return out;
}

}  // namespace lgtt
