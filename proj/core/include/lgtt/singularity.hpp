#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lgtt/poly.hpp"

namespace lgtt {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Milnor algebra O/J_f with its monomial basis under grevlex.
/// Laurent input is handled by clearing denominators of the logarithmic
/// derivatives and saturating with an auxiliary inverse variable.
struct MilnorAlgebra {
    LaurentPolynomial source;
    std::vector<std::string> work_vars;            // possibly vars + saturation variable
    std::vector<LaurentPolynomial> groebner;       // reduced basis of the Jacobi ideal
    std::vector<ExponentVector> monomial_basis;    // standard monomials (work_vars length)
    bool finite = false;
    std::size_t mu = 0;

    /// Normal form of a polynomial class, coefficients on the monomial basis.
    std::vector<GaussianRational> reduce(const LaurentPolynomial& g) const;
    LaurentPolynomial normal_form_poly(const LaurentPolynomial& g) const;
    std::string basis_string() const;
};

MilnorAlgebra milnor_algebra(const LaurentPolynomial& f);

/// Matrix of multiplication by [g] in the monomial basis; column a holds the
/// normal form of g * basis_a. Exact, returned as complex double.
CMatrix multiplication_matrix(const MilnorAlgebra& algebra, const LaurentPolynomial& g);
std::vector<std::vector<GaussianRational>> multiplication_matrix_exact(
    const MilnorAlgebra& algebra, const LaurentPolynomial& g);

/// Argument-principle count of critical points of a one-variable polynomial
/// inside the disk |z - center| < radius (with multiplicity).
/// Throws when f' vanishes too close to the boundary circle.
long milnor_number_disk(const CPoly& f, std::complex<double> center, double radius,
                        double margin = 1e-9);

/// One-variable Morse critical data (used by the residue pairing and thimbles).
struct Critical1D {
    std::vector<std::complex<double>> points;
    std::vector<std::complex<double>> values;
    std::vector<std::complex<double>> hessians;  // f''(p_a)
    bool morse = true;
};

Critical1D critical_points_1d(const CPoly& f, double newton_tol = 1e-13);

/// Residue pairing on the Milnor algebra of a one-variable Morse family
/// member: eta(g,h) = sum_a g(p_a) h(p_a) / f''(p_a), in the given basis.
CMatrix residue_pairing(const DeformationFamily& family,
                        const std::vector<std::complex<double>>& t,
                        const std::vector<CPoly>& basis);

/// Basis from a MilnorAlgebra for residue computations (univariate).
std::vector<CPoly> cpoly_basis(const MilnorAlgebra& algebra);

struct ModuliCount {
    long n = 0, d = 0;
    Integer moduli_dim;      // hypersurface moduli dimension
    Integer marginal_count;  // marginal directions in the unfolding
    bool exceptional = false;  // the (4,4) case where the two differ
};

ModuliCount moduli_count(long n, long d);
Integer moduli_dimension(long n, long d);
Integer marginal_count(long n, long d);

/// mu(W) = prod (1/q_i - 1) for quasi-homogeneous W; exact rational oracle.
std::optional<Integer> milnor_from_weights(const LaurentPolynomial& w);

}  // namespace lgtt
