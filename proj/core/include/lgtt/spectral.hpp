#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lgtt/poly.hpp"

namespace lgtt {

using SparseC = Eigen::SparseMatrix<std::complex<double>>;

/// Square Dirichlet lattice on [-R,R]^2, z = x + i y. The operator acts on
/// the interior nodes; the boundary ring carries the (eliminated) Dirichlet
/// condition. h must divide R evenly.
struct SpectralGrid {
    double half_width = 0;  // R
    double spacing = 0;     // h
    long m = 0;             // R/h; lattice is (2m+1)^2, interior (2m-1)^2

    static SpectralGrid make(double R, double h);
    long points_per_side() const { return 2 * m + 1; }
    long interior_per_side() const { return 2 * m - 1; }
    long interior_count() const { return interior_per_side() * interior_per_side(); }
    std::complex<double> interior_point(long k) const;  // row-major over interior nodes
    double cell_measure() const { return spacing * spacing; }
};

/// Degree-p form sampled on the grid: one array for p in {0,2}; the pair
/// (u, v) of dz and dzbar components for p = 1.
///
/// For two complex variables the analogous first-order coupling acts on the
/// component stacks (psi_1, psi_2, psi_1bar, psi_2bar) for 1-forms and on the
/// six 2-form components through the matrix of second derivatives f_ij; only
/// the one-variable operator is discretized here.
struct FormField {
    int degree = 0;
    SpectralGrid grid;
    std::vector<std::complex<double>> u;  // p in {0,2}: the single component
    std::vector<std::complex<double>> v;  // p = 1 only: dzbar component

    std::size_t component_count() const { return degree == 1 ? 2 : 1; }
    double norm() const;
    void normalize();
};

std::complex<double> inner_product(const FormField& a, const FormField& b);

struct SpectralResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<FormField> eigenfields;
    std::vector<double> residuals;    // ||(H - lambda) psi|| / ||psi||
    SpectralGrid grid;
    int degree = 0;
};

struct AssembledOperator {
    SparseC h;
    SpectralGrid grid;
    int degree = 0;
    double potential_scale = 0;  // max |f'|^2 on the grid
    bool resolution_warning = false;
};

/// Twisted Laplacian of a one-variable polynomial (the family member at fixed
/// parameters, tau already folded in):
///   p = 0, 2:  -(1/4) Delta_5pt + |f'(z)|^2
///   p = 1:     [[ -(1/4)Delta + |f'|^2 ,  f''(z) ],
///               [ conj(f''(z))         ,  -(1/4)Delta + |f'|^2 ]] on (u, v).
/// Hermitian by construction. Throws in strict mode when h^2 max|f'|^2 > 0.5.
AssembledOperator assemble_twisted_laplacian(const CPoly& f, int degree, const SpectralGrid& grid,
                                             bool strict = false);

/// k smallest eigenpairs by shift-invert block subspace iteration.
/// Deterministic for a fixed seed.
SpectralResult lowest_eigenpairs(const AssembledOperator& op, int k, double tol = 1e-8,
                                 unsigned seed = 7, int max_outer = 200);

/// Exact harmonic-oscillator ladders for f = t tau x^2 type real models:
/// degree 0: 2 t tau (1 + 2k); degree 1: 2 t tau (3 + 2k).
std::vector<double> oscillator_spectrum_real(double t, double tau, int degree, int k_max);

/// Exact p=1 spectrum of the complex model f = tau z^2: merged ladders
/// 2|tau|(k + l + 1 -+ 1) from the two real-structure eigenspaces.
std::vector<double> oscillator_spectrum_complex_p1(std::complex<double> tau, int count);
std::vector<double> oscillator_spectrum_complex_p0(std::complex<double> tau, int count);

/// Normalized zero mode of the p=1 operator for f = tau z^2 sampled on the
/// grid: e^{-2|tau| |z|^2} (-(tau/|tau|) dz + dzbar), unit discrete norm.
/// Requires Re tau > 0 for decay of the weight e^{-tau...} family convention.
FormField oscillator_groundform_complex(std::complex<double> tau, const SpectralGrid& grid);

/// Residual of the assembled p=1 operator on the sampled zero mode of
/// f = tau z^2. Must be O(h^2); the library refuses to run eigensolves if the
/// check fails (coupling-sign self test).
double quadratic_model_selftest(std::complex<double> tau, double R, double h);
void require_quadratic_selftest();

/// Counts eigenvalues below zero_band; requires the next eigenvalue to exceed
/// gap_factor * zero_band, otherwise returns nullopt (gap unresolved).
std::optional<int> harmonic_dimension(const SpectralResult& result, double zero_band,
                                      double gap_factor);

struct DecayFit {
    double rate = 0;         // slope of log max-modulus per unit radius
    double quality = 0;      // R^2 of the linear fit
    bool super_exponential = false;  // quadratic-in-r fit beats linear
    bool polynomial_profile = false; // no significant decay detected
    std::vector<double> radii;
    std::vector<double> log_max;
};

DecayFit decay_fit(const FormField& field, double core_radius);

/// Auto-sized half-width: smallest R on the h-lattice with
/// min_{|z|=R} |f'|^2 >= 20 * lambda_max.
double auto_half_width(const CPoly& f, double lambda_max, double h);

}  // namespace lgtt
