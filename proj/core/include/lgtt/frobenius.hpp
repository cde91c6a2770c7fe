#pragma once

#include <functional>
#include <vector>

#include "lgtt/poly.hpp"
#include "lgtt/singularity.hpp"
#include "lgtt/thimble.hpp"

namespace lgtt {

/// Multiplication operators on the Jacobi algebra of a one-variable family
/// member, expressed in the deformer frame d_j f_t.
struct MilnorFrame {
    std::size_t mu = 0;
    CMatrix deformers_in_monomials;  // S: column j = class of d_j f_t in {1, z, ..., z^{mu-1}}
    CMatrix eta;                     // residue pairing in the deformer frame (tau-free)
    std::vector<CMatrix> mult_deformer;  // mult by d_j f_t, deformer frame
    CMatrix mult_f;                      // mult by f_t, deformer frame
};

MilnorFrame milnor_frame(const DeformationFamily& family,
                         const std::vector<std::complex<double>>& t);

/// Higgs fields B_i = tau * (mult by d_i f_t); B_1 = tau Id when the first
/// deformer is the constant 1.
std::vector<CMatrix> higgs_field(const MilnorFrame& frame, std::complex<double> tau);

/// U = mult by f_t (tau-free; the paper-normalized operator is tau * U).
CMatrix u_matrix(const MilnorFrame& frame);

struct FlatCoordinateReport {
    std::vector<CVector> samples;       // primitive vector per grid point
    double jacobian_rel_error = 0;      // FD d_j Pi_1 vs h-frame column j
};

/// Primitive-vector coordinates on a t-grid inside one chamber, with the
/// finite-difference Jacobian check against the period matrix.
FlatCoordinateReport flat_coordinates(const DeformationFamily& family, std::complex<double> tau,
                                      const std::vector<std::vector<std::complex<double>>>& t_grid,
                                      double fd_step = 1e-4);

struct ConnectionResiduals {
    double dt_residual = 0;      // || d_j Pi_1 - Pi^h_j || / scale
    double tau_residual = 0;     // || tau d_tau Pi_1 - Pi^h U e_1 || / scale
    double flatness_residual = 0;  // || d_i Pi^h_j - d_j Pi^h_i || / scale
};

ConnectionResiduals connection_residuals(const DeformationFamily& family,
                                         std::complex<double> tau,
                                         const std::vector<std::complex<double>>& t,
                                         double fd_step = 1e-4);

struct TtStarResiduals {
    double cv_residual = 0;         // ||F_{i jbar} + [B_i, Bbar_j]|| / ||[B_i, Bbar_j]||
    double cv_commutator_scale = 0;
    double fantastic_residual = 0;  // tau-direction analogue
    double grid_step = 0;
};

/// Cecotti-Vafa commutator residual in the deformation direction `dir` on a
/// square grid around t, and the tau-direction residual at the same point.
TtStarResiduals ttstar_residuals(const DeformationFamily& family, std::complex<double> tau,
                                 const std::vector<std::complex<double>>& t, std::size_t dir,
                                 double grid_step);

struct FrobeniusReport {
    double max_symmetry_error = 0;        // total symmetry of A_{ijk}
    double max_commutator_error = 0;      // [B_i, B_j]
    double unit_axiom_error = 0;          // A_{1jk} = tau eta_{jk}
    double potential_residual = 0;        // FD d_a A_{bcd} vs d_b A_{acd}
    double wdvv_residual = 0;             // associativity contraction
};

/// Optional holomorphic reparametrization t = t(u) with Jacobian dt/du,
/// used to work in a frame where eta is constant.
struct Reparametrization {
    std::function<std::vector<std::complex<double>>(const std::vector<std::complex<double>>&)> t_of_u;
    std::function<CMatrix(const std::vector<std::complex<double>>&)> jacobian;  // dt/du
};

FrobeniusReport frobenius_tensor(const DeformationFamily& family, std::complex<double> tau,
                                 const std::vector<std::vector<std::complex<double>>>& u_grid,
                                 double fd_step,
                                 const Reparametrization* reparam = nullptr);

/// A_{ijk} = (eta B_i)_{jk} at a single parameter point (u-frame when reparam
/// is given).
std::vector<CMatrix> frobenius_tensor_at(const DeformationFamily& family,
                                         std::complex<double> tau,
                                         const std::vector<std::complex<double>>& u,
                                         const Reparametrization* reparam = nullptr);

}  // namespace lgtt
