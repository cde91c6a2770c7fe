#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lgtt/poly.hpp"
#include "lgtt/singularity.hpp"

namespace lgtt {

using IntMat = std::vector<std::vector<long>>;

/// Morse critical data of the scaled member tau * f_t, ordered by Im(tau w_a).
struct CriticalData {
    std::complex<double> tau{1.0, 0.0};
    std::vector<std::complex<double>> points;    // sorted by Im(tau * value)
    std::vector<std::complex<double>> values;    // f_t(p_a), unscaled by tau
    std::vector<std::complex<double>> hessians;  // f_t''(p_a)
    bool morse = true;
    double min_value_gap = 0;  // min |Im tau (w_i - w_j)| over pairs
};

CriticalData critical_points(const CPoly& f_t, std::complex<double> tau);

struct WallEvent {
    std::size_t lower = 0, upper = 0;  // adjacent indices in the sorted order
    double gap = 0;                    // |Im tau (w_i - w_j)|
    enum Side { Left, Right, Unknown } side = Unknown;
    long intersection = 0;
};

/// Pairs whose Im(tau w) values collide within tol * (1 + |tau w|).
std::vector<WallEvent> detect_walls(const CriticalData& cd, double tol = 1e-9);

struct Thimble {
    std::size_t critical_index = 0;
    int sign = -1;  // -1: descending cycle, +1: ascending
    std::complex<double> tau{1.0, 0.0};
    std::complex<double> center;          // p_a
    std::complex<double> critical_value;  // f_t(p_a)
    std::vector<std::complex<double>> polyline;  // oriented through p_a
    double phase = 0;        // Im(tau w_a), constant along the curve
    double phase_error = 0;  // max observed |Im(tau f) - phase|
    double arclength = 0;
};

struct TraceOptions {
    double seed_scale = 1e-4;     // offset = seed_scale * local critical spacing
    double cutoff = 21.0;         // stop when sign * Re tau (f - w_a) > cutoff
    double max_arclength = 1e3;
    double step_tol = 1e-10;      // local RK error control
    double phase_tol = 1e-9;      // re-projection threshold
    double stall_tol = 1e-7;      // |tau f'| stall detection away from p_a
};

/// Steepest-descent (sign -1) or ascent (sign +1) curve of Re(tau f) through
/// the a-th critical point. Throws StokesProximity-style runtime errors when
/// the flow stalls at another critical point.
Thimble trace_thimble(const CPoly& f_t, std::complex<double> tau, const CriticalData& cd,
                      std::size_t a, int sign, const TraceOptions& opt = {});

enum class PeriodMode { Twisted, Holomorphic };

/// Integral of the weighted volume form along the thimble polyline.
///   sign -1: Twisted e^{tau f + conj(tau f)} g dz, Holomorphic e^{2 tau f} g dz
///   sign +1: the same with f -> -f.
/// Composite Gauss-Legendre of order 8 per segment with adaptive splitting.
std::complex<double> period_integral(const Thimble& th, const CPoly& f_t,
                                     std::complex<double> tau, const CPoly& weight,
                                     PeriodMode mode, double rel_tol = 1e-12);

/// Period data at a fixed (tau, t). Rows are thimbles in the Im(tau w) order;
/// columns are the deformer directions. The h-frame carries the tau^{n/2}
/// prefactor (n = 1), the primitive vector carries tau^{n/2-1}.
struct PeriodMatrix {
    std::complex<double> tau;
    std::vector<std::complex<double>> t;
    CriticalData critical;
    CMatrix pi_minus;        // tau^{1/2} * int e^{tau f + conj} d_j f dz over C^-_a
    CMatrix pi_plus;         // -i conj(tau)^{1/2} conj(int e^{-tau f - conj} d_j f dz) over C^+_a
    CVector primitive;       // tau^{-1/2} * int e^{tau f + conj} dz over C^-_a
    CMatrix pi_minus_bare;   // prefactor-free minus periods (topological frame)
    PeriodMode mode = PeriodMode::Twisted;
};

PeriodMatrix period_matrix(const DeformationFamily& family, std::complex<double> tau,
                           const std::vector<std::complex<double>>& t,
                           PeriodMode mode = PeriodMode::Twisted);

/// Signed transversal crossing count of a (+) and a (-) thimble polyline.
/// Sign convention: cross(d_plus, d_minus) > 0 counts +1, so that the
/// same-index pairing is +1 with the canonical seeding.
long intersection_number(const Thimble& plus, const Thimble& minus, double angle_tol = 1e-8);

/// Picard-Lefschetz basis change across a wall between adjacent indices.
IntMat wall_crossing_transform(const IntMat& basis, const WallEvent& event);

struct LoopPoint {
    std::complex<double> tau;
    std::vector<std::complex<double>> t;
};

struct MonodromyResult {
    IntMat t_int;
    CMatrix t_matrix;
    std::vector<std::complex<double>> eigenvalues;
    bool semisimple = false;
    int nilpotency_order = 0;  // smallest k with (T^N - I)^k = 0, N from eigenvalues
    double det_abs = 0;
    int transitions = 0;       // nontrivial integer transitions encountered
    int samples_used = 0;
};

/// Parallel transport of the thimble basis around a closed parameter loop by
/// continuity of the prefactor-free period matrix: consecutive samples are
/// matched by the integer transition round(P_k P_{k+1}^{-1}) and refined until
/// the rounding is unambiguous.
MonodromyResult monodromy_along_loop(const DeformationFamily& family,
                                     const std::vector<LoopPoint>& loop, int min_steps = 48);

/// Half tau-loop continuation tau -> -tau in the same basis machinery; the
/// returned integer matrix plays the role of the one-sided Witten map.
IntMat witten_half_loop(const DeformationFamily& family, std::complex<double> tau,
                        const std::vector<std::complex<double>>& t, int min_steps = 48);

/// Harmonic-frame normalization of the residue pairing at n = 1. The constant
/// is pinned by the exact Gaussian model f = tau z^2, where the L^2 pairing of
/// the harmonic frame matched to [dz] evaluates to -pi/(2 tau) against a
/// residue value of 1/(2 tau).
inline constexpr double kEtaHarmonicFactor = -3.14159265358979323846;

struct WittenCheck {
    CMatrix iw;
    double max_offint = 0;  // max |entry - round(entry)|
    double det_abs = 0;
};

/// I_W = Pi^- eta^{-1} Pi^+ with eta the harmonic-normalized residue pairing
/// in the deformer frame.
WittenCheck witten_matrix(const PeriodMatrix& pm, const CMatrix& eta_residue);

struct RealStructureData {
    CMatrix m;  // conj(Pi) Pi^{-1}
    CMatrix g;  // harmonic eta * M
    double mmbar_error = 0;   // ||M conj(M) - I||
    double hermiticity_error = 0;
    bool positive_definite = false;
};

RealStructureData real_structure(const CMatrix& pi, const CMatrix& eta_residue);

/// Winding number of det M along a closed loop of real-structure matrices.
long maslov_degree(const std::vector<CMatrix>& m_loop);

}  // namespace lgtt
