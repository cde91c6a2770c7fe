#include "lgtt/frobenius.hpp"

#include <cmath>
#include <stdexcept>

namespace lgtt {

namespace {

// dense coefficients c_0..c_deg of a one-variable CPoly (must be polynomial)
std::vector<std::complex<double>> dense(const CPoly& p, std::size_t min_len = 0) {
    auto d = p.dense1();
    if (d.size() < min_len) d.resize(min_len, {0.0, 0.0});
    return d;
}

// remainder of a mod b, complex dense
std::vector<std::complex<double>> poly_mod(std::vector<std::complex<double>> a,
                                           const std::vector<std::complex<double>>& b) {
    while (a.size() >= b.size()) {
        std::complex<double> f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        while (!a.empty() && std::abs(a.back()) < 1e-300) a.pop_back();
    }
    return a;
}

CPoly deformer_derivative(const DeformationFamily& family, std::size_t j) {
    return to_cpoly(family.deformers[j]);
}

CPoly member_poly(const DeformationFamily& family, const std::vector<std::complex<double>>& t) {
    return family.member(t);
}

}  // namespace

MilnorFrame milnor_frame(const DeformationFamily& family,
                         const std::vector<std::complex<double>>& t) {
    if (family.base.nvars() != 1)
        throw std::domain_error("the Milnor frame is implemented for one variable");
    CPoly f = member_poly(family, t);
    CPoly df = f.derivative1();
    auto dfc = dense(df);
    if (dfc.size() < 2) throw std::domain_error("f' constant: no finite algebra");
    std::size_t mu = dfc.size() - 1;
    if (family.deformers.size() != mu)
        throw std::domain_error("deformer count must equal mu for the Milnor frame");

    MilnorFrame fr;
    fr.mu = mu;
    // classes of the deformers in the monomial basis {1, z, ..., z^{mu-1}}
    fr.deformers_in_monomials.resize(mu, mu);
    for (std::size_t j = 0; j < mu; ++j) {
        auto gj = poly_mod(dense(deformer_derivative(family, j)), dfc);
        for (std::size_t r = 0; r < mu; ++r)
            fr.deformers_in_monomials(r, j) = r < gj.size() ? gj[r] : 0.0;
    }
    Eigen::FullPivLU<CMatrix> lu(fr.deformers_in_monomials);
    if (!lu.isInvertible()) throw std::domain_error("deformer classes are dependent");

    // multiplication by z in the monomial basis
    CMatrix mz = CMatrix::Zero(mu, mu);
    for (std::size_t b = 0; b + 1 < mu; ++b) mz(b + 1, b) = 1.0;
    // z * z^{mu-1} = z^mu = -(c_0 + ... + c_{mu-1} z^{mu-1}) / c_mu
    for (std::size_t r = 0; r < mu; ++r) mz(r, mu - 1) = -dfc[r] / dfc[mu];

    auto mult_monomial = [&](const CPoly& g) {
        auto gm = poly_mod(dense(g), dfc);
        CMatrix m = CMatrix::Zero(mu, mu);
        // m = g(mz) acting by multiplication: column b = class of g * z^b
        CMatrix acc = CMatrix::Zero(mu, mu);
        CMatrix zpow = CMatrix::Identity(mu, mu);
        for (std::size_t k = 0; k < gm.size(); ++k) {
            acc += gm[k] * zpow;
            zpow = mz * zpow;
        }
        m = acc;
        return m;
    };

    const CMatrix& s = fr.deformers_in_monomials;
    CMatrix sinv = s.inverse();
    for (std::size_t j = 0; j < mu; ++j)
        fr.mult_deformer.push_back(sinv * mult_monomial(deformer_derivative(family, j)) * s);
    fr.mult_f = sinv * mult_monomial(f) * s;

    // residue pairing in the deformer frame
    Critical1D cd = critical_points_1d(f);
    if (!cd.morse) throw std::domain_error("Milnor frame needs a Morse parameter");
    fr.eta = CMatrix::Zero(mu, mu);
    for (std::size_t a = 0; a < cd.points.size(); ++a) {
        std::complex<double> p = cd.points[a], h = cd.hessians[a];
        std::vector<std::complex<double>> vals(mu);
        for (std::size_t j = 0; j < mu; ++j) vals[j] = deformer_derivative(family, j).eval1(p);
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = 0; j < mu; ++j) fr.eta(i, j) += vals[i] * vals[j] / h;
    }
    return fr;
}

std::vector<CMatrix> higgs_field(const MilnorFrame& frame, std::complex<double> tau) {
    std::vector<CMatrix> b;
    for (const auto& m : frame.mult_deformer) b.push_back(tau * m);
    return b;
}

CMatrix u_matrix(const MilnorFrame& frame) { return frame.mult_f; }

namespace {

// holomorphic and antiholomorphic central differences of a matrix-valued map
template <typename F>
CMatrix fd_holomorphic(F&& eval, std::complex<double> center, double h) {
    CMatrix dx = (eval(center + h) - eval(center - h)) / (2 * h);
    CMatrix dy =
        (eval(center + std::complex<double>(0, h)) - eval(center - std::complex<double>(0, h))) /
        (2 * h);
    return 0.5 * (dx - std::complex<double>(0, 1) * dy);
}

template <typename F>
CMatrix fd_antiholomorphic(F&& eval, std::complex<double> center, double h) {
    CMatrix dx = (eval(center + h) - eval(center - h)) / (2 * h);
    CMatrix dy =
        (eval(center + std::complex<double>(0, h)) - eval(center - std::complex<double>(0, h))) /
        (2 * h);
    return 0.5 * (dx + std::complex<double>(0, 1) * dy);
}

template <typename F>
CVector fd_holomorphic_vec(F&& eval, std::complex<double> center, double h) {
    CVector dx = (eval(center + h) - eval(center - h)) / (2 * h);
    CVector dy =
        (eval(center + std::complex<double>(0, h)) - eval(center - std::complex<double>(0, h))) /
        (2 * h);
    return 0.5 * (dx - std::complex<double>(0, 1) * dy);
}

}  // namespace

FlatCoordinateReport flat_coordinates(const DeformationFamily& family, std::complex<double> tau,
                                      const std::vector<std::vector<std::complex<double>>>& t_grid,
                                      double fd_step) {
    FlatCoordinateReport rep;
    double worst = 0;
    for (const auto& t : t_grid) {
        PeriodMatrix pm = period_matrix(family, tau, t);
        rep.samples.push_back(pm.primitive);
        for (std::size_t j = 0; j < family.deformers.size(); ++j) {
            auto eval = [&](std::complex<double> tj) {
                auto tt = t;
                tt[j] = tj;
                return period_matrix(family, tau, tt).primitive;
            };
            CVector d = fd_holomorphic_vec(eval, t[j], fd_step);
            double rel = (d - pm.pi_minus.col(static_cast<Eigen::Index>(j))).norm() /
                         std::max(1e-300, pm.pi_minus.col(static_cast<Eigen::Index>(j)).norm());
            worst = std::max(worst, rel);
        }
    }
    rep.jacobian_rel_error = worst;
    return rep;
}

ConnectionResiduals connection_residuals(const DeformationFamily& family,
                                         std::complex<double> tau,
                                         const std::vector<std::complex<double>>& t,
                                         double fd_step) {
    ConnectionResiduals out;
    PeriodMatrix pm = period_matrix(family, tau, t);
    std::size_t mu = family.deformers.size();

    // (i) d_j Pi_1 = Pi^h_j
    double worst = 0;
    for (std::size_t j = 0; j < mu; ++j) {
        auto eval = [&](std::complex<double> tj) {
            auto tt = t;
            tt[j] = tj;
            return period_matrix(family, tau, tt).primitive;
        };
        CVector d = fd_holomorphic_vec(eval, t[j], fd_step);
        double rel = (d - pm.pi_minus.col(static_cast<Eigen::Index>(j))).norm() /
                     std::max(1e-300, pm.pi_minus.col(static_cast<Eigen::Index>(j)).norm());
        worst = std::max(worst, rel);
    }
    out.dt_residual = worst;

    // (ii) tau d_tau Pi_1 = Pi^h U e_1 in the deformer frame (gauge A = 0)
    {
        auto eval = [&](std::complex<double> tv) { return period_matrix(family, tv, t).primitive; };
        double h = fd_step * std::abs(tau);
        CVector dtau = tau * fd_holomorphic_vec(eval, tau, h);
        MilnorFrame fr = milnor_frame(family, t);
        CVector rhs = pm.pi_minus * fr.mult_f.col(0);
        out.tau_residual = (dtau - rhs).norm() / std::max(1e-300, rhs.norm());
    }

    // (iii) flatness proxy: d_i (column j) symmetric in i <-> j
    {
        double worst3 = 0;
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = i + 1; j < mu; ++j) {
                auto evi = [&](std::complex<double> ti) {
                    auto tt = t;
                    tt[i] = ti;
                    return CVector(period_matrix(family, tau, tt)
                                       .pi_minus.col(static_cast<Eigen::Index>(j)));
                };
                auto evj = [&](std::complex<double> tj) {
                    auto tt = t;
                    tt[j] = tj;
                    return CVector(period_matrix(family, tau, tt)
                                       .pi_minus.col(static_cast<Eigen::Index>(i)));
                };
                CVector dij = fd_holomorphic_vec(evi, t[i], fd_step);
                CVector dji = fd_holomorphic_vec(evj, t[j], fd_step);
                double scale = std::max({dij.norm(), dji.norm(), 1e-300});
                worst3 = std::max(worst3, (dij - dji).norm() / scale);
            }
        out.flatness_residual = worst3;
    }
    return out;
}

TtStarResiduals ttstar_residuals(const DeformationFamily& family, std::complex<double> tau,
                                 const std::vector<std::complex<double>>& t, std::size_t dir,
                                 double grid_step) {
    TtStarResiduals out;
    out.grid_step = grid_step;
    std::size_t mu = family.deformers.size();
    if (dir >= mu) throw std::out_of_range("deformation direction out of range");

    auto g_at = [&](std::complex<double> td) {
        auto tt = t;
        tt[dir] = td;
        PeriodMatrix pm = period_matrix(family, tau, tt);
        MilnorFrame fr = milnor_frame(family, tt);
        return real_structure(pm.pi_minus, fr.eta).g;
    };
    auto gamma_at = [&](std::complex<double> td) {
        CMatrix g = g_at(td);
        auto gg = [&](std::complex<double> x) { return g_at(x); };
        CMatrix dg = fd_holomorphic(gg, td, grid_step);
        return CMatrix(g.inverse() * dg);
    };
    // curvature F = dbar Gamma
    CMatrix f_curv = fd_antiholomorphic(gamma_at, t[dir], grid_step);

    MilnorFrame fr = milnor_frame(family, t);
    CMatrix g0 = g_at(t[dir]);
    CMatrix b = tau * fr.mult_deformer[dir];
    CMatrix bbar = g0.inverse() * b.adjoint() * g0;
    CMatrix comm = b * bbar - bbar * b;
    out.cv_commutator_scale = comm.norm();
    out.cv_residual = (f_curv + comm).norm() / std::max(1e-300, comm.norm());

    // tau direction: [tau D_tau, taubar D_taubar] = -[U, Ubar] with U = tau mult_f
    auto g_tau = [&](std::complex<double> tv) {
        PeriodMatrix pm = period_matrix(family, tv, t);
        MilnorFrame fr2 = milnor_frame(family, t);
        CMatrix eta_scaled = fr2.eta;  // deformer-frame eta is tau-free
        return real_structure(pm.pi_minus, eta_scaled).g;
    };
    double htau = grid_step * std::abs(tau);
    auto gamma_tau = [&](std::complex<double> tv) {
        CMatrix g = g_tau(tv);
        auto gg = [&](std::complex<double> x) { return g_tau(x); };
        CMatrix dg = fd_holomorphic(gg, tv, htau);
        return CMatrix(g.inverse() * dg);
    };
    CMatrix f_tau = fd_antiholomorphic(gamma_tau, tau, htau);
    CMatrix u = tau * fr.mult_f;
    CMatrix g0t = g_tau(tau);
    CMatrix ubar = g0t.inverse() * u.adjoint() * g0t;
    CMatrix comm_u = u * ubar - ubar * u;
    // [tau D_tau, taubar D_taubar] = |tau|^2 F_{tau taubar}
    out.fantastic_residual =
        (std::norm(tau) * f_tau + comm_u).norm() / std::max(1e-300, comm_u.norm());
    return out;
}

std::vector<CMatrix> frobenius_tensor_at(const DeformationFamily& family,
                                         std::complex<double> tau,
                                         const std::vector<std::complex<double>>& u,
                                         const Reparametrization* reparam) {
    std::vector<std::complex<double>> t = reparam ? reparam->t_of_u(u) : u;
    MilnorFrame fr = milnor_frame(family, t);
    std::size_t mu = fr.mu;
    std::vector<CMatrix> b = higgs_field(fr, tau);
    CMatrix eta = fr.eta;
    if (reparam) {
        CMatrix j = reparam->jacobian(u);
        // frame change: deformers h_a = sum_c J_{ca} g_c
        std::vector<CMatrix> bu(mu);
        CMatrix jinv = j.inverse();
        for (std::size_t a = 0; a < mu; ++a) {
            CMatrix acc = CMatrix::Zero(mu, mu);
            for (std::size_t c = 0; c < mu; ++c) acc += j(static_cast<Eigen::Index>(c),
                                                          static_cast<Eigen::Index>(a)) * b[c];
            bu[a] = jinv * acc * j;
        }
        b = std::move(bu);
        eta = j.transpose() * eta * j;
    }
    std::vector<CMatrix> a;
    for (std::size_t i = 0; i < mu; ++i) a.push_back(eta * b[i]);
    return a;
}

FrobeniusReport frobenius_tensor(const DeformationFamily& family, std::complex<double> tau,
                                 const std::vector<std::vector<std::complex<double>>>& u_grid,
                                 double fd_step, const Reparametrization* reparam) {
    FrobeniusReport rep;
    std::size_t mu = family.deformers.size();
    for (const auto& u : u_grid) {
        std::vector<std::complex<double>> t = reparam ? reparam->t_of_u(u) : u;
        MilnorFrame fr = milnor_frame(family, t);
        auto b = higgs_field(fr, tau);
        // commutators and unit axiom in the plain frame
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = 0; j < mu; ++j)
                rep.max_commutator_error =
                    std::max(rep.max_commutator_error, (b[i] * b[j] - b[j] * b[i]).norm());
        rep.unit_axiom_error =
            std::max(rep.unit_axiom_error, (fr.eta * b[0] - tau * fr.eta).norm());

        auto a = frobenius_tensor_at(family, tau, u, reparam);
        // total symmetry: A_{ijk} = (eta B_i)_{jk} symmetric in all indices
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = 0; j < mu; ++j)
                for (std::size_t k = 0; k < mu; ++k) {
                    std::complex<double> x = a[i](static_cast<Eigen::Index>(j),
                                                  static_cast<Eigen::Index>(k));
                    std::complex<double> y = a[j](static_cast<Eigen::Index>(i),
                                                  static_cast<Eigen::Index>(k));
                    std::complex<double> z = a[i](static_cast<Eigen::Index>(k),
                                                  static_cast<Eigen::Index>(j));
                    rep.max_symmetry_error =
                        std::max({rep.max_symmetry_error, std::abs(x - y), std::abs(x - z)});
                }

        // WDVV contraction residual
        CMatrix etau = frobenius_tensor_at(family, tau, u, reparam)[0];  // A_1.. = tau eta^u
        CMatrix eta_u = etau / tau;
        CMatrix eta_inv = eta_u.inverse();
        double wd = 0;
        for (std::size_t ia = 0; ia < mu; ++ia)
            for (std::size_t ib = 0; ib < mu; ++ib)
                for (std::size_t ic = 0; ic < mu; ++ic)
                    for (std::size_t id = 0; id < mu; ++id) {
                        std::complex<double> lhs = 0, rhs = 0;
                        for (std::size_t e = 0; e < mu; ++e)
                            for (std::size_t f2 = 0; f2 < mu; ++f2) {
                                lhs += a[ia](static_cast<Eigen::Index>(ib),
                                             static_cast<Eigen::Index>(e)) *
                                       eta_inv(static_cast<Eigen::Index>(e),
                                               static_cast<Eigen::Index>(f2)) *
                                       a[ic](static_cast<Eigen::Index>(id),
                                             static_cast<Eigen::Index>(f2));
                                rhs += a[ic](static_cast<Eigen::Index>(ib),
                                             static_cast<Eigen::Index>(e)) *
                                       eta_inv(static_cast<Eigen::Index>(e),
                                               static_cast<Eigen::Index>(f2)) *
                                       a[ia](static_cast<Eigen::Index>(id),
                                             static_cast<Eigen::Index>(f2));
                            }
                        wd = std::max(wd, std::abs(lhs - rhs));
                    }
        rep.wdvv_residual = std::max(rep.wdvv_residual, wd);

        // potential integrability: FD d_a A_{bcd} symmetric under a <-> b
        for (std::size_t ia = 0; ia < mu; ++ia)
            for (std::size_t ib = 0; ib < mu; ++ib) {
                if (ia == ib) continue;
                auto eval_a = [&](std::complex<double> x) {
                    auto uu = u;
                    uu[ia] = x;
                    return frobenius_tensor_at(family, tau, uu, reparam)[ib];
                };
                auto eval_b = [&](std::complex<double> x) {
                    auto uu = u;
                    uu[ib] = x;
                    return frobenius_tensor_at(family, tau, uu, reparam)[ia];
                };
                CMatrix da = fd_holomorphic(eval_a, u[ia], fd_step);
                CMatrix db = fd_holomorphic(eval_b, u[ib], fd_step);
                rep.potential_residual = std::max(rep.potential_residual, (da - db).norm());
            }
    }
    return rep;
}

}  // namespace lgtt
