#include "lgtt/thimble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lgtt {

namespace {

double im_phase(std::complex<double> tau, std::complex<double> w) { return (tau * w).imag(); }

}  // namespace

CriticalData critical_points(const CPoly& f_t, std::complex<double> tau) {
    Critical1D base = critical_points_1d(f_t);
    CriticalData cd;
    cd.tau = tau;
    cd.morse = base.morse;
    std::vector<std::size_t> idx(base.points.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        double pa = im_phase(tau, base.values[a]), pb = im_phase(tau, base.values[b]);
        if (pa != pb) return pa < pb;
        return (tau * base.values[a]).real() < (tau * base.values[b]).real();
    });
    for (auto k : idx) {
        cd.points.push_back(base.points[k]);
        cd.values.push_back(base.values[k]);
        cd.hessians.push_back(base.hessians[k]);
    }
    cd.min_value_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < cd.values.size(); ++i)
        cd.min_value_gap =
            std::min(cd.min_value_gap,
                     std::abs(im_phase(tau, cd.values[i + 1]) - im_phase(tau, cd.values[i])));
    return cd;
}

std::vector<WallEvent> detect_walls(const CriticalData& cd, double tol) {
    std::vector<WallEvent> out;
    for (std::size_t i = 0; i + 1 < cd.values.size(); ++i) {
        double a = im_phase(cd.tau, cd.values[i]);
        double b = im_phase(cd.tau, cd.values[i + 1]);
        double scale = 1.0 + std::abs(cd.tau * cd.values[i]);
        if (std::abs(b - a) < tol * scale) {
            WallEvent e;
            e.lower = i;
            e.upper = i + 1;
            e.gap = std::abs(b - a);
            double ra = (cd.tau * cd.values[i]).real(), rb = (cd.tau * cd.values[i + 1]).real();
            e.side = ra < rb ? WallEvent::Left : WallEvent::Right;
            out.push_back(e);
        }
    }
    return out;
}

Thimble trace_thimble(const CPoly& f_t, std::complex<double> tau, const CriticalData& cd,
                      std::size_t a, int sign, const TraceOptions& opt) {
    if (a >= cd.points.size()) throw std::out_of_range("critical index out of range");
    if (sign != -1 && sign != 1) throw std::invalid_argument("sign must be -1 or +1");
    CPoly df = f_t.derivative1();
    std::complex<double> pa = cd.points[a];
    std::complex<double> wa = cd.values[a];
    std::complex<double> c = tau * cd.hessians[a];
    if (std::abs(c) == 0.0) throw std::domain_error("non-Morse critical point");

    // canonical branch direction of the quadratic model, representative in [0, pi)
    double theta;
    if (sign < 0)
        theta = (std::numbers::pi - std::arg(c)) / 2;  // Re(c e^{2 i theta}) < 0
    else
        theta = -std::arg(c) / 2;
    while (theta < 0) theta += std::numbers::pi;
    while (theta >= std::numbers::pi) theta -= std::numbers::pi;
    std::complex<double> dir = std::polar(1.0, theta);

    double local = 1.0;
    for (std::size_t b = 0; b < cd.points.size(); ++b)
        if (b != a) local = std::min(local, std::abs(cd.points[b] - pa));
    double eps = opt.seed_scale * local;

    double target = im_phase(tau, wa);
    double phase_err = 0;

    auto field = [&](std::complex<double> z) {
        std::complex<double> g = std::conj(tau * df.eval1(z));
        double n = std::abs(g);
        if (n == 0.0) return std::complex<double>(0, 0);
        return (sign < 0 ? -g : g) / n;
    };
    auto project = [&](std::complex<double> z) {
        for (int it = 0; it < 3; ++it) {
            std::complex<double> g = tau * df.eval1(z);
            double n2 = std::norm(g);
            if (n2 == 0) break;
            double drift = (tau * f_t.eval1(z)).imag() - target;
            if (std::abs(drift) < opt.phase_tol * (1 + std::abs(target))) break;
            z -= std::complex<double>(0, 1) * std::conj(g) * (drift / n2);
        }
        return z;
    };

    auto run_branch = [&](std::complex<double> seed_dir) {
        std::vector<std::complex<double>> pts;
        std::complex<double> z = project(pa + eps * seed_dir);
        pts.push_back(z);
        double h = eps;
        double arc = 0;
        const double hmin = 1e-12 * (1 + std::abs(pa));
        while (true) {
            double height = sign * ((tau * (f_t.eval1(z) - wa)).real());
            if (height > opt.cutoff) break;
            if (arc > opt.max_arclength)
                throw std::runtime_error("thimble exceeded the arclength cap before decaying");
            double speed = std::abs(tau * df.eval1(z));
            if (speed < opt.stall_tol && std::abs(z - pa) > 10 * eps) {
                std::size_t near = 0;
                double best = 1e300;
                for (std::size_t b = 0; b < cd.points.size(); ++b) {
                    double d = std::abs(z - cd.points[b]);
                    if (d < best) {
                        best = d;
                        near = b;
                    }
                }
                throw std::runtime_error("StokesProximity: flow stalled near critical point " +
                                         std::to_string(near));
            }
            auto rk4 = [&](std::complex<double> y, double hh) {
                auto k1 = field(y);
                auto k2 = field(y + 0.5 * hh * k1);
                auto k3 = field(y + 0.5 * hh * k2);
                auto k4 = field(y + hh * k3);
                return y + (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            };
            std::complex<double> zf = rk4(z, h);
            std::complex<double> zh = rk4(rk4(z, h / 2), h / 2);
            double err = std::abs(zf - zh);
            double tol = opt.step_tol * (1.0 + std::abs(z));
            if (err > tol && h > hmin) {
                h = std::max(hmin, h * 0.5);
                continue;
            }
            z = project(zh);
            arc += std::abs(z - pts.back());
            pts.push_back(z);
            double drift = std::abs((tau * f_t.eval1(z)).imag() - target);
            phase_err = std::max(phase_err, drift);
            if (err < tol / 32 && h < 0.05 * (1 + std::abs(z))) h *= 2.0;
            if (pts.size() > 400000) throw std::runtime_error("thimble polyline too long");
        }
        return pts;
    };

    std::vector<std::complex<double>> fwd = run_branch(dir);
    std::vector<std::complex<double>> bwd = run_branch(-dir);

    Thimble th;
    th.critical_index = a;
    th.sign = sign;
    th.tau = tau;
    th.center = pa;
    th.critical_value = wa;
    th.phase = target;
    th.polyline.reserve(bwd.size() + fwd.size() + 1);
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) th.polyline.push_back(*it);
    th.polyline.push_back(pa);
    for (const auto& z : fwd) th.polyline.push_back(z);
    th.phase_error = phase_err;
    for (std::size_t i = 0; i + 1 < th.polyline.size(); ++i)
        th.arclength += std::abs(th.polyline[i + 1] - th.polyline[i]);
    return th;
}

namespace {

// 8-point Gauss-Legendre on [0, 1]
constexpr double kGx[8] = {0.5 - 0.48014492824876812, 0.5 - 0.39833323870681337,
                           0.5 - 0.26276620495816450, 0.5 - 0.09171732124782490,
                           0.5 + 0.09171732124782490, 0.5 + 0.26276620495816450,
                           0.5 + 0.39833323870681337, 0.5 + 0.48014492824876812};
constexpr double kGw[8] = {0.05061426814518813, 0.11119051722668724, 0.15685332293894364,
                           0.18134189168918099, 0.18134189168918099, 0.15685332293894364,
                           0.11119051722668724, 0.05061426814518813};

struct SegmentIntegrand {
    const CPoly& f;
    const CPoly& weight;
    std::complex<double> tau;
    std::complex<double> wa;
    int sign;
    PeriodMode mode;

    std::complex<double> operator()(std::complex<double> z) const {
        double orient = sign < 0 ? 1.0 : -1.0;
        std::complex<double> e;
        if (mode == PeriodMode::Twisted)
            e = std::exp(2.0 * orient * (tau * (f.eval1(z) - wa)).real());
        else
            e = std::exp(2.0 * orient * tau * (f.eval1(z) - wa));
        return e * weight.eval1(z);
    }
    double decay_at(std::complex<double> z) const {
        double orient = sign < 0 ? 1.0 : -1.0;
        return std::exp(2.0 * orient * (tau * (f.eval1(z) - wa)).real());
    }
};

std::complex<double> gl8(const SegmentIntegrand& fn, std::complex<double> a,
                         std::complex<double> b) {
    std::complex<double> d = b - a;
    std::complex<double> s = 0;
    for (int i = 0; i < 8; ++i) s += kGw[i] * fn(a + kGx[i] * d);
    return s * d;
}

std::complex<double> adapt(const SegmentIntegrand& fn, std::complex<double> a,
                           std::complex<double> b, std::complex<double> whole, double tol,
                           int depth) {
    std::complex<double> mid = 0.5 * (a + b);
    std::complex<double> l = gl8(fn, a, mid), r = gl8(fn, mid, b);
    if (depth > 14 || std::abs(l + r - whole) < tol) return l + r;
    return adapt(fn, a, mid, l, tol / 2, depth + 1) + adapt(fn, mid, b, r, tol / 2, depth + 1);
}

}  // namespace

std::complex<double> period_integral(const Thimble& th, const CPoly& f_t,
                                     std::complex<double> tau, const CPoly& weight,
                                     PeriodMode mode, double rel_tol) {
    std::complex<double> wa = th.critical_value;
    SegmentIntegrand fn{f_t, weight, tau, wa, th.sign, mode};
    if (fn.decay_at(th.polyline.front()) > 1e-16 || fn.decay_at(th.polyline.back()) > 1e-16)
        throw std::runtime_error("period integrand has not decayed at a thimble endpoint");

    std::vector<std::complex<double>> seg(th.polyline.size() - 1);
    double scale = 0;
    for (std::size_t i = 0; i + 1 < th.polyline.size(); ++i) {
        seg[i] = gl8(fn, th.polyline[i], th.polyline[i + 1]);
        scale += std::abs(seg[i]);
    }
    if (scale == 0) scale = 1e-300;
    std::complex<double> total = 0;
    for (std::size_t i = 0; i + 1 < th.polyline.size(); ++i) {
        double tol = rel_tol * scale * std::max(std::abs(seg[i]) / scale, 1e-6);
        total += adapt(fn, th.polyline[i], th.polyline[i + 1], seg[i], tol, 0);
    }
    double orient = th.sign < 0 ? 1.0 : -1.0;
    std::complex<double> norm;
    if (mode == PeriodMode::Twisted)
        norm = std::exp(std::complex<double>(2.0 * orient * (tau * wa).real(), 0.0));
    else
        norm = std::exp(2.0 * orient * tau * wa);
    return total * norm;
}

PeriodMatrix period_matrix(const DeformationFamily& family, std::complex<double> tau,
                           const std::vector<std::complex<double>>& t, PeriodMode mode) {
    if (family.base.nvars() != 1)
        throw std::domain_error("period matrices are implemented for one variable");
    std::size_t mu = family.deformers.size();
    CPoly f = family.member(t);
    PeriodMatrix pm;
    pm.tau = tau;
    pm.t = t;
    pm.mode = mode;
    pm.critical = critical_points(f, tau);
    if (!pm.critical.morse) throw std::domain_error("period matrix needs a Morse parameter");
    if (pm.critical.points.size() != mu)
        throw std::domain_error("deformer count does not match the number of critical points");

    std::vector<CPoly> weights;
    for (const auto& g : family.deformers) weights.push_back(to_cpoly(g));
    CPoly one{f.vars, {{ExponentVector::zero(1), {1.0, 0.0}}}};

    std::complex<double> sq = std::sqrt(tau);  // principal branch
    pm.pi_minus.resize(mu, mu);
    pm.pi_plus.resize(mu, mu);
    pm.pi_minus_bare.resize(mu, mu);
    pm.primitive.resize(mu);
    for (std::size_t a = 0; a < mu; ++a) {
        Thimble tm = trace_thimble(f, tau, pm.critical, a, -1);
        Thimble tp = trace_thimble(f, tau, pm.critical, a, +1);
        for (std::size_t j = 0; j < mu; ++j) {
            std::complex<double> jm = period_integral(tm, f, tau, weights[j], mode);
            std::complex<double> jp = period_integral(tp, f, tau, weights[j], mode);
            pm.pi_minus(a, j) = sq * jm;
            pm.pi_minus_bare(a, j) = jm;
            pm.pi_plus(a, j) = std::complex<double>(0, -1) * std::conj(sq) * std::conj(jp);
        }
        pm.primitive(a) = period_integral(tm, f, tau, one, mode) / sq;
    }
    return pm;
}

long intersection_number(const Thimble& plus, const Thimble& minus, double angle_tol) {
    if (plus.sign != 1 || minus.sign != -1)
        throw std::invalid_argument("intersection_number expects a (+,-) pair");
    long count = 0;
    const auto& a = plus.polyline;
    const auto& b = minus.polyline;
    double cell = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) cell = std::max(cell, std::abs(a[i + 1] - a[i]));
    for (std::size_t i = 0; i + 1 < b.size(); ++i) cell = std::max(cell, std::abs(b[i + 1] - b[i]));
    if (cell == 0) return 0;
    auto key = [cell](std::complex<double> z) {
        return std::make_pair(static_cast<long>(std::floor(z.real() / cell)),
                              static_cast<long>(std::floor(z.imag() / cell)));
    };
    std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        auto k0 = key(b[i]), k1 = key(b[i + 1]);
        for (long x = std::min(k0.first, k1.first); x <= std::max(k0.first, k1.first); ++x)
            for (long y = std::min(k0.second, k1.second); y <= std::max(k0.second, k1.second); ++y)
                grid[{x, y}].push_back(i);
    }
    auto cross2 = [](std::complex<double> u, std::complex<double> v) {
        return u.real() * v.imag() - u.imag() * v.real();
    };
    std::vector<char> seen(b.size(), 0);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        auto k0 = key(a[i]), k1 = key(a[i + 1]);
        for (long x = std::min(k0.first, k1.first); x <= std::max(k0.first, k1.first); ++x)
            for (long y = std::min(k0.second, k1.second); y <= std::max(k0.second, k1.second);
                 ++y) {
                auto it = grid.find({x, y});
                if (it == grid.end()) continue;
                for (auto j : it->second) {
                    if (seen[j]) continue;
                    seen[j] = 1;
                    std::complex<double> p = a[i], r = a[i + 1] - a[i];
                    std::complex<double> q = b[j], s = b[j + 1] - b[j];
                    double denom = cross2(r, s);
                    double lr = std::abs(r) * std::abs(s);
                    if (std::abs(denom) <= angle_tol * lr) continue;
                    double tpar = cross2(q - p, s) / denom;
                    double upar = cross2(q - p, r) / denom;
                    if (tpar >= 0.0 && tpar < 1.0 && upar >= 0.0 && upar < 1.0)
                        count += denom > 0 ? 1 : -1;
                }
            }
    }
    return count;
}

IntMat wall_crossing_transform(const IntMat& basis, const WallEvent& event) {
    std::size_t mu = basis.size();
    if (event.upper != event.lower + 1 || event.upper >= mu)
        throw std::invalid_argument("wall event indices must be adjacent");
    if (event.side == WallEvent::Unknown)
        throw std::invalid_argument("wall event side undetermined");
    IntMat out = basis;
    std::size_t i = event.lower;
    long is = event.intersection;
    if (event.side == WallEvent::Left) {
        // C_i <- C_{i+1} + I C_i ; C_{i+1} <- C_i
        for (std::size_t k = 0; k < basis[i].size(); ++k) {
            out[i][k] = basis[i + 1][k] + is * basis[i][k];
            out[i + 1][k] = basis[i][k];
        }
    } else {
        // C_i <- C_{i+1} ; C_{i+1} <- C_i + I C_{i+1}
        for (std::size_t k = 0; k < basis[i].size(); ++k) {
            out[i][k] = basis[i + 1][k];
            out[i + 1][k] = basis[i][k] + is * basis[i + 1][k];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// monodromy by continuity of the prefactor-free period matrix

namespace {

CMatrix bare_period_matrix(const DeformationFamily& family, const LoopPoint& s) {
    std::size_t mu = family.deformers.size();
    CPoly f = family.member(s.t);
    CriticalData cd = critical_points(f, s.tau);
    if (!cd.morse) throw std::domain_error("loop passed through a non-Morse parameter");
    if (cd.points.size() != mu) throw std::domain_error("critical point count changed on loop");
    CMatrix p(mu, mu);
    std::vector<CPoly> weights;
    for (const auto& g : family.deformers) weights.push_back(to_cpoly(g));
    for (std::size_t a = 0; a < mu; ++a) {
        Thimble tm = trace_thimble(f, s.tau, cd, a, -1);
        for (std::size_t j = 0; j < mu; ++j)
            p(a, j) = period_integral(tm, f, s.tau, weights[j], PeriodMode::Twisted);
    }
    return p;
}

LoopPoint lerp(const LoopPoint& a, const LoopPoint& b, double s) {
    LoopPoint r;
    r.tau = a.tau + s * (b.tau - a.tau);
    r.t.resize(a.t.size());
    for (std::size_t i = 0; i < a.t.size(); ++i) r.t[i] = a.t[i] + s * (b.t[i] - a.t[i]);
    return r;
}

bool on_wall(const DeformationFamily& family, const LoopPoint& s, double tol) {
    CPoly f = family.member(s.t);
    CriticalData cd = critical_points(f, s.tau);
    return cd.min_value_gap < tol;
}

struct TransitionAccum {
    IntMat total;
    int transitions = 0;
    int samples = 0;
};

IntMat int_identity_mat(std::size_t mu) {
    IntMat m(mu, std::vector<long>(mu, 0));
    for (std::size_t i = 0; i < mu; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    IntMat c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

long int_det(const IntMat& m) {
    std::size_t n = m.size();
    Eigen::MatrixXd d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = static_cast<double>(m[i][j]);
    return std::lround(d.determinant());
}

std::optional<IntMat> transition(const CMatrix& p0, const CMatrix& p1, double slack) {
    CMatrix q = p0 * p1.inverse();
    std::size_t mu = static_cast<std::size_t>(q.rows());
    IntMat n(mu, std::vector<long>(mu, 0));
    double err = 0;
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j) {
            double re = q(i, j).real(), im = q(i, j).imag();
            long r = std::lround(re);
            err = std::max(err, std::abs(re - r));
            err = std::max(err, std::abs(im));
            n[i][j] = r;
        }
    if (err > slack) return std::nullopt;
    if (std::abs(int_det(n)) != 1) return std::nullopt;
    return n;
}

void transport(const DeformationFamily& family, const LoopPoint& a, const CMatrix& pa,
               const LoopPoint& b, const CMatrix& pb, TransitionAccum& acc, int depth,
               double wall_tol) {
    auto n = transition(pa, pb, 0.12);
    if (n) {
        bool nontrivial = false;
        for (std::size_t i = 0; i < n->size(); ++i)
            for (std::size_t j = 0; j < n->size(); ++j)
                if ((*n)[i][j] != (i == j ? 1 : 0)) nontrivial = true;
        if (nontrivial) ++acc.transitions;
        acc.total = int_mul(acc.total, *n);
        return;
    }
    if (depth > 28) throw std::runtime_error("monodromy transport failed to resolve a crossing");
    double s = 0.5;
    LoopPoint mid = lerp(a, b, s);
    for (int k = 0; k < 8 && on_wall(family, mid, wall_tol); ++k) {
        s += 0.013;
        mid = lerp(a, b, s);
    }
    CMatrix pm = bare_period_matrix(family, mid);
    ++acc.samples;
    transport(family, a, pa, mid, pm, acc, depth + 1, wall_tol);
    transport(family, mid, pm, b, pb, acc, depth + 1, wall_tol);
}

MonodromyResult finish_monodromy(TransitionAccum& acc, std::size_t mu) {
    MonodromyResult r;
    r.t_int = acc.total;
    r.transitions = acc.transitions;
    r.samples_used = acc.samples;
    r.t_matrix.resize(mu, mu);
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j)
            r.t_matrix(i, j) = static_cast<double>(acc.total[i][j]);
    Eigen::ComplexEigenSolver<CMatrix> es(r.t_matrix);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        r.eigenvalues.push_back(es.eigenvalues()(i));
    r.det_abs = std::abs(static_cast<double>(int_det(acc.total)));
    Eigen::JacobiSVD<CMatrix> svd(es.eigenvectors());
    double cond =
        svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    r.semisimple = cond < 1e3;
    int nord = 0;
    for (int n = 1; n <= 360; ++n) {
        bool ok = true;
        for (auto ev : r.eigenvalues)
            if (std::abs(std::pow(ev, n) - 1.0) > 0.05) ok = false;
        if (ok) {
            nord = n;
            break;
        }
    }
    if (nord > 0) {
        IntMat tn = int_identity_mat(mu);
        for (int k = 0; k < nord; ++k) tn = int_mul(tn, acc.total);
        for (std::size_t i = 0; i < mu; ++i) tn[i][i] -= 1;
        IntMat power = int_identity_mat(mu);
        int order = 0;
        for (int k = 1; k <= static_cast<int>(mu) + 1; ++k) {
            power = int_mul(power, tn);
            bool zero = true;
            for (const auto& row : power)
                for (long x : row)
                    if (x != 0) zero = false;
            if (zero) {
                order = k;
                break;
            }
        }
        r.nilpotency_order = order;
    }
    return r;
}

}  // namespace

MonodromyResult monodromy_along_loop(const DeformationFamily& family,
                                     const std::vector<LoopPoint>& loop, int min_steps) {
    if (loop.size() < 2) throw std::invalid_argument("loop needs at least two samples");
    std::size_t mu = family.deformers.size();
    std::vector<LoopPoint> pts;
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
        int per = std::max(1, min_steps / static_cast<int>(loop.size() - 1));
        for (int k = 0; k < per; ++k)
            pts.push_back(lerp(loop[i], loop[i + 1], static_cast<double>(k) / per));
    }
    pts.push_back(loop.back());

    const double wall_tol = 1e-10;
    std::vector<CMatrix> ps;
    for (auto& s : pts) {
        if (on_wall(family, s, wall_tol))
            throw std::domain_error("loop sample sits on a wall; perturb the loop");
        ps.push_back(bare_period_matrix(family, s));
    }
    TransitionAccum acc{int_identity_mat(mu), 0, static_cast<int>(pts.size())};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        transport(family, pts[i], ps[i], pts[i + 1], ps[i + 1], acc, 0, wall_tol);
    return finish_monodromy(acc, mu);
}

IntMat witten_half_loop(const DeformationFamily& family, std::complex<double> tau,
                        const std::vector<std::complex<double>>& t, int min_steps) {
    std::size_t mu = family.deformers.size();
    std::vector<LoopPoint> pts;
    for (int k = 0; k <= min_steps; ++k) {
        double th = std::numbers::pi * static_cast<double>(k) / min_steps;
        pts.push_back({tau * std::polar(1.0, th), t});
    }
    const double wall_tol = 1e-10;
    std::vector<CMatrix> ps;
    for (auto& s : pts) {
        if (on_wall(family, s, wall_tol)) s.tau *= std::polar(1.0, 3e-7);
        ps.push_back(bare_period_matrix(family, s));
    }
    TransitionAccum acc{int_identity_mat(mu), 0, static_cast<int>(pts.size())};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        transport(family, pts[i], ps[i], pts[i + 1], ps[i + 1], acc, 0, wall_tol);
    return acc.total;
}

WittenCheck witten_matrix(const PeriodMatrix& pm, const CMatrix& eta_residue) {
    WittenCheck w;
    CMatrix eta = kEtaHarmonicFactor * eta_residue;
    w.iw = pm.pi_minus * eta.inverse() * pm.pi_plus.transpose();
    double err = 0;
    for (Eigen::Index i = 0; i < w.iw.rows(); ++i)
        for (Eigen::Index j = 0; j < w.iw.cols(); ++j) {
            std::complex<double> v = w.iw(i, j);
            err = std::max(err, std::abs(v.real() - std::lround(v.real())));
            err = std::max(err, std::abs(v.imag()));
        }
    w.max_offint = err;
    w.det_abs = std::abs(w.iw.determinant());
    return w;
}

RealStructureData real_structure(const CMatrix& pi, const CMatrix& eta_residue) {
    RealStructureData r;
    r.m = pi.conjugate() * pi.inverse();
    CMatrix eta = kEtaHarmonicFactor * eta_residue;
    r.g = eta * r.m;
    r.mmbar_error = (r.m * r.m.conjugate() - CMatrix::Identity(r.m.rows(), r.m.cols())).norm();
    r.hermiticity_error = (r.g - r.g.adjoint()).norm() / std::max(1.0, r.g.norm());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (r.g + r.g.adjoint()));
    r.positive_definite = es.eigenvalues().minCoeff() > 0;
    return r;
}

long maslov_degree(const std::vector<CMatrix>& m_loop) {
    double total = 0;
    std::complex<double> prev = m_loop.front().determinant();
    for (std::size_t i = 1; i < m_loop.size(); ++i) {
        std::complex<double> cur = m_loop[i].determinant();
        total += std::arg(cur / prev);
        prev = cur;
    }
    return std::lround(total / (2 * std::numbers::pi));
}

}  // namespace lgtt
