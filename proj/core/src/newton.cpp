#include "lgtt/newton.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "lgtt/groebner.hpp"
#include "lgtt/singularity.hpp"
#include "lgtt/smith.hpp"

namespace lgtt {

namespace {

using Pt = std::vector<long>;

long dot(const std::vector<long>& a, const Pt& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<long> primitive(std::vector<long> v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    if (g > 1)
        for (long& x : v) x /= g;
    return v;
}

long affine_dim(const std::vector<Pt>& pts) {
    if (pts.empty()) return -1;
    IntMatrix d;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Integer> row;
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            row.push_back(Integer(pts[i][j] - pts[0][j]));
        d.push_back(std::move(row));
    }
    if (d.empty()) return 0;
    return int_rank(d);
}

struct HullData {
    std::vector<Pt> points;                     // support, deduped
    std::vector<std::size_t> vertex_ids;        // indices into points
    std::vector<PolytopeFace> faces;            // over original coordinates
    int dim = -1;
};

// facets of a full-dimensional hull via brute-force supporting hyperplanes
std::vector<PolytopeFace> facets_fulldim(const std::vector<Pt>& pts, std::size_t n) {
    std::set<std::pair<std::vector<long>, long>> seen;
    std::vector<PolytopeFace> out;
    auto consider = [&](std::vector<long> nu) {
        bool zero = std::all_of(nu.begin(), nu.end(), [](long x) { return x == 0; });
        if (zero) return;
        nu = primitive(nu);
        for (int sgn = 0; sgn < 2; ++sgn) {
            std::vector<long> v = nu;
            if (sgn) for (long& x : v) x = -x;
            long c = dot(v, pts[0]);
            for (const auto& p : pts) c = std::max(c, dot(v, p));
            std::vector<std::size_t> on;
            bool supporting = true;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                long s = dot(v, pts[k]);
                if (s == c) on.push_back(k);
            }
            (void)supporting;
            // must contain n affinely independent points
            std::vector<Pt> onpts;
            for (auto k : on) onpts.push_back(pts[k]);
            if (affine_dim(onpts) != static_cast<long>(n) - 1) continue;
            if (seen.count({v, c})) continue;
            seen.insert({v, c});
            PolytopeFace f;
            f.dim = static_cast<int>(n) - 1;
            f.normal = v;
            f.offset = c;
            f.vertex_ids = on;  // provisional: indices into pts, fixed up later
            out.push_back(std::move(f));
        }
    };
    if (n == 1) {
        consider({1});
    } else if (n == 2) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                consider({-(pts[j][1] - pts[i][1]), pts[j][0] - pts[i][0]});
    } else if (n == 3) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                for (std::size_t k = j + 1; k < pts.size(); ++k) {
                    Pt u(3), w(3);
                    for (int a = 0; a < 3; ++a) {
                        u[a] = pts[j][a] - pts[i][a];
                        w[a] = pts[k][a] - pts[i][a];
                    }
                    consider({u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                              u[0] * w[1] - u[1] * w[0]});
                }
    } else {
        throw std::domain_error("face enumeration supports n <= 3");
    }
    return out;
}

// full face lattice of a full-dimensional hull
HullData hull_fulldim(const std::vector<Pt>& pts, std::size_t n) {
    HullData h;
    h.points = pts;
    h.dim = static_cast<int>(n);
    auto facets = facets_fulldim(pts, n);

    // vertices: points whose incident-facet intersection is zero dimensional
    std::vector<std::vector<std::size_t>> incident(pts.size());
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
        for (auto k : facets[fi].vertex_ids) incident[k].push_back(fi);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (incident[k].empty()) continue;
        std::vector<Pt> common;
        for (std::size_t q = 0; q < pts.size(); ++q) {
            bool on_all = true;
            for (auto fi : incident[k]) {
                if (dot(facets[fi].normal, pts[q]) != facets[fi].offset) {
                    on_all = false;
                    break;
                }
            }
            if (on_all) common.push_back(pts[q]);
        }
        if (affine_dim(common) == 0) h.vertex_ids.push_back(k);
    }

    auto vid_of = [&](std::size_t point_id) -> std::optional<std::size_t> {
        auto it = std::find(h.vertex_ids.begin(), h.vertex_ids.end(), point_id);
        if (it == h.vertex_ids.end()) return std::nullopt;
        return static_cast<std::size_t>(it - h.vertex_ids.begin());
    };

    // facet faces (keep only hull vertices in vertex_ids)
    for (auto& f : facets) {
        PolytopeFace g = f;
        g.vertex_ids.clear();
        for (auto k : f.vertex_ids)
            if (auto v = vid_of(k)) g.vertex_ids.push_back(*v);
        h.faces.push_back(std::move(g));
    }
    std::size_t nfacets = h.faces.size();

    // edges for n == 3: pairwise facet intersections of affine dimension 1
    if (n == 3) {
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t a = 0; a < nfacets; ++a)
            for (std::size_t b = a + 1; b < nfacets; ++b) {
                std::vector<std::size_t> common;
                std::set_intersection(h.faces[a].vertex_ids.begin(), h.faces[a].vertex_ids.end(),
                                      h.faces[b].vertex_ids.begin(), h.faces[b].vertex_ids.end(),
                                      std::back_inserter(common));
                if (common.size() < 2) continue;
                std::vector<Pt> cpts;
                for (auto v : common) cpts.push_back(pts[h.vertex_ids[v]]);
                if (affine_dim(cpts) != 1) continue;
                if (seen.count(common)) continue;
                seen.insert(common);
                PolytopeFace e;
                e.dim = 1;
                e.vertex_ids = common;
                e.normal.assign(n, 0);
                for (std::size_t i = 0; i < n; ++i)
                    e.normal[i] = h.faces[a].normal[i] + h.faces[b].normal[i];
                e.offset = h.faces[a].offset + h.faces[b].offset;
                h.faces.push_back(std::move(e));
            }
    }

    // vertex faces (dim 0): sum of incident facet normals
    for (std::size_t v = 0; n >= 2 && v < h.vertex_ids.size(); ++v) {
        PolytopeFace f;
        f.dim = 0;
        f.vertex_ids = {v};
        f.normal.assign(n, 0);
        f.offset = 0;
        for (std::size_t a = 0; a < nfacets; ++a) {
            if (std::find(h.faces[a].vertex_ids.begin(), h.faces[a].vertex_ids.end(), v) ==
                h.faces[a].vertex_ids.end())
                continue;
            for (std::size_t i = 0; i < n; ++i) f.normal[i] += h.faces[a].normal[i];
            f.offset += h.faces[a].offset;
        }
        h.faces.push_back(std::move(f));
    }
    return h;
}

}  // namespace

bool NewtonPolytope::contains_origin_interior() const {
    if (dim != static_cast<int>(nvars)) return false;
    for (const auto& f : faces) {
        if (f.dim != static_cast<int>(nvars) - 1) continue;
        long s = 0;  // origin: <normal, 0> = 0
        if (!(s < f.offset)) return false;
    }
    return true;
}

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw std::domain_error("Newton polytope of the zero polynomial");
    std::size_t n = f.nvars();
    std::vector<Pt> pts;
    for (const auto& [m, c] : f.terms()) {
        Pt p(m.e.begin(), m.e.end());
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());

    NewtonPolytope np;
    np.nvars = n;
    long ad = affine_dim(pts);
    np.dim = static_cast<int>(ad);

    if (ad == 0) {
        np.vertices.emplace_back(std::vector<long>(pts[0]));
        np.faces_enumerated = true;
        return np;
    }

    if (ad == static_cast<long>(n)) {
        if (n > 3) {
            // hull and convenience only; no face lattice
            throw std::domain_error("face enumeration supports n <= 3");
        }
        HullData h = hull_fulldim(pts, n);
        for (auto k : h.vertex_ids) np.vertices.emplace_back(std::vector<long>(h.points[k]));
        np.faces = h.faces;
        np.faces_enumerated = true;
        // interior lattice points: bounding-box scan against facet inequalities
        std::vector<long> lo(n, std::numeric_limits<long>::max()), hi(n, std::numeric_limits<long>::min());
        for (const auto& p : pts)
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        std::vector<const PolytopeFace*> facets;
        for (const auto& fc : np.faces)
            if (fc.dim == static_cast<int>(n) - 1) facets.push_back(&fc);
        Pt cur(n);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == n) {
                for (auto* fc : facets)
                    if (!(dot(fc->normal, cur) < fc->offset)) return;
                np.interior_points.emplace_back(std::vector<long>(cur));
                return;
            }
            for (long x = lo[i]; x <= hi[i]; ++x) {
                cur[i] = x;
                rec(i + 1);
            }
        };
        rec(0);
        return np;
    }

    // lower-dimensional hull: project to exact affine-hull coordinates (hull
    // combinatorics is affine invariant), take vertices there; no face
    // lattice is lifted, callers fall back to sampling certificates
    std::size_t r = static_cast<std::size_t>(ad);
    const Pt& p0 = pts[0];
    std::vector<std::vector<Rational>> bas;  // r independent direction rows
    IntMatrix probe;
    for (std::size_t i = 1; i < pts.size() && bas.size() < r; ++i) {
        std::vector<Integer> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(Integer(pts[i][j] - p0[j]));
        probe.push_back(row);
        if (int_rank(probe) == static_cast<long>(probe.size())) {
            std::vector<Rational> rr;
            for (const auto& x : row) rr.push_back(Rational(x));
            bas.push_back(std::move(rr));
        } else {
            probe.pop_back();
        }
    }
    auto coords = [&](const Pt& p) {
        // solve y * B = (p - p0) via the exact normal equations
        std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1, 0));
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t j = 0; j < n; ++j) m[a][b] += bas[a][j] * bas[b][j];
            for (std::size_t j = 0; j < n; ++j) m[a][r] += Rational(p[j] - p0[j]) * bas[a][j];
        }
        for (std::size_t c = 0; c < r; ++c) {
            std::size_t q = c;
            while (q < r && m[q][c] == 0) ++q;
            std::swap(m[q], m[c]);
            for (std::size_t i = 0; i < r; ++i) {
                if (i == c || m[i][c] == 0) continue;
                Rational fct = m[i][c] / m[c][c];
                for (std::size_t j = c; j <= r; ++j) m[i][j] -= fct * m[c][j];
            }
        }
        std::vector<Rational> y(r);
        for (std::size_t c = 0; c < r; ++c) y[c] = m[c][r] / m[c][c];
        return y;
    };
    std::vector<std::vector<Rational>> ys;
    Integer den = 1;
    for (const auto& p : pts) {
        ys.push_back(coords(p));
        for (const auto& x : ys.back()) den = lcm(den, denominator(x));
    }
    std::vector<Pt> ypts;
    for (const auto& y : ys) {
        Pt q(r);
        for (std::size_t k = 0; k < r; ++k)
            q[k] = static_cast<long>(Integer(numerator(y[k]) * (den / denominator(y[k])))
                                         .convert_to<long long>());
        ypts.push_back(std::move(q));
    }
    HullData h = hull_fulldim(ypts, r);
    for (auto k : h.vertex_ids) np.vertices.emplace_back(std::vector<long>(pts[k]));
    np.faces_enumerated = false;
    return np;
}

bool is_convenient(const LaurentPolynomial& f) {
    if (f.is_zero()) return false;
    NewtonPolytope np = newton_polytope(f);
    return np.contains_origin_interior();
}

LaurentPolynomial face_polynomial(const LaurentPolynomial& f, const NewtonPolytope& np,
                                  const PolytopeFace& face) {
    bool belongs = false;
    for (const auto& g : np.faces)
        if (g.normal == face.normal && g.offset == face.offset && g.vertex_ids == face.vertex_ids)
            belongs = true;
    if (!belongs) throw std::invalid_argument("face does not belong to this polytope");
    LaurentPolynomial r(f.vars());
    for (const auto& [m, c] : f.terms()) {
        long s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += face.normal[i] * m[i];
        if (s == face.offset) r.set_term(m, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// nondegeneracy

namespace {

using DensePoly = std::vector<GaussianRational>;  // c_0..c_deg

void trim(DensePoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

DensePoly to_dense(const LaurentPolynomial& p) {
    if (p.nvars() != 1) throw std::logic_error("to_dense needs one variable");
    long lo = 0;
    for (const auto& [m, c] : p.terms()) lo = std::min(lo, m[0]);
    DensePoly d;
    for (const auto& [m, c] : p.terms()) {
        std::size_t k = static_cast<std::size_t>(m[0] - lo);
        if (d.size() <= k) d.resize(k + 1);
        d[k] += c;
    }
    trim(d);
    // strip the content z^k: torus roots are unaffected
    std::size_t k = 0;
    while (k < d.size() && d[k].is_zero()) ++k;
    d.erase(d.begin(), d.begin() + static_cast<long>(k));
    return d;
}

DensePoly dense_derivative(const DensePoly& p) {
    DensePoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * GaussianRational(Rational(static_cast<long>(k))));
    trim(d);
    return d;
}

DensePoly dense_mod(DensePoly a, const DensePoly& b) {
    while (a.size() >= b.size() && !b.empty()) {
        GaussianRational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

DensePoly dense_gcd(DensePoly a, DensePoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        DensePoly r = dense_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussianRational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// nonzero roots of an exact dense polynomial, numerically
std::vector<std::complex<double>> dense_roots(const DensePoly& p) {
    std::size_t k = 0;
    DensePoly q = p;
    while (k < q.size() && q[k].is_zero()) ++k;
    q.erase(q.begin(), q.begin() + static_cast<long>(k));
    if (q.size() <= 1) return {};
    std::size_t deg = q.size() - 1;
    CMatrix comp = CMatrix::Zero(deg, deg);
    for (std::size_t i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < deg; ++i)
        comp(i, deg - 1) = -(q[i] / q[deg]).to_complex();
    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z) > 1e-12) out.push_back(z);
    }
    return out;
}

// resultant of two exact univariate polynomials via the Sylvester determinant
GaussianRational resultant(const DensePoly& a, const DensePoly& b) {
    std::size_t da = a.size() - 1, db = b.size() - 1;
    std::size_t n = da + db;
    if (a.empty() || b.empty()) return GaussianRational(0);
    if (n == 0) return GaussianRational(1);
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
    // exact determinant, fraction-full Gaussian elimination
    GaussianRational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return GaussianRational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// collect the exponents of a univariate "slice": p(z1, z2) viewed in z2 with
// exact polynomial coefficients in z1
std::vector<DensePoly> bivariate_in_z2(const LaurentPolynomial& p) {
    // returns coefficient polys of z2^k (k = 0..deg2) as dense polys in z1
    long lo1 = 0, lo2 = 0, hi2 = 0;
    for (const auto& [m, c] : p.terms()) {
        lo1 = std::min(lo1, m[0]);
        lo2 = std::min(lo2, m[1]);
        hi2 = std::max(hi2, m[1]);
    }
    std::size_t deg2 = static_cast<std::size_t>(hi2 - lo2);
    std::vector<DensePoly> out(deg2 + 1);
    for (const auto& [m, c] : p.terms()) {
        std::size_t k2 = static_cast<std::size_t>(m[1] - lo2);
        std::size_t k1 = static_cast<std::size_t>(m[0] - lo1);
        if (out[k2].size() <= k1) out[k2].resize(k1 + 1);
        out[k2][k1] += c;
    }
    for (auto& d : out) trim(d);
    return out;
}

// resultant in z2 of two exact bivariate polynomials, as dense poly in z1
DensePoly resultant_z2(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto ca = bivariate_in_z2(a);
    auto cb = bivariate_in_z2(b);
    while (!ca.empty() && ca.back().empty()) ca.pop_back();
    while (!cb.empty() && cb.back().empty()) cb.pop_back();
    std::size_t da = ca.size() - 1, db = cb.size() - 1;
    if (da == 0 || db == 0) {
        // constant in z2: resultant degenerates; signal by empty
        return {};
    }
    // Sylvester matrix with polynomial entries: evaluate-and-interpolate
    // at da*db*max_deg+1 rational points would work, but the sizes here are
    // tiny, so do symbolic elimination on dense polys directly.
    std::size_t n = da + db;
    long coeff_deg = 0;
    for (const auto& d : ca) coeff_deg = std::max<long>(coeff_deg, d.empty() ? 0 : static_cast<long>(d.size()) - 1);
    for (const auto& d : cb) coeff_deg = std::max<long>(coeff_deg, d.empty() ? 0 : static_cast<long>(d.size()) - 1);
    long rdeg = coeff_deg * static_cast<long>(n);
    // interpolation on z1 = 0, 1, ..., rdeg (exact)
    std::vector<GaussianRational> xs, vals;
    auto eval_dense = [](const DensePoly& d, const GaussianRational& x) {
        GaussianRational acc;
        for (std::size_t k = d.size(); k-- > 0;) acc = acc * x + d[k];
        return acc;
    };
    for (long t = 0; t <= rdeg; ++t) {
        GaussianRational x{Rational(t), Rational(0)};
        DensePoly av, bv;
        for (const auto& d : ca) av.push_back(d.empty() ? GaussianRational(0) : eval_dense(d, x));
        for (const auto& d : cb) bv.push_back(d.empty() ? GaussianRational(0) : eval_dense(d, x));
        trim(av);
        trim(bv);
        GaussianRational r;
        if (av.size() != da + 1 || bv.size() != db + 1) {
            // leading coefficient vanished at this node; skip it
            continue;
        }
        r = resultant(av, bv);
        xs.push_back(x);
        vals.push_back(r);
    }
    if (xs.size() < static_cast<std::size_t>(rdeg) + 1) {
        // add more nodes to compensate skipped ones
        long t = rdeg + 1;
        while (xs.size() < static_cast<std::size_t>(rdeg) + 1 && t < 4 * rdeg + 16) {
            GaussianRational x{Rational(t), Rational(0)};
            DensePoly av, bv;
            for (const auto& d : ca) av.push_back(d.empty() ? GaussianRational(0) : eval_dense(d, x));
            for (const auto& d : cb) bv.push_back(d.empty() ? GaussianRational(0) : eval_dense(d, x));
            trim(av);
            trim(bv);
            if (av.size() == da + 1 && bv.size() == db + 1) {
                xs.push_back(x);
                vals.push_back(resultant(av, bv));
            }
            ++t;
        }
        if (xs.size() < static_cast<std::size_t>(rdeg) + 1) return {};
    }
    // Lagrange interpolation (exact)
    std::size_t np = xs.size();
    DensePoly res(np, GaussianRational(0));
    for (std::size_t i = 0; i < np; ++i) {
        DensePoly li{GaussianRational(1)};
        GaussianRational denom(1);
        for (std::size_t j = 0; j < np; ++j) {
            if (i == j) continue;
            DensePoly next(li.size() + 1, GaussianRational(0));
            for (std::size_t k = 0; k < li.size(); ++k) {
                next[k + 1] += li[k];
                next[k] -= li[k] * xs[j];
            }
            li = std::move(next);
            denom *= (xs[i] - xs[j]);
        }
        GaussianRational w = vals[i] / denom;
        for (std::size_t k = 0; k < li.size(); ++k) res[k] += li[k] * w;
    }
    trim(res);
    return res;
}

LaurentPolynomial clear_denoms(const LaurentPolynomial& p) {
    std::size_t n = p.nvars();
    ExponentVector shift = ExponentVector::zero(n);
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) shift[i] = std::min(shift[i], m[i]);
    for (std::size_t i = 0; i < n; ++i) shift[i] = -shift[i];
    LaurentPolynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) r.set_term(m + shift, c);
    return r;
}

double poly_scale(const CPoly& p) {
    double s = 0.0;
    for (const auto& [m, c] : p.terms) s = std::max(s, std::abs(c));
    return std::max(s, 1.0);
}

// residual of the face system at a torus point
double face_residual(const LaurentPolynomial& g, const std::vector<std::complex<double>>& z) {
    CPoly cg = to_cpoly(g);
    double r = std::abs(cg.evaluate(z));
    for (std::size_t i = 0; i < g.nvars(); ++i)
        r += std::abs(to_cpoly(partial_derivative(g, i, true)).evaluate(z));
    return r / poly_scale(cg);
}

// exact decision for a one-variable face system
std::optional<std::vector<std::complex<double>>> torus_zero_1d(const LaurentPolynomial& g) {
    DensePoly p = to_dense(g);
    if (p.size() <= 1) return std::nullopt;  // monomial (or empty): no torus zero
    DensePoly q = to_dense(partial_derivative(g, 0, true));
    DensePoly gc = dense_gcd(p, q);
    auto roots = dense_roots(gc);
    if (roots.empty()) return std::nullopt;
    return std::vector<std::complex<double>>{roots.front()};
}

}  // namespace

NondegeneracyCertificate is_nondegenerate_laurent(const LaurentPolynomial& f, unsigned seed,
                                                  int trials) {
    NondegeneracyCertificate cert;
    std::size_t n = f.nvars();
    if (f.is_zero()) {
        cert.kind = NondegeneracyCertificate::ExactNo;
        cert.detail = "zero polynomial";
        return cert;
    }
    NewtonPolytope np = newton_polytope(f);

    // assemble the face polynomials to check: every proper face plus the full
    // support (vertex faces are monomials and can never vanish on the torus,
    // but they are cheap and harmless to include)
    std::vector<LaurentPolynomial> face_polys;
    if (np.faces_enumerated)
        for (const auto& fc : np.faces) face_polys.push_back(face_polynomial(f, np, fc));
    face_polys.push_back(f);

    bool exact_possible = np.faces_enumerated && n <= 2;
    bool all_exact = true;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (const auto& g : face_polys) {
        if (g.is_zero()) continue;
        if (g.is_monomial()) continue;  // c z^a has no torus zero
        if (n == 1) {
            auto w = torus_zero_1d(g);
            if (w) {
                cert.kind = NondegeneracyCertificate::ExactNo;
                cert.witness = *w;
                cert.detail = "face system vanishes on the torus";
                return cert;
            }
            continue;
        }
        if (n == 2 && exact_possible) {
            // edge faces reduce to one variable along the edge direction
            NewtonPolytope gp = newton_polytope(g);
            if (gp.dim <= 1) {
                // g = z^a * P(z^d) for a primitive direction d
                std::vector<ExponentVector> mons;
                for (const auto& [m, c] : g.terms()) mons.push_back(m);
                ExponentVector base = mons[0];
                std::vector<long> dir = {0, 0};
                for (std::size_t i = 1; i < mons.size(); ++i) {
                    dir = {mons[i][0] - base[0], mons[i][1] - base[1]};
                    if (dir[0] != 0 || dir[1] != 0) break;
                }
                dir = primitive(dir);
                // P(w): coefficients along the segment
                std::map<long, GaussianRational> along;
                for (const auto& [m, c] : g.terms()) {
                    long k;
                    if (dir[0] != 0)
                        k = (m[0] - base[0]) / dir[0];
                    else
                        k = (m[1] - base[1]) / dir[1];
                    along[k] += c;
                }
                long lo = along.begin()->first;
                DensePoly p;
                for (const auto& [k, c] : along) {
                    std::size_t idx = static_cast<std::size_t>(k - lo);
                    if (p.size() <= idx) p.resize(idx + 1);
                    p[idx] = c;
                }
                trim(p);
                DensePoly dp = dense_derivative(p);
                DensePoly gcd_p = dense_gcd(p, dp);
                auto roots = dense_roots(gcd_p);
                if (!roots.empty()) {
                    // lift w back to the torus: z = (w^{s0}, w^{s1}) with
                    // <dir, s> = 1 (dir is primitive)
                    long s0 = 0, s1 = 0;
                    for (long a = -8; a <= 8 && (dir[0] * s0 + dir[1] * s1 != 1); ++a)
                        for (long b = -8; b <= 8; ++b)
                            if (dir[0] * a + dir[1] * b == 1) {
                                s0 = a;
                                s1 = b;
                            }
                    std::complex<double> w = roots.front();
                    std::vector<std::complex<double>> z = {std::pow(w, static_cast<double>(s0)),
                                                           std::pow(w, static_cast<double>(s1))};
                    if (face_residual(g, z) < 1e-7) {
                        cert.kind = NondegeneracyCertificate::ExactNo;
                        cert.witness = z;
                        cert.detail = "edge system vanishes on the torus";
                        return cert;
                    }
                }
                continue;
            }
            // two-dimensional face: eliminate z2 between the cleared system
            LaurentPolynomial F = clear_denoms(g);
            LaurentPolynomial G1 = clear_denoms(partial_derivative(g, 0, true));
            LaurentPolynomial G2 = clear_denoms(partial_derivative(g, 1, true));
            DensePoly r1 = resultant_z2(F, G1);
            DensePoly r2 = resultant_z2(F, G2);
            DensePoly r3 = resultant_z2(G1, G2);
            if (r1.empty() || r2.empty() || r3.empty()) {
                all_exact = false;  // degenerate elimination; fall back below
            } else {
                DensePoly r = dense_gcd(dense_gcd(r1, r2), r3);
                auto cand = dense_roots(r);
                bool hit = false;
                for (auto z1 : cand) {
                    // confirm a common z2 root numerically
                    CPoly cF = to_cpoly(F);
                    auto slice = [&](const LaurentPolynomial& p) {
                        // dense poly in z2 at z1 fixed
                        auto co = bivariate_in_z2(p);
                        std::vector<std::complex<double>> d;
                        for (const auto& ck : co) {
                            std::complex<double> acc = 0.0;
                            for (std::size_t k = ck.size(); k-- > 0;)
                                acc = acc * z1 + ck[k].to_complex();
                            d.push_back(acc);
                        }
                        return d;
                    };
                    auto dF = slice(F);
                    // roots of dF in z2
                    while (!dF.empty() && std::abs(dF.back()) < 1e-13) dF.pop_back();
                    if (dF.size() <= 1) continue;
                    std::size_t deg = dF.size() - 1;
                    CMatrix comp = CMatrix::Zero(deg, deg);
                    for (std::size_t i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1.0;
                    for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -dF[i] / dF[deg];
                    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
                    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                        std::complex<double> z2 = es.eigenvalues()(i);
                        if (std::abs(z2) < 1e-10) continue;
                        std::vector<std::complex<double>> z = {z1, z2};
                        if (face_residual(g, z) < 1e-7) {
                            cert.kind = NondegeneracyCertificate::ExactNo;
                            cert.witness = z;
                            cert.detail = "interior face system vanishes on the torus";
                            return cert;
                        }
                    }
                    (void)cF;
                    (void)hit;
                }
            }
            continue;
        }
        // n >= 3 (or missing face data): randomized torus search with a
        // Gauss-Newton polish on the square sum of the system
        all_exact = false;
        CPoly cg = to_cpoly(g);
        std::vector<CPoly> sys{cg};
        for (std::size_t i = 0; i < n; ++i) sys.push_back(to_cpoly(partial_derivative(g, i, true)));
        for (int t = 0; t < trials; ++t) {
            std::vector<std::complex<double>> z(n);
            for (auto& zi : z) {
                double r = std::exp(unif(rng) * 2.0 - 1.0);
                double th = unif(rng) * 2 * std::numbers::pi;
                zi = std::polar(r, th);
            }
            // damped Newton on the overdetermined system via normal equations
            for (int it = 0; it < 60; ++it) {
                CVector val(sys.size());
                CMatrix jac(sys.size(), n);
                for (std::size_t s = 0; s < sys.size(); ++s) {
                    val(static_cast<Eigen::Index>(s)) = sys[s].evaluate(z);
                    for (std::size_t i = 0; i < n; ++i) {
                        // numeric partial
                        double hstep = 1e-7 * std::max(1.0, std::abs(z[i]));
                        auto zp = z;
                        zp[i] += hstep;
                        jac(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(i)) =
                            (sys[s].evaluate(zp) - val(static_cast<Eigen::Index>(s))) / hstep;
                    }
                }
                CVector step = jac.colPivHouseholderQr().solve(val);
                bool far = false;
                for (std::size_t i = 0; i < n; ++i) {
                    z[i] -= step(static_cast<Eigen::Index>(i));
                    if (std::abs(z[i]) < 1e-6 || std::abs(z[i]) > 1e6) far = true;
                }
                if (far) break;
            }
            std::vector<std::complex<double>> zc(z.begin(), z.end());
            bool on_torus = true;
            for (auto& zi : zc)
                if (std::abs(zi) < 1e-6) on_torus = false;
            if (on_torus && face_residual(g, zc) < 1e-9) {
                cert.kind = NondegeneracyCertificate::ExactNo;
                cert.witness = zc;
                cert.detail = "sampled torus zero of a face system";
                return cert;
            }
        }
        cert.trials = trials;
    }

    cert.kind = all_exact ? NondegeneracyCertificate::ExactYes
                          : NondegeneracyCertificate::ProbabilisticYes;
    if (!all_exact) cert.detail = "no torus zero found in " + std::to_string(trials) + " trials";
    return cert;
}

std::vector<LaurentPolynomial> subdiagram_basis(const LaurentPolynomial& f) {
    NewtonPolytope np = newton_polytope(f);
    MilnorAlgebra alg = milnor_algebra(f);
    if (!alg.finite) throw std::domain_error("subdiagram basis needs finite Milnor number");
    std::vector<LaurentPolynomial> out;
    // exact rational row reduction to keep only independent classes
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& pt : np.interior_points) {
        LaurentPolynomial mono(f.vars());
        mono.set_term(pt, GaussianRational(1));
        auto v = alg.reduce(mono);
        // try to reduce v against collected rows
        std::vector<GaussianRational> w = v;
        for (const auto& r : rows) {
            std::size_t piv = 0;
            while (piv < r.size() && r[piv].is_zero()) ++piv;
            if (piv == r.size() || w[piv].is_zero()) continue;
            GaussianRational fct = w[piv] / r[piv];
            for (std::size_t k = 0; k < w.size(); ++k) w[k] -= fct * r[k];
        }
        bool zero = std::all_of(w.begin(), w.end(), [](const auto& c) { return c.is_zero(); });
        if (!zero) {
            rows.push_back(w);
            out.push_back(mono);
        }
    }
    return out;
}

}  // namespace lgtt
