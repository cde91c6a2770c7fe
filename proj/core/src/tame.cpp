#include "lgtt/tame.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lgtt/newton.hpp"
#include "lgtt/singularity.hpp"

namespace lgtt {

DeformationClass classify_deformation_monomial(const LaurentPolynomial& w,
                                               const LaurentPolynomial& g) {
    auto q = quasi_weights(w);
    if (!q) throw std::domain_error("base polynomial is not quasi-homogeneous");
    if (!g.is_monomial()) throw std::invalid_argument("deformer must be a monomial");
    Rational coupling = Rational(1) - q->weight_of(g.terms().begin()->first);
    if (coupling > 0) return DeformationClass::Relevant;
    if (coupling == 0) return DeformationClass::Marginal;
    return DeformationClass::Irrelevant;
}

GrowthExponents growth_exponents(const WeightSystem& q) {
    GrowthExponents g;
    Rational m = 1;
    for (const auto& qi : q.q) {
        if (qi <= 0 || qi >= 1) throw std::domain_error("growth exponents need 0 < q_i < 1");
        m = std::min(m, Rational(1) - qi);
    }
    g.all_at_most_one = true;
    g.all_below_one = true;
    for (const auto& qi : q.q) {
        Rational d = qi / m;
        if (d > 1) g.all_at_most_one = false;
        if (d >= 1) g.all_below_one = false;
        g.delta.push_back(d);
    }
    return g;
}

RadialProbe radial_probe(const DeformationFamily& family, double c,
                         const std::vector<double>& radii, int samples_per_sphere,
                         unsigned seed) {
    RadialProbe probe;
    probe.c = c;
    std::size_t n = family.base.nvars();
    // polynomial derivatives of the member: d_i f_t = d_i f + sum t_k d_i g_k
    auto member_derivative = [&](std::size_t i) {
        CPoly d{family.base.vars(), {}};
        std::map<ExponentVector, std::complex<double>> acc;
        LaurentPolynomial dbase = partial_derivative(family.base, i);
        for (const auto& [m, cc] : dbase.terms()) acc[m] += cc.to_complex();
        for (std::size_t k = 0; k < family.deformers.size(); ++k) {
            LaurentPolynomial dg = partial_derivative(family.deformers[k], i);
            for (const auto& [m, cc] : dg.terms()) acc[m] += family.t[k] * cc.to_complex();
        }
        for (const auto& [m, cc] : acc)
            if (std::abs(cc) > 0) d.terms.emplace_back(m, cc);
        return d;
    };
    std::vector<CPoly> df(n);
    std::vector<std::vector<CPoly>> d2f(n, std::vector<CPoly>(n));
    for (std::size_t i = 0; i < n; ++i) df[i] = member_derivative(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::map<ExponentVector, std::complex<double>> acc;
            for (const auto& [m, cc] : df[i].terms) {
                if (m[j] == 0) continue;
                ExponentVector nm = m;
                nm[j] -= 1;
                acc[nm] += cc * static_cast<double>(m[j]);
            }
            CPoly d{family.base.vars(), {}};
            for (const auto& [m, cc] : acc)
                if (std::abs(cc) > 0) d.terms.emplace_back(m, cc);
            d2f[i][j] = d;
        }

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double r : radii) {
        double best = std::numeric_limits<double>::infinity();
        std::vector<std::complex<double>> bestz;
        for (int s = 0; s < samples_per_sphere; ++s) {
            // uniform point on the sphere |z| = r in C^n = R^{2n}
            std::vector<std::complex<double>> z(n);
            double norm = 0;
            for (auto& zi : z) {
                zi = {gauss(rng), gauss(rng)};
                norm += std::norm(zi);
            }
            norm = std::sqrt(norm);
            for (auto& zi : z) zi *= r / norm;
            double g2 = 0, h2 = 0;
            for (std::size_t i = 0; i < n; ++i) g2 += std::norm(df[i].evaluate(z));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) h2 += std::norm(d2f[i][j].evaluate(z));
            double v = g2 - c * std::sqrt(h2);
            if (v < best) {
                best = v;
                bestz = z;
            }
        }
        probe.rows.push_back({r, best, bestz});
    }
    probe.increasing = probe.rows.size() >= 2;
    for (std::size_t i = 0; i + 1 < probe.rows.size(); ++i)
        if (probe.rows[i + 1].min_value <= probe.rows[i].min_value) probe.increasing = false;
    return probe;
}

TamenessCertificate tameness_certificate(const DeformationFamily& family, bool with_probe,
                                         unsigned seed) {
    TamenessCertificate cert;
    const LaurentPolynomial& f = family.base;

    if (f.is_polynomial()) {
        auto q = quasi_weights(f);
        if (q) {
            bool small_weights = true;
            for (const auto& qi : q->q)
                if (qi > Rational(1, 2)) small_weights = false;
            bool low_deformers = true;
            for (const auto& g : family.deformers) {
                for (const auto& [m, c] : g.terms())
                    if (q->weight_of(m) > 1) low_deformers = false;
            }
            auto mu = milnor_from_weights(f);
            if (small_weights && low_deformers && mu) {
                cert.verdict = TamenessCertificate::StronglyTame;
                cert.rule =
                    "quasi-homogeneous with all weights <= 1/2 and lower/marginal deformers";
                return cert;
            }
        }
    } else {
        bool convenient = is_convenient(f);
        auto nd = is_nondegenerate_laurent(f);
        bool nondeg = nd.kind == NondegeneracyCertificate::ExactYes ||
                      nd.kind == NondegeneracyCertificate::ProbabilisticYes;
        bool subdiagram = true;
        if (convenient && nondeg) {
            NewtonPolytope np = newton_polytope(f);
            for (const auto& g : family.deformers)
                for (const auto& [m, c] : g.terms()) {
                    bool interior = false;
                    for (const auto& pt : np.interior_points)
                        if (pt == m) interior = true;
                    if (!interior) subdiagram = false;
                }
            if (subdiagram) {
                cert.verdict = TamenessCertificate::StronglyTame;
                cert.rule = nd.kind == NondegeneracyCertificate::ExactYes
                                ? "convenient and nondegenerate Laurent, subdiagram deformers"
                                : "convenient and nondegenerate (probabilistic) Laurent, "
                                  "subdiagram deformers";
                return cert;
            }
        }
    }

    if (with_probe) {
        cert.probe = radial_probe(family, 1.0, {2, 4, 8, 16}, 256, seed);
        cert.verdict = TamenessCertificate::Evidence;
        cert.rule = "radial probe only; no sufficient rule applies";
    } else {
        cert.verdict = TamenessCertificate::Unknown;
        cert.rule = "no sufficient rule applies";
    }
    return cert;
}

}  // namespace lgtt
