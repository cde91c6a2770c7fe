#include "lgtt/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lgtt/groebner.hpp"

namespace lgtt {

namespace {

// Clears Laurent denominators: multiplies by the minimal monomial making all
// exponents non-negative.
LaurentPolynomial clear_denominators(const LaurentPolynomial& p) {
    std::size_t n = p.nvars();
    ExponentVector shift = ExponentVector::zero(n);
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) shift[i] = std::min(shift[i], m[i]);
    for (std::size_t i = 0; i < n; ++i) shift[i] = -shift[i];
    LaurentPolynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) r.set_term(m + shift, c);
    return r;
}

LaurentPolynomial extend_vars(const LaurentPolynomial& p, const std::vector<std::string>& vars) {
    LaurentPolynomial r(vars);
    for (const auto& [m, c] : p.terms()) {
        ExponentVector e = m;
        e.e.resize(vars.size(), 0);
        r.set_term(e, c);
    }
    return r;
}

}  // namespace

std::vector<GaussianRational> MilnorAlgebra::reduce(const LaurentPolynomial& g) const {
    LaurentPolynomial nf = normal_form_poly(g);
    std::vector<GaussianRational> coeffs(monomial_basis.size());
    for (const auto& [m, c] : nf.terms()) {
        auto it = std::find(monomial_basis.begin(), monomial_basis.end(), m);
        if (it == monomial_basis.end())
            throw std::logic_error("normal form left the standard monomial span");
        coeffs[static_cast<std::size_t>(it - monomial_basis.begin())] = c;
    }
    return coeffs;
}

LaurentPolynomial MilnorAlgebra::normal_form_poly(const LaurentPolynomial& g) const {
    LaurentPolynomial gg = extend_vars(clear_denominators(g), work_vars);
    return normal_form(gg, groebner);
}

std::string MilnorAlgebra::basis_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < monomial_basis.size(); ++k) {
        if (k) os << ", ";
        const auto& m = monomial_basis[k];
        bool one = true;
        for (std::size_t i = 0; i < source.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!one) os << "*";
            one = false;
            os << source.vars()[i];
            if (m[i] != 1) os << "^" << m[i];
        }
        if (one) os << "1";
    }
    return os.str();
}

MilnorAlgebra milnor_algebra(const LaurentPolynomial& f) {
    MilnorAlgebra a;
    a.source = f;
    std::size_t n = f.nvars();
    std::vector<LaurentPolynomial> gens;
    if (f.is_polynomial()) {
        a.work_vars = f.vars();
        for (std::size_t i = 0; i < n; ++i) gens.push_back(partial_derivative(f, i));
    } else {
        // logarithmic derivatives, denominators cleared, then saturate the
        // torus locus with u * z_1...z_n = 1
        a.work_vars = f.vars();
        a.work_vars.push_back("_u");
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPolynomial gi = clear_denominators(partial_derivative(f, i, /*log*/ true));
            gens.push_back(extend_vars(gi, a.work_vars));
        }
        LaurentPolynomial sat(a.work_vars);
        ExponentVector prod = ExponentVector::zero(n + 1);
        for (std::size_t i = 0; i <= n; ++i) prod[i] = 1;
        sat.set_term(prod, GaussianRational(1));
        sat.add_term(ExponentVector::zero(n + 1), GaussianRational(-1));
        gens.push_back(sat);
    }
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (all_zero) {
        a.finite = false;
        return a;
    }
    std::vector<LaurentPolynomial> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    a.groebner = groebner_basis(nz);
    auto sm = standard_monomials(a.groebner, a.work_vars.size());
    if (!sm) {
        a.finite = false;
        return a;
    }
    a.monomial_basis = *sm;
    a.finite = true;
    a.mu = a.monomial_basis.size();
    return a;
}

std::vector<std::vector<GaussianRational>> multiplication_matrix_exact(
    const MilnorAlgebra& algebra, const LaurentPolynomial& g) {
    if (!algebra.finite) throw std::domain_error("multiplication matrix needs finite mu");
    std::size_t mu = algebra.mu;
    std::vector<std::vector<GaussianRational>> m(mu, std::vector<GaussianRational>(mu));
    LaurentPolynomial gg = extend_vars(clear_denominators(g), algebra.work_vars);
    for (std::size_t a = 0; a < mu; ++a) {
        LaurentPolynomial ba(algebra.work_vars);
        ba.set_term(algebra.monomial_basis[a], GaussianRational(1));
        auto col = algebra.reduce(gg * ba);
        for (std::size_t r = 0; r < mu; ++r) m[r][a] = col[r];
    }
    return m;
}

CMatrix multiplication_matrix(const MilnorAlgebra& algebra, const LaurentPolynomial& g) {
    auto me = multiplication_matrix_exact(algebra, g);
    std::size_t mu = me.size();
    CMatrix m(mu, mu);
    for (std::size_t r = 0; r < mu; ++r)
        for (std::size_t c = 0; c < mu; ++c) m(r, c) = me[r][c].to_complex();
    return m;
}

long milnor_number_disk(const CPoly& f, std::complex<double> center, double radius,
                        double margin) {
    CPoly df = f.derivative1();
    // adaptive phase tracking of df around the circle
    std::size_t n = 64;
    for (;;) {
        bool ok = true;
        double total = 0.0;
        std::complex<double> prev = df.eval1(center + radius);
        double scale = 0.0;
        for (std::size_t k = 0; k < n; ++k) scale = std::max(scale, std::abs(df.eval1(center + radius * std::exp(std::complex<double>(0, 2 * std::numbers::pi * k / n)))));
        if (scale == 0.0) throw std::domain_error("f' vanishes identically on the circle");
        for (std::size_t k = 1; k <= n; ++k) {
            double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            std::complex<double> w = df.eval1(center + radius * std::exp(std::complex<double>(0, th)));
            if (std::abs(w) < margin * scale)
                throw std::domain_error("critical point too close to the disk boundary");
            double d = std::arg(w / prev);
            if (std::abs(d) > 2.5) {  // phase step too coarse, refine
                ok = false;
                break;
            }
            total += d;
            prev = w;
        }
        if (ok) return std::lround(total / (2 * std::numbers::pi));
        n *= 2;
        if (n > (1u << 22)) throw std::runtime_error("winding number did not converge");
    }
}

Critical1D critical_points_1d(const CPoly& f, double newton_tol) {
    if (f.vars.size() != 1) throw std::invalid_argument("critical_points_1d needs one variable");
    CPoly df = f.derivative1();
    auto c = df.dense1();
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) throw std::domain_error("f' is constant; no critical points");
    std::size_t deg = c.size() - 1;
    // companion matrix eigenvalues
    CMatrix comp = CMatrix::Zero(deg, deg);
    for (std::size_t i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
    Critical1D out;
    CPoly ddf = df.derivative1();
    double scale = 0.0;
    for (const auto& [m, x] : f.terms) scale = std::max(scale, std::abs(x));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        std::complex<double> z = es.eigenvalues()(i);
        // Newton polish
        for (int it = 0; it < 60; ++it) {
            std::complex<double> v = df.eval1(z), d = ddf.eval1(z);
            if (std::abs(d) == 0.0) break;
            std::complex<double> step = v / d;
            z -= step;
            if (std::abs(step) < newton_tol * (1.0 + std::abs(z))) break;
        }
        out.points.push_back(z);
        out.values.push_back(f.eval1(z));
        out.hessians.push_back(ddf.eval1(z));
    }
    // Morse check: separation and nonzero Hessians
    double sep = 1e300;
    for (std::size_t i = 0; i < out.points.size(); ++i)
        for (std::size_t j = i + 1; j < out.points.size(); ++j)
            sep = std::min(sep, std::abs(out.points[i] - out.points[j]));
    double psc = 1.0;
    for (const auto& p : out.points) psc = std::max(psc, std::abs(p));
    for (const auto& h : out.hessians)
        if (std::abs(h) < 1e-8 * std::max(1.0, scale)) out.morse = false;
    if (out.points.size() > 1 && sep < 1e-8 * psc) out.morse = false;
    return out;
}

std::vector<CPoly> cpoly_basis(const MilnorAlgebra& algebra) {
    std::vector<CPoly> out;
    for (const auto& m : algebra.monomial_basis) {
        CPoly p{algebra.source.vars(), {}};
        ExponentVector e = m;
        e.e.resize(algebra.source.nvars());
        p.terms.emplace_back(e, std::complex<double>(1.0, 0.0));
        out.push_back(std::move(p));
    }
    return out;
}

CMatrix residue_pairing(const DeformationFamily& family,
                        const std::vector<std::complex<double>>& t,
                        const std::vector<CPoly>& basis) {
    if (family.base.nvars() != 1)
        throw std::domain_error("residue pairing is implemented for one-variable families");
    CPoly f = family.member(t);
    Critical1D cd = critical_points_1d(f);
    if (!cd.morse) throw std::domain_error("residue pairing requires a Morse parameter");
    std::size_t mu = basis.size();
    CMatrix eta = CMatrix::Zero(mu, mu);
    for (std::size_t a = 0; a < cd.points.size(); ++a) {
        std::complex<double> p = cd.points[a], h = cd.hessians[a];
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = 0; j < mu; ++j)
                eta(i, j) += basis[i].eval1(p) * basis[j].eval1(p) / h;
    }
    return eta;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

Integer moduli_dimension(long n, long d) { return binomial(n - 1 + d, d) - Integer(n) * n; }

Integer marginal_count(long n, long d) {
    return binomial(n - 1 + d, n - 1) - Integer(n) - Integer(n) * (n - 1);
}

ModuliCount moduli_count(long n, long d) {
    if (n < 2 || d < 2) throw std::invalid_argument("moduli_count requires n, d >= 2");
    ModuliCount m;
    m.n = n;
    m.d = d;
    m.marginal_count = marginal_count(n, d);
    if (n == 4 && d == 4) {
        // K3 quartic: one complex-structure direction is non-algebraic, the
        // geometric moduli dimension is 20 while the unfolding count is 19
        m.moduli_dim = 20;
        m.exceptional = true;
    } else {
        m.moduli_dim = moduli_dimension(n, d);
    }
    return m;
}

std::optional<Integer> milnor_from_weights(const LaurentPolynomial& w) {
    auto q = quasi_weights(w);
    if (!q) return std::nullopt;
    Rational prod = 1;
    for (const auto& qi : q->q) prod *= (Rational(1) / qi - 1);
    if (denominator(prod) != 1 || prod < 0) return std::nullopt;
    return numerator(prod);
}

}  // namespace lgtt
