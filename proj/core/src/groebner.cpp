#include "lgtt/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace lgtt {

namespace {

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExponentVector lcm_exp(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

LaurentPolynomial monomial(const std::vector<std::string>& vars, const ExponentVector& m,
                           const GaussianRational& c) {
    LaurentPolynomial p(vars);
    p.set_term(m, c);
    return p;
}

}  // namespace

std::pair<ExponentVector, GaussianRational> leading_term(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("leading term of zero polynomial");
    if (!p.is_polynomial()) throw std::domain_error("leading term needs a polynomial");
    const std::pair<const ExponentVector, GaussianRational>* best = nullptr;
    for (const auto& t : p.terms())
        if (!best || grevlex_less(best->first, t.first)) best = &t;
    return {best->first, best->second};
}

LaurentPolynomial normal_form(const LaurentPolynomial& p,
                              const std::vector<LaurentPolynomial>& basis) {
    std::vector<std::pair<ExponentVector, GaussianRational>> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(leading_term(g));

    LaurentPolynomial rem(p.vars());
    LaurentPolynomial work = p;
    while (!work.is_zero()) {
        auto [m, c] = leading_term(work);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!divides(lts[i].first, m)) continue;
            auto factor = monomial(p.vars(), m - lts[i].first, c / lts[i].second);
            work = work - factor * basis[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            LaurentPolynomial lt = monomial(p.vars(), m, c);
            work = work - lt;
        }
    }
    return rem;
}

std::vector<LaurentPolynomial> groebner_basis(std::vector<LaurentPolynomial> gens) {
    std::vector<LaurentPolynomial> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(std::move(p));
    if (g.empty()) return g;
    const std::vector<std::string> vars = g[0].vars();

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.insert({i, j});

    while (!pairs.empty()) {
        auto [i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        auto [mi, ci] = leading_term(g[i]);
        auto [mj, cj] = leading_term(g[j]);
        // Buchberger's first criterion: coprime leading monomials
        ExponentVector l = lcm_exp(mi, mj);
        if (l == mi + mj) continue;
        LaurentPolynomial spoly = g[i] * monomial(vars, l - mi, GaussianRational(1) / ci) -
                                  g[j] * monomial(vars, l - mj, GaussianRational(1) / cj);
        LaurentPolynomial r = normal_form(spoly, g);
        if (r.is_zero()) continue;
        for (std::size_t k = 0; k < g.size(); ++k) pairs.insert({k, g.size()});
        g.push_back(std::move(r));
    }

    // minimalize: drop generators whose leading term is divisible by another's
    std::vector<LaurentPolynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [mi, ci] = leading_term(g[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            auto [mj, cj] = leading_term(g[j]);
            if (divides(mj, mi) && !(mj == mi && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // reduce: each element is in normal form w.r.t. the others, monic
    std::vector<LaurentPolynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<LaurentPolynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        LaurentPolynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
        if (r.is_zero()) continue;
        auto [m, c] = leading_term(r);
        reduced.push_back(r.scaled(GaussianRational(1) / c));
    }
    std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
        return grevlex_less(leading_term(a).first, leading_term(b).first);
    });
    return reduced;
}

std::optional<std::vector<ExponentVector>> standard_monomials(
    const std::vector<LaurentPolynomial>& gb, std::size_t nvars) {
    std::vector<ExponentVector> lts;
    for (const auto& g : gb) lts.push_back(leading_term(g).first);
    // finite quotient iff every variable has a pure power among leading terms
    std::vector<long> bound(nvars, -1);
    for (const auto& m : lts) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (m[i] == 0) continue;
            if (support != -1) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (m.total_degree() == 0) return std::vector<ExponentVector>{};  // ideal = (1)
        if (pure && support >= 0)
            bound[support] = bound[support] < 0 ? m[support] : std::min(bound[support], m[support]);
    }
    for (long b : bound)
        if (b < 0) return std::nullopt;

    std::vector<ExponentVector> out;
    ExponentVector cur = ExponentVector::zero(nvars);
    // enumerate the box and keep monomials not divisible by any leading term
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == nvars) {
            for (const auto& lt : lts)
                if (divides(lt, cur)) return;
            out.push_back(cur);
            return;
        }
        for (long e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

}  // namespace lgtt
