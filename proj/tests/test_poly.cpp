#include <complex>
#include <random>

#include "doctest.h"
#include "lgtt/poly.hpp"
#include "lgtt/smith.hpp"

using namespace lgtt;

namespace {

LaurentPolynomial P(const std::string& s, const std::vector<std::string>& vars) {
    return LaurentPolynomial::parse(s, vars);
}

// brute-force oracle: order of the diagonal symmetry group by enumerating all
// phase vectors with denominator dividing D
Integer symmetry_order_bruteforce(const LaurentPolynomial& p, long d_max) {
    std::size_t n = p.nvars();
    Integer count = 0;
    std::vector<long> num(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (const auto& [m, c] : p.terms()) {
                long s = 0;
                for (std::size_t k = 0; k < n; ++k) s += m[k] * num[k];
                if (s % d_max != 0) return;
            }
            count += 1;
            return;
        }
        for (long v = 0; v < d_max; ++v) {
            num[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("parse: examples and canonical form") {
    auto p = P("z^3/3 - z", {"z"});
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff(ExponentVector({3})) == GaussianRational(Rational(1, 3)));
    CHECK(p.coeff(ExponentVector({1})) == GaussianRational(Rational(-1)));

    auto q = P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"});
    CHECK(q.terms().size() == 3);
    CHECK(q.coeff(ExponentVector({-1, -1})) == GaussianRational(1));
    CHECK(q.coeff(ExponentVector({1, 0})) == GaussianRational(1));

    CHECK(P("0", {"z"}).is_zero());
    CHECK(P("(1+i)*x", {"x"}).coeff(ExponentVector({1})) ==
          GaussianRational(Rational(1), Rational(1)));
    CHECK(P("x^2 - x - (x^2 - x)", {"x"}).is_zero());
}

TEST_CASE("parse: errors carry position") {
    CHECK_THROWS_AS(P("z + w", {"z"}), std::invalid_argument);
    CHECK_THROWS_AS(P("z +", {"z"}), std::invalid_argument);
    CHECK_THROWS_AS(P("z^", {"z"}), std::invalid_argument);
    CHECK_THROWS_AS(P("1/(z+1)", {"z"}), std::invalid_argument);  // non-monomial divisor
}

TEST_CASE("partial derivatives") {
    auto p = P("z^3/3 - z", {"z"});
    CHECK(partial_derivative(p, 0) == P("z^2 - 1", {"z"}));
    CHECK(partial_derivative(P("z + 1/z", {"z"}), 0, true) == P("z - 1/z", {"z"}));
    auto q = P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"});
    CHECK(partial_derivative(q, 0) == P("1 - 1/(z1^2*z2)", {"z1", "z2"}));
    CHECK_THROWS_AS(partial_derivative(p, 3), std::out_of_range);
}

TEST_CASE("quasi_weights") {
    auto w1 = quasi_weights(P("x^3 + y^4", {"x", "y"}));
    REQUIRE(w1.has_value());
    CHECK(w1->q[0] == Rational(1, 3));
    CHECK(w1->q[1] == Rational(1, 4));
    CHECK(w1->degree == 12);

    auto w2 = quasi_weights(P("x^3 + x*y^3", {"x", "y"}));
    REQUIRE(w2.has_value());
    CHECK(w2->q[0] == Rational(1, 3));
    CHECK(w2->q[1] == Rational(2, 9));

    CHECK(!quasi_weights(P("x^2 + x", {"x"})).has_value());
    CHECK(!quasi_weights(P("z + 1/z", {"z"})).has_value());  // not a polynomial

    // every stored monomial has weight exactly 1
    auto p = P("x^5 + x*y^3 + y^7*x", {"x", "y"});
    auto w = quasi_weights(p);
    if (w)
        for (const auto& [m, c] : p.terms()) CHECK(w->weight_of(m) == 1);
}

TEST_CASE("classify_invertible") {
    auto f = classify_invertible(P("z^5", {"z"}));
    REQUIRE(f.invertible);
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].kind == InvertibleBlock::Fermat);
    CHECK(f.blocks[0].exponents == std::vector<long>{5});

    auto l = classify_invertible(P("x^2*y + y^3*z + z^4*x", {"x", "y", "z"}));
    REQUIRE(l.invertible);
    REQUIRE(l.blocks.size() == 1);
    CHECK(l.blocks[0].kind == InvertibleBlock::Loop);
    CHECK(l.blocks[0].exponents.size() == 3);

    auto c = classify_invertible(P("x^3*y + y^4*z + z^5", {"x", "y", "z"}));
    REQUIRE(c.invertible);
    REQUIRE(c.blocks.size() == 1);
    CHECK(c.blocks[0].kind == InvertibleBlock::Chain);
    CHECK(c.blocks[0].exponents == std::vector<long>{3, 4, 5});

    auto n = classify_invertible(P("x^3 + y^3 + z^3 + x*y*z", {"x", "y", "z"}));
    CHECK(!n.invertible);  // 4 terms, 3 vars
    CHECK(n.reason.find("term count") != std::string::npos);

    // blocks summed back reproduce the polynomial's monomials
    auto mix = P("x^3 + y^2*w + w^5*y", {"x", "y", "w"});
    auto m = classify_invertible(mix);
    REQUIRE(m.invertible);
    std::size_t total_vars = 0;
    for (const auto& b : m.blocks) total_vars += b.vars.size();
    CHECK(total_vars == 3);
}

TEST_CASE("smith normal form: random matrices keep U S V = product and unimodularity") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMatrix a(rows, std::vector<Integer>(cols));
        for (auto& row : a)
            for (auto& x : row) x = d(rng);
        SmithResult s = smith_normal_form(a);
        IntMatrix usv = int_mat_mul(int_mat_mul(s.u, a), s.v);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                CHECK(usv[i][j] == s.s[i][j]);
                if (i != j) CHECK(s.s[i][j] == 0);
            }
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i)
            if (s.s[i][i] != 0 && s.s[i + 1][i + 1] != 0)
                CHECK(s.s[i + 1][i + 1] % s.s[i][i] == 0);
    }
}

TEST_CASE("diagonal_symmetries") {
    // x^3 + y^3: order 9, J = (1/3, 1/3); oracle by brute force over 1/3 grid
    auto p = P("x^3 + y^3", {"x", "y"});
    auto g = diagonal_symmetries(p);
    CHECK(g.order == 9);
    CHECK(symmetry_order_bruteforce(p, 3) == 9);
    REQUIRE(g.j_element.size() == 2);
    CHECK(g.j_element[0] == Rational(1, 3));
    CHECK(g.j_element[1] == Rational(1, 3));
    CHECK(g.contains(g.j_element, p));

    auto z2 = P("z^2", {"z"});
    auto g2 = diagonal_symmetries(z2);
    CHECK(g2.order == 2);
    CHECK(g2.j_element[0] == Rational(1, 2));

    // E7: order 9 cyclic, (1/3, 2/9) generates
    auto e7 = P("x^3 + x*y^3", {"x", "y"});
    auto g7 = diagonal_symmetries(e7);
    CHECK(g7.order == 9);
    CHECK(symmetry_order_bruteforce(e7, 9) == 9);
    CHECK(g7.orders.size() == 1);  // cyclic
    CHECK(g7.contains({Rational(1, 3), Rational(2, 9)}, e7));

    // group closure under addition mod 1
    for (const auto& a : g7.generators) {
        std::vector<Rational> sum(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rational s = a[i] + a[i];
            Integer fl = numerator(s) / denominator(s);
            sum[i] = s - Rational(fl);
        }
        CHECK(g7.contains(sum, e7));
    }

    CHECK_THROWS_AS(diagonal_symmetries(P("x*y", {"x", "y"})), std::domain_error);
}

TEST_CASE("twisted_sector") {
    auto p = P("x^3 + y^3", {"x", "y"});
    auto s = twisted_sector(p, {Rational(1, 3), Rational(0)});
    CHECK(s.n_fixed == 1);
    REQUIRE(s.fixed_vars.size() == 1);
    CHECK(s.fixed_vars[0] == 1);
    CHECK(s.restriction == P("y^3", {"x", "y"}));

    auto id = twisted_sector(p, {Rational(0), Rational(0)});
    CHECK(id.n_fixed == 2);
    CHECK(id.restriction == p);

    auto none = twisted_sector(p, {Rational(1, 3), Rational(2, 3)});
    CHECK(none.n_fixed == 0);
    CHECK(none.restriction.is_zero());

    CHECK_THROWS_AS(twisted_sector(p, {Rational(1, 2), Rational(0)}), std::domain_error);
}

TEST_CASE("deformation family evaluation") {
    DeformationFamily fam;
    fam.base = P("z^3/3", {"z"});
    fam.deformers = {P("1", {"z"}), P("z", {"z"})};
    CPoly f = fam.member({{1.0, 0.0}, {-1.0, 0.0}});
    CHECK(std::abs(f.eval1({2.0, 0.0}) - (8.0 / 3 + 1.0 - 2.0)) < 1e-12);
    auto exact = fam.member_exact({GaussianRational(1), GaussianRational(Rational(-1))});
    CHECK(exact == P("z^3/3 - z + 1", {"z"}));
}
