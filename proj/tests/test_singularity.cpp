#include <complex>
#include <functional>

#include "doctest.h"
#include "lgtt/singularity.hpp"

using namespace lgtt;

namespace {
LaurentPolynomial P(const std::string& s, const std::vector<std::string>& vars) {
    return LaurentPolynomial::parse(s, vars);
}
}  // namespace

TEST_CASE("milnor_algebra: E6 and small cases") {
    // E6 = x^3 + y^4: reduced basis leading terms x^2, y^3; mu = 6,
    // standard monomials {1, x, y, y^2, xy, xy^2}
    auto a = milnor_algebra(P("x^3 + y^4", {"x", "y"}));
    REQUIRE(a.finite);
    CHECK(a.mu == 6);
    std::vector<ExponentVector> expect = {ExponentVector({0, 0}), ExponentVector({1, 0}),
                                          ExponentVector({0, 1}), ExponentVector({1, 1}),
                                          ExponentVector({0, 2}), ExponentVector({1, 2})};
    for (const auto& m : expect)
        CHECK(std::find(a.monomial_basis.begin(), a.monomial_basis.end(), m) !=
              a.monomial_basis.end());

    auto z2 = milnor_algebra(P("z^2", {"z"}));
    REQUIRE(z2.finite);
    CHECK(z2.mu == 1);

    // z^{n+1} -> mu = n
    for (long n = 1; n <= 6; ++n) {
        auto an = milnor_algebra(P("z^" + std::to_string(n + 1), {"z"}));
        REQUIRE(an.finite);
        CHECK(an.mu == static_cast<std::size_t>(n));
    }

    // infinite mu reported, not an error
    auto inf = milnor_algebra(P("x^2", {"x", "y"}));
    CHECK(!inf.finite);
}

TEST_CASE("milnor_algebra: normal form kills the Jacobi ideal") {
    auto a = milnor_algebra(P("x^3 + y^4", {"x", "y"}));
    auto dx = partial_derivative(P("x^3 + y^4", {"x", "y"}), 0);
    auto dy = partial_derivative(P("x^3 + y^4", {"x", "y"}), 1);
    CHECK(a.normal_form_poly(dx).is_zero());
    CHECK(a.normal_form_poly(dy).is_zero());
}

TEST_CASE("milnor numbers: product-of-weights oracle (exact rationals)") {
    // mu(W) = prod(1/q_i - 1) for quasi-homogeneous nondegenerate W
    std::vector<std::string> ws = {"x^3 + y^4", "x^3 + x*y^3", "x^3 + y^5", "x^4 + y^4",
                                   "x^2 + y^7"};
    for (const auto& s : ws) {
        auto w = P(s, {"x", "y"});
        auto mu_alg = milnor_algebra(w);
        auto mu_wt = milnor_from_weights(w);
        REQUIRE(mu_alg.finite);
        REQUIRE(mu_wt.has_value());
        CHECK(Integer(mu_alg.mu) == *mu_wt);
    }
    // three variables: P8-like Fermat cubic
    auto f3 = P("x^3 + y^3 + z^3", {"x", "y", "z"});
    CHECK(Integer(milnor_algebra(f3).mu) == *milnor_from_weights(f3));
}

TEST_CASE("milnor_algebra: Laurent cases via saturation") {
    auto a = milnor_algebra(P("z + 1/z", {"z"}));
    REQUIRE(a.finite);
    CHECK(a.mu == 2);

    auto tri = milnor_algebra(P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"}));
    REQUIRE(tri.finite);
    CHECK(tri.mu == 3);
}

TEST_CASE("milnor_number_disk: argument-principle counts") {
    CPoly z3{{"z"}, {{ExponentVector({3}), {1.0, 0.0}}}};
    CHECK(milnor_number_disk(z3, {0, 0}, 1.0) == 2);

    CPoly z1{{"z"}, {{ExponentVector({1}), {1.0, 0.0}}}};
    CHECK(milnor_number_disk(z1, {0, 0}, 2.0) == 0);

    CPoly a2{{"z"},
             {{ExponentVector({3}), {1.0 / 3, 0.0}}, {ExponentVector({1}), {-1.0, 0.0}}}};
    CHECK(milnor_number_disk(a2, {0, 0}, 2.0) == 2);
    // disk containing only one of the simple zeros of z^2 - 1
    CHECK(milnor_number_disk(a2, {1.0, 0.0}, 0.5) == 1);
    // boundary through a critical point must throw
    CHECK_THROWS(milnor_number_disk(a2, {0, 0}, 1.0, 1e-3));
}

TEST_CASE("multiplication matrices: A2 frame") {
    // f = z^3/3 + t2 z + t1 at exact t2, basis {1, z}
    DeformationFamily fam;
    fam.base = P("z^3/3", {"z"});
    fam.deformers = {P("1", {"z"}), P("z", {"z"})};
    auto member = fam.member_exact({GaussianRational(0), GaussianRational(Rational(-1))});
    auto alg = milnor_algebra(member);  // f' = z^2 - 1
    REQUIRE(alg.finite);
    REQUIRE(alg.mu == 2);

    auto bz = multiplication_matrix_exact(alg, P("z", {"z"}));
    // z * 1 = z, z * z = z^2 = 1 (mod z^2 - 1) -> [[0,1],[1,0]] with t2 = -1
    CHECK(bz[0][0] == GaussianRational(0));
    CHECK(bz[1][0] == GaussianRational(1));
    CHECK(bz[0][1] == GaussianRational(1));
    CHECK(bz[1][1] == GaussianRational(0));

    auto id = multiplication_matrix_exact(alg, P("1", {"z"}));
    CHECK(id[0][0] == GaussianRational(1));
    CHECK(id[0][1] == GaussianRational(0));
    CHECK(id[1][1] == GaussianRational(1));

    // f itself: f*1 = t1 + (2 t2/3) z with t1 = 0, t2 = -1 -> -(2/3) z
    auto bf = multiplication_matrix_exact(alg, member);
    CHECK(bf[0][0] == GaussianRational(0));
    CHECK(bf[1][0] == GaussianRational(Rational(-2, 3)));

    // ring commutativity: [B_g, B_h] = 0 exactly
    auto bz2 = multiplication_matrix_exact(alg, P("z^2", {"z"}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            GaussianRational lhs, rhs;
            for (int k = 0; k < 2; ++k) {
                lhs += bz[i][k] * bz2[k][j];
                rhs += bz2[i][k] * bz[k][j];
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("multiplication matrix with symbolic-style parameters (generic t2)") {
    // spec example with t2 kept exact: z*z = -t2 mod (z^2 + t2), take t2 = 5/7
    DeformationFamily fam;
    fam.base = P("z^3/3", {"z"});
    fam.deformers = {P("1", {"z"}), P("z", {"z"})};
    GaussianRational t2(Rational(5, 7));
    auto alg = milnor_algebra(fam.member_exact({GaussianRational(0), t2}));
    auto bz = multiplication_matrix_exact(alg, P("z", {"z"}));
    CHECK(bz[0][1] == -t2);
    CHECK(bz[1][0] == GaussianRational(1));
}

TEST_CASE("residue pairing: A2, single Morse point, A3") {
    DeformationFamily a2;
    a2.base = P("z^3/3", {"z"});
    a2.deformers = {P("1", {"z"}), P("z", {"z"})};
    std::vector<CPoly> basis = {to_cpoly(P("1", {"z"})), to_cpoly(P("z", {"z"}))};

    // eta = [[0,1],[1,0]] for all t2 != 0
    for (auto t2 : {std::complex<double>(-1, 0), std::complex<double>(0.3, 0.2),
                    std::complex<double>(2, -1)}) {
        CMatrix eta = residue_pairing(a2, {{0, 0}, t2}, basis);
        CHECK(std::abs(eta(0, 0)) < 1e-10);
        CHECK(std::abs(eta(0, 1) - 1.0) < 1e-10);
        CHECK(std::abs(eta(1, 0) - 1.0) < 1e-10);
        CHECK(std::abs(eta(1, 1)) < 1e-10);
    }

    // f = z^2/2: eta(1,1) = 1
    DeformationFamily q;
    q.base = P("z^2/2", {"z"});
    q.deformers = {P("1", {"z"})};
    CMatrix e1 = residue_pairing(q, {{0, 0}}, {to_cpoly(P("1", {"z"}))});
    CHECK(std::abs(e1(0, 0) - 1.0) < 1e-12);

    // A3: f = z^4/4 + t z^2/2 at generic t: eta(1,z^2)=eta(z,z)=1, eta(1,1)=eta(1,z)=0
    DeformationFamily a3;
    a3.base = P("z^4/4", {"z"});
    a3.deformers = {P("1", {"z"}), P("z", {"z"}), P("z^2/2", {"z"})};
    std::vector<CPoly> b3 = {to_cpoly(P("1", {"z"})), to_cpoly(P("z", {"z"})),
                             to_cpoly(P("z^2", {"z"}))};
    CMatrix eta3 = residue_pairing(a3, {{0, 0}, {0, 0}, {0.7, 0.1}}, b3);
    CHECK(std::abs(eta3(0, 2) - 1.0) < 1e-9);
    CHECK(std::abs(eta3(1, 1) - 1.0) < 1e-9);
    CHECK(std::abs(eta3(0, 0)) < 1e-9);
    CHECK(std::abs(eta3(0, 1)) < 1e-9);

    // eta-symmetry: B_g self-adjoint w.r.t. eta at a Morse parameter
    auto alg = milnor_algebra(a2.member_exact({GaussianRational(0), GaussianRational(Rational(-1))}));
    CMatrix bz = multiplication_matrix(alg, P("z", {"z"}));
    CMatrix eta = residue_pairing(a2, {{0, 0}, {-1, 0}}, basis);
    CMatrix s = eta * bz;
    CHECK((s - s.transpose()).norm() < 1e-10);
}

TEST_CASE("moduli counts") {
    CHECK(moduli_dimension(5, 5) == 101);
    CHECK(moduli_dimension(3, 3) == 1);
    CHECK(marginal_count(4, 4) == 19);
    auto m44 = moduli_count(4, 4);
    CHECK(m44.exceptional);
    CHECK(m44.moduli_dim == 20);
    CHECK(m44.marginal_count == 19);
    for (long n = 4; n <= 8; ++n)
        for (long d = 3; d <= 8; ++d) {
            if (n == 4 && d == 4) continue;
            auto m = moduli_count(n, d);
            CHECK(!m.exceptional);
            CHECK(m.moduli_dim == m.marginal_count);
        }
}
