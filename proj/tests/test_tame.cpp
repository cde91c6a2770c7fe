#include "doctest.h"
#include "lgtt/tame.hpp"

using namespace lgtt;

namespace {
LaurentPolynomial P(const std::string& s, const std::vector<std::string>& vars) {
    return LaurentPolynomial::parse(s, vars);
}
}  // namespace

TEST_CASE("growth_exponents") {
    WeightSystem q1{{Rational(1, 3), Rational(1, 4)}, 12};
    auto g1 = growth_exponents(q1);
    CHECK(g1.delta[0] == Rational(1, 2));
    CHECK(g1.delta[1] == Rational(3, 8));
    CHECK(g1.all_at_most_one);
    CHECK(g1.all_below_one);

    WeightSystem q2{{Rational(1, 2)}, 2};
    auto g2 = growth_exponents(q2);
    CHECK(g2.delta[0] == Rational(1));
    CHECK(g2.all_at_most_one);
    CHECK(!g2.all_below_one);

    WeightSystem q3{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}, 3};
    auto g3 = growth_exponents(q3);
    for (const auto& d : g3.delta) CHECK(d == Rational(1, 2));
}

TEST_CASE("classify_deformation_monomial") {
    auto p8 = P("x^3 + y^3 + z^3", {"x", "y", "z"});
    CHECK(classify_deformation_monomial(p8, P("x*y*z", {"x", "y", "z"})) ==
          DeformationClass::Marginal);

    CHECK(classify_deformation_monomial(P("z^3", {"z"}), P("z", {"z"})) ==
          DeformationClass::Relevant);

    auto e12 = P("x^3 + y^7", {"x", "y"});
    CHECK(classify_deformation_monomial(e12, P("x*y^5", {"x", "y"})) ==
          DeformationClass::Irrelevant);
}

TEST_CASE("tameness_certificate rules") {
    // P8 with the marginal deformer
    DeformationFamily p8;
    p8.base = P("x^3 + y^3 + z^3", {"x", "y", "z"});
    p8.deformers = {P("x*y*z", {"x", "y", "z"})};
    p8.t = {{0.1, 0.0}};
    auto c1 = tameness_certificate(p8);
    CHECK(c1.verdict == TamenessCertificate::StronglyTame);

    // E12 with the irrelevant deformer: no rule applies
    DeformationFamily e12;
    e12.base = P("x^3 + y^7", {"x", "y"});
    e12.deformers = {P("x*y^5", {"x", "y"})};
    e12.t = {{0.1, 0.0}};
    auto c2 = tameness_certificate(e12);
    CHECK(c2.verdict == TamenessCertificate::Unknown);

    // Laurent rule
    DeformationFamily lz;
    lz.base = P("z + 1/z", {"z"});
    auto c3 = tameness_certificate(lz);
    CHECK(c3.verdict == TamenessCertificate::StronglyTame);

    // verdicts stable under scaling f -> lambda f
    DeformationFamily p8s = p8;
    p8s.base = p8.base.scaled(GaussianRational(Rational(3)));
    // note: scaling keeps weights, so the rule still applies
    CHECK(tameness_certificate(p8s).verdict == TamenessCertificate::StronglyTame);

    // verdicts stable under variable permutation
    DeformationFamily p8p;
    p8p.base = P("z^3 + x^3 + y^3", {"y", "z", "x"});
    p8p.deformers = {P("y*z*x", {"y", "z", "x"})};
    p8p.t = {{0.1, 0.0}};
    CHECK(tameness_certificate(p8p).verdict == TamenessCertificate::StronglyTame);
}

TEST_CASE("growth exponents consistent with the rule-(a) certificate") {
    DeformationFamily p8;
    p8.base = P("x^3 + y^3 + z^3", {"x", "y", "z"});
    p8.deformers = {P("x*y*z", {"x", "y", "z"})};
    p8.t = {{0.05, 0.0}};
    REQUIRE(tameness_certificate(p8).verdict == TamenessCertificate::StronglyTame);
    auto q = quasi_weights(p8.base);
    REQUIRE(q.has_value());
    auto g = growth_exponents(*q);
    CHECK(g.all_at_most_one);
}

TEST_CASE("radial_probe") {
    // f = z^2, C = 1: |f'|^2 - C |f''| = 4 r^2 - 2 on |z| = r
    DeformationFamily q;
    q.base = P("z^2", {"z"});
    auto probe = radial_probe(q, 1.0, {1.0, 2.0, 4.0}, 64, 11);
    for (const auto& row : probe.rows)
        CHECK(std::abs(row.min_value - (4 * row.radius * row.radius - 2)) < 1e-9);
    CHECK(probe.increasing);

    // f = z: constant 1, not growing
    DeformationFamily lin;
    lin.base = P("z", {"z"});
    auto p2 = radial_probe(lin, 3.0, {1.0, 2.0}, 16, 11);
    for (const auto& row : p2.rows) CHECK(std::abs(row.min_value - 1.0) < 1e-12);
    CHECK(!p2.increasing);

    // A2 scaled: growth from radius ~3 on; dense circle sampling oracle
    DeformationFamily a2;
    a2.base = P("z^3/3 - z", {"z"});
    auto p3 = radial_probe(a2, 1.0, {3.0, 4.0, 6.0, 8.0}, 512, 11);
    CHECK(p3.increasing);

    // determinism for a fixed seed
    auto p4 = radial_probe(a2, 1.0, {3.0, 4.0, 6.0, 8.0}, 512, 11);
    for (std::size_t i = 0; i < p3.rows.size(); ++i)
        CHECK(p3.rows[i].min_value == p4.rows[i].min_value);

    // rule-(a) certified family probe is eventually increasing on {2,4,8,16}
    DeformationFamily p8;
    p8.base = P("x^3 + y^3 + z^3", {"x", "y", "z"});
    p8.deformers = {P("x*y*z", {"x", "y", "z"})};
    p8.t = {{0.1, 0.0}};
    auto p5 = radial_probe(p8, 1.0, {2.0, 4.0, 8.0, 16.0}, 256, 13);
    CHECK(p5.increasing);
}
