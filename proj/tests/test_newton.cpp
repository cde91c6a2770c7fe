#include <random>

#include "doctest.h"
#include "lgtt/newton.hpp"
#include "lgtt/singularity.hpp"

using namespace lgtt;

namespace {
LaurentPolynomial P(const std::string& s, const std::vector<std::string>& vars) {
    return LaurentPolynomial::parse(s, vars);
}

// integer-hull oracle in 2d: a support point is a vertex iff it is not a
// convex combination of the others (checked over a fine rational sweep of
// supporting directions; exact for the small integer supports used here)
bool is_vertex_bruteforce(const std::vector<std::array<long, 2>>& pts, std::size_t idx) {
    for (int a = -40; a <= 40; ++a)
        for (int b = -40; b <= 40; ++b) {
            if (a == 0 && b == 0) continue;
            long best = a * pts[idx][0] + b * pts[idx][1];
            bool strict = true;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k == idx) continue;
                if (a * pts[k][0] + b * pts[k][1] >= best) strict = false;
            }
            if (strict) return true;
        }
    return false;
}
}  // namespace

TEST_CASE("newton_polytope: one variable") {
    auto np = newton_polytope(P("z + 1/z", {"z"}));
    CHECK(np.dim == 1);
    REQUIRE(np.vertices.size() == 2);
    CHECK(np.interior_points.size() == 1);
    CHECK(np.interior_points[0] == ExponentVector({0}));

    auto single = newton_polytope(P("z^2", {"z"}));
    CHECK(single.dim == 0);
    CHECK(single.vertices.size() == 1);
    CHECK(single.vertices[0] == ExponentVector({2}));
    CHECK(single.interior_points.empty());
}

TEST_CASE("newton_polytope: mirror triangle") {
    auto np = newton_polytope(P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"}));
    CHECK(np.dim == 2);
    REQUIRE(np.vertices.size() == 3);
    std::vector<ExponentVector> expect = {ExponentVector({1, 0}), ExponentVector({0, 1}),
                                          ExponentVector({-1, -1})};
    for (const auto& v : expect)
        CHECK(std::find(np.vertices.begin(), np.vertices.end(), v) != np.vertices.end());
    REQUIRE(np.interior_points.size() == 1);
    CHECK(np.interior_points[0] == ExponentVector({0, 0}));
    // face lattice: 3 edges + 3 vertices
    int edges = 0, verts = 0;
    for (const auto& f : np.faces) {
        if (f.dim == 1) ++edges;
        if (f.dim == 0) ++verts;
    }
    CHECK(edges == 3);
    CHECK(verts == 3);
}

TEST_CASE("newton_polytope vertices match the brute-force oracle (random 2d supports)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::array<long, 2>> pts;
        LaurentPolynomial p({"x", "y"});
        int m = 3 + static_cast<int>(rng() % 6);
        for (int i = 0; i < m; ++i) {
            std::array<long, 2> q{d(rng), d(rng)};
            if (std::find(pts.begin(), pts.end(), q) != pts.end()) continue;
            pts.push_back(q);
            p.set_term(ExponentVector({q[0], q[1]}), GaussianRational(1));
        }
        if (p.terms().size() < 3) continue;
        auto np = newton_polytope(p);
        if (np.dim < 2) continue;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool oracle = is_vertex_bruteforce(pts, i);
            bool got = std::find(np.vertices.begin(), np.vertices.end(),
                                 ExponentVector({pts[i][0], pts[i][1]})) != np.vertices.end();
            CHECK(oracle == got);
        }
    }
}

TEST_CASE("is_convenient") {
    CHECK(is_convenient(P("z + 1/z", {"z"})));
    CHECK(!is_convenient(P("z + z^2", {"z"})));
    CHECK(is_convenient(P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"})));
    // convenience invariant under unimodular monomial substitution z -> z^U:
    // (x, y) -> (x y, y) maps exponents (a, b) -> (a, a + b)
    auto f = P("x + y + 1/(x*y)", {"x", "y"});
    LaurentPolynomial g({"x", "y"});
    for (const auto& [mm, c] : f.terms())
        g.set_term(ExponentVector({mm[0], mm[0] + mm[1]}), c);
    CHECK(is_convenient(f) == is_convenient(g));
}

TEST_CASE("face_polynomial") {
    auto f = P("z + 1/z", {"z"});
    auto np = newton_polytope(f);
    bool found = false;
    for (const auto& face : np.faces) {
        if (face.dim != 0) continue;
        auto fp = face_polynomial(f, np, face);
        CHECK(fp.terms().size() == 1);
        found = true;
    }
    CHECK(found);

    auto tri = P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"});
    auto np2 = newton_polytope(tri);
    for (const auto& face : np2.faces) {
        if (face.dim != 1) continue;
        auto fp = face_polynomial(tri, np2, face);
        CHECK(fp.terms().size() == 2);  // every edge of the triangle carries two terms
    }
    // foreign face
    PolytopeFace alien;
    alien.dim = 1;
    alien.normal = {5, 7};
    alien.offset = 3;
    CHECK_THROWS_AS(face_polynomial(tri, np2, alien), std::invalid_argument);
}

TEST_CASE("is_nondegenerate_laurent") {
    auto c1 = is_nondegenerate_laurent(P("z + 1/z", {"z"}));
    CHECK(c1.kind == NondegeneracyCertificate::ExactYes);

    auto c2 = is_nondegenerate_laurent(P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"}));
    CHECK(c2.kind == NondegeneracyCertificate::ExactYes);

    // f = z + 2 + 1/z = (z+1)^2/z vanishes doubly at z = -1
    auto c3 = is_nondegenerate_laurent(P("z + 2 + 1/z", {"z"}));
    REQUIRE(c3.kind == NondegeneracyCertificate::ExactNo);
    REQUIRE(c3.witness.size() == 1);
    CHECK(std::abs(c3.witness[0] - std::complex<double>(-1, 0)) < 1e-8);

    // degenerate edge in two variables: (z1 - z2)^2 + interior point
    auto c4 = is_nondegenerate_laurent(
        P("z1^2 - 2*z1*z2 + z2^2 + 1/(z1*z2)", {"z1", "z2"}));
    CHECK(c4.kind == NondegeneracyCertificate::ExactNo);

    // three variables goes through the sampling path
    auto c5 = is_nondegenerate_laurent(P("x + y + z + 1/(x*y*z)", {"x", "y", "z"}), 42, 64);
    CHECK((c5.kind == NondegeneracyCertificate::ProbabilisticYes ||
           c5.kind == NondegeneracyCertificate::ExactYes));
}

TEST_CASE("subdiagram_basis") {
    auto b1 = subdiagram_basis(P("z + 1/z", {"z"}));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == P("1", {"z"}));

    auto b2 = subdiagram_basis(P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"}));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == P("1", {"z1", "z2"}));

    // hull [-1, 2]: interior lattice {0, 1}; both classes independent in Q_f
    auto b3 = subdiagram_basis(P("z^2 + 1/z", {"z"}));
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == P("1", {"z"}));
    CHECK(b3[1] == P("z", {"z"}));
}

TEST_CASE("hull idempotence on face restriction") {
    auto tri = P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"});
    auto np = newton_polytope(tri);
    for (const auto& face : np.faces) {
        if (face.dim != 1) continue;
        auto fp = face_polynomial(tri, np, face);
        auto sub = newton_polytope(fp);
        for (const auto& v : sub.vertices)
            CHECK(std::find(np.vertices.begin(), np.vertices.end(), v) != np.vertices.end());
    }
}

TEST_CASE("subdiagram deformation of the triangle stays convenient and nondegenerate") {
    auto tri = P("z1 + z2 + 1/(z1*z2)", {"z1", "z2"});
    auto basis = subdiagram_basis(tri);
    // random parameters: f + t * 1 stays convenient and nondegenerate
    for (double tr : {0.5, -1.25, 3.0}) {
        LaurentPolynomial f = tri;
        for (const auto& g : basis) {
            GaussianRational c(Rational(static_cast<long>(tr * 4), 4));
            f = f + g.scaled(c);
        }
        CHECK(is_convenient(f));
        auto nd = is_nondegenerate_laurent(f);
        CHECK(nd.kind == NondegeneracyCertificate::ExactYes);
    }
}
