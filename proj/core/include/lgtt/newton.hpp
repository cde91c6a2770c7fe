#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgtt/poly.hpp"

namespace lgtt {

/// Face of a Newton polytope: dimension, member vertices, and a supporting
/// inequality <normal, x> = offset (with <normal, x> <= offset on the hull).
struct PolytopeFace {
    int dim = 0;
    std::vector<std::size_t> vertex_ids;
    std::vector<long> normal;
    long offset = 0;
};

struct NewtonPolytope {
    std::size_t nvars = 0;
    int dim = -1;  // affine dimension of the hull
    std::vector<ExponentVector> vertices;
    std::vector<PolytopeFace> faces;            // proper faces, all dimensions (n <= 3)
    std::vector<ExponentVector> interior_points;
    bool faces_enumerated = false;

    bool contains_origin_interior() const;
};

/// Exact integer hull of the support of f; full face lattice for n <= 3.
NewtonPolytope newton_polytope(const LaurentPolynomial& f);

bool is_convenient(const LaurentPolynomial& f);

/// Restriction of f to the exponents lying on the given face.
LaurentPolynomial face_polynomial(const LaurentPolynomial& f, const NewtonPolytope& np,
                                  const PolytopeFace& face);

struct NondegeneracyCertificate {
    enum Kind { ExactYes, ExactNo, ProbabilisticYes, Unknown } kind = Unknown;
    std::vector<std::complex<double>> witness;  // torus zero for ExactNo
    std::string detail;
    int trials = 0;
};

/// Kouchnirenko nondegeneracy: no face system f^F = f_1^F = ... = f_n^F = 0
/// (logarithmic derivatives) has a torus solution. Exact for n <= 2 via
/// resultant elimination, randomized sampling for n >= 3.
NondegeneracyCertificate is_nondegenerate_laurent(const LaurentPolynomial& f,
                                                  unsigned seed = 12345, int trials = 256);

/// Monomials on interior lattice points whose classes are independent in the
/// Milnor algebra.
std::vector<LaurentPolynomial> subdiagram_basis(const LaurentPolynomial& f);

}  // namespace lgtt
