#pragma once

#include <vector>

#include "lgtt/poly.hpp"

namespace lgtt {

/// Leading term under grevlex in the declared variable order.
/// Requires a genuine polynomial (no negative exponents).
std::pair<ExponentVector, GaussianRational> leading_term(const LaurentPolynomial& p);

/// Normal form of p modulo the basis (multivariate division, grevlex).
LaurentPolynomial normal_form(const LaurentPolynomial& p,
                              const std::vector<LaurentPolynomial>& basis);

/// Reduced Groebner basis (Buchberger, grevlex, Gaussian rational coefficients).
std::vector<LaurentPolynomial> groebner_basis(std::vector<LaurentPolynomial> gens);

/// Standard monomials of the leading-term ideal. Returns nullopt when the
/// quotient is infinite dimensional.
std::optional<std::vector<ExponentVector>> standard_monomials(
    const std::vector<LaurentPolynomial>& gb, std::size_t nvars);

}  // namespace lgtt
