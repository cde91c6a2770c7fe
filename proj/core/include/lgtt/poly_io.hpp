#pragma once

#include <string>

#include "lgtt/poly.hpp"

namespace lgtt {

/// Canonical structured-text document for a polynomial:
///   {"vars": [...], "terms": [{"exp": [..], "re": "p/q", "im": "p/q"}, ...]}
/// Terms are emitted in descending grevlex order; round-trips bit-exactly.
std::string write_polynomial(const LaurentPolynomial& p);
LaurentPolynomial read_polynomial(const std::string& text);

/// Family document adds "deformers", "t" and "tau" fields.
std::string write_family(const DeformationFamily& f);
DeformationFamily read_family(const std::string& text);

LaurentPolynomial load_polynomial_file(const std::string& path);
DeformationFamily load_family_file(const std::string& path);
bool file_is_family(const std::string& path);

}  // namespace lgtt
