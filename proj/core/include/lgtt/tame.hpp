#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgtt/poly.hpp"

namespace lgtt {

enum class DeformationClass { Relevant, Marginal, Irrelevant };

/// Sign of the coupling weight 1 - <exp(g), q> for a monomial deformer.
DeformationClass classify_deformation_monomial(const LaurentPolynomial& w,
                                               const LaurentPolynomial& g);

/// delta_i = q_i / min_j(1 - q_j), exact.
struct GrowthExponents {
    std::vector<Rational> delta;
    bool all_at_most_one = false;
    bool all_below_one = false;
};

GrowthExponents growth_exponents(const WeightSystem& q);

struct RadialProbeRow {
    double radius = 0;
    double min_value = 0;                          // min over sphere of |grad f|^2 - C |hess f|
    std::vector<std::complex<double>> argmin;
};

struct RadialProbe {
    double c = 1.0;
    std::vector<RadialProbeRow> rows;
    bool increasing = false;
};

RadialProbe radial_probe(const DeformationFamily& family, double c,
                         const std::vector<double>& radii, int samples_per_sphere,
                         unsigned seed);

struct TamenessCertificate {
    enum Verdict { StronglyTame, NotStronglyTame, Evidence, Unknown } verdict = Unknown;
    std::string rule;  // which sufficient rule fired
    std::optional<RadialProbe> probe;
};

/// Sufficient rules:
///  (a) quasi-homogeneous polynomial, all weights <= 1/2, finite mu, and every
///      deformer of coupling weight >= 0 (lower/marginal deformation);
///  (b) convenient and nondegenerate Laurent base with subdiagram deformers.
/// Anything else stays Evidence/Unknown; a probe never upgrades the verdict.
TamenessCertificate tameness_certificate(const DeformationFamily& family, bool with_probe = false,
                                         unsigned seed = 20240901);

}  // namespace lgtt
