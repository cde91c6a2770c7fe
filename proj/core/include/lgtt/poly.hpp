#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgtt/rational.hpp"

namespace lgtt {

/// Integer exponent vector of a Laurent monomial. Entries may be negative.
struct ExponentVector {
    std::vector<long> e;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<long> v) : e(std::move(v)) {}
    static ExponentVector zero(std::size_t n) { return ExponentVector(std::vector<long>(n, 0)); }

    std::size_t size() const { return e.size(); }
    long operator[](std::size_t i) const { return e[i]; }
    long& operator[](std::size_t i) { return e[i]; }
    long total_degree() const {
        long d = 0;
        for (long x : e) d += x;
        return d;
    }
    bool is_polynomial() const {
        for (long x : e)
            if (x < 0) return false;
        return true;
    }
    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e == b.e; }
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) { return a.e < b.e; }
};

// Graded reverse lexicographic order in the declared variable order.
// Returns true if a < b.
bool grevlex_less(const ExponentVector& a, const ExponentVector& b);

/// Sparse Laurent polynomial over Gaussian rationals.
/// Canonical form: no zero coefficients, exponent vectors pairwise distinct.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    /// Parses a sum of coefficient*monomial expressions ("z^3/3 - z", "1/(z1*z2)", "(1+i)*x").
    /// Throws std::invalid_argument with character position on syntax errors.
    static LaurentPolynomial parse(const std::string& text, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<ExponentVector, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;  // all exponents non-negative
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    void set_term(const ExponentVector& m, const GaussianRational& c);
    void add_term(const ExponentVector& m, const GaussianRational& c);
    GaussianRational coeff(const ExponentVector& m) const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial scaled(const GaussianRational& c) const;

    /// Exact division; divisor must be a nonzero constant or a single monomial.
    LaurentPolynomial divided_by(const LaurentPolynomial& o) const;
    LaurentPolynomial pow(long k) const;

    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;
    GaussianRational evaluate_exact(const std::vector<GaussianRational>& z) const;

    /// Substitutes 0 for the variables listed in `kill`; requires no negative
    /// exponents in those variables.
    LaurentPolynomial restrict_to_zero(const std::vector<std::size_t>& kill) const;

    std::string to_string() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

  private:
    std::vector<std::string> vars_;
    std::map<ExponentVector, GaussianRational> terms_;
};

/// d/dz_i, or z_i d/dz_i when logarithmic is set.
LaurentPolynomial partial_derivative(const LaurentPolynomial& p, std::size_t i, bool logarithmic = false);

/// Quasi-homogeneous weight system: q_i = k_i/d in lowest terms with A q = 1.
struct WeightSystem {
    std::vector<Rational> q;
    Integer degree;  // common denominator d

    Rational weight_of(const ExponentVector& m) const;
};

/// Exact solution of A q = 1 over the monomial exponent rows; requires a
/// unique solution with every q_i > 0.
std::optional<WeightSystem> quasi_weights(const LaurentPolynomial& p);

/// Kreuzer-Skarke block decomposition of an invertible polynomial.
struct InvertibleBlock {
    enum Kind { Fermat, Loop, Chain } kind;
    std::vector<std::size_t> vars;   // variable indices in block order
    std::vector<long> exponents;     // a_1..a_k along the block
};

struct InvertibleClassification {
    bool invertible = false;
    std::string reason;  // set when not invertible
    std::vector<InvertibleBlock> blocks;
};

InvertibleClassification classify_invertible(const LaurentPolynomial& p);

/// Finite diagonal symmetry group presentation: phase vectors theta in [0,1)^n
/// with A.theta = 0 mod 1, by Smith normal form of the exponent matrix.
struct DiagonalSymmetryGroup {
    std::vector<std::vector<Rational>> generators;  // phase vectors
    std::vector<Integer> orders;                    // cyclic order per generator (>1)
    Integer order;                                  // total group order
    std::vector<Rational> j_element;                // J = q mod 1

    bool contains(const std::vector<Rational>& phase, const LaurentPolynomial& p) const;
};

DiagonalSymmetryGroup diagonal_symmetries(const LaurentPolynomial& p);

struct TwistedSector {
    std::vector<std::size_t> fixed_vars;
    LaurentPolynomial restriction;  // W restricted to the fixed locus
    std::size_t n_fixed = 0;
};

TwistedSector twisted_sector(const LaurentPolynomial& p, const std::vector<Rational>& phase);

/// Complex-coefficient Laurent polynomial for the numeric layers.
struct CPoly {
    std::vector<std::string> vars;
    std::vector<std::pair<ExponentVector, std::complex<double>>> terms;

    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;
    // One-variable helpers (throw unless nvars == 1).
    std::complex<double> eval1(std::complex<double> z) const;
    CPoly derivative1() const;
    long degree1() const;
    std::vector<std::complex<double>> dense1() const;  // coefficients c_0..c_deg, requires polynomial
};

CPoly to_cpoly(const LaurentPolynomial& p);

/// Deformation family f_t = f + sum_i t_i g_i, with f_{tau,t} = tau f_t.
struct DeformationFamily {
    LaurentPolynomial base;
    std::vector<LaurentPolynomial> deformers;
    std::vector<std::complex<double>> t;
    std::complex<double> tau{1.0, 0.0};

    std::size_t nparams() const { return deformers.size(); }
    CPoly member(const std::vector<std::complex<double>>& tt) const;        // f + sum t_i g_i
    CPoly member() const { return member(t); }
    LaurentPolynomial member_exact(const std::vector<GaussianRational>& tt) const;
};

}  // namespace lgtt
