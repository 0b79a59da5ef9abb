#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trimcc/monomial_order.hpp"
#include "trimcc/rational.hpp"
#include "trimcc/ring.hpp"

namespace trimcc {

struct Term {
    Rational coef;
    Exponents exps;
};

// Largest permitted exponent; crossing it raises ComputationLimitError
// rather than wrapping.
constexpr std::int32_t kMaxExponent = 1 << 30;

// Canonical term comparison: grevlex over the full variable list.
int canonical_cmp(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over Q.  Terms are kept sorted strictly
// descending under the ring-canonical grevlex order, with no zero
// coefficients and no duplicate exponent vectors.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero(PolynomialRing::Ptr ring);
    static Polynomial constant(PolynomialRing::Ptr ring, const Rational& c);
    static Polynomial variable(PolynomialRing::Ptr ring, int var);
    static Polynomial monomial(PolynomialRing::Ptr ring, const Rational& c, Exponents e);
    static Polynomial from_terms(PolynomialRing::Ptr ring, std::vector<Term> terms);

    const PolynomialRing::Ptr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(long e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(int var) const;

    long long total_degree() const; // -1 for zero
    // Degree in the given variable group.
    long long degree_in(const std::vector<int>& vars) const;
    bool is_homogeneous() const;
    // Per-ring-block degrees when the polynomial is homogeneous in every
    // block, std::nullopt otherwise.
    std::optional<std::vector<long long>> block_degrees() const;

    Rational evaluate(const std::vector<Rational>& point) const;
    // Maps variable i to images[i]; images live in a common ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Same polynomial in a structurally extended ring (old vars keep indices).
    Polynomial lifted(PolynomialRing::Ptr bigger) const;
    // Inverse of lifted: requires support within the first nvars of `smaller`
    // matching by name.
    Polynomial restricted(PolynomialRing::Ptr smaller) const;

    const Term& leading_term(const MonomialOrder& order) const;
    Rational leading_coef_canonical() const; // first (canonical-max) term
    Polynomial monic(const MonomialOrder& order) const;

    std::string str() const;

private:
    PolynomialRing::Ptr ring_;
    std::vector<Term> terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Entry (i,j) = d(gens[i]) / d(vars[j]).  All generators must share a ring.
PolyMatrix jacobian_matrix(const std::vector<Polynomial>& gens, const std::vector<int>& vars);

// All k x k minors of M, expanded, nonzero, in deterministic
// (row-subset, column-subset) lexicographic order.
std::vector<Polynomial> minors_ideal_generators(const PolyMatrix& M, int k);

Polynomial poly_matrix_determinant(const PolyMatrix& M);

// Deterministic seeded linear form in the block's variables, integer
// coefficients in [-10^4, 10^4], never identically zero.
Polynomial random_linear_form(const PolynomialRing::Ptr& ring, const std::string& block,
                              std::uint64_t seed);

// Deterministic seed derivation for nested generic choices.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t counter);

} // namespace trimcc
