#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "toricode/field.hpp"
#include "toricode/geometry.hpp"

namespace toricode {

/// Polynomial over a finite field stored as its nonzero terms, keyed by
/// exponent vector.  The field is held by pointer and must outlive the
/// polynomial.
class SparsePolynomial {
public:
    SparsePolynomial(const FiniteField& f, std::uint32_t nvars);

    const FiniteField& field() const { return *f_; }
    std::uint32_t variable_count() const { return nvars_; }

    /// Adds coeff * x^e, merging with an existing term and dropping it if
    /// the sum cancels.
    void add_term(const ExponentVector& e, FieldEnc coeff);

    const std::map<ExponentVector, FieldEnc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest total degree of a term; nullopt for the zero polynomial.
    std::optional<std::uint64_t> total_degree() const;

    /// All terms share one total degree.  The zero polynomial counts as
    /// homogeneous.
    bool is_homogeneous() const;

    /// Evaluation with the convention 0^0 = 1.
    FieldEnc evaluate(const ProjectivePoint& x) const;

    /// Reduces every exponent mod q-1, merging terms.  Agrees with the
    /// original on points with all coordinates nonzero, where t^(q-1) = 1.
    SparsePolynomial torus_canonical_form() const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial scaled(FieldEnc c) const;

private:
    void same_shape(const SparsePolynomial& o) const;

    const FiniteField* f_;
    std::uint32_t nvars_;
    std::map<ExponentVector, FieldEnc> terms_;
};

/// C(n, k), zero when n < k (negative n included); throws
/// std::overflow_error past 64 bits.
std::uint64_t binomial_coefficient(long long n, std::uint32_t k);

/// Number of monomials of the given total degree in nvars variables,
/// C(degree + nvars - 1, nvars - 1).
std::uint64_t monomial_count(std::uint32_t degree, std::uint32_t nvars);

/// Exponent vectors of all monomials of the given total degree, in
/// descending lexicographic order (so x1^degree first, x_nvars^degree
/// last).
std::vector<ExponentVector> monomials_of_degree(std::uint32_t degree,
                                                std::uint32_t nvars);

}
