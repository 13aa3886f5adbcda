#pragma once

#include <cstdint>
#include <optional>

#include "toricode/codes.hpp"
#include "toricode/geometry.hpp"
#include "toricode/polynomial.hpp"

namespace toricode {

/// Upper bounds on the number of zeros of a nonzero polynomial of total
/// degree d in s variables over GF(q), each over a different point domain.
struct ZeroBounds {
    std::uint64_t schmidt = 0;      // over K^s: d q^(s-1)
    std::uint64_t homogeneous = 0;  // nonzero points, f homogeneous:
                                    //   d (q^(s-1) - 1)
    std::uint64_t torus = 0;        // over (K*)^s: d (q-1)^(s-1)
    /// Sharper torus bound (q-1)^(s-k-1) ((q-1)^(k+1) - (q-1) + ell) with
    /// d = k(q-2) + ell; present when q >= 3, d >= 1 and k <= s-1.
    std::optional<std::uint64_t> refined;
};

ZeroBounds zero_bounds(std::uint64_t d, std::uint32_t q, std::uint32_t s);

/// Exhaustive zero count of one polynomial against every applicable bound.
struct BoundCheck {
    std::uint64_t degree = 0;
    bool homogeneous = false;
    std::uint64_t affine_zeros = 0;  // over K^s
    std::uint64_t torus_zeros = 0;   // over (K*)^s
    std::uint64_t schmidt_bound = 0;
    /// Bound on affine_zeros - 1 (the origin excluded); present when the
    /// polynomial is homogeneous of positive degree.
    std::optional<std::uint64_t> homogeneous_bound;
    std::uint64_t torus_bound = 0;  // from the stated total degree
    /// Degree after reducing exponents mod q-1; absent when that reduction
    /// cancels the polynomial entirely (it then vanishes on the torus).
    std::optional<std::uint64_t> canonical_degree;
    std::optional<std::uint64_t> canonical_torus_bound;
    std::optional<std::uint64_t> refined_bound;
};

/// Counts the zeros of g (which must not be the zero polynomial) over K^s
/// and (K*)^s by full enumeration, then checks every applicable bound.  A
/// violated bound throws Discrepancy: the bounds are theorems, so a
/// violation means the arithmetic is broken.  Enumeration needs q^s points;
/// throws CapExceeded beyond point_cap.
BoundCheck verify_zero_bounds(const SparsePolynomial& g,
                              std::uint64_t point_cap = default_point_cap);

/// The degree-d homogeneous polynomial in s variables with the largest
/// possible zero set on the projective torus, built as a product of d
/// linear binomials beta^j t1 - t_i grouped by the decomposition
/// d = k(q-2) + ell.  Requires q >= 3, s >= 2 and 1 <= d <= (q-2)(s-1)-1.
SparsePolynomial extremal_polynomial(const FiniteField& f, std::uint32_t s,
                                     std::uint32_t d);

/// Largest projective-torus zero count of a nonzero degree-d form that
/// does not vanish on the whole torus: (q-1)^(s-k-2) ((q-1)^(k+1) - (q-1)
/// + ell), which also equals torus size minus the degree-d minimum
/// distance.  Same preconditions as extremal_polynomial.
std::uint64_t max_projective_zeros_formula(std::uint32_t q, std::uint32_t s,
                                           std::uint64_t d);

/// Builds the extremal polynomial, counts its projective-torus zeros by
/// enumeration, and checks the three-way identity
///   count = max zeros formula = torus size - minimum distance.
/// Returns the common value; disagreement throws Discrepancy.
std::uint64_t max_zeros_consistency(const FiniteField& f, std::uint32_t s,
                                    std::uint32_t d,
                                    std::uint64_t point_cap =
                                        default_point_cap);

}
