#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricode/field.hpp"
#include "toricode/geometry.hpp"
#include "toricode/linalg.hpp"
#include "toricode/polynomial.hpp"

namespace toricode {

inline constexpr std::uint64_t default_codeword_cap = 10'000'000;
inline constexpr std::uint64_t default_entry_cap = 100'000'000;

/// Generator data of the degree-d evaluation code on a point set: row i,
/// column j holds m_i(P_j) / P_j[0]^d, the evaluation of the i-th degree-d
/// monomial at the j-th point, normalized so the value only depends on the
/// projective point.  The code is the row space.
struct EvaluationMatrix {
    std::uint32_t degree;
    std::vector<ExponentVector> monomials;  // row labels, lex descending
    ToricSet points;                        // column labels
    GfMatrix entries;
};

EvaluationMatrix evaluation_matrix(const ToricSet& x, std::uint32_t d,
                                   std::uint64_t entry_cap =
                                       default_entry_cap);

/// Canonical basis of the degree-d forms vanishing on every point: the
/// coefficient vectors spanning the left kernel of the evaluation matrix.
std::vector<SparsePolynomial> vanishing_forms_basis(
    const EvaluationMatrix& em);

/// Exact minimum distance by scanning all q^k - 1 nonzero messages of the
/// row-space code, maintaining each codeword incrementally from the
/// previous one.  Throws CapExceeded when the scan would need more than
/// codeword_cap evaluations.
std::uint64_t min_distance_oracle(const EvaluationMatrix& em,
                                  std::uint64_t codeword_cap =
                                      default_codeword_cap);

/// d = k(q-2) + ell with 1 <= ell <= q-2.  Requires q >= 3 and d >= 1.
struct DegreeDecomposition {
    std::uint64_t k = 0;
    std::uint64_t ell = 0;
};
DegreeDecomposition decompose_degree(std::uint64_t d, std::uint32_t q);

/// Dimension of the degree-d code on the full torus of P^{s-1}:
/// sum_j (-1)^j C(s-1, j) C(s-1 + d - j(q-1), s-1).  Valid for d >= 0;
/// also covers s = 1, where it is identically 1.
std::uint64_t dimension_torus_formula(std::uint32_t q, std::uint32_t s,
                                      std::uint64_t d);

/// Minimum distance of the degree-d code on the full torus of P^{s-1}:
/// (q-1)^(s-2-k) (q-1-ell) with d = k(q-2)+ell while d < (q-2)(s-1), and 1
/// from there on.  Requires d >= 1; covers s = 1 and q = 2, where it is
/// identically 1.
std::uint64_t min_distance_torus_formula(std::uint32_t q, std::uint32_t s,
                                         std::uint64_t d);

/// The same minimum distance for the torus of the projective line (s = 2)
/// and plane (s = 3) only, written as the explicit piecewise-linear
/// expressions in d.  Kept separate from the general formula so the two
/// can cross-check each other.  Requires q >= 3.
std::uint64_t min_distance_torus_line_plane(std::uint32_t q, std::uint32_t s,
                                            std::uint64_t d);

struct CodeParameters {
    std::uint32_t q = 0;
    std::uint32_t s = 0;      // ambient variable count
    std::uint32_t d = 0;      // evaluation degree
    std::uint64_t n = 0;      // length
    std::uint64_t k = 0;      // dimension
    std::uint64_t delta = 0;  // minimum distance
    /// How delta was obtained: "formula", "oracle", or "both-agree" when a
    /// formula value was independently confirmed by the exhaustive scan.
    std::string source;

    bool mds() const { return k >= 1 && delta + k == n + 1; }
};

/// Full parameter set of the degree-d code on x.  On the full torus the
/// dimension and distance formulas apply and the exhaustive scan, when it
/// fits the cap, must agree (disagreement throws Discrepancy); on proper
/// subsets the distance comes from the scan alone.  Every result is checked
/// against the Singleton bound before being returned.
CodeParameters code_params(const ToricSet& x, std::uint32_t d,
                           std::uint64_t codeword_cap = default_codeword_cap,
                           std::uint64_t entry_cap = default_entry_cap);

/// Parameters of the degree-d code on the toric set of the complete
/// bipartite graph K_{a,b}, by the product formulas
///   n = (q-1)^(a+b-2), k = H(q,a,d) H(q,b,d), delta = D(q,a,d) D(q,b,d)
/// where H and D are the torus dimension and distance formulas above.
CodeParameters complete_bipartite_code_params(std::uint32_t q,
                                              std::uint32_t a,
                                              std::uint32_t b,
                                              std::uint32_t d);

}
