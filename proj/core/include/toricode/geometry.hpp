#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricode/field.hpp"

namespace toricode {

/// Homogeneous coordinates of a point of P^{s-1}, one encoding per
/// coordinate.  Points handled by this library lie in the projective torus,
/// so every coordinate is nonzero and the canonical representative scales
/// the last coordinate to 1.
using ProjectivePoint = std::vector<FieldEnc>;

/// Exponents of a monomial, one entry per variable.
using ExponentVector = std::vector<std::uint32_t>;

inline constexpr std::uint64_t default_point_cap = 10'000'000;

/// (q-1)^(s-1); throws std::overflow_error past 2^64.
std::uint64_t torus_size(std::uint32_t q, std::uint32_t s);

/// A finite set of torus points of P^{s-1}, stored canonically: every point
/// scaled so its last coordinate is 1, duplicates removed, and the list
/// sorted lexicographically by encoding.  Two sets built from the same
/// points in any order or scaling therefore compare equal element-wise.
///
/// The field is held by pointer; it must outlive the set.
class ToricSet {
public:
    /// Validates that every point has s coordinates, all nonzero, then
    /// canonicalizes.  s must be at least 1.
    ToricSet(const FiniteField& f, std::uint32_t s,
             std::vector<ProjectivePoint> points);

    const FiniteField& field() const { return *f_; }
    std::uint32_t ambient_vars() const { return s_; }
    std::uint64_t size() const { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const { return points_; }

    bool contains(const ProjectivePoint& p) const;

    /// True exactly when the set fills the whole projective torus, i.e. its
    /// size is (q-1)^(s-1).  Parameterized sets are subsets of the torus by
    /// construction, so the size test decides set equality.
    bool is_complete_intersection() const;

private:
    const FiniteField* f_;
    std::uint32_t s_;
    std::vector<ProjectivePoint> points_;
};

/// The full projective torus of P^{s-1}: all points with nonzero
/// coordinates, (q-1)^(s-1) of them.  Throws CapExceeded when that count
/// exceeds cap.
ToricSet projective_torus(const FiniteField& f, std::uint32_t s,
                          std::uint64_t cap = default_point_cap);

/// The toric set parameterized by s monomials in n variables: the points
/// [x^a1 : ... : x^as] as x runs over all n-tuples of nonzero elements.
/// Every exponent vector must have the same length n >= 1.  Enumeration
/// walks all (q-1)^n parameter tuples; throws CapExceeded when that count
/// exceeds cap.
ToricSet toric_set_from_exponents(const FiniteField& f,
                                  const std::vector<ExponentVector>& exponents,
                                  std::uint64_t cap = default_point_cap);

/// A clutter on vertices 1..n: a set of edges none of which contains
/// another.  Edges are stored sorted, in the order given.
class Clutter {
public:
    /// Validates every edge: non-empty, vertices in range and distinct, no
    /// repeated edge, and no edge a subset of another (the error message
    /// names the offending pair).
    Clutter(std::uint32_t n_vertices,
            std::vector<std::vector<std::uint32_t>> edges);

    std::uint32_t vertex_count() const { return n_; }
    std::uint32_t edge_count() const { return std::uint32_t(edges_.size()); }
    const std::vector<std::vector<std::uint32_t>>& edges() const {
        return edges_;
    }

    /// One 0/1 exponent vector of length n per edge, in edge order.
    std::vector<ExponentVector> incidence_exponents() const;

    /// When the clutter is exactly a complete bipartite graph K_{a,b}
    /// (every edge a pair, vertex classes partitioning 1..n, all a*b cross
    /// pairs present), returns {a, b} with vertex 1 in the first class.
    std::optional<std::pair<std::uint32_t, std::uint32_t>>
    complete_bipartite_shape() const;

private:
    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> edges_;
};

/// The toric set of the clutter's edge monomials x_e = prod_{i in e} x_i.
ToricSet toric_set_from_clutter(const FiniteField& f, const Clutter& c,
                                std::uint64_t cap = default_point_cap);

/// Parses "1 2, 2 3, 1 3" style edge lists: edges separated by commas,
/// vertices by whitespace.  The vertex count is the largest index seen.
Clutter parse_clutter(const std::string& text);

/// {1,2} on two vertices: the smallest graph clutter.
Clutter single_edge_clutter();

/// The triangle {1,2}, {2,3}, {1,3}.
Clutter triangle_clutter();

/// K_{a,b} with vertex classes 1..a and a+1..a+b and all a*b cross edges.
Clutter complete_bipartite_clutter(std::uint32_t a, std::uint32_t b);

}
