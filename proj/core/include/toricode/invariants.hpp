#pragma once

#include <cstdint>
#include <vector>

#include "toricode/codes.hpp"
#include "toricode/geometry.hpp"

namespace toricode {

/// Hilbert function of a point set: H(d) = rank of the degree-d evaluation
/// matrix, recorded from degree 0 up to the first degree where it reaches
/// the number of points.
struct HilbertProfile {
    std::vector<std::uint64_t> values;  // H(0) .. H(regularity)
    std::uint64_t regularity = 0;       // first d with H(d) = point count
    std::uint64_t degree = 0;           // the point count itself
};

/// Computes the profile degree by degree.  H is non-decreasing and reaches
/// the point count no later than min(points - 1, (q-2)(s-1)); failing to do
/// so means the arithmetic is broken and throws Discrepancy.
HilbertProfile hilbert_profile(const ToricSet& x,
                               std::uint64_t entry_cap = default_entry_cap);

/// Coefficients of (1 + t + ... + t^(q-2))^(s-1), the numerator of the
/// Hilbert series of the full torus over 1/(1-t).  Its partial sums are the
/// torus Hilbert function.
std::vector<std::uint64_t> torus_hilbert_series_numerator(std::uint32_t q,
                                                          std::uint32_t s);

/// Regularity of the full torus: (q-2)(s-1).
std::uint64_t torus_regularity(std::uint32_t q, std::uint32_t s);

struct RegularityReport {
    std::uint64_t regularity = 0;  // of the given set
    std::uint64_t bound = 0;       // (q-2)(s-1)
    bool equality = false;
    bool complete_intersection = false;
};

/// Regularity of x against the torus bound.  Every toric set satisfies
/// regularity <= (q-2)(s-1), with equality when x fills the torus; either
/// statement failing throws Discrepancy.
RegularityReport check_regularity_bound(const ToricSet& x,
                                        std::uint64_t entry_cap =
                                            default_entry_cap);

}
