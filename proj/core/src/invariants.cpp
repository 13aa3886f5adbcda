#include "toricode/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricode/errors.hpp"
#include "toricode/linalg.hpp"

namespace toricode {

HilbertProfile hilbert_profile(const ToricSet& x, std::uint64_t entry_cap) {
    const FiniteField& f = x.field();
    std::uint64_t target = x.size();
    if (target == 0) throw std::invalid_argument("empty point set");
    std::uint64_t stop = std::min<std::uint64_t>(
        target - 1, torus_regularity(f.order(), x.ambient_vars()));
    HilbertProfile out;
    out.degree = target;
    for (std::uint64_t d = 0;; ++d) {
        std::uint64_t h = gf_rank(
            evaluation_matrix(x, std::uint32_t(d), entry_cap).entries);
        out.values.push_back(h);
        if (h == target) {
            out.regularity = d;
            return out;
        }
        if (d >= stop)
            throw Discrepancy("Hilbert function only reaches " +
                              std::to_string(h) + " of " +
                              std::to_string(target) + " by degree " +
                              std::to_string(d) +
                              ", past the regularity bound");
    }
}

std::vector<std::uint64_t> torus_hilbert_series_numerator(std::uint32_t q,
                                                          std::uint32_t s) {
    if (q < 2 || s < 1) throw std::invalid_argument("need q >= 2 and s >= 1");
    torus_size(q, s);  // every coefficient is below this; reject overflow
    std::vector<std::uint64_t> acc{1};
    for (std::uint32_t i = 1; i < s; ++i) {
        std::vector<std::uint64_t> next(acc.size() + q - 2, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::uint32_t b = 0; b <= q - 2; ++b) next[a + b] += acc[a];
        acc = std::move(next);
    }
    return acc;
}

std::uint64_t torus_regularity(std::uint32_t q, std::uint32_t s) {
    if (q < 2 || s < 1) throw std::invalid_argument("need q >= 2 and s >= 1");
    return std::uint64_t(q - 2) * (s - 1);
}

RegularityReport check_regularity_bound(const ToricSet& x,
                                        std::uint64_t entry_cap) {
    const FiniteField& f = x.field();
    HilbertProfile p = hilbert_profile(x, entry_cap);
    RegularityReport r;
    r.regularity = p.regularity;
    r.bound = torus_regularity(f.order(), x.ambient_vars());
    r.equality = r.regularity == r.bound;
    r.complete_intersection = x.is_complete_intersection();
    if (r.regularity > r.bound)
        throw Discrepancy("regularity " + std::to_string(r.regularity) +
                          " exceeds the torus bound " +
                          std::to_string(r.bound));
    if (r.complete_intersection && !r.equality)
        throw Discrepancy("the set fills the torus but its regularity " +
                          std::to_string(r.regularity) +
                          " misses the bound " + std::to_string(r.bound));
    return r;
}

}
