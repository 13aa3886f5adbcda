#include <cstdint>
#include <vector>

#include "doctest.h"
#include "toricode/field.hpp"
#include "toricode/geometry.hpp"
#include "toricode/invariants.hpp"

namespace {

using namespace toricode;

// Reference numerator coefficient: count the (s-1)-tuples over {0..q-2}
// with the given coordinate sum, by direct enumeration.
std::vector<std::uint64_t> slow_numerator(std::uint32_t q, std::uint32_t s) {
    std::uint32_t vars = s - 1;
    std::vector<std::uint64_t> coeff(std::size_t(q - 2) * vars + 1, 0);
    std::vector<std::uint32_t> t(vars, 0);
    while (true) {
        std::uint64_t sum = 0;
        for (std::uint32_t v : t) sum += v;
        ++coeff[sum];
        std::size_t i = 0;
        while (i < vars && t[i] == q - 2) t[i++] = 0;
        if (i == vars) break;
        ++t[i];
    }
    return coeff;
}

}  // namespace

TEST_CASE("Hilbert profiles at frozen points") {
    FiniteField f4 = field_of_order(4);
    HilbertProfile p = hilbert_profile(projective_torus(f4, 2));
    CHECK(p.values == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(p.regularity == 2);
    CHECK(p.degree == 3);

    FiniteField f3(3);
    p = hilbert_profile(projective_torus(f3, 3));
    CHECK(p.values == std::vector<std::uint64_t>{1, 3, 4});
    CHECK(p.regularity == 2);
    CHECK(p.degree == 4);

    p = hilbert_profile(
        toric_set_from_clutter(f3, complete_bipartite_clutter(2, 2)));
    CHECK(p.values == std::vector<std::uint64_t>{1, 4});
    CHECK(p.regularity == 1);
    CHECK(p.degree == 4);

    ToricSet one(f3, 3, {{1, 2, 1}});
    p = hilbert_profile(one);
    CHECK(p.values == std::vector<std::uint64_t>{1});
    CHECK(p.regularity == 0);
    CHECK(p.degree == 1);
}

TEST_CASE("series numerator against the enumeration oracle") {
    CHECK(torus_hilbert_series_numerator(3, 3) ==
          std::vector<std::uint64_t>{1, 2, 1});
    CHECK(torus_hilbert_series_numerator(4, 2) ==
          std::vector<std::uint64_t>{1, 1, 1});
    CHECK(torus_hilbert_series_numerator(7, 1) ==
          std::vector<std::uint64_t>{1});
    CHECK(torus_hilbert_series_numerator(3, 4) ==
          std::vector<std::uint64_t>{1, 3, 3, 1});
    for (std::uint32_t q : {3u, 4u, 5u, 9u})
        for (std::uint32_t s : {1u, 2u, 3u, 4u})
            CHECK(torus_hilbert_series_numerator(q, s) ==
                  slow_numerator(q, s));
}

TEST_CASE("torus profile equals the series partial sums") {
    for (std::uint32_t q : {3u, 4u, 5u})
        for (std::uint32_t s : {2u, 3u}) {
            FiniteField f = field_of_order(q);
            HilbertProfile p = hilbert_profile(projective_torus(f, s));
            std::vector<std::uint64_t> num =
                torus_hilbert_series_numerator(q, s);
            REQUIRE(p.values.size() == num.size());
            std::uint64_t run = 0;
            for (std::size_t d = 0; d < num.size(); ++d) {
                run += num[d];
                CHECK(p.values[d] == run);
            }
            CHECK(p.regularity == torus_regularity(q, s));
            CHECK(p.degree == torus_size(q, s));
        }
}

TEST_CASE("torus regularity closed form") {
    CHECK(torus_regularity(3, 3) == 2);
    CHECK(torus_regularity(5, 2) == 3);
    CHECK(torus_regularity(4, 4) == 6);
    CHECK(torus_regularity(2, 6) == 0);
    CHECK(torus_regularity(9, 1) == 0);
}

TEST_CASE("regularity bound report") {
    FiniteField f3(3);
    RegularityReport r = check_regularity_bound(projective_torus(f3, 3));
    CHECK(r.regularity == 2);
    CHECK(r.bound == 2);
    CHECK(r.equality);
    CHECK(r.complete_intersection);

    r = check_regularity_bound(
        toric_set_from_clutter(f3, complete_bipartite_clutter(2, 2)));
    CHECK(r.regularity == 1);
    CHECK(r.bound == 3);  // one edge variable per cross pair, so s = 4
    CHECK_FALSE(r.equality);
    CHECK_FALSE(r.complete_intersection);

    r = check_regularity_bound(
        toric_set_from_clutter(f3, complete_bipartite_clutter(2, 3)));
    CHECK(r.regularity <= r.bound);
    CHECK_FALSE(r.complete_intersection);

    FiniteField f4 = field_of_order(4);
    r = check_regularity_bound(projective_torus(f4, 2));
    CHECK(r.regularity == 2);
    CHECK(r.equality);
    CHECK(r.complete_intersection);
}
