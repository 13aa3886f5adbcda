#include <cstdint>
#include <vector>

#include "doctest.h"
#include "toricode/field.hpp"
#include "toricode/linalg.hpp"

namespace {

using namespace toricode;

GfMatrix make(const FiniteField& f,
              std::vector<std::vector<FieldEnc>> rows) {
    GfMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

// Plain triple-loop product, the reference for everything else here.
GfMatrix slow_mul(const GfMatrix& a, const GfMatrix& b) {
    const FiniteField& f = a.field();
    GfMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            FieldEnc acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t)
                acc = f.add(acc, f.mul(a.at(i, t), b.at(t, j)));
            c.at(i, j) = acc;
        }
    return c;
}

bool is_zero(const GfMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

GfMatrix vstack(const GfMatrix& a, const GfMatrix& b) {
    GfMatrix c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

struct Lcg {
    std::uint64_t s;
    std::uint32_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return std::uint32_t(s >> 33);
    }
};

}  // namespace

TEST_CASE("matrix storage and equality") {
    FiniteField f(3);
    GfMatrix m(f, 2, 3);
    CHECK(is_zero(m));
    m.at(1, 2) = 2;
    CHECK(m.at(1, 2) == 2);
    CHECK(m.row(1)[2] == 2);
    GfMatrix n(f, 2, 3);
    CHECK(m != n);
    n.at(1, 2) = 2;
    CHECK(m == n);
}

TEST_CASE("rank of small frozen matrices") {
    FiniteField f(3);
    CHECK(gf_rank(make(f, {{1, 1}, {1, 2}})) == 2);
    CHECK(gf_rank(make(f, {{1, 1}, {2, 2}})) == 1);
    CHECK(gf_rank(make(f, {{0, 0}, {0, 0}})) == 0);
    CHECK(gf_rank(make(f, {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);

    FiniteField g = field_of_order(4);
    // over GF(4), row2 = 2*row1
    CHECK(gf_rank(make(g, {{1, 2, 3}, {2, 3, 1}, {0, 1, 1}})) == 2);
}

TEST_CASE("reduced echelon form is canonical") {
    FiniteField f(5);
    GfMatrix r = gf_rref(make(f, {{2, 4}, {1, 3}}));
    CHECK(r == make(f, {{1, 0}, {0, 1}}));
    GfMatrix sing = gf_rref(make(f, {{1, 2, 3}, {2, 4, 2}}));
    CHECK(sing == make(f, {{1, 2, 0}, {0, 0, 1}}));
    FiniteField g(7);
    GfMatrix dep = gf_rref(make(g, {{1, 2, 3}, {2, 4, 6}}));
    CHECK(dep == make(g, {{1, 2, 3}, {0, 0, 0}}));
}

TEST_CASE("transpose flips indices") {
    FiniteField f(7);
    GfMatrix m = make(f, {{1, 2, 3}, {4, 5, 6}});
    GfMatrix t = gf_transpose(m);
    REQUIRE(t.rows() == 3);
    REQUIRE(t.cols() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(m.at(i, j) == t.at(j, i));
    CHECK(gf_transpose(t) == m);
}

TEST_CASE("null space rows annihilate the matrix") {
    FiniteField f(3);
    GfMatrix m = make(f, {{1, 1, 1}, {1, 2, 1}});
    GfMatrix ns = gf_null_space(m);
    REQUIRE(ns.rows() == 1);
    CHECK(is_zero(slow_mul(m, gf_transpose(ns))));

    GfMatrix id = make(f, {{1, 0}, {0, 1}});
    CHECK(gf_null_space(id).rows() == 0);

    GfMatrix zero(f, 2, 3);
    GfMatrix zns = gf_null_space(zero);
    CHECK(zns.rows() == 3);
    CHECK(gf_rank(zns) == 3);
}

TEST_CASE("rank, null space and row basis agree on random matrices") {
    for (std::uint32_t q : {3u, 4u, 9u}) {
        FiniteField f = field_of_order(q);
        Lcg rng{q * 977};
        for (int round = 0; round < 40; ++round) {
            std::size_t rows = 1 + rng.next() % 7;
            std::size_t cols = 1 + rng.next() % 7;
            GfMatrix m(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) = FieldEnc(rng.next() % q);

            std::uint64_t r = gf_rank(m);
            CHECK(r == gf_rank(gf_transpose(m)));

            GfMatrix rref = gf_rref(m);
            CHECK(gf_rref(rref) == rref);
            CHECK(gf_rank(rref) == r);

            GfMatrix ns = gf_null_space(m);
            CHECK(ns.rows() == cols - r);
            if (ns.rows()) {
                CHECK(is_zero(slow_mul(m, gf_transpose(ns))));
                CHECK(gf_rank(ns) == ns.rows());
            }

            GfMatrix basis = gf_row_basis(m);
            CHECK(basis.rows() == r);
            CHECK(gf_rank(vstack(m, basis)) == r);
        }
    }
}
