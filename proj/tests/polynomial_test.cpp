#include <cstdint>
#include <vector>

#include "doctest.h"
#include "toricode/field.hpp"
#include "toricode/polynomial.hpp"

namespace {

using namespace toricode;

SparsePolynomial make(const FiniteField& f, std::uint32_t nvars,
                      std::vector<std::pair<ExponentVector, FieldEnc>> ts) {
    SparsePolynomial p(f, nvars);
    for (auto& [e, c] : ts) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("terms merge and cancel") {
    FiniteField f(3);
    SparsePolynomial p(f, 2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    p.add_term({1, 0}, 1);
    p.add_term({1, 0}, 1);
    CHECK(p.term_count() == 1);
    CHECK(p.terms().at({1, 0}) == 2);
    p.add_term({1, 0}, 1);  // 2 + 1 = 0 over GF(3)
    CHECK(p.is_zero());
    p.add_term({0, 1}, 0);  // adding zero changes nothing
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term({1, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(SparsePolynomial(f, 0), std::invalid_argument);
}

TEST_CASE("total degree and homogeneity") {
    FiniteField f(5);
    SparsePolynomial zero(f, 2);
    CHECK_FALSE(zero.total_degree().has_value());
    CHECK(zero.is_homogeneous());

    SparsePolynomial p = make(f, 2, {{{2, 0}, 2}, {{0, 1}, 1}});
    CHECK(p.total_degree() == 2);
    CHECK_FALSE(p.is_homogeneous());

    SparsePolynomial h = make(f, 2, {{{2, 0}, 1}, {{1, 1}, 3}});
    CHECK(h.is_homogeneous());
    CHECK(h.total_degree() == 2);

    SparsePolynomial c = make(f, 3, {{{0, 0, 0}, 4}});
    CHECK(c.total_degree() == 0);
    CHECK(c.is_homogeneous());
}

TEST_CASE("evaluation uses the zero-to-the-zero-is-one convention") {
    FiniteField f(3);
    SparsePolynomial p = make(f, 2, {{{2, 0}, 1}, {{0, 1}, 2}});
    // at (1, 2): 1 + 2*2 = 2
    CHECK(p.evaluate({1, 2}) == 2);
    CHECK(p.evaluate({0, 0}) == 0);
    CHECK(p.evaluate({2, 1}) == 0);  // 4 + 2 = 0

    SparsePolynomial c = make(f, 2, {{{0, 0}, 2}});
    CHECK(c.evaluate({0, 0}) == 2);  // 0^0 = 1 on both variables

    // brute comparison against pow-based evaluation
    FiniteField g = field_of_order(4);
    SparsePolynomial r = make(g, 2, {{{3, 1}, 2}, {{0, 2}, 3}, {{1, 0}, 1}});
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            FieldEnc direct = g.add(
                g.mul(2, g.mul(g.pow(FieldEnc(a), 3), FieldEnc(b))),
                g.add(g.mul(3, g.pow(FieldEnc(b), 2)), FieldEnc(a)));
            CHECK(r.evaluate({FieldEnc(a), FieldEnc(b)}) == direct);
        }
    CHECK_THROWS_AS(r.evaluate({1}), std::invalid_argument);
}

TEST_CASE("torus canonical form reduces exponents mod q-1") {
    FiniteField f = field_of_order(4);
    SparsePolynomial cube = make(f, 2, {{{3, 0}, 1}});
    SparsePolynomial canon = cube.torus_canonical_form();
    CHECK(canon.term_count() == 1);
    CHECK(canon.terms().at({0, 0}) == 1);  // t1^3 = 1 on the torus

    SparsePolynomial kummer = make(f, 1, {{{3}, 1}, {{0}, f.neg(1)}});
    CHECK(kummer.torus_canonical_form().is_zero());

    SparsePolynomial quart = make(f, 1, {{{4}, 2}});
    CHECK(quart.torus_canonical_form().terms().at({1}) == 2);

    // the canonical form agrees pointwise on the torus
    SparsePolynomial mix =
        make(f, 2, {{{5, 3}, 2}, {{2, 2}, 3}, {{0, 1}, 1}});
    SparsePolynomial cm = mix.torus_canonical_form();
    for (std::uint32_t a = 1; a < 4; ++a)
        for (std::uint32_t b = 1; b < 4; ++b)
            CHECK(mix.evaluate({FieldEnc(a), FieldEnc(b)}) ==
                  cm.evaluate({FieldEnc(a), FieldEnc(b)}));
}

TEST_CASE("sums and products match brute-force evaluation") {
    FiniteField f(3);
    SparsePolynomial a = make(f, 1, {{{1}, 1}, {{0}, 1}});  // t1 + 1
    SparsePolynomial b = make(f, 1, {{{1}, 1}, {{0}, 2}});  // t1 + 2
    SparsePolynomial prod = a * b;
    // (t1+1)(t1+2) = t1^2 + 3 t1 + 2 = t1^2 + 2
    CHECK(prod.term_count() == 2);
    CHECK(prod.terms().at({2}) == 1);
    CHECK(prod.terms().at({0}) == 2);
    SparsePolynomial sum = a + b;
    CHECK(sum.terms().at({1}) == 2);
    CHECK_FALSE(sum.terms().count({0}));  // 1 + 2 = 0

    for (std::uint32_t v = 0; v < 3; ++v) {
        FieldEnc x = FieldEnc(v);
        CHECK(prod.evaluate({x}) == f.mul(a.evaluate({x}), b.evaluate({x})));
        CHECK(sum.evaluate({x}) == f.add(a.evaluate({x}), b.evaluate({x})));
    }

    CHECK(a.scaled(2).terms().at({1}) == 2);
    CHECK(a.scaled(0).is_zero());

    FiniteField g(5);
    SparsePolynomial other(g, 1);
    other.add_term({1}, 1);
    CHECK_THROWS_WITH_AS(a + other, "mixed-field operands",
                         std::invalid_argument);
    SparsePolynomial wide(f, 2);
    wide.add_term({1, 0}, 1);
    CHECK_THROWS_AS(a * wide, std::invalid_argument);
}

TEST_CASE("binomial coefficients are exact and guarded") {
    CHECK(binomial_coefficient(5, 2) == 10);
    CHECK(binomial_coefficient(0, 0) == 1);
    CHECK(binomial_coefficient(-1, 2) == 0);
    CHECK(binomial_coefficient(3, 5) == 0);
    CHECK(binomial_coefficient(52, 5) == 2598960);
    CHECK(binomial_coefficient(60, 30) == 118264581564861424ULL);
    CHECK(binomial_coefficient(62, 31) == 465428353255261088ULL);
    CHECK_THROWS_AS(binomial_coefficient(70, 35), std::overflow_error);
    // Pascal identity over a grid
    for (long long n = 1; n < 40; ++n)
        for (std::uint32_t k = 1; k <= n; ++k)
            CHECK(binomial_coefficient(n, k) ==
                  binomial_coefficient(n - 1, k - 1) +
                      binomial_coefficient(n - 1, k));
}

TEST_CASE("degree-d monomials come out in lex-descending order") {
    CHECK(monomial_count(2, 3) == 6);
    CHECK(monomial_count(0, 4) == 1);
    std::vector<ExponentVector> m2 = monomials_of_degree(2, 2);
    std::vector<ExponentVector> expect = {{2, 0}, {1, 1}, {0, 2}};
    CHECK(m2 == expect);
    CHECK(monomials_of_degree(0, 3) ==
          std::vector<ExponentVector>{{0, 0, 0}});
    for (std::uint32_t d : {1u, 3u, 5u})
        for (std::uint32_t s : {1u, 2u, 3u, 4u}) {
            std::vector<ExponentVector> ms = monomials_of_degree(d, s);
            CHECK(ms.size() == monomial_count(d, s));
            for (std::size_t i = 0; i < ms.size(); ++i) {
                std::uint32_t total = 0;
                for (std::uint32_t e : ms[i]) total += e;
                CHECK(total == d);
                if (i) CHECK(ms[i - 1] > ms[i]);
            }
        }
}
