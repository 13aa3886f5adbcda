#include "toricode/bounds.hpp"

#include <limits>
#include <stdexcept>

#include "toricode/errors.hpp"
#include "toricode/invariants.hpp"

namespace toricode {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("power overflows 64 bits");
        r *= base;
    }
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw std::overflow_error("product overflows 64 bits");
    return a * b;
}

}  // namespace

ZeroBounds zero_bounds(std::uint64_t d, std::uint32_t q, std::uint32_t s) {
    if (q < 2 || s < 1) throw std::invalid_argument("need q >= 2 and s >= 1");
    ZeroBounds b;
    std::uint64_t qs1 = checked_pow(q, s - 1);
    b.schmidt = checked_mul(d, qs1);
    b.homogeneous = checked_mul(d, qs1 - 1);
    b.torus = checked_mul(d, checked_pow(q - 1, s - 1));
    if (q >= 3 && d >= 1) {
        DegreeDecomposition dec = decompose_degree(d, q);
        if (dec.k <= s - 1)
            b.refined = checked_mul(
                checked_pow(q - 1, s - 1 - dec.k),
                checked_pow(q - 1, dec.k + 1) - (q - 1) + dec.ell);
    }
    return b;
}

BoundCheck verify_zero_bounds(const SparsePolynomial& g,
                              std::uint64_t point_cap) {
    if (g.is_zero())
        throw std::invalid_argument("zero bounds concern nonzero "
                                    "polynomials");
    const FiniteField& f = g.field();
    std::uint32_t q = f.order();
    std::uint32_t s = g.variable_count();

    std::uint64_t domain = checked_pow(q, s);
    if (domain > point_cap)
        throw CapExceeded("enumerating K^s needs " + std::to_string(q) + "^" +
                          std::to_string(s) + " = " + std::to_string(domain) +
                          " points; the point cap is " +
                          std::to_string(point_cap));

    BoundCheck out;
    out.degree = *g.total_degree();
    out.homogeneous = g.is_homogeneous();

    ProjectivePoint x(s, 0);
    for (std::uint64_t i = 0;; ++i) {
        if (g.evaluate(x) == 0) {
            ++out.affine_zeros;
            bool torus = true;
            for (FieldEnc c : x)
                if (c == 0) {
                    torus = false;
                    break;
                }
            if (torus) ++out.torus_zeros;
        }
        std::uint32_t j = 0;
        for (; j < s; ++j) {
            if (++x[j] < q) break;
            x[j] = 0;
        }
        if (j == s) break;
    }

    ZeroBounds bounds = zero_bounds(out.degree, q, s);
    out.schmidt_bound = bounds.schmidt;
    out.torus_bound = bounds.torus;
    if (out.affine_zeros > out.schmidt_bound)
        throw Discrepancy("a degree-" + std::to_string(out.degree) +
                          " polynomial has " +
                          std::to_string(out.affine_zeros) +
                          " zeros over K^s, above the bound " +
                          std::to_string(out.schmidt_bound));
    if (out.homogeneous && out.degree >= 1) {
        out.homogeneous_bound = bounds.homogeneous;
        // Homogeneous of positive degree: the origin is always a zero.
        if (out.affine_zeros - 1 > *out.homogeneous_bound)
            throw Discrepancy("a homogeneous degree-" +
                              std::to_string(out.degree) +
                              " polynomial has " +
                              std::to_string(out.affine_zeros - 1) +
                              " nonzero-point zeros, above the bound " +
                              std::to_string(*out.homogeneous_bound));
    }
    if (out.torus_zeros > out.torus_bound)
        throw Discrepancy("a degree-" + std::to_string(out.degree) +
                          " polynomial has " +
                          std::to_string(out.torus_zeros) +
                          " torus zeros, above the bound " +
                          std::to_string(out.torus_bound));

    SparsePolynomial canon = g.torus_canonical_form();
    if (canon.is_zero()) {
        // Vanishes identically on the torus; confirm the count says so.
        if (out.torus_zeros != checked_pow(q - 1, s))
            throw Discrepancy("a polynomial whose exponent reduction "
                              "cancels must vanish on the whole torus");
        return out;
    }
    out.canonical_degree = *canon.total_degree();
    ZeroBounds cbounds = zero_bounds(*out.canonical_degree, q, s);
    out.canonical_torus_bound = cbounds.torus;
    if (out.torus_zeros > *out.canonical_torus_bound)
        throw Discrepancy("canonical degree " +
                          std::to_string(*out.canonical_degree) +
                          " allows at most " +
                          std::to_string(*out.canonical_torus_bound) +
                          " torus zeros, found " +
                          std::to_string(out.torus_zeros));
    if (cbounds.refined) {
        out.refined_bound = cbounds.refined;
        if (out.torus_zeros > *out.refined_bound)
            throw Discrepancy("the refined torus bound " +
                              std::to_string(*out.refined_bound) +
                              " is violated by " +
                              std::to_string(out.torus_zeros) + " zeros");
    }
    return out;
}

SparsePolynomial extremal_polynomial(const FiniteField& f, std::uint32_t s,
                                     std::uint32_t d) {
    std::uint32_t q = f.order();
    if (q < 3 || s < 2) throw std::invalid_argument("need q >= 3 and s >= 2");
    if (d < 1 || std::uint64_t(d) >= torus_regularity(q, s))
        throw std::invalid_argument(
            "need 1 <= d <= (q-2)(s-1) - 1 = " +
            std::to_string(torus_regularity(q, s) - 1));
    DegreeDecomposition dec = decompose_degree(d, q);
    FieldEnc beta = f.primitive_element();

    SparsePolynomial prod(f, s);
    ExponentVector zero(s, 0);
    prod.add_term(zero, 1);
    // One linear factor beta^j t1 - t_i per unit of degree: the first k
    // variables after t1 each take all q-2 powers, the next takes ell.
    auto factor = [&](std::uint32_t j, std::uint32_t var) {
        SparsePolynomial lin(f, s);
        ExponentVector e1(s, 0);
        e1[0] = 1;
        lin.add_term(e1, f.pow(beta, j));
        ExponentVector ei(s, 0);
        ei[var] = 1;
        lin.add_term(ei, f.neg(1));
        return lin;
    };
    for (std::uint32_t i = 1; i <= dec.k; ++i)
        for (std::uint32_t j = 1; j <= q - 2; ++j)
            prod = prod * factor(j, i);
    for (std::uint32_t j = 1; j <= dec.ell; ++j)
        prod = prod * factor(j, std::uint32_t(dec.k) + 1);
    return prod;
}

std::uint64_t max_projective_zeros_formula(std::uint32_t q, std::uint32_t s,
                                           std::uint64_t d) {
    if (q < 3 || s < 2) throw std::invalid_argument("need q >= 3 and s >= 2");
    if (d < 1 || d >= torus_regularity(q, s))
        throw std::invalid_argument("need 1 <= d <= (q-2)(s-1) - 1");
    DegreeDecomposition dec = decompose_degree(d, q);
    return checked_mul(checked_pow(q - 1, s - 2 - dec.k),
                       checked_pow(q - 1, dec.k + 1) - (q - 1) + dec.ell);
}

std::uint64_t max_zeros_consistency(const FiniteField& f, std::uint32_t s,
                                    std::uint32_t d,
                                    std::uint64_t point_cap) {
    std::uint32_t q = f.order();
    SparsePolynomial g = extremal_polynomial(f, s, d);
    ToricSet t = projective_torus(f, s, point_cap);
    std::uint64_t count = 0;
    for (const ProjectivePoint& p : t.points())
        if (g.evaluate(p) == 0) ++count;
    std::uint64_t formula = max_projective_zeros_formula(q, s, d);
    std::uint64_t complement =
        t.size() - min_distance_torus_formula(q, s, d);
    if (count != formula || formula != complement)
        throw Discrepancy("extremal zero count " + std::to_string(count) +
                          ", formula " + std::to_string(formula) +
                          " and size-minus-distance " +
                          std::to_string(complement) + " disagree");
    return count;
}

}
