#include "toricode/linalg.hpp"

#include <algorithm>

namespace toricode {

namespace {

// row_i -= c * row_r, written as addition of the negated multiple.
void eliminate(const FiniteField& f, FieldEnc* ri, const FieldEnc* rr,
               std::size_t cols, FieldEnc c) {
    FieldEnc nc = f.neg(c);
    for (std::size_t j = 0; j < cols; ++j)
        if (rr[j] != 0) ri[j] = f.add(ri[j], f.mul(nc, rr[j]));
}

}  // namespace

GfMatrix gf_transpose(const GfMatrix& m) {
    GfMatrix t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

std::size_t gf_rank(GfMatrix m) {
    const FiniteField& f = m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            std::swap_ranges(m.row(piv), m.row(piv) + m.cols(), m.row(r));
        FieldEnc inv = f.inv(m.at(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (m.at(i, c) != 0)
                eliminate(f, m.row(i), m.row(r), m.cols(),
                          f.mul(m.at(i, c), inv));
        ++r;
    }
    return r;
}

GfMatrix gf_rref(GfMatrix m) {
    const FiniteField& f = m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            std::swap_ranges(m.row(piv), m.row(piv) + m.cols(), m.row(r));
        FieldEnc inv = f.inv(m.at(r, c));
        if (inv != 1)
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = f.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.at(i, c) != 0)
                eliminate(f, m.row(i), m.row(r), m.cols(), m.at(i, c));
        ++r;
    }
    return m;
}

GfMatrix gf_row_basis(const GfMatrix& m) {
    GfMatrix r = gf_rref(m);
    std::size_t nz = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) break;  // echelon form: zero rows are at the bottom
        ++nz;
    }
    GfMatrix out(m.field(), nz, m.cols());
    for (std::size_t i = 0; i < nz; ++i)
        std::copy(r.row(i), r.row(i) + r.cols(), out.row(i));
    return out;
}

GfMatrix gf_null_space(const GfMatrix& m) {
    const FiniteField& f = m.field();
    GfMatrix r = gf_rref(m);
    // Pivot column of each echelon row, in row order.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t j = 0;
        while (j < r.cols() && r.at(i, j) == 0) ++j;
        if (j == r.cols()) break;
        pivot_col.push_back(j);
        is_pivot[j] = true;
    }
    std::size_t nullity = m.cols() - pivot_col.size();
    GfMatrix out(f, nullity, m.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out.at(k, free) = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            out.at(k, pivot_col[i]) = f.neg(r.at(i, free));
        ++k;
    }
    return out;
}

}
