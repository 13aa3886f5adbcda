#pragma once

#include <cstddef>
#include <vector>

#include "toricode/field.hpp"

namespace toricode {

/// Dense row-major matrix of field encodings.  The field is held by
/// pointer and must outlive the matrix.
class GfMatrix {
public:
    GfMatrix(const FiniteField& f, std::size_t rows, std::size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FiniteField& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldEnc& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    FieldEnc at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    FieldEnc* row(std::size_t i) { return a_.data() + i * cols_; }
    const FieldEnc* row(std::size_t i) const { return a_.data() + i * cols_; }

    bool operator==(const GfMatrix& o) const {
        return *f_ == *o.f_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               a_ == o.a_;
    }
    bool operator!=(const GfMatrix& o) const { return !(*this == o); }

private:
    const FiniteField* f_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldEnc> a_;
};

GfMatrix gf_transpose(const GfMatrix& m);

std::size_t gf_rank(GfMatrix m);

/// Reduced row echelon form (pivots 1, pivot columns cleared).
GfMatrix gf_rref(GfMatrix m);

/// The nonzero rows of the reduced row echelon form: a canonical basis of
/// the row space.
GfMatrix gf_row_basis(const GfMatrix& m);

/// Basis of the right null space {x : m x = 0}, one vector per row, built
/// from the reduced echelon form with free columns in ascending order (so
/// the result is canonical for a given matrix).
GfMatrix gf_null_space(const GfMatrix& m);

}
