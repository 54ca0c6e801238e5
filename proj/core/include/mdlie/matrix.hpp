#pragma once

#include "mdlie/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mdlie {

// Dense row-major matrix over the rationals. Elimination is fraction-free
// (Bareiss) on denominator-cleared integer rows, so intermediate entries
// stay polynomially bounded instead of blowing up through naive pivoting.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> col(std::size_t c) const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& s) const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix rref;              // reduced row echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Reduced row echelon form. Pivot entries are 1, pivot columns are cleared,
// rows below the rank are zero. The RREF of a matrix is unique, which the
// callers lean on for canonical subspace bases.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, in free-column order.
// The free coordinate of each vector is 1.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// One solution of m x = b, or nullopt if the system is inconsistent.
// Free coordinates are set to 0.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b);

Rational det(const RationalMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Canonical basis of the span of the given vectors: nonzero rows of the RREF.
std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vectors, std::size_t dim);

// True if v lies in the span of the rows of `basis` (each of length dim).
bool in_span(const std::vector<std::vector<Rational>>& basis,
             const std::vector<Rational>& v);

}  // namespace mdlie
