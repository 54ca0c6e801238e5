#pragma once

#include "mdlie/matrix.hpp"
#include "mdlie/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mdlie {

// Skew-symmetric matrix whose entries are homogeneous linear forms in the
// dual coordinates F1..Fn. This is the symbolic coadjoint form: evaluating
// at a concrete functional gives back an ordinary rational matrix.
class LinearFormMatrix {
public:
    // entries: size x size grid; validated for skew-symmetry and for each
    // entry being a homogeneous linear form (or zero).
    LinearFormMatrix(std::size_t size, std::size_t nvars,
                     std::vector<std::vector<Poly>> entries);

    std::size_t size() const { return size_; }
    std::size_t nvars() const { return nvars_; }
    const Poly& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<Poly>>& entries() const { return entries_; }

    RationalMatrix specialize(const std::vector<Rational>& point) const;

    bool is_zero() const;

private:
    std::size_t size_, nvars_;
    std::vector<std::vector<Poly>> entries_;
};

// Pfaffian of the principal submatrix of b indexed by `index_set`
// (even cardinality), by recursive expansion along the first row.
Poly pfaffian(const LinearFormMatrix& b, const std::vector<std::size_t>& index_set);

// Pfaffians of all principal minor_size x minor_size submatrices, one per
// index subset, subsets enumerated in lexicographic order. For minor_size 2
// this is exactly the upper-triangular entry list.
std::vector<Poly> pfaffian_principal_minors(const LinearFormMatrix& b,
                                            std::size_t minor_size);

// sqrt of a nonnegative rational if it is an exact rational square.
std::optional<Rational> rational_sqrt(const Rational& r);

// Writes a homogeneous quadratic as a product of two rational linear forms
// if possible. Zero factors as (0, 0). A nonzero input of degree 0 or 1, or
// a quadratic irreducible over the rationals (e.g. F1^2 + F2^2), gives
// nullopt. Degree > 2 or a non-homogeneous nonzero input is an error.
std::optional<std::pair<Poly, Poly>> factor_quadratic_into_linear(const Poly& q);

// Coefficient vector (length nvars) of a homogeneous linear form.
std::vector<Rational> linear_form_coeffs(const Poly& linear);

}  // namespace mdlie
