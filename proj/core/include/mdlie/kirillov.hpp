#pragma once

#include "mdlie/lie_algebra.hpp"
#include "mdlie/linear_form_matrix.hpp"

#include <vector>

namespace mdlie {

// Coordinates of a linear functional in the dual basis X1*..Xn*.
using Functional = std::vector<Rational>;

// Skew form B_F with entry (i, j) = <F, [X_i, X_j]>.
RationalMatrix b_form(const LieAlgebra& g, const Functional& f);

// Same form with the functional left symbolic: entry (i, j) is the linear
// form sum_k c_{ij}^k F_(k+1). Specializing at a concrete functional agrees
// with b_form.
LinearFormMatrix b_form_symbolic(const LieAlgebra& g);

// Kernel of B_F: the stabilizer subalgebra of the functional.
Subspace stabilizer(const LieAlgebra& g, const Functional& f);

// rank of B_F: the dimension of the coadjoint orbit through F. Always even.
std::size_t orbit_dimension(const LieAlgebra& g, const Functional& f);

}  // namespace mdlie
