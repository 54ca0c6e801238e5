#pragma once

#include "mdlie/families.hpp"
#include "mdlie/lie_algebra.hpp"

#include <optional>

namespace mdlie {

// Classification outcome for a 5-dimensional Lie algebra with
// 3-dimensional commutative derived ideal G1:
// - catalog family: `witness` holds a basis change P with
//   change_basis(g, P) equal to make_family(label), bracket table for
//   bracket table;
// - decomposable: some direction complementary to G1 is central, so the
//   algebra splits off a 1-dimensional ideal (no witness);
// - unclassifiable: out of scope or outside the catalog (wrong dimension,
//   derived ideal not 3-dimensional commutative, no complementary
//   direction centralizing G1, irrational eigenvalue data, or a canonical
//   form the catalog does not list), with the reason attached.
struct ClassifyResult {
    FamilyLabel label;
    std::optional<BasisChange> witness;
};

ClassifyResult classify(const LieAlgebra& g);

}  // namespace mdlie
