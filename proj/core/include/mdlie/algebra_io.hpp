#pragma once

#include "mdlie/lie_algebra.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace mdlie {

// Malformed algebra document: bad JSON, unknown fields, index errors,
// duplicate bracket pairs, or unparseable coefficients. Distinct from a
// Jacobi violation, which is a well-formed but invalid table.
class AlgebraFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reads the JSON algebra document
//   { "dim": n, "basis": ["X1", ...], "brackets":
//       [ { "i": 1, "j": 2, "out": { "3": "1" } }, ... ] }
// with 1-based indices, i < j, coefficients in rational text form, omitted
// pairs meaning zero. "basis" is optional; unknown fields are rejected.
// Throws AlgebraFormatError on malformed input; a well-formed table that
// breaks the Jacobi identity comes back as the violation alternative.
std::variant<LieAlgebra, JacobiViolation> read_algebra_json(const std::string& text);

// Serializes an algebra to the same document shape, brackets ordered by
// (i, j), two-space indentation, "basis" always present.
std::string write_algebra_json(const LieAlgebra& g);

}  // namespace mdlie
