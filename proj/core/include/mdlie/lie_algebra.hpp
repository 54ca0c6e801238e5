#pragma once

#include "mdlie/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mdlie {

// Structure-constant table: (i, j) with i < j (0-based) maps to the
// coordinate vector of [X_i, X_j]. Anti-symmetry is structural; pairs with
// zero bracket are simply absent.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>;

struct JacobiViolation {
    std::size_t i, j, k;  // 0-based triple, lexicographically first violation
    std::vector<Rational> residual;
};

// Finite-dimensional Lie algebra over the rationals. The validating
// factory is the only public constructor path, so every instance in
// circulation satisfies the Jacobi identity.
class LieAlgebra {
public:
    static std::variant<LieAlgebra, JacobiViolation> validated(
        std::size_t dim, BracketTable table, std::vector<std::string> basis_labels = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const BracketTable& table() const { return table_; }

    // [X_i, X_j] for arbitrary basis indices (anti-symmetric extension).
    std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;

    // Bilinear extension to arbitrary coordinate vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& u,
                                  const std::vector<Rational>& v) const;

    // Matrix of y -> [x, y] on the whole algebra.
    RationalMatrix ad(const std::vector<Rational>& x) const;
    RationalMatrix ad_basis(std::size_t i) const;

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && table_ == o.table_;
    }
    bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

private:
    LieAlgebra(std::size_t dim, BracketTable table, std::vector<std::string> labels)
        : dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {}

    // For operations that preserve validity by construction.
    static LieAlgebra unchecked(std::size_t dim, BracketTable table,
                                std::vector<std::string> labels);

    friend LieAlgebra change_basis(const LieAlgebra&, const class BasisChange&);
    friend LieAlgebra direct_sum(const LieAlgebra&, const LieAlgebra&);

    std::size_t dim_;
    BracketTable table_;
    std::vector<std::string> labels_;
};

struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rational>> basis;  // independent vectors
    std::size_t dim() const { return basis.size(); }
};

// Invertible change of basis; columns of p are the new basis vectors
// written in the old coordinates.
class BasisChange {
public:
    explicit BasisChange(RationalMatrix p);
    const RationalMatrix& p() const { return p_; }
    const RationalMatrix& p_inverse() const { return p_inv_; }

private:
    RationalMatrix p_, p_inv_;
};

// Span of all brackets [a, b], a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

// Derived series G = G0 >= G1 >= ... , each term the span of brackets of
// the previous term, listed until it stabilizes (a terminal {0} appears
// exactly once for solvable algebras).
std::vector<Subspace> derived_series(const LieAlgebra& g);

// Lower central series G = C0 >= C1 = [G, C0] >= ... until stabilization.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

bool is_abelian(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

// All pairwise brackets of the subspace basis vanish.
bool is_abelian_subspace(const LieAlgebra& g, const Subspace& v);

// Coordinates of vec in the subspace basis, if vec lies in the subspace.
std::optional<std::vector<Rational>> coords_in_subspace(const Subspace& v,
                                                        const std::vector<Rational>& vec);

// Matrix of the operator y -> [x, y] restricted to an invariant subspace,
// in the subspace basis. Throws if the subspace is not ad_x-invariant.
RationalMatrix ad_restricted(const LieAlgebra& g, const std::vector<Rational>& x,
                             const Subspace& v);

LieAlgebra change_basis(const LieAlgebra& g, const BasisChange& p);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace mdlie
