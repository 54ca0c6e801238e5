#pragma once

#include "mdlie/lie_algebra.hpp"
#include "mdlie/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdlie {

// Catalog of the eight 5-dimensional solvable Lie algebra families with a
// 3-dimensional commutative derived ideal G1 = span(X3, X4, X5). Every
// family member satisfies [X1, X2] = X3, ad_{X1}|G1 = 0, and
// ad_{X2}|G1 = M where M is the family's template matrix; the catalog
// entries differ only in M:
//   5.3.1(l1,l2): diag(l1, l2, 1)         l1, l2 not in {0,1}, l1 != l2
//   5.3.2(l):     diag(1, 1, l)           l not in {0,1}
//   5.3.3(l):     diag(l, 1, 1)           l != 1
//   5.3.4:        identity
//   5.3.5(l):     diag(l) + J2(1)         l != 1
//   5.3.6(l):     J2(1) + diag(l)         l not in {0,1}
//   5.3.7:        J3(1)
//   5.3.8(l;c,s): rotation(c,s) + diag(l) l != 0, c^2 + s^2 = 1, s > 0
// Columns act on basis vectors: [X2, X_{2+j}] = sum_i M(i,j) X_{2+i}.
struct FamilyLabel {
    enum class Family {
        F5_3_1,
        F5_3_2,
        F5_3_3,
        F5_3_4,
        F5_3_5,
        F5_3_6,
        F5_3_7,
        F5_3_8,
        Decomposable,
        Unclassifiable,
    };

    Family family = Family::Unclassifiable;
    // 5.3.1: {l1, l2}; 5.3.2/3/5/6: {l}; 5.3.8: {l, c, s}; otherwise empty.
    std::vector<Rational> params;
    std::string reason;  // Unclassifiable only

    // "5.3.1(2,3)", "5.3.8(2; 3/5, 4/5)", "5.3.4", "decomposable",
    // "unclassifiable: <reason>"
    std::string str() const;
    static std::optional<FamilyLabel> parse(std::string_view text);

    bool is_catalog() const;
    // 1..8 for catalog families, 0 otherwise.
    int index() const;

    bool operator==(const FamilyLabel& o) const {
        return family == o.family && params == o.params && reason == o.reason;
    }
    bool operator!=(const FamilyLabel& o) const { return !(*this == o); }
};

FamilyLabel make_label(FamilyLabel::Family f, std::vector<Rational> params = {});
FamilyLabel decomposable_label();
FamilyLabel unclassifiable_label(std::string reason);

// The 3x3 template matrix of ad_{X2}|G1 for a catalog label.
// Throws std::invalid_argument for non-catalog labels or parameter
// constraint violations.
RationalMatrix family_ad_matrix(const FamilyLabel& label);

// The 5-dimensional Lie algebra of a catalog label, basis X1..X5.
// Throws std::invalid_argument for non-catalog labels or parameter
// constraint violations.
LieAlgebra make_family(const FamilyLabel& label);

// Rational point on the unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
std::pair<Rational, Rational> circle_point(const Rational& t);

// Similarity-class descriptor of a 3x3 rational matrix whose characteristic
// polynomial splits over the rationals, or has exactly one rational root
// plus an irreducible quadratic factor (RotationDiag). nullopt when the
// characteristic polynomial has an irrational real root, which is outside
// the exact-certification domain.
struct CanonicalForm3 {
    enum class Kind { Diag3, Diag2Jordan, Jordan2Diag, Jordan3, RotationDiag };

    Kind kind = Kind::Diag3;
    // Diag3: three eigenvalues, ascending. Diag2Jordan: {lone, jordan} with
    // lone != jordan, jordan carried by a 2x2 Jordan block. Jordan2Diag
    // (J2 + J1, geometric multiplicity 2) and Jordan3: {eigenvalue}.
    // RotationDiag: {real eigenvalue}; the complex pair is carried by the
    // monic irreducible quadratic t^2 + quad_p t + quad_q.
    std::vector<Rational> eigenvalues;
    Rational quad_p, quad_q;

    bool operator==(const CanonicalForm3& o) const {
        return kind == o.kind && eigenvalues == o.eigenvalues && quad_p == o.quad_p &&
               quad_q == o.quad_q;
    }
};

std::optional<CanonicalForm3> canonical_form_3x3(const RationalMatrix& m);

// Rational roots of the characteristic polynomial t^3 + a t^2 + b t + c,
// with multiplicity, ascending. Exposed for testing.
std::vector<Rational> rational_cubic_roots(const Rational& a, const Rational& b,
                                           const Rational& c);

// Pairwise distinctness report over catalog (and decomposable) labels.
// The comparison key is a genuine isomorphism invariant: the similarity
// class of ad_{X2}|G1 up to a nonzero rational scaling (a basis change maps
// the template matrix to a conjugate of a scalar multiple of it). Distinct
// is therefore a proof of non-isomorphism; PotentiallyIsomorphic means the
// invariant cannot separate the pair.
struct DistinctnessPair {
    FamilyLabel a, b;
    bool distinct = false;
    std::string reason;
};

std::vector<DistinctnessPair> pairwise_distinct(const std::vector<FamilyLabel>& labels);

// Scaling-similarity-class key used by pairwise_distinct. Exposed for
// testing; equal keys <=> pairwise_distinct reports PotentiallyIsomorphic.
std::string scaling_class_key(const FamilyLabel& label);

}  // namespace mdlie
