#include "mdlie/families.hpp"

#include "mdlie/lie_algebra.hpp"

#include <doctest.h>
#include <generators.hpp>

#include <random>
#include <vector>

using mdlie::CanonicalForm3;
using mdlie::FamilyLabel;
using mdlie::LieAlgebra;
using mdlie::Rational;
using mdlie::RationalMatrix;
using Family = mdlie::FamilyLabel::Family;
using testgen::rat;

namespace {

RationalMatrix mat3(const std::vector<std::vector<Rational>>& rows) {
    return RationalMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("family label text round trips") {
    auto check_round = [](const FamilyLabel& l, const std::string& expect) {
        CHECK(l.str() == expect);
        auto back = FamilyLabel::parse(expect);
        REQUIRE(back.has_value());
        CHECK(*back == l);
    };
    check_round(mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)}), "5.3.1(2,3)");
    check_round(mdlie::make_label(Family::F5_3_1, {rat(-1), rat(1, 2)}), "5.3.1(-1,1/2)");
    check_round(mdlie::make_label(Family::F5_3_2, {rat(-1)}), "5.3.2(-1)");
    check_round(mdlie::make_label(Family::F5_3_3, {rat(0)}), "5.3.3(0)");
    check_round(mdlie::make_label(Family::F5_3_4), "5.3.4");
    check_round(mdlie::make_label(Family::F5_3_5, {rat(2)}), "5.3.5(2)");
    check_round(mdlie::make_label(Family::F5_3_6, {rat(1, 2)}), "5.3.6(1/2)");
    check_round(mdlie::make_label(Family::F5_3_7), "5.3.7");
    check_round(mdlie::make_label(Family::F5_3_8, {rat(2), rat(3, 5), rat(4, 5)}),
                "5.3.8(2; 3/5, 4/5)");
    check_round(mdlie::decomposable_label(), "decomposable");
    check_round(mdlie::unclassifiable_label("the reason"), "unclassifiable: the reason");
    CHECK(mdlie::unclassifiable_label("").str() == "unclassifiable");

    // Whitespace-tolerant parse.
    auto padded = FamilyLabel::parse("  5.3.1(2,3)  ");
    REQUIRE(padded.has_value());
    CHECK(padded->str() == "5.3.1(2,3)");

    CHECK_FALSE(FamilyLabel::parse("5.3.9").has_value());
    CHECK_FALSE(FamilyLabel::parse("5.4.1(2)").has_value());
    CHECK_FALSE(FamilyLabel::parse("hello").has_value());
    CHECK_FALSE(FamilyLabel::parse("5.3.1(2,three)").has_value());
    CHECK_FALSE(FamilyLabel::parse("").has_value());
}

TEST_CASE("label helpers") {
    auto l = mdlie::make_label(Family::F5_3_6, {rat(2)});
    CHECK(l.is_catalog());
    CHECK(l.index() == 6);
    CHECK_FALSE(mdlie::decomposable_label().is_catalog());
    CHECK(mdlie::decomposable_label().index() == 0);
    CHECK_FALSE(mdlie::unclassifiable_label("x").is_catalog());
}

TEST_CASE("family parameter constraints are enforced") {
    auto bad = [](Family f, std::vector<Rational> params) {
        CHECK_THROWS_AS(mdlie::make_family(mdlie::make_label(f, std::move(params))),
                        std::invalid_argument);
    };
    bad(Family::F5_3_1, {rat(1), rat(2)});
    bad(Family::F5_3_1, {rat(0), rat(2)});
    bad(Family::F5_3_1, {rat(2), rat(2)});
    bad(Family::F5_3_1, {rat(2)});             // arity
    bad(Family::F5_3_2, {rat(0)});
    bad(Family::F5_3_2, {rat(1)});
    bad(Family::F5_3_3, {rat(1)});
    bad(Family::F5_3_4, {rat(2)});             // arity
    bad(Family::F5_3_5, {rat(1)});
    bad(Family::F5_3_6, {rat(0)});
    bad(Family::F5_3_6, {rat(1)});
    bad(Family::F5_3_7, {rat(1)});             // arity
    bad(Family::F5_3_8, {rat(0), rat(3, 5), rat(4, 5)});   // zero eigenvalue
    bad(Family::F5_3_8, {rat(2), rat(1, 2), rat(1, 2)});   // not on the circle
    bad(Family::F5_3_8, {rat(2), rat(3, 5), rat(-4, 5)});  // s must be positive
    bad(Family::F5_3_8, {rat(2), rat(1), rat(0)});         // s must be positive
    CHECK_THROWS_AS(mdlie::make_family(mdlie::decomposable_label()), std::invalid_argument);
    CHECK_THROWS_AS(mdlie::make_family(mdlie::unclassifiable_label("x")),
                    std::invalid_argument);

    // Boundary values that are allowed.
    CHECK_NOTHROW(mdlie::make_family(mdlie::make_label(Family::F5_3_3, {rat(0)})));
    CHECK_NOTHROW(mdlie::make_family(mdlie::make_label(Family::F5_3_5, {rat(0)})));
    CHECK_NOTHROW(mdlie::make_family(
        mdlie::make_label(Family::F5_3_8, {rat(-1), rat(0), rat(1)})));
}

TEST_CASE("family templates: golden matrices") {
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)})) ==
          mat3({{rat(2), rat(0), rat(0)}, {rat(0), rat(3), rat(0)}, {rat(0), rat(0), rat(1)}}));
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_2, {rat(5)})) ==
          mat3({{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(5)}}));
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_3, {rat(5)})) ==
          mat3({{rat(5), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}}));
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_4)) ==
          RationalMatrix::identity(3));
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_5, {rat(5)})) ==
          mat3({{rat(5), rat(0), rat(0)}, {rat(0), rat(1), rat(1)}, {rat(0), rat(0), rat(1)}}));
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_6, {rat(5)})) ==
          mat3({{rat(1), rat(1), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(5)}}));
    CHECK(mdlie::family_ad_matrix(mdlie::make_label(Family::F5_3_7)) ==
          mat3({{rat(1), rat(1), rat(0)}, {rat(0), rat(1), rat(1)}, {rat(0), rat(0), rat(1)}}));
    CHECK(mdlie::family_ad_matrix(
              mdlie::make_label(Family::F5_3_8, {rat(2), rat(3, 5), rat(4, 5)})) ==
          mat3({{rat(3, 5), rat(-4, 5), rat(0)},
                {rat(4, 5), rat(3, 5), rat(0)},
                {rat(0), rat(0), rat(2)}}));
}

TEST_CASE("make_family realizes the template through the bracket table") {
    auto label = mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)});
    auto g = mdlie::make_family(label);
    CHECK(g.dim() == 5);
    // [X1, X2] = X3.
    CHECK(g.bracket_basis(0, 1) ==
          std::vector<Rational>{rat(0), rat(0), rat(1), rat(0), rat(0)});
    // Column action: [X2, X3] = 2 X3, [X2, X4] = 3 X4, [X2, X5] = X5.
    CHECK(g.bracket_basis(1, 2) ==
          std::vector<Rational>{rat(0), rat(0), rat(2), rat(0), rat(0)});
    CHECK(g.bracket_basis(1, 3) ==
          std::vector<Rational>{rat(0), rat(0), rat(0), rat(3), rat(0)});
    CHECK(g.bracket_basis(1, 4) ==
          std::vector<Rational>{rat(0), rat(0), rat(0), rat(0), rat(1)});
    // ad_{X1} kills the derived ideal.
    CHECK(g.bracket_basis(0, 2) == std::vector<Rational>(5, rat(0)));
    CHECK(g.bracket_basis(0, 3) == std::vector<Rational>(5, rat(0)));
    CHECK(g.bracket_basis(0, 4) == std::vector<Rational>(5, rat(0)));

    // The restricted ad of X2 on the canonical derived-ideal basis is the
    // template, for every battery label.
    for (const auto& l : testgen::battery_labels()) {
        auto gg = mdlie::make_family(l);
        auto g1 = mdlie::derived_series(gg)[1];
        REQUIRE(g1.dim() == 3);
        std::vector<Rational> x2{rat(0), rat(1), rat(0), rat(0), rat(0)};
        CHECK(mdlie::ad_restricted(gg, x2, g1) == mdlie::family_ad_matrix(l));
        CHECK(mdlie::is_abelian_subspace(gg, g1));
        CHECK(mdlie::is_solvable(gg));
    }
}

TEST_CASE("circle_point parameterizes rational points of the unit circle") {
    auto [c, s] = mdlie::circle_point(rat(1, 2));
    CHECK(c == rat(3, 5));
    CHECK(s == rat(4, 5));
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        auto p = testgen::random_rational(rng);
        auto [cc, ss] = mdlie::circle_point(p);
        CHECK(cc * cc + ss * ss == rat(1));
    }
}

TEST_CASE("rational_cubic_roots") {
    // (t-1)(t-2)(t-3) = t^3 - 6 t^2 + 11 t - 6.
    CHECK(mdlie::rational_cubic_roots(rat(-6), rat(11), rat(-6)) ==
          std::vector<Rational>{rat(1), rat(2), rat(3)});
    // t^3: triple zero.
    CHECK(mdlie::rational_cubic_roots(rat(0), rat(0), rat(0)) ==
          std::vector<Rational>{rat(0), rat(0), rat(0)});
    // t(t^2 + 1): only the rational root 0.
    CHECK(mdlie::rational_cubic_roots(rat(0), rat(1), rat(0)) ==
          std::vector<Rational>{rat(0)});
    // t^3 - 2: no rational root.
    CHECK(mdlie::rational_cubic_roots(rat(0), rat(0), rat(-2)).empty());
    // (t - 1/2)^2 (t + 3) = t^3 + 2 t^2 - 11/4 t + 3/4.
    CHECK(mdlie::rational_cubic_roots(rat(2), rat(-11, 4), rat(3, 4)) ==
          std::vector<Rational>{rat(-3), rat(1, 2), rat(1, 2)});
    // (t - 2/3)(t^2 + t + 1) = t^3 + 1/3 t^2 + 1/3 t - 2/3: one rational root.
    CHECK(mdlie::rational_cubic_roots(rat(1, 3), rat(1, 3), rat(-2, 3)) ==
          std::vector<Rational>{rat(2, 3)});
}

TEST_CASE("canonical_form_3x3 recognizes conjugated shapes") {
    std::mt19937_64 rng(21);

    auto conjugate = [&rng](const RationalMatrix& m) {
        auto p = testgen::random_invertible(rng, 3);
        auto pinv = mdlie::inverse(p);
        REQUIRE(pinv.has_value());
        return p * m * *pinv;
    };

    // Diagonalizable with three distinct eigenvalues.
    auto d = mat3({{rat(2), rat(0), rat(0)}, {rat(0), rat(3), rat(0)}, {rat(0), rat(0), rat(1)}});
    for (int t = 0; t < 5; ++t) {
        auto cf = mdlie::canonical_form_3x3(conjugate(d));
        REQUIRE(cf.has_value());
        CHECK(cf->kind == CanonicalForm3::Kind::Diag3);
        CHECK(cf->eigenvalues == std::vector<Rational>{rat(1), rat(2), rat(3)});
    }

    // Double eigenvalue, diagonalizable: diag(5, 1, 1).
    auto d2 = mat3({{rat(5), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
    auto cf2 = mdlie::canonical_form_3x3(conjugate(d2));
    REQUIRE(cf2.has_value());
    CHECK(cf2->kind == CanonicalForm3::Kind::Diag3);
    CHECK(cf2->eigenvalues == std::vector<Rational>{rat(1), rat(1), rat(5)});

    // Jordan block J2(1) + diag(5): lone eigenvalue 5, Jordan eigenvalue 1.
    auto j2 = mat3({{rat(1), rat(1), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(5)}});
    auto cfj = mdlie::canonical_form_3x3(conjugate(j2));
    REQUIRE(cfj.has_value());
    CHECK(cfj->kind == CanonicalForm3::Kind::Diag2Jordan);
    CHECK(cfj->eigenvalues == std::vector<Rational>{rat(5), rat(1)});

    // Jordan block J2(1) + J1(1): geometric multiplicity 2 at a triple point.
    auto j2d = mat3({{rat(1), rat(1), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
    auto cfk = mdlie::canonical_form_3x3(conjugate(j2d));
    REQUIRE(cfk.has_value());
    CHECK(cfk->kind == CanonicalForm3::Kind::Jordan2Diag);
    CHECK(cfk->eigenvalues == std::vector<Rational>{rat(1)});

    // Full Jordan block J3(2).
    auto j3 = mat3({{rat(2), rat(1), rat(0)}, {rat(0), rat(2), rat(1)}, {rat(0), rat(0), rat(2)}});
    auto cf3 = mdlie::canonical_form_3x3(conjugate(j3));
    REQUIRE(cf3.has_value());
    CHECK(cf3->kind == CanonicalForm3::Kind::Jordan3);
    CHECK(cf3->eigenvalues == std::vector<Rational>{rat(2)});

    // Scalar matrix: diagonalizable triple eigenvalue.
    auto sc = RationalMatrix::identity(3).scaled(rat(7));
    auto cfs = mdlie::canonical_form_3x3(sc);
    REQUIRE(cfs.has_value());
    CHECK(cfs->kind == CanonicalForm3::Kind::Diag3);
    CHECK(cfs->eigenvalues == std::vector<Rational>{rat(7), rat(7), rat(7)});

    // Rotation block + eigenvalue: irreducible quadratic factor.
    auto rot = mat3({{rat(3, 5), rat(-4, 5), rat(0)},
                     {rat(4, 5), rat(3, 5), rat(0)},
                     {rat(0), rat(0), rat(2)}});
    auto cfr = mdlie::canonical_form_3x3(conjugate(rot));
    REQUIRE(cfr.has_value());
    CHECK(cfr->kind == CanonicalForm3::Kind::RotationDiag);
    CHECK(cfr->eigenvalues == std::vector<Rational>{rat(2)});
    CHECK(cfr->quad_p == rat(-6, 5));  // trace of the rotation block, negated
    CHECK(cfr->quad_q == rat(1));

    // Irrational eigenvalues: companion-style block for t^2 - 2.
    auto irr = mat3({{rat(0), rat(2), rat(0)}, {rat(1), rat(0), rat(0)}, {rat(0), rat(0), rat(1)}});
    CHECK_FALSE(mdlie::canonical_form_3x3(irr).has_value());
}

TEST_CASE("scaling class keys merge exactly the known coincidences") {
    auto key = [](const FamilyLabel& l) { return mdlie::scaling_class_key(l); };

    // 5.3.3(l) and 5.3.2(l) share diag(l,1,1) ~ diag(1,1,l).
    CHECK(key(mdlie::make_label(Family::F5_3_2, {rat(2)})) ==
          key(mdlie::make_label(Family::F5_3_3, {rat(2)})));
    // 5.3.6(l) and 5.3.5(l) share J2(1) + diag(l) up to reordering.
    CHECK(key(mdlie::make_label(Family::F5_3_5, {rat(2)})) ==
          key(mdlie::make_label(Family::F5_3_6, {rat(2)})));
    // 5.3.8 sign pair: negating X2 rotates the other way.
    CHECK(key(mdlie::make_label(Family::F5_3_8, {rat(2), rat(3, 5), rat(4, 5)})) ==
          key(mdlie::make_label(Family::F5_3_8, {rat(-2), rat(-3, 5), rat(4, 5)})));
    // 5.3.1 parameter order is immaterial.
    CHECK(key(mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)})) ==
          key(mdlie::make_label(Family::F5_3_1, {rat(3), rat(2)})));
    // Rescaling the eigenvalue triple is a label-level isomorphism:
    // diag(2,3,1) scaled by 1/2 is diag(1, 3/2, 1/2).
    CHECK(key(mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)})) ==
          key(mdlie::make_label(Family::F5_3_1, {rat(3, 2), rat(1, 2)})));

    // Separations that must hold.
    CHECK(key(mdlie::make_label(Family::F5_3_4)) != key(mdlie::make_label(Family::F5_3_7)));
    CHECK(key(mdlie::make_label(Family::F5_3_2, {rat(2)})) !=
          key(mdlie::make_label(Family::F5_3_2, {rat(3)})));
    CHECK(key(mdlie::make_label(Family::F5_3_5, {rat(2)})) !=
          key(mdlie::make_label(Family::F5_3_7)));
    CHECK(key(mdlie::make_label(Family::F5_3_8, {rat(2), rat(3, 5), rat(4, 5)})) !=
          key(mdlie::make_label(Family::F5_3_8, {rat(3), rat(3, 5), rat(4, 5)})));
    CHECK(key(mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)})) !=
          key(mdlie::make_label(Family::F5_3_1, {rat(2), rat(5)})));
}

TEST_CASE("pairwise_distinct reports proofs and coincidences") {
    auto pairs = mdlie::pairwise_distinct({
        mdlie::make_label(Family::F5_3_4),
        mdlie::make_label(Family::F5_3_7),
    });
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].distinct);

    auto merged = mdlie::pairwise_distinct({
        mdlie::make_label(Family::F5_3_2, {rat(2)}),
        mdlie::make_label(Family::F5_3_3, {rat(2)}),
    });
    REQUIRE(merged.size() == 1);
    CHECK_FALSE(merged[0].distinct);

    auto trio = mdlie::pairwise_distinct({
        mdlie::make_label(Family::F5_3_1, {rat(2), rat(3)}),
        mdlie::make_label(Family::F5_3_1, {rat(3), rat(2)}),
        mdlie::make_label(Family::F5_3_4),
    });
    REQUIRE(trio.size() == 3);
    CHECK_FALSE(trio[0].distinct);  // (2,3) vs (3,2): same algebra
    CHECK(trio[1].distinct);
    CHECK(trio[2].distinct);

    CHECK_THROWS_AS(mdlie::pairwise_distinct({mdlie::unclassifiable_label("x"),
                                              mdlie::make_label(Family::F5_3_4)}),
                    std::invalid_argument);
}

TEST_CASE("explicit isomorphism: 5.3.3(l) is 5.3.2(l) in disguise") {
    // Y1 = X1 + X3/l - X4, Y2 = X2, Y3 = X4, Y4 = X5, Y5 = X3 carries
    // 5.3.3(l) onto the 5.3.2(l) structure constants.
    for (Rational l : {rat(2), rat(-1), rat(1, 2)}) {
        auto src = mdlie::make_family(mdlie::make_label(Family::F5_3_3, {l}));
        auto dst = mdlie::make_family(mdlie::make_label(Family::F5_3_2, {l}));
        RationalMatrix p(5, 5);
        p.at(0, 0) = rat(1);
        p.at(2, 0) = l.inverse();
        p.at(3, 0) = rat(-1);
        p.at(1, 1) = rat(1);
        p.at(3, 2) = rat(1);
        p.at(4, 3) = rat(1);
        p.at(2, 4) = rat(1);
        CHECK(mdlie::change_basis(src, mdlie::BasisChange(p)) == dst);
    }
}

TEST_CASE("explicit isomorphism: 5.3.6(l) is 5.3.5(l) in disguise") {
    // Y1 = X1 + X3 - X5/l, Y2 = X2, Y3 = X5, Y4 = X3, Y5 = X4.
    for (Rational l : {rat(2), rat(-1), rat(1, 2)}) {
        auto src = mdlie::make_family(mdlie::make_label(Family::F5_3_6, {l}));
        auto dst = mdlie::make_family(mdlie::make_label(Family::F5_3_5, {l}));
        RationalMatrix p(5, 5);
        p.at(0, 0) = rat(1);
        p.at(2, 0) = rat(1);
        p.at(4, 0) = -l.inverse();
        p.at(1, 1) = rat(1);
        p.at(4, 2) = rat(1);
        p.at(2, 3) = rat(1);
        p.at(3, 4) = rat(1);
        CHECK(mdlie::change_basis(src, mdlie::BasisChange(p)) == dst);
    }
}

TEST_CASE("explicit isomorphism: 5.3.8 sign pair") {
    // Negating X2 and swapping the rotation plane's basis maps
    // (l; c, s) to (-l; -c, s); X1 absorbs a derived-ideal correction.
    Rational l = rat(2), c = rat(3, 5), s = rat(4, 5);
    auto src = mdlie::make_family(mdlie::make_label(Family::F5_3_8, {l, c, s}));
    auto dst = mdlie::make_family(mdlie::make_label(Family::F5_3_8, {-l, -c, s}));
    RationalMatrix p(5, 5);
    p.at(0, 0) = rat(1);
    p.at(2, 0) = c + s;   // 7/5
    p.at(3, 0) = c - s;   // -1/5
    p.at(1, 1) = rat(-1);
    p.at(3, 2) = rat(1);
    p.at(2, 3) = rat(1);
    p.at(4, 4) = rat(1);
    CHECK(mdlie::change_basis(src, mdlie::BasisChange(p)) == dst);
}

TEST_CASE("battery labels construct and separate into the expected classes") {
    auto labels = testgen::battery_labels();
    REQUIRE(labels.size() == 24);
    auto pairs = mdlie::pairwise_distinct(labels);
    CHECK(pairs.size() == 24 * 23 / 2);
    std::size_t merged = 0;
    for (const auto& p : pairs) {
        if (!p.distinct) ++merged;
    }
    // Exactly the 5.3.3/5.3.2 and 5.3.6/5.3.5 coincidences at l in
    // {-1, 1/2, 2}: six merged pairs.
    CHECK(merged == 6);
}
