#include "mdlie/classify.hpp"

#include "mdlie/linear_form_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mdlie {

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<Rational> scale(const std::vector<Rational>& a, const Rational& s) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

std::vector<std::vector<Rational>> eigenspace(const RationalMatrix& a, const Rational& eig) {
    return kernel_basis(a - RationalMatrix::identity(a.rows()).scaled(eig));
}

// A vector x != 0 with x in span(e) and x = w - a z for some z: exactly the
// values [X1, X2] can take with X1 = (Y1' + z)/t and X2 = t Y2'. Returns
// (x, z); nullopt when span(e) meets the reachable set only in 0.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> reach_in_subspace(
    const std::vector<Rational>& w, const RationalMatrix& a,
    const std::vector<std::vector<Rational>>& e) {
    const std::size_t n = w.size();
    const std::size_t k = e.size();
    RationalMatrix m(n, k + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) m.at(r, c) = e[c][r];
        for (std::size_t c = 0; c < n; ++c) m.at(r, k + c) = a.at(r, c);
    }
    auto sol = solve(m, w);
    if (!sol) return std::nullopt;
    auto c_is_zero = [&](const std::vector<Rational>& s) {
        for (std::size_t i = 0; i < k; ++i)
            if (!s[i].is_zero()) return false;
        return true;
    };
    if (c_is_zero(*sol)) {
        bool fixed = false;
        for (const auto& kv : kernel_basis(m)) {
            if (!c_is_zero(kv)) {
                *sol = add(*sol, kv);
                fixed = true;
                break;
            }
        }
        if (!fixed) return std::nullopt;
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < k; ++i) x = add(x, scale(e[i], (*sol)[i]));
    std::vector<Rational> z((*sol).begin() + static_cast<std::ptrdiff_t>(k), (*sol).end());
    return std::make_pair(x, z);
}

// Template match: scaling that maps the derived-ideal action onto a family
// template, plus the new G1 basis (in G1 coordinates) realizing it.
struct TemplateMatch {
    FamilyLabel label;
    Rational beta;  // X2 = beta * Y2'
    std::vector<Rational> x3, x4, x5, z;
};

[[noreturn]] void reach_failure() {
    throw std::logic_error("classify: in-catalog template lost the reachability argument");
}

std::optional<TemplateMatch> match_diag3(const CanonicalForm3& cf, const RationalMatrix& a,
                                         const std::vector<Rational>& w) {
    const auto& eigs = cf.eigenvalues;
    std::vector<Rational> distinct;
    for (const auto& e : eigs)
        if (distinct.empty() || distinct.back() != e) distinct.push_back(e);

    if (distinct.size() == 3) {
        if (eigs[0].is_zero() || eigs[1].is_zero() || eigs[2].is_zero()) return std::nullopt;
        // Canonical 5.3.1 parameters: lexicographically greatest ascending
        // pair among the three rescalings that put some eigenvalue at 1.
        std::vector<Rational> best_pair;
        Rational best_e;
        for (const auto& e : eigs) {
            std::vector<Rational> pair;
            for (const auto& v : eigs)
                if (v != e) pair.push_back(v / e);
            std::sort(pair.begin(), pair.end());
            if (best_pair.empty() ||
                std::lexicographical_compare(best_pair.begin(), best_pair.end(), pair.begin(),
                                             pair.end())) {
                best_pair = pair;
                best_e = e;
            }
        }
        TemplateMatch tm;
        tm.label = make_label(FamilyLabel::Family::F5_3_1, {best_pair[0], best_pair[1]});
        tm.beta = best_e.inverse();
        auto r = reach_in_subspace(w, a, eigenspace(a, best_pair[0] * best_e));
        if (!r) reach_failure();
        tm.x3 = r->first;
        tm.z = r->second;
        tm.x4 = eigenspace(a, best_pair[1] * best_e).at(0);
        tm.x5 = eigenspace(a, best_e).at(0);
        return tm;
    }

    if (distinct.size() == 2) {
        Rational dbl = (eigs[0] == eigs[1]) ? eigs[0] : eigs[2];
        Rational lone = (eigs[0] == eigs[1]) ? eigs[2] : eigs[0];
        if (dbl.is_zero()) return std::nullopt;  // diag(0,0,x): outside the catalog
        auto dbl_space = eigenspace(a, dbl);
        TemplateMatch tm;
        tm.beta = dbl.inverse();
        if (!lone.is_zero()) {
            // 5.3.2(lambda): double eigenvalue scaled to 1, X3 inside the
            // 2-dimensional eigenspace.
            tm.label = make_label(FamilyLabel::Family::F5_3_2, {lone / dbl});
            auto r = reach_in_subspace(w, a, dbl_space);
            if (!r) reach_failure();
            tm.x3 = r->first;
            tm.z = r->second;
            for (const auto& v : dbl_space)
                if (!in_span({tm.x3}, v)) {
                    tm.x4 = v;
                    break;
                }
            if (tm.x4.empty()) reach_failure();
            tm.x5 = eigenspace(a, lone).at(0);
        } else {
            // 5.3.3(0): X3 spans the kernel, the double eigenvalue scales
            // to 1 on the complementary eigenplane.
            tm.label = make_label(FamilyLabel::Family::F5_3_3, {Rational(0)});
            auto r = reach_in_subspace(w, a, eigenspace(a, Rational(0)));
            if (!r) reach_failure();
            tm.x3 = r->first;
            tm.z = r->second;
            tm.x4 = dbl_space.at(0);
            tm.x5 = dbl_space.at(1);
        }
        return tm;
    }

    // A = m I.
    if (eigs[0].is_zero()) return std::nullopt;
    TemplateMatch tm;
    tm.label = make_label(FamilyLabel::Family::F5_3_4);
    tm.beta = eigs[0].inverse();
    tm.x3 = w;
    tm.z = std::vector<Rational>(3);
    std::vector<std::vector<Rational>> rows{tm.x3};
    for (std::size_t i = 0; i < 3 && rows.size() < 3; ++i) {
        std::vector<Rational> e(3);
        e[i] = Rational(1);
        if (!in_span(rows, e)) {
            rows.push_back(e);
            if (tm.x4.empty())
                tm.x4 = e;
            else
                tm.x5 = e;
        }
    }
    return tm;
}

std::optional<TemplateMatch> match_diag2jordan(const CanonicalForm3& cf,
                                               const RationalMatrix& a,
                                               const std::vector<Rational>& w) {
    const Rational &lone = cf.eigenvalues[0], &jordan = cf.eigenvalues[1];
    if (jordan.is_zero()) return std::nullopt;  // J2(0) block: outside the catalog

    // 5.3.5(lambda): Jordan eigenvalue scaled to 1, lone eigenvalue becomes
    // lambda (lambda = 0 allowed, lambda != 1 automatic).
    TemplateMatch tm;
    tm.label = make_label(FamilyLabel::Family::F5_3_5, {lone / jordan});
    tm.beta = jordan.inverse();

    auto r = reach_in_subspace(w, a, eigenspace(a, lone));
    if (!r) reach_failure();
    tm.x3 = r->first;
    tm.z = r->second;

    RationalMatrix n = a - RationalMatrix::identity(3).scaled(jordan);
    auto plain = kernel_basis(n);
    auto generalized = kernel_basis(n * n);
    for (const auto& v : generalized)
        if (!in_span(plain, v)) {
            tm.x5 = v;
            break;
        }
    if (tm.x5.empty()) reach_failure();
    tm.x4 = scale(n.apply(tm.x5), jordan.inverse());  // (B - I) X5 with B = A/jordan
    return tm;
}

std::optional<TemplateMatch> match_jordan3(const CanonicalForm3& cf, const RationalMatrix& a,
                                           const std::vector<Rational>& w) {
    const Rational& mu = cf.eigenvalues[0];
    if (mu.is_zero()) return std::nullopt;  // J3(0): outside the catalog

    TemplateMatch tm;
    tm.label = make_label(FamilyLabel::Family::F5_3_7);
    tm.beta = mu.inverse();

    auto r = reach_in_subspace(w, a, eigenspace(a, mu));
    if (!r) reach_failure();
    tm.x3 = r->first;
    tm.z = r->second;

    RationalMatrix b = a.scaled(tm.beta);
    RationalMatrix n = b - RationalMatrix::identity(3);
    auto x5 = solve(n * n, tm.x3);
    if (!x5) reach_failure();
    tm.x5 = *x5;
    tm.x4 = n.apply(tm.x5);
    return tm;
}

std::optional<TemplateMatch> match_rotation(const CanonicalForm3& cf, const RationalMatrix& a,
                                            const std::vector<Rational>& w, bool& irrational) {
    const Rational& mu = cf.eigenvalues[0];
    if (mu.is_zero()) return std::nullopt;  // real eigenvalue 0: outside the catalog

    auto sqrt_q = rational_sqrt(cf.quad_q);
    auto sqrt_r = rational_sqrt(Rational(4) * cf.quad_q - cf.quad_p * cf.quad_p);
    if (!sqrt_q || !sqrt_r) {
        irrational = true;
        return std::nullopt;
    }

    // Scaling beta with beta^2 q = 1; the sign making the real eigenvalue
    // positive is the canonical representative (negating X2 and swapping
    // the rotation plane realizes (lambda, c) -> (-lambda, -c)).
    TemplateMatch tm;
    tm.beta = Rational(mu.sign()) / *sqrt_q;
    Rational lam = mu * tm.beta;
    Rational c = -(tm.beta * cf.quad_p) / Rational(2);
    Rational s = *sqrt_r / (Rational(2) * *sqrt_q);
    tm.label = make_label(FamilyLabel::Family::F5_3_8, {lam, c, s});

    RationalMatrix b = a.scaled(tm.beta);
    RationalMatrix plane_op =
        b * b - b.scaled(Rational(2) * c) + RationalMatrix::identity(3);
    auto plane = kernel_basis(plane_op);
    auto r = reach_in_subspace(w, a, plane);
    if (!r) reach_failure();
    tm.x3 = r->first;
    tm.z = r->second;
    tm.x4 = scale(add(b.apply(tm.x3), scale(tm.x3, -c)), s.inverse());
    tm.x5 = eigenspace(a, mu).at(0);
    return tm;
}

}  // namespace

ClassifyResult classify(const LieAlgebra& g) {
    auto unclass = [](std::string reason) {
        return ClassifyResult{unclassifiable_label(std::move(reason)), std::nullopt};
    };
    if (g.dim() != 5) return unclass("algebra is not 5-dimensional");

    auto series = derived_series(g);
    const Subspace& g1 = series.size() > 1 ? series[1] : series[0];
    if (g1.dim() != 3) return unclass("derived ideal is not 3-dimensional");
    if (!is_abelian_subspace(g, g1)) return unclass("derived ideal is not commutative");

    // Complement of G1 spanned greedily from the standard basis.
    std::vector<std::vector<Rational>> spanning = g1.basis;
    std::vector<std::vector<Rational>> comp;
    for (std::size_t i = 0; i < 5 && comp.size() < 2; ++i) {
        std::vector<Rational> e(5);
        e[i] = Rational(1);
        if (!in_span(spanning, e)) {
            spanning.push_back(e);
            comp.push_back(e);
        }
    }

    RationalMatrix a1 = ad_restricted(g, comp[0], g1);
    RationalMatrix a2 = ad_restricted(g, comp[1], g1);
    RationalMatrix stacked(9, 2);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            stacked.at(r * 3 + c, 0) = a1.at(r, c);
            stacked.at(r * 3 + c, 1) = a2.at(r, c);
        }
    auto killers = kernel_basis(stacked);

    if (killers.size() >= 2) return unclass("derived ideal structure is inconsistent");
    if (killers.empty()) {
        if (all_zero(g.bracket(comp[0], comp[1]))) return unclass("not MD by Case (2)");
        return unclass("no complementary direction centralizes the derived ideal");
    }

    const Rational &u = killers[0][0], &v = killers[0][1];
    std::vector<Rational> y1 = add(scale(comp[0], u), scale(comp[1], v));
    std::vector<Rational> y2 = u.is_zero() ? comp[0] : comp[1];

    auto w_amb = g.bracket(y1, y2);
    auto w = coords_in_subspace(g1, w_amb);
    if (!w) throw std::logic_error("classify: bracket escaped the derived ideal");

    if (all_zero(*w)) return {decomposable_label(), std::nullopt};

    RationalMatrix a = ad_restricted(g, y2, g1);
    auto cf = canonical_form_3x3(a);
    if (!cf) return unclass("the derived-ideal action has an irrational eigenvalue");

    std::optional<TemplateMatch> tm;
    bool irrational = false;
    switch (cf->kind) {
        case CanonicalForm3::Kind::Diag3: tm = match_diag3(*cf, a, *w); break;
        case CanonicalForm3::Kind::Diag2Jordan: tm = match_diag2jordan(*cf, a, *w); break;
        case CanonicalForm3::Kind::Jordan2Diag: tm = std::nullopt; break;
        case CanonicalForm3::Kind::Jordan3: tm = match_jordan3(*cf, a, *w); break;
        case CanonicalForm3::Kind::RotationDiag:
            tm = match_rotation(*cf, a, *w, irrational);
            break;
    }
    if (!tm) {
        if (irrational)
            return unclass("the derived-ideal action has an irrational rotation parameter");
        return unclass("the derived-ideal action is outside the eight-family catalog");
    }

    auto ambient = [&](const std::vector<Rational>& coords) {
        std::vector<Rational> out(5);
        for (std::size_t i = 0; i < 3; ++i) out = add(out, scale(g1.basis[i], coords[i]));
        return out;
    };

    std::vector<Rational> x1 = scale(add(y1, ambient(tm->z)), tm->beta.inverse());
    std::vector<Rational> x2 = scale(y2, tm->beta);
    std::vector<std::vector<Rational>> columns = {x1, x2, ambient(tm->x3), ambient(tm->x4),
                                                  ambient(tm->x5)};

    RationalMatrix p(5, 5);
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t i = 0; i < 5; ++i) p.at(i, j) = columns[j][i];

    BasisChange witness(p);
    if (!(change_basis(g, witness) == make_family(tm->label)))
        throw std::logic_error("classify: witness verification failed");
    return {tm->label, std::move(witness)};
}

}  // namespace mdlie
