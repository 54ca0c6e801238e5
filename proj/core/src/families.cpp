#include "mdlie/families.hpp"

#include "mdlie/linear_form_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

namespace mdlie {

namespace {

bool in_zero_one(const Rational& r) { return r.is_zero() || r.is_one(); }

[[noreturn]] void constraint_error(const std::string& msg) {
    throw std::invalid_argument(msg);
}

void validate_catalog_params(const FamilyLabel& label) {
    const auto& p = label.params;
    auto expect_count = [&](std::size_t n) {
        if (p.size() != n)
            constraint_error("5.3." + std::to_string(label.index()) + " takes " +
                             std::to_string(n) + " parameter(s), got " +
                             std::to_string(p.size()));
    };
    switch (label.family) {
        case FamilyLabel::Family::F5_3_1:
            expect_count(2);
            if (in_zero_one(p[0]) || in_zero_one(p[1]))
                constraint_error("5.3.1 requires both parameters outside {0, 1}");
            if (p[0] == p[1]) constraint_error("5.3.1 requires distinct parameters");
            break;
        case FamilyLabel::Family::F5_3_2:
            expect_count(1);
            if (in_zero_one(p[0]))
                constraint_error("5.3.2 requires a parameter outside {0, 1}");
            break;
        case FamilyLabel::Family::F5_3_3:
            expect_count(1);
            if (p[0].is_one()) constraint_error("5.3.3 requires a parameter != 1");
            break;
        case FamilyLabel::Family::F5_3_4:
            expect_count(0);
            break;
        case FamilyLabel::Family::F5_3_5:
            expect_count(1);
            if (p[0].is_one()) constraint_error("5.3.5 requires a parameter != 1");
            break;
        case FamilyLabel::Family::F5_3_6:
            expect_count(1);
            if (in_zero_one(p[0]))
                constraint_error("5.3.6 requires a parameter outside {0, 1}");
            break;
        case FamilyLabel::Family::F5_3_7:
            expect_count(0);
            break;
        case FamilyLabel::Family::F5_3_8: {
            expect_count(3);
            const Rational &lam = p[0], &c = p[1], &s = p[2];
            if (lam.is_zero()) constraint_error("5.3.8 requires a nonzero eigenvalue parameter");
            if (c * c + s * s != Rational(1))
                constraint_error("5.3.8 requires c^2 + s^2 = 1");
            if (s.sign() <= 0) constraint_error("5.3.8 requires s > 0");
            break;
        }
        default:
            constraint_error("label does not name a constructible catalog family");
    }
}

std::string trim(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

const char* family_name(FamilyLabel::Family f) {
    switch (f) {
        case FamilyLabel::Family::F5_3_1: return "5.3.1";
        case FamilyLabel::Family::F5_3_2: return "5.3.2";
        case FamilyLabel::Family::F5_3_3: return "5.3.3";
        case FamilyLabel::Family::F5_3_4: return "5.3.4";
        case FamilyLabel::Family::F5_3_5: return "5.3.5";
        case FamilyLabel::Family::F5_3_6: return "5.3.6";
        case FamilyLabel::Family::F5_3_7: return "5.3.7";
        case FamilyLabel::Family::F5_3_8: return "5.3.8";
        case FamilyLabel::Family::Decomposable: return "decomposable";
        case FamilyLabel::Family::Unclassifiable: return "unclassifiable";
    }
    return "unclassifiable";
}

}  // namespace

bool FamilyLabel::is_catalog() const { return index() != 0; }

int FamilyLabel::index() const {
    switch (family) {
        case Family::F5_3_1: return 1;
        case Family::F5_3_2: return 2;
        case Family::F5_3_3: return 3;
        case Family::F5_3_4: return 4;
        case Family::F5_3_5: return 5;
        case Family::F5_3_6: return 6;
        case Family::F5_3_7: return 7;
        case Family::F5_3_8: return 8;
        default: return 0;
    }
}

std::string FamilyLabel::str() const {
    switch (family) {
        case Family::Decomposable: return "decomposable";
        case Family::Unclassifiable:
            return reason.empty() ? "unclassifiable" : "unclassifiable: " + reason;
        case Family::F5_3_8:
            if (params.size() == 3)
                return std::string(family_name(family)) + "(" + params[0].str() + "; " +
                       params[1].str() + ", " + params[2].str() + ")";
            break;
        default: break;
    }
    std::string out = family_name(family);
    if (!params.empty()) {
        out += "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) out += ",";
            out += params[i].str();
        }
        out += ")";
    }
    return out;
}

std::optional<FamilyLabel> FamilyLabel::parse(std::string_view text) {
    std::string t = trim(text);
    if (t == "decomposable") return decomposable_label();
    if (t == "unclassifiable") return unclassifiable_label("");
    const std::string unc_prefix = "unclassifiable:";
    if (t.rfind(unc_prefix, 0) == 0)
        return unclassifiable_label(trim(t.substr(unc_prefix.size())));

    const std::string prefix = "5.3.";
    if (t.rfind(prefix, 0) != 0) return std::nullopt;
    std::size_t pos = prefix.size();
    if (pos >= t.size() || t[pos] < '1' || t[pos] > '8') return std::nullopt;
    int index = t[pos] - '0';
    ++pos;

    FamilyLabel label;
    label.family = static_cast<Family>(index - 1);

    std::string rest = trim(t.substr(pos));
    if (rest.empty()) return label;
    if (rest.front() != '(' || rest.back() != ')') return std::nullopt;
    std::string args = rest.substr(1, rest.size() - 2);

    std::string token;
    auto flush = [&]() -> bool {
        auto r = Rational::parse(trim(token));
        if (!r) return false;
        label.params.push_back(*r);
        token.clear();
        return true;
    };
    for (char ch : args) {
        if (ch == ',' || ch == ';') {
            if (!flush()) return std::nullopt;
        } else {
            token += ch;
        }
    }
    if (trim(token).empty() || !flush()) return std::nullopt;
    return label;
}

FamilyLabel make_label(FamilyLabel::Family f, std::vector<Rational> params) {
    FamilyLabel label;
    label.family = f;
    label.params = std::move(params);
    return label;
}

FamilyLabel decomposable_label() {
    FamilyLabel label;
    label.family = FamilyLabel::Family::Decomposable;
    return label;
}

FamilyLabel unclassifiable_label(std::string reason) {
    FamilyLabel label;
    label.family = FamilyLabel::Family::Unclassifiable;
    label.reason = std::move(reason);
    return label;
}

RationalMatrix family_ad_matrix(const FamilyLabel& label) {
    validate_catalog_params(label);
    const auto& p = label.params;
    RationalMatrix m(3, 3);
    switch (label.family) {
        case FamilyLabel::Family::F5_3_1:
            m.at(0, 0) = p[0];
            m.at(1, 1) = p[1];
            m.at(2, 2) = Rational(1);
            break;
        case FamilyLabel::Family::F5_3_2:
            m.at(0, 0) = Rational(1);
            m.at(1, 1) = Rational(1);
            m.at(2, 2) = p[0];
            break;
        case FamilyLabel::Family::F5_3_3:
            m.at(0, 0) = p[0];
            m.at(1, 1) = Rational(1);
            m.at(2, 2) = Rational(1);
            break;
        case FamilyLabel::Family::F5_3_4:
            m = RationalMatrix::identity(3);
            break;
        case FamilyLabel::Family::F5_3_5:
            m.at(0, 0) = p[0];
            m.at(1, 1) = Rational(1);
            m.at(1, 2) = Rational(1);
            m.at(2, 2) = Rational(1);
            break;
        case FamilyLabel::Family::F5_3_6:
            m.at(0, 0) = Rational(1);
            m.at(0, 1) = Rational(1);
            m.at(1, 1) = Rational(1);
            m.at(2, 2) = p[0];
            break;
        case FamilyLabel::Family::F5_3_7:
            m.at(0, 0) = Rational(1);
            m.at(0, 1) = Rational(1);
            m.at(1, 1) = Rational(1);
            m.at(1, 2) = Rational(1);
            m.at(2, 2) = Rational(1);
            break;
        case FamilyLabel::Family::F5_3_8:
            m.at(0, 0) = p[1];
            m.at(0, 1) = -p[2];
            m.at(1, 0) = p[2];
            m.at(1, 1) = p[1];
            m.at(2, 2) = p[0];
            break;
        default:
            constraint_error("label does not name a constructible catalog family");
    }
    return m;
}

LieAlgebra make_family(const FamilyLabel& label) {
    RationalMatrix m = family_ad_matrix(label);
    BracketTable table;
    table[{0, 1}] = {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)};
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Rational> out(5);
        for (std::size_t i = 0; i < 3; ++i) out[2 + i] = m.at(i, j);
        table[{1, 2 + j}] = std::move(out);
    }
    auto result = LieAlgebra::validated(5, table);
    if (auto* g = std::get_if<LieAlgebra>(&result)) return *g;
    throw std::logic_error("family template violates the Jacobi identity");
}

std::pair<Rational, Rational> circle_point(const Rational& t) {
    Rational den = Rational(1) + t * t;
    return {(Rational(1) - t * t) / den, (Rational(2) * t) / den};
}

namespace {

Rational cubic_eval(const Rational& a, const Rational& b, const Rational& c,
                    const Rational& x) {
    return ((x + a) * x + b) * x + c;
}

// One rational root of the monic cubic t^3 + a t^2 + b t + c, if any.
// Substituting t = s/d with d clearing all denominators gives a monic
// integer cubic in s, whose rational roots are integers dividing the
// constant term.
std::optional<Rational> find_rational_cubic_root(const Rational& a, const Rational& b,
                                                 const Rational& c) {
    if (c.is_zero()) return Rational(0);
    BigInt d = boost::multiprecision::lcm(boost::multiprecision::lcm(a.den(), b.den()),
                                          c.den());
    Rational scaled = c * Rational(d) * Rational(d) * Rational(d);
    BigInt n = boost::multiprecision::abs(scaled.num());
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        const BigInt pair[2] = {i, n / i};
        for (const BigInt& base : pair) {
            Rational cand(base, d);
            if (cubic_eval(a, b, c, cand).is_zero()) return cand;
            if (cubic_eval(a, b, c, -cand).is_zero()) return -cand;
        }
    }
    return std::nullopt;
}

std::size_t geometric_multiplicity(const RationalMatrix& m, const Rational& eig) {
    RationalMatrix shifted = m - RationalMatrix::identity(3).scaled(eig);
    return 3 - rank(shifted);
}

}  // namespace

std::vector<Rational> rational_cubic_roots(const Rational& a, const Rational& b,
                                           const Rational& c) {
    std::vector<Rational> roots;
    auto r = find_rational_cubic_root(a, b, c);
    if (!r) return roots;
    roots.push_back(*r);
    Rational p = a + *r;
    Rational q = b + (a + *r) * *r;
    Rational disc = p * p - Rational(4) * q;
    if (disc.sign() >= 0) {
        if (auto sq = rational_sqrt(disc)) {
            roots.push_back((-p + *sq) / Rational(2));
            roots.push_back((-p - *sq) / Rational(2));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<CanonicalForm3> canonical_form_3x3(const RationalMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw std::invalid_argument("canonical_form_3x3 needs a 3x3 matrix");

    Rational tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    Rational m2 = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)) +
                  (m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0)) +
                  (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
    Rational d3 = det(m);
    // Characteristic polynomial t^3 + a t^2 + b t + c.
    Rational a = -tr, b = m2, c = -d3;

    auto root = find_rational_cubic_root(a, b, c);
    if (!root) return std::nullopt;

    Rational p = a + *root;
    Rational q = b + (a + *root) * *root;
    Rational disc = p * p - Rational(4) * q;

    CanonicalForm3 cf;
    if (disc.sign() < 0) {
        cf.kind = CanonicalForm3::Kind::RotationDiag;
        cf.eigenvalues = {*root};
        cf.quad_p = p;
        cf.quad_q = q;
        return cf;
    }
    auto sq = rational_sqrt(disc);
    if (!sq) return std::nullopt;  // irrational real eigenvalues

    std::vector<Rational> eigs = {*root, (-p + *sq) / Rational(2), (-p - *sq) / Rational(2)};
    std::sort(eigs.begin(), eigs.end());

    std::vector<Rational> distinct;
    for (const auto& e : eigs)
        if (distinct.empty() || distinct.back() != e) distinct.push_back(e);

    if (distinct.size() == 3) {
        cf.kind = CanonicalForm3::Kind::Diag3;
        cf.eigenvalues = eigs;
        return cf;
    }
    if (distinct.size() == 2) {
        Rational dbl = (eigs[0] == eigs[1]) ? eigs[0] : eigs[2];
        Rational lone = (eigs[0] == eigs[1]) ? eigs[2] : eigs[0];
        if (geometric_multiplicity(m, dbl) == 2) {
            cf.kind = CanonicalForm3::Kind::Diag3;
            cf.eigenvalues = eigs;
        } else {
            cf.kind = CanonicalForm3::Kind::Diag2Jordan;
            cf.eigenvalues = {lone, dbl};
        }
        return cf;
    }
    std::size_t geo = geometric_multiplicity(m, eigs[0]);
    cf.eigenvalues = {eigs[0]};
    if (geo == 3) {
        cf.kind = CanonicalForm3::Kind::Diag3;
        cf.eigenvalues = eigs;
    } else if (geo == 2) {
        cf.kind = CanonicalForm3::Kind::Jordan2Diag;
    } else {
        cf.kind = CanonicalForm3::Kind::Jordan3;
    }
    return cf;
}

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

// Lexicographically greatest among {sorted(values / e) : e in values, e != 0}.
// The candidate set is invariant under scaling every value by a nonzero
// rational, so the maximum is a canonical representative of the scaling
// orbit of the multiset.
std::vector<Rational> canonical_scaled_tuple(const std::vector<Rational>& values) {
    std::vector<Rational> best;
    for (const auto& e : values) {
        if (e.is_zero()) continue;
        std::vector<Rational> cand;
        for (const auto& v : values) cand.push_back(v / e);
        std::sort(cand.begin(), cand.end());
        if (best.empty() || std::lexicographical_compare(best.begin(), best.end(),
                                                         cand.begin(), cand.end()))
            best = cand;
    }
    if (best.empty()) return values;  // all zero
    return best;
}

}  // namespace

std::string scaling_class_key(const FamilyLabel& label) {
    if (label.family == FamilyLabel::Family::Decomposable) return "decomposable";
    if (!label.is_catalog())
        throw std::invalid_argument("no scaling class for an unclassifiable label");
    auto cf = canonical_form_3x3(family_ad_matrix(label));
    if (!cf) throw std::logic_error("catalog template must have a rational canonical form");

    switch (cf->kind) {
        case CanonicalForm3::Kind::Diag3:
            return "diag[" + join_rationals(canonical_scaled_tuple(cf->eigenvalues)) + "]";
        case CanonicalForm3::Kind::Diag2Jordan: {
            // eigenvalues = {lone, jordan}; pick the scaling making one of
            // them 1, keeping the (lone, jordan) roles, lexicographically
            // greatest pair.
            const Rational &lone = cf->eigenvalues[0], &jordan = cf->eigenvalues[1];
            std::vector<std::vector<Rational>> cands;
            for (const Rational& e : {lone, jordan})
                if (!e.is_zero()) cands.push_back({lone / e, jordan / e});
            auto best = cands.front();
            for (const auto& cand : cands)
                if (std::lexicographical_compare(best.begin(), best.end(), cand.begin(),
                                                 cand.end()))
                    best = cand;
            return "d2j[" + join_rationals(best) + "]";
        }
        case CanonicalForm3::Kind::Jordan2Diag:
            return std::string("j2d[") + (cf->eigenvalues[0].is_zero() ? "0" : "1") + "]";
        case CanonicalForm3::Kind::Jordan3:
            return std::string("j3[") + (cf->eigenvalues[0].is_zero() ? "0" : "1") + "]";
        case CanonicalForm3::Kind::RotationDiag: {
            // Under scaling by beta: p -> beta p, q -> beta^2 q,
            // lam -> beta lam; the triple below is a complete invariant of
            // the scaling orbit.
            const Rational &lam = cf->eigenvalues[0], &p = cf->quad_p, &q = cf->quad_q;
            Rational k1 = p * p / q;
            Rational k2 = lam * lam / q;
            int s = (lam * p).sign();
            return "rot[" + k1.str() + "," + k2.str() + "," + std::to_string(s) + "]";
        }
    }
    throw std::logic_error("unhandled canonical form kind");
}

std::vector<DistinctnessPair> pairwise_distinct(const std::vector<FamilyLabel>& labels) {
    std::vector<std::string> keys;
    keys.reserve(labels.size());
    for (const auto& l : labels) keys.push_back(scaling_class_key(l));

    std::vector<DistinctnessPair> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            DistinctnessPair pair;
            pair.a = labels[i];
            pair.b = labels[j];
            pair.distinct = keys[i] != keys[j];
            pair.reason = pair.distinct
                              ? "scaling-similarity classes of the derived-ideal action differ"
                              : "same scaling-similarity class of the derived-ideal action";
            out.push_back(std::move(pair));
        }
    }
    return out;
}

}  // namespace mdlie
