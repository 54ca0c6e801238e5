#include "mdlie/linear_form_matrix.hpp"

#include <stdexcept>

namespace mdlie {

namespace {

bool is_linear_form(const Poly& p) {
    return p.is_zero() || (p.is_homogeneous() && p.total_degree() == 1);
}

}  // namespace

LinearFormMatrix::LinearFormMatrix(std::size_t size, std::size_t nvars,
                                   std::vector<std::vector<Poly>> entries)
    : size_(size), nvars_(nvars), entries_(std::move(entries)) {
    if (entries_.size() != size_) throw std::invalid_argument("LinearFormMatrix: bad row count");
    for (const auto& row : entries_)
        if (row.size() != size_) throw std::invalid_argument("LinearFormMatrix: bad column count");
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            const Poly& p = entries_[i][j];
            if (p.nvars() != nvars_)
                throw std::invalid_argument("LinearFormMatrix: variable count mismatch");
            if (!is_linear_form(p))
                throw std::invalid_argument("LinearFormMatrix: entry is not a linear form");
        }
        if (!entries_[i][i].is_zero())
            throw std::invalid_argument("LinearFormMatrix: nonzero diagonal");
        for (std::size_t j = i + 1; j < size_; ++j)
            if (entries_[i][j] != -entries_[j][i])
                throw std::invalid_argument("LinearFormMatrix: not skew-symmetric");
    }
}

RationalMatrix LinearFormMatrix::specialize(const std::vector<Rational>& point) const {
    RationalMatrix m(size_, size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) m.at(i, j) = entries_[i][j].evaluate(point);
    return m;
}

bool LinearFormMatrix::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

namespace {

Poly pfaffian_rec(const LinearFormMatrix& b, std::vector<std::size_t> idx) {
    if (idx.empty()) return Poly::constant(b.nvars(), Rational(1));
    Poly acc(b.nvars());
    const std::size_t i0 = idx.front();
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const Poly& e = b.entry(i0, idx[t]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        Poly sub = pfaffian_rec(b, std::move(rest));
        Poly term = e * sub;
        if (t % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}

void subsets_rec(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Poly pfaffian(const LinearFormMatrix& b, const std::vector<std::size_t>& index_set) {
    if (index_set.size() % 2 != 0)
        throw std::invalid_argument("pfaffian: index set must have even size");
    for (std::size_t i : index_set)
        if (i >= b.size()) throw std::invalid_argument("pfaffian: index out of range");
    return pfaffian_rec(b, index_set);
}

std::vector<Poly> pfaffian_principal_minors(const LinearFormMatrix& b,
                                            std::size_t minor_size) {
    if (minor_size % 2 != 0)
        throw std::invalid_argument("pfaffian_principal_minors: odd minor size");
    if (minor_size > b.size())
        throw std::invalid_argument("pfaffian_principal_minors: minor larger than matrix");
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    subsets_rec(b.size(), minor_size, 0, cur, subsets);
    std::vector<Poly> out;
    out.reserve(subsets.size());
    for (const auto& s : subsets) out.push_back(pfaffian(b, s));
    return out;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (r.is_zero()) return Rational(0);
    BigInt sn = boost::multiprecision::sqrt(r.num());
    BigInt sd = boost::multiprecision::sqrt(r.den());
    if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
    return Rational(sn, sd);
}

namespace {

// q = L^2 for a linear form L? The leading monomial of a square is the
// square of the leading variable, which pins every coefficient of L.
std::optional<Poly> square_root_of_quadratic(const Poly& q) {
    const std::size_t nv = q.nvars();
    if (q.is_zero()) return Poly(nv);
    auto [lm, lc] = q.leading();
    std::size_t lead_var = nv;
    for (std::size_t i = 0; i < nv; ++i) {
        if (lm[i] == 2 && lead_var == nv) {
            lead_var = i;
        } else if (lm[i] != 0) {
            return std::nullopt;  // leading monomial is a cross term
        }
    }
    if (lead_var == nv) return std::nullopt;
    auto root = rational_sqrt(lc);
    if (!root) return std::nullopt;
    Poly l(nv);
    Monomial m(nv, 0);
    m[lead_var] = 1;
    l.add_term(m, *root);
    for (std::size_t k = lead_var + 1; k < nv; ++k) {
        Monomial cross(nv, 0);
        cross[lead_var] = 1;
        cross[k] = 1;
        Rational c = q.coeff(cross);
        if (c.is_zero()) continue;
        Monomial mk(nv, 0);
        mk[k] = 1;
        l.add_term(mk, c / (Rational(2) * *root));
    }
    if (l * l == q) return l;
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<Poly, Poly>> factor_quadratic_into_linear(const Poly& q) {
    const std::size_t nv = q.nvars();
    if (q.is_zero()) return std::make_pair(Poly(nv), Poly(nv));
    if (q.total_degree() > 2)
        throw std::invalid_argument("factor_quadratic_into_linear: degree exceeds 2");
    if (!q.is_homogeneous())
        throw std::invalid_argument("factor_quadratic_into_linear: input not homogeneous");
    if (q.total_degree() < 2) return std::nullopt;  // a product of linear forms has degree 2

    // Split on a variable with a square term: q = a*x^2 + x*B + C.
    for (std::size_t i = 0; i < nv; ++i) {
        Monomial sq(nv, 0);
        sq[i] = 2;
        Rational a = q.coeff(sq);
        if (a.is_zero()) continue;

        Poly b(nv), cpart(nv);
        for (const auto& [m, c] : q.terms()) {
            if (m[i] == 2) continue;
            if (m[i] == 1) {
                Monomial rest = m;
                rest[i] = 0;
                b.add_term(rest, c);
            } else {
                cpart.add_term(m, c);
            }
        }
        // Discriminant of q as a quadratic in x_i; a rational square root
        // means the two roots, hence the two factors, are rational.
        Poly disc = b * b - cpart.scaled(Rational(4) * a);
        auto l = square_root_of_quadratic(disc);
        if (!l) return std::nullopt;
        Poly xi = Poly::variable(nv, i);
        Poly f1 = xi.scaled(a) + (b + *l).scaled(Rational(1, 2));
        Poly f2 = xi + (b - *l).scaled(Rational(1, 2) / a);
        return std::make_pair(f1, f2);
    }

    // No square term: q = x_i*B + C with B, C free of x_i. Any factorization
    // must then place x_i in exactly one factor, forcing the other to be
    // proportional to B; it works iff B divides C.
    std::size_t i = nv;
    for (const auto& [m, c] : q.terms()) {
        for (std::size_t k = 0; k < nv; ++k) {
            if (m[k] > 0) {
                if (i == nv || k < i) i = k;
                break;
            }
        }
    }
    Poly b(nv), cpart(nv);
    for (const auto& [m, c] : q.terms()) {
        if (m[i] == 1) {
            Monomial rest = m;
            rest[i] = 0;
            b.add_term(rest, c);
        } else {
            cpart.add_term(m, c);
        }
    }
    Poly xi = Poly::variable(nv, i);
    if (cpart.is_zero()) return std::make_pair(b, xi);
    auto e = exact_divide(cpart, b);
    if (!e) return std::nullopt;
    return std::make_pair(b, xi + *e);
}

std::vector<Rational> linear_form_coeffs(const Poly& linear) {
    const std::size_t nv = linear.nvars();
    if (!linear.is_zero() && !(linear.is_homogeneous() && linear.total_degree() == 1))
        throw std::invalid_argument("linear_form_coeffs: not a linear form");
    std::vector<Rational> out(nv);
    for (const auto& [m, c] : linear.terms())
        for (std::size_t i = 0; i < nv; ++i)
            if (m[i] == 1) out[i] = c;
    return out;
}

}  // namespace mdlie
