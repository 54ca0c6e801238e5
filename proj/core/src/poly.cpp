#include "mdlie/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdlie {

namespace {

std::size_t mono_degree(const Monomial& m) {
    std::size_t d = 0;
    for (unsigned e : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// a / b when every exponent of b fits under a.
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return std::nullopt;
        r[i] = a[i] - b[i];
    }
    return r;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    std::size_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw std::invalid_argument("Poly::add_term: bad monomial length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& s) const {
    Poly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly::evaluate: bad point length");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

std::size_t Poly::total_degree() const {
    if (terms_.empty()) return 0;
    return mono_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = mono_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) != d) return false;
    return true;
}

std::pair<Monomial, Rational> Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return *terms_.begin();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;

        std::string vars;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += 'F';
            vars += std::to_string(i + 1);
            if (m[i] > 1) {
                vars += '^';
                vars += std::to_string(m[i]);
            }
        }
        if (vars.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << vars;
        } else {
            os << a.str() << '*' << vars;
        }
    }
    return os.str();
}

std::optional<Poly> exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (num.nvars() != den.nvars()) throw std::invalid_argument("exact_divide: variable count mismatch");
    Poly r = num;
    Poly q(num.nvars());
    const auto [dm, dc] = den.leading();
    while (!r.is_zero()) {
        const auto [rm, rc] = r.leading();
        auto qm = mono_div(rm, dm);
        // Divisibility by den is preserved when subtracting multiples of den,
        // so a non-divisible leading term proves the quotient is not exact.
        if (!qm) return std::nullopt;
        Rational qc = rc / dc;
        Poly t(num.nvars());
        t.add_term(*qm, qc);
        q += t;
        r -= t * den;
    }
    return q;
}

std::size_t generic_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    const std::size_t nv = m.front().empty() ? 0 : m.front().front().nvars();
    Poly prev = Poly::constant(nv, Rational(1));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        const Poly piv = m[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Poly head = m[r][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Poly cross = piv * m[r][j] - head * m[rank][j];
                auto div = exact_divide(cross, prev);
                if (!div)
                    throw std::logic_error("generic_rank: fraction-free division failed");
                m[r][j] = std::move(*div);
            }
            m[r][c] = Poly(nv);
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace mdlie
