#pragma once

#include "mdlie/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdlie {

// Exponent vector, one entry per variable.
using Monomial = std::vector<unsigned>;

// Graded lexicographic order, greatest first: higher total degree wins,
// ties broken by the earlier variable carrying the larger exponent. With
// this comparator a map's begin() is the leading term.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational in variables F1..Fn.
// No zero coefficients are ever stored.
class Poly {
public:
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t index);  // 0-based -> F(index+1)

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational, GrlexGreater>& terms() const { return terms_; }

    // Coefficient of an exact monomial (zero if absent).
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& point) const;

    std::size_t total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;       // zero polynomial counts as homogeneous
    std::pair<Monomial, Rational> leading() const;  // throws on zero

    // Terms in graded-lex order, variables rendered F1..Fn, e.g.
    // "F1^2 - 2*F2*F3". Zero renders as "0".
    std::string str() const;

private:
    std::size_t nvars_;
    std::map<Monomial, Rational, GrlexGreater> terms_;
};

// Exact quotient num/den, or nullopt when den does not divide num.
// den must be nonzero.
std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

// Rank of a matrix of polynomials over the fraction field Q(F1..Fn),
// i.e. the rank at a generic point, by fraction-free elimination with
// exact polynomial division.
std::size_t generic_rank(std::vector<std::vector<Poly>> m);

}  // namespace mdlie
