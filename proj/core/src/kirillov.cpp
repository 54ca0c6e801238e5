#include "mdlie/kirillov.hpp"

#include <stdexcept>

namespace mdlie {

RationalMatrix b_form(const LieAlgebra& g, const Functional& f) {
    const std::size_t n = g.dim();
    if (f.size() != n) throw std::invalid_argument("b_form: functional length mismatch");
    RationalMatrix m(n, n);
    for (const auto& [key, coeffs] : g.table()) {
        Rational value(0);
        for (std::size_t k = 0; k < n; ++k) value += f[k] * coeffs[k];
        m.at(key.first, key.second) = value;
        m.at(key.second, key.first) = -value;
    }
    return m;
}

LinearFormMatrix b_form_symbolic(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n, Poly(n)));
    for (const auto& [key, coeffs] : g.table()) {
        Poly form(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (coeffs[k].is_zero()) continue;
            Monomial m(n, 0);
            m[k] = 1;
            form.add_term(m, coeffs[k]);
        }
        entries[key.first][key.second] = form;
        entries[key.second][key.first] = -form;
    }
    return LinearFormMatrix(n, n, std::move(entries));
}

Subspace stabilizer(const LieAlgebra& g, const Functional& f) {
    Subspace s;
    s.ambient_dim = g.dim();
    s.basis = kernel_basis(b_form(g, f));
    return s;
}

std::size_t orbit_dimension(const LieAlgebra& g, const Functional& f) {
    return rank(b_form(g, f));
}

}  // namespace mdlie
