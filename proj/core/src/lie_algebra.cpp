#include "mdlie/lie_algebra.hpp"

#include <stdexcept>

namespace mdlie {

namespace {

std::vector<std::string> default_labels(std::size_t dim) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("X" + std::to_string(i + 1));
    return labels;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

std::variant<LieAlgebra, JacobiViolation> LieAlgebra::validated(
    std::size_t dim, BracketTable table, std::vector<std::string> basis_labels) {
    for (const auto& [key, out] : table) {
        if (key.first >= key.second || key.second >= dim)
            throw std::invalid_argument("LieAlgebra: bracket key out of range or not i<j");
        if (out.size() != dim)
            throw std::invalid_argument("LieAlgebra: bracket coefficient vector of wrong length");
    }
    for (auto it = table.begin(); it != table.end();) {
        if (all_zero(it->second))
            it = table.erase(it);
        else
            ++it;
    }
    if (basis_labels.empty()) basis_labels = default_labels(dim);
    if (basis_labels.size() != dim)
        throw std::invalid_argument("LieAlgebra: wrong number of basis labels");

    LieAlgebra g(dim, std::move(table), std::move(basis_labels));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k) {
                std::vector<Rational> ei(dim), ej(dim), ek(dim);
                ei[i] = Rational(1);
                ej[j] = Rational(1);
                ek[k] = Rational(1);
                auto t1 = g.bracket(g.bracket_basis(i, j), ek);
                auto t2 = g.bracket(g.bracket_basis(j, k), ei);
                auto t3 = g.bracket(g.bracket_basis(k, i), ej);
                std::vector<Rational> residual(dim);
                for (std::size_t t = 0; t < dim; ++t)
                    residual[t] = t1[t] + t2[t] + t3[t];
                if (!all_zero(residual)) return JacobiViolation{i, j, k, residual};
            }
    return g;
}

LieAlgebra LieAlgebra::unchecked(std::size_t dim, BracketTable table,
                                 std::vector<std::string> labels) {
    for (auto it = table.begin(); it != table.end();) {
        if (all_zero(it->second))
            it = table.erase(it);
        else
            ++it;
    }
    if (labels.empty()) labels = default_labels(dim);
    return LieAlgebra(dim, std::move(table), std::move(labels));
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::invalid_argument("bracket_basis: index out of range");
    std::vector<Rational> out(dim_);
    if (i == j) return out;
    if (i < j) {
        auto it = table_.find({i, j});
        if (it != table_.end()) out = it->second;
    } else {
        auto it = table_.find({j, i});
        if (it != table_.end())
            for (std::size_t k = 0; k < dim_; ++k) out[k] = -it->second[k];
    }
    return out;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw std::invalid_argument("bracket: dimension mismatch");
    std::vector<Rational> out(dim_);
    for (const auto& [key, coeffs] : table_) {
        // [u, v] picks up c_{ij} (u_i v_j - u_j v_i) for each stored pair.
        Rational factor = u[key.first] * v[key.second] - u[key.second] * v[key.first];
        if (factor.is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k) out[k] += factor * coeffs[k];
    }
    return out;
}

RationalMatrix LieAlgebra::ad(const std::vector<Rational>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("ad: dimension mismatch");
    RationalMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        std::vector<Rational> ej(dim_);
        ej[j] = Rational(1);
        auto col = bracket(x, ej);
        for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

RationalMatrix LieAlgebra::ad_basis(std::size_t i) const {
    std::vector<Rational> e(dim_);
    e[i] = Rational(1);
    return ad(e);
}

BasisChange::BasisChange(RationalMatrix p) : p_(std::move(p)) {
    if (p_.rows() != p_.cols()) throw std::invalid_argument("BasisChange: matrix not square");
    auto inv = inverse(p_);
    if (!inv) throw std::invalid_argument("BasisChange: singular matrix");
    p_inv_ = std::move(*inv);
}

namespace {

Subspace span_subspace(const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
    Subspace s;
    s.ambient_dim = dim;
    s.basis = canonical_span(vectors, dim);
    return s;
}

Subspace full_space(std::size_t dim) {
    Subspace s;
    s.ambient_dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Rational> e(dim);
        e[i] = Rational(1);
        s.basis.push_back(std::move(e));
    }
    return s;
}

}  // namespace

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<std::vector<Rational>> gens;
    for (const auto& u : a.basis)
        for (const auto& v : b.basis) {
            auto w = g.bracket(u, v);
            bool nonzero = false;
            for (const auto& x : w)
                if (!x.is_zero()) nonzero = true;
            if (nonzero) gens.push_back(std::move(w));
        }
    return span_subspace(gens, g.dim());
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
    std::vector<Subspace> series;
    series.push_back(full_space(g.dim()));
    while (true) {
        const Subspace& cur = series.back();
        Subspace next = bracket_span(g, cur, cur);
        if (next.dim() == cur.dim()) break;  // stabilized (nonzero perfect tail)
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    std::vector<Subspace> series;
    series.push_back(full_space(g.dim()));
    while (true) {
        Subspace next = bracket_span(g, series.front(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // x central iff for all j, k: sum_i x_i c_{ij}^k = 0.
    RationalMatrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            auto br = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) m.at(j * n + k, i) = br[k];
        }
    Subspace s;
    s.ambient_dim = n;
    s.basis = kernel_basis(m);
    return s;
}

bool is_abelian(const LieAlgebra& g) { return g.table().empty(); }

bool is_solvable(const LieAlgebra& g) {
    auto s = derived_series(g);
    return s.back().dim() == 0;
}

bool is_nilpotent(const LieAlgebra& g) {
    auto s = lower_central_series(g);
    return s.back().dim() == 0;
}

bool is_abelian_subspace(const LieAlgebra& g, const Subspace& v) {
    for (std::size_t a = 0; a < v.basis.size(); ++a)
        for (std::size_t b = a + 1; b < v.basis.size(); ++b) {
            auto w = g.bracket(v.basis[a], v.basis[b]);
            for (const auto& x : w)
                if (!x.is_zero()) return false;
        }
    return true;
}

std::optional<std::vector<Rational>> coords_in_subspace(const Subspace& v,
                                                        const std::vector<Rational>& vec) {
    if (vec.size() != v.ambient_dim)
        throw std::invalid_argument("coords_in_subspace: dimension mismatch");
    // Columns of the system matrix are the basis vectors.
    RationalMatrix m(v.ambient_dim, v.basis.size());
    for (std::size_t c = 0; c < v.basis.size(); ++c)
        for (std::size_t r = 0; r < v.ambient_dim; ++r) m.at(r, c) = v.basis[c][r];
    return solve(m, vec);
}

RationalMatrix ad_restricted(const LieAlgebra& g, const std::vector<Rational>& x,
                             const Subspace& v) {
    RationalMatrix out(v.dim(), v.dim());
    for (std::size_t c = 0; c < v.dim(); ++c) {
        auto image = g.bracket(x, v.basis[c]);
        auto coords = coords_in_subspace(v, image);
        if (!coords)
            throw std::invalid_argument("ad_restricted: subspace is not invariant");
        for (std::size_t r = 0; r < v.dim(); ++r) out.at(r, c) = (*coords)[r];
    }
    return out;
}

LieAlgebra change_basis(const LieAlgebra& g, const BasisChange& p) {
    const std::size_t n = g.dim();
    if (p.p().rows() != n) throw std::invalid_argument("change_basis: size mismatch");
    BracketTable table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto br = g.bracket(p.p().col(i), p.p().col(j));
            auto coords = p.p_inverse().apply(br);
            table[{i, j}] = std::move(coords);
        }
    return LieAlgebra::unchecked(n, std::move(table), g.basis_labels());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t n = a.dim() + b.dim();
    BracketTable table;
    auto widen = [&](const std::vector<Rational>& v, std::size_t offset) {
        std::vector<Rational> out(n);
        for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
        return out;
    };
    for (const auto& [key, out] : a.table()) table[key] = widen(out, 0);
    for (const auto& [key, out] : b.table())
        table[{key.first + a.dim(), key.second + a.dim()}] = widen(out, a.dim());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
    return LieAlgebra::unchecked(n, std::move(table), std::move(labels));
}

}  // namespace mdlie
