#include "mdlie/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace mdlie {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

std::vector<Rational> RationalMatrix::col(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row-wise denominator clearing. Scaling rows leaves the row space (hence
// the RREF) unchanged.
std::vector<std::vector<BigInt>> integerize(const RationalMatrix& m,
                                            std::vector<BigInt>* multipliers = nullptr) {
    std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, m.at(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
        if (multipliers) multipliers->push_back(l);
    }
    return rows;
}

struct BareissEchelon {
    std::vector<std::vector<BigInt>> rows;
    std::vector<std::size_t> pivots;
    int swap_sign = 1;
};

// Fraction-free elimination; the two-by-two cross terms divide exactly by
// the previous pivot (Sylvester identity), keeping entries integral.
BareissEchelon bareiss(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
    BareissEchelon e;
    e.rows = std::move(rows);
    BigInt prev = 1;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < e.rows.size(); ++c) {
        std::size_t sel = pr;
        while (sel < e.rows.size() && e.rows[sel][c] == 0) ++sel;
        if (sel == e.rows.size()) continue;
        if (sel != pr) {
            std::swap(e.rows[sel], e.rows[pr]);
            e.swap_sign = -e.swap_sign;
        }
        const BigInt piv = e.rows[pr][c];
        for (std::size_t r = pr + 1; r < e.rows.size(); ++r) {
            const BigInt head = e.rows[r][c];
            for (std::size_t j = c + 1; j < cols; ++j)
                e.rows[r][j] = (piv * e.rows[r][j] - head * e.rows[pr][j]) / prev;
            e.rows[r][c] = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++pr;
    }
    return e;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
    auto e = bareiss(integerize(m), m.cols());
    const std::size_t rank = e.pivots.size();

    // Echelon to reduced form: scale pivots to 1, clear above.
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < rank; ++i) {
        Rational inv = Rational(e.rows[i][e.pivots[i]]).inverse();
        for (std::size_t j = e.pivots[i]; j < m.cols(); ++j)
            out.at(i, j) = Rational(e.rows[i][j]) * inv;
    }
    for (std::size_t i = rank; i-- > 1;) {
        const std::size_t pc = e.pivots[i];
        for (std::size_t r = 0; r < i; ++r) {
            Rational f = out.at(r, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                out.at(r, j) -= f * out.at(i, j);
        }
    }
    return RrefResult{std::move(out), rank, std::move(e.pivots)};
}

std::size_t rank(const RationalMatrix& m) {
    return bareiss(integerize(m), m.cols()).pivots.size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = Rational(1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto r = rref(aug);
    for (auto p : r.pivots)
        if (p == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.rref.at(i, m.cols());
    return x;
}

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (m.rows() == 0) return Rational(1);
    std::vector<BigInt> mult;
    auto e = bareiss(integerize(m, &mult), m.cols());
    if (e.pivots.size() < m.rows()) return Rational(0);
    // Bareiss leaves det(integerized) in the last pivot, up to swap sign.
    Rational d(e.rows[m.rows() - 1][m.cols() - 1]);
    if (e.swap_sign < 0) d = -d;
    for (const auto& l : mult) d /= Rational(l);
    return d;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    auto r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] >= n) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.rref.at(i, n + j);
    return inv;
}

std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
    for (const auto& v : vectors)
        if (v.size() != dim) throw std::invalid_argument("canonical_span: bad vector length");
    if (vectors.empty()) return {};
    auto r = rref(RationalMatrix::from_rows(vectors));
    std::vector<std::vector<Rational>> basis;
    for (std::size_t i = 0; i < r.rank; ++i) basis.push_back(r.rref.row(i));
    return basis;
}

bool in_span(const std::vector<std::vector<Rational>>& basis,
             const std::vector<Rational>& v) {
    auto stacked = basis;
    stacked.push_back(v);
    std::size_t base_rank = basis.empty()
        ? 0
        : rank(RationalMatrix::from_rows(basis));
    return rank(RationalMatrix::from_rows(stacked)) == base_rank;
}

}  // namespace mdlie
