#include "vweyl/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace exactform {

QVector operator+(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVector: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVector: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector operator-(const QVector& a) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVector operator*(const Rational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in sum");
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in difference");
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMat RatMat::operator-() const {
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

QVector RatMat::operator*(const QVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("RatMat: shape mismatch in mat*vec");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

RatMat RatMat::scaled(const Rational& c) const {
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Rational RatMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::det: not square");
    RatMat m = *this;
    const std::size_t n = rows_;
    Rational d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        Rational inv = m(k, k).reciprocal();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Rational f = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
    const std::size_t n = rows_;
    RatMat m = *this;
    RatMat inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        Rational p = m(k, k).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) *= p;
            inv(k, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            Rational f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::optional<QVector> RatMat::solve(const QVector& b) const {
    if (rows_ != cols_ || b.size() != rows_)
        throw std::invalid_argument("RatMat::solve: shape mismatch");
    const std::size_t n = rows_;
    RatMat m = *this;
    QVector rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            std::swap(rhs[piv], rhs[k]);
        }
        Rational p = m(k, k).reciprocal();
        for (std::size_t j = 0; j < n; ++j) m(k, j) *= p;
        rhs[k] *= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            Rational f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    return rhs;
}

std::vector<QVector> RatMat::null_space() const {
    RatMat m = *this;
    const std::size_t nr = rows_, nc = cols_;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(row, j));
        Rational p = m(row, col).reciprocal();
        for (std::size_t j = 0; j < nc; ++j) m(row, j) *= p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = 0; j < nc; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        QVector v(nc);
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string RatMat::key() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_;
    for (const auto& x : a_) os << ";" << x.str();
    return os.str();
}

SymDiag sym_diagonalize(const RatMat& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("sym_diagonalize: not symmetric");
    const std::size_t n = g.rows();
    RatMat d = g;
    RatMat t = RatMat::identity(n);

    // col_op(j, i, f): column_j += f*column_i and row_j += f*row_i on d,
    // column_j += f*column_i on the accumulated transform.
    auto add_op = [&](std::size_t j, std::size_t i, const Rational& f) {
        for (std::size_t r = 0; r < n; ++r) d(r, j) += f * d(r, i);
        for (std::size_t c = 0; c < n; ++c) d(j, c) += f * d(i, c);
        for (std::size_t r = 0; r < n; ++r) t(r, j) += f * t(r, i);
    };
    auto swap_op = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(d(r, i), d(r, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(t(r, i), t(r, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (d(k, k).is_zero()) {
            std::size_t l = k + 1;
            while (l < n && d(l, l).is_zero()) ++l;
            if (l < n) {
                swap_op(k, l);
            } else {
                // All remaining diagonal entries vanish; fold a hyperbolic
                // coupling onto the diagonal if the row is not entirely zero.
                l = k + 1;
                while (l < n && d(k, l).is_zero()) ++l;
                if (l == n) continue;  // radical direction
                add_op(k, l, Rational(1));
            }
        }
        Rational p = d(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (d(k, i).is_zero()) continue;
            add_op(i, k, -(d(k, i) / p));
        }
    }
    SymDiag out;
    out.transform = t;
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = d(i, i);
    return out;
}

}  // namespace exactform
