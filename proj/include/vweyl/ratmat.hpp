#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vweyl/rational.hpp"

namespace exactform {

/// Coordinate vector over ℚ.
using QVector = std::vector<Rational>;

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& c, const QVector& v);
bool is_zero(const QVector& v);

/// Dense row-major matrix of Rationals.  Sized at construction; all
/// arithmetic is exact.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator-() const;
    QVector operator*(const QVector& v) const;
    RatMat scaled(const Rational& c) const;

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

    bool is_symmetric() const;
    bool is_zero() const;

    /// Exact determinant by fraction-full Gaussian elimination (square only).
    Rational det() const;

    /// std::nullopt when singular.
    std::optional<RatMat> inverse() const;

    /// Solves A x = b; std::nullopt when no solution (or ambiguous one picked
    /// is not needed here: A must be square nonsingular).
    std::optional<QVector> solve(const QVector& b) const;

    /// Basis of the null space {x | A x = 0}.
    std::vector<QVector> null_space() const;

    /// Canonical textual form, one row per line; used for exact hashing.
    std::string key() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Result of an exact symmetric congruence reduction:
/// transform^T * G * transform is the diagonal matrix with entries `diag`.
struct SymDiag {
    RatMat transform;
    std::vector<Rational> diag;
};

/// Simultaneous row/column reduction of a symmetric matrix.  When the
/// current diagonal entry vanishes, swaps in a later nonzero diagonal
/// entry if one exists, otherwise splits a hyperbolic block by adding a
/// row+column with a nonzero off-diagonal coupling.
SymDiag sym_diagonalize(const RatMat& g);

}  // namespace exactform
