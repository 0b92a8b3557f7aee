#pragma once

#include "vweyl/multivector.hpp"

namespace vahlen {

using clifford::AlgebraPtr;
using clifford::Multivector;
using exactform::QVector;
using exactform::Rational;

/// 2x2 matrix over a Clifford algebra; all entries share one algebra.
struct CliffMat2 {
    Multivector a, b, c, d;

    CliffMat2(Multivector a_, Multivector b_, Multivector c_, Multivector d_);

    const AlgebraPtr& algebra() const { return a.algebra(); }

    static CliffMat2 identity(const AlgebraPtr& alg);
    static CliffMat2 scalar(const AlgebraPtr& alg, const Rational& c);

    CliffMat2 operator*(const CliffMat2& o) const;
    CliffMat2 operator+(const CliffMat2& o) const;
    CliffMat2 operator-() const;
    friend CliffMat2 operator*(const Rational& c, const CliffMat2& m);
    friend bool operator==(const CliffMat2& x, const CliffMat2& y);
    friend bool operator!=(const CliffMat2& x, const CliffMat2& y) { return !(x == y); }

    /// Entrywise transports of the three (anti-)involutions through phi.
    CliffMat2 alpha() const;  // principal involution
    CliffMat2 beta() const;   // principal anti-involution
    CliffMat2 gamma() const;  // conjugation

    /// a,d even and b,c odd (phi-image of the even part).
    bool even_graded() const;

    /// Sign-normalized representative of {A, -A}: the first nonzero blade
    /// coefficient (entry order a,b,c,d, blades in lex order) is positive.
    CliffMat2 sign_normalized() const;

    std::string str() const;
};

/// Element of H_2(V): shape (v, l1; l2, conj v) with Q = q(v) - l1*l2.
struct H2Element {
    QVector v;
    Rational l1, l2;

    friend H2Element operator+(const H2Element& x, const H2Element& y);
    friend H2Element operator-(const H2Element& x, const H2Element& y);
    friend H2Element operator*(const Rational& c, const H2Element& x);
    friend bool operator==(const H2Element&, const H2Element&) = default;
};

CliffMat2 h2_matrix(const AlgebraPtr& alg, const H2Element& x);
/// Recognizes the (v, l1; l2, conj v) shape; nullopt otherwise.
std::optional<H2Element> h2_from_matrix(const CliffMat2& m);
Rational h2_quadratic(const exactform::QuadSpace& v_space, const H2Element& x);

}  // namespace vahlen
