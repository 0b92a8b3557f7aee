#pragma once

#include "vweyl/clifford_group.hpp"
#include "vweyl/vahlen.hpp"

namespace paravector {

using clifford::AlgebraPtr;
using clifford::Multivector;
using exactform::Isometry;
using exactform::QVector;
using exactform::Rational;
using exactform::SpacePtr;
using vahlen::CliffMat2;

/// Element of U_para = F ⊕ U inside C(U).
struct Paravector {
    QVector vec;
    Rational scalar;

    friend bool operator==(const Paravector&, const Paravector&) = default;
    friend Paravector operator+(const Paravector& a, const Paravector& b) {
        return Paravector{a.vec + b.vec, a.scalar + b.scalar};
    }
    friend Paravector operator-(const Paravector& a, const Paravector& b) {
        return Paravector{a.vec - b.vec, a.scalar - b.scalar};
    }
    friend Paravector operator*(const Rational& c, const Paravector& p) {
        return Paravector{c * p.vec, c * p.scalar};
    }
    Paravector conj() const { return Paravector{-vec, scalar}; }
};

/// U ⊥ L with L a line of q(e) = 1 appended as the last generator; doubles
/// as the coordinate space of U_para = F ⊥ U via lambda + u -> u + lambda e.
SpacePtr para_space(const SpacePtr& u_space);

Multivector to_multivector(const AlgebraPtr& u_alg, const Paravector& p);
std::optional<Paravector> from_multivector(const Multivector& x);

Rational s_para(const exactform::QuadSpace& u, const Paravector& a, const Paravector& b);
Rational q_para(const exactform::QuadSpace& u, const Paravector& a);

/// r_x on U_para (x non-isotropic).
Paravector reflect_para(const exactform::QuadSpace& u, const Paravector& mirror,
                        const Paravector& y);

/// Twisted conjugation preserves U_para (checked on the basis 1, u_1, ...).
bool in_gamma_para(const Multivector& x);

/// y -> x y (x')^{-1} on paravectors.
Paravector rho_para(const Multivector& x, const Paravector& y);

/// The same action as a matrix on para_space coordinates (vec..., scalar).
Isometry rho_para_isometry(const Multivector& x);

/// Terms reinterpreted over the line extension (grams agree on U).
Multivector lift(const Multivector& x, const AlgebraPtr& v_alg);

/// xi(x) = x_even + e * x_odd: the isomorphism C(U) -> C^0(U ⊥ L).
Multivector xi(const Multivector& x, const AlgebraPtr& v_alg);

/// Matrix-level bridge with g_1 = (1+e)/2, g_2 = (1-e)/2.
CliffMat2 Xi(const CliffMat2& m, const AlgebraPtr& v_alg);

/// Theorem-4.5-style conditions for the paravector Vahlen group
/// (membership quantified over U_para).
vahlen::VahlenVerdict is_vahlen_para(const CliffMat2& m);
bool is_s_vahlen_plus_para(const CliffMat2& m);  // member with lambda = 1

/// H_2(U_para) elements (x, l1; l2, conj x) with x a paravector.
CliffMat2 para_h2_matrix(const AlgebraPtr& u_alg, const Paravector& x,
                         const Rational& l1, const Rational& l2);

/// Hermitian picture: (l1, x; conj x, l2), Q = q_para(x) - l1 l2.
struct HermitianElement {
    Rational l1, l2;
    Paravector x;
    friend bool operator==(const HermitianElement&, const HermitianElement&) = default;
};

CliffMat2 hermitian_matrix(const AlgebraPtr& u_alg, const HermitianElement& h);
std::optional<HermitianElement> hermitian_from_matrix(const CliffMat2& m);

CliffMat2 e2(const AlgebraPtr& alg);

/// A^dagger = E_2 A^sharp E_2 = (1/lambda) (conj a, conj c; conj b, conj d).
CliffMat2 dagger(const CliffMat2& m);

/// A . X = A X A^dagger on the Hermitian side.
HermitianElement hermitian_transport(const CliffMat2& a, const HermitianElement& x);

}  // namespace paravector
