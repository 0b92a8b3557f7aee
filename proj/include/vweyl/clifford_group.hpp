#pragma once

#include "vweyl/isometry.hpp"
#include "vweyl/multivector.hpp"

namespace clifford {

using exactform::Isometry;

/// Two-sided inverse in the 2^n-dimensional algebra, found by solving the
/// left-multiplication system.  Guarded to dim <= 10 unless allow_large.
Multivector inverse(const Multivector& x, bool allow_large = false);

/// Twisted-conjugation Clifford group membership: x invertible and
/// x g_i (x')^{-1} of grade 1 for every generator.
bool in_clifford_group(const Multivector& x);

/// The vector representation v -> x v (x')^{-1}; r_v for non-isotropic v.
Isometry rho(const Multivector& x);

/// Plain conjugation v -> x v x^{-1}; equals -r_v on non-isotropic vectors.
Isometry chi(const Multivector& x);

/// N(x) = x * conj(x), a scalar on the Clifford group.
Rational norm_N(const Multivector& x);

bool pin_plus_member(const Multivector& x);
bool spin_plus_member(const Multivector& x);

/// Basis of the center Z(C), canonicalized; {1} in even dimension,
/// {1, top blade} in odd dimension for diagonal spaces.
std::vector<Multivector> center(const AlgebraPtr& alg);

/// True when the space is V^(1/2) of a simply-laced type: unit diagonal and
/// off-diagonal values in (1/2)Z_{<=0}.
bool is_simply_laced_half(const exactform::QuadSpace& space);

/// Integer blade coordinates in the alpha-basis; only defined over
/// simply-laced V^(1/2) spaces (throws unsupported_space otherwise).
bool order_member(const Multivector& x);

/// A Clifford-group element together with a witnessing factorization into
/// non-isotropic vectors.
struct GroupElement {
    Multivector value;
    std::vector<QVector> mirrors;

    static GroupElement from_mirrors(const AlgebraPtr& alg, std::vector<QVector> mirrors);
    bool verify() const;
    Multivector inverse() const;  // via the mirrors, no linear solve
    Isometry action() const;      // product of reflections
};

}  // namespace clifford
