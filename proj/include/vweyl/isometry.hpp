#pragma once

#include "vweyl/quadspace.hpp"
#include "vweyl/squarefree.hpp"

namespace exactform {

/// Element of O(V): a coordinate matrix M with M^T * gram * M = gram,
/// checked exactly at construction.
struct Isometry {
    SpacePtr space;
    RatMat mat;

    static Isometry make(SpacePtr space, RatMat m);
    static Isometry identity(SpacePtr space);

    QVector apply(const QVector& v) const { return mat * v; }
    Isometry operator*(const Isometry& o) const;  // composition: this after o
    Isometry inverse() const;
    Rational det() const { return mat.det(); }

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.mat == b.mat && a.space->same_as(*b.space);
    }
    friend bool operator!=(const Isometry& a, const Isometry& b) { return !(a == b); }
};

bool is_isometry_matrix(const QuadSpace& space, const RatMat& m);

/// The hyperplane reflection r_v as a matrix.
Isometry reflection(SpacePtr space, const QVector& mirror);

/// Mirrors v_1,...,v_k (k <= 2 dim) with sigma = r_{v_1} ∘ ... ∘ r_{v_k},
/// following the inductive fixing of an orthogonal basis.  A basis vector
/// already fixed by the current stage contributes no mirror.
std::vector<QVector> cartan_dieudonne(const Isometry& sigma);

Isometry recompose(SpacePtr space, const std::vector<QVector>& mirrors);

/// Square class of the product of q(v_i) over any reflection decomposition.
SquarefreeClass spinor_norm(const Isometry& sigma);

/// Cone test on a space of signature (k,1): sigma fixes the time-like cone
/// of the witness iff S(sigma(witness), witness) < 0.
bool o_plus_member(const Isometry& sigma, const QVector& witness);

/// Some vector with q < 0 on a space of signature (k,1).
QVector timelike_witness(const QuadSpace& space);

}  // namespace exactform
