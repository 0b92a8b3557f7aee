#pragma once

#include <memory>
#include <stdexcept>

#include "vweyl/ratmat.hpp"

namespace exactform {

/// Raised where an operation only makes sense over the integral order of a
/// simply-laced half-normalized root space (Lemma-level m = 2 restriction).
struct unsupported_space : std::domain_error {
    explicit unsupported_space(const std::string& what) : std::domain_error(what) {}
};

struct Signature {
    std::size_t pos = 0, neg = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

class QuadSpace;
using SpacePtr = std::shared_ptr<const QuadSpace>;

/// Orthogonal geometry over ℚ: a dimension together with the symmetric Gram
/// matrix of its generator basis.  Immutable after construction; the
/// nonsingular flag is computed once from det(gram).
class QuadSpace {
public:
    static SpacePtr create(RatMat gram);

    std::size_t dim() const { return gram_.rows(); }
    const RatMat& gram() const { return gram_; }
    bool nonsingular() const { return nonsingular_; }

    Rational bilinear(const QVector& v, const QVector& w) const;
    Rational quadratic(const QVector& v) const { return bilinear(v, v); }

    /// r_v(w) = w - 2 S(w,v)/S(v,v) * v; the mirror must be non-isotropic.
    QVector reflect(const QVector& mirror, const QVector& w) const;

    std::vector<QVector> radical() const;
    Signature signature() const;

    /// Columns of the congruence transform with nonzero diagonal value;
    /// for a nonsingular space this is a full orthogonal basis of
    /// non-isotropic vectors.
    std::vector<QVector> orthogonal_basis() const;

    bool same_as(const QuadSpace& o) const {
        return this == &o || gram_ == o.gram_;
    }

private:
    explicit QuadSpace(RatMat gram);
    RatMat gram_;
    bool nonsingular_;
};

SpacePtr rescale(const SpacePtr& space, const Rational& lambda);
SpacePtr orthogonal_sum(const SpacePtr& a, const SpacePtr& b);

/// The standard hyperbolic plane: gram [[0,-1/2],[-1/2,0]], so the basis is
/// a hyperbolic pair (f1, f2) with S(f1,f2) = -1/2.
SpacePtr hyperbolic_plane();

}  // namespace exactform
