#include "vweyl/quadspace.hpp"

namespace exactform {

QuadSpace::QuadSpace(RatMat gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric())
        throw std::invalid_argument("QuadSpace: gram matrix must be symmetric");
    nonsingular_ = gram_.rows() == 0 || !gram_.det().is_zero();
}

SpacePtr QuadSpace::create(RatMat gram) {
    return SpacePtr(new QuadSpace(std::move(gram)));
}

Rational QuadSpace::bilinear(const QVector& v, const QVector& w) const {
    if (v.size() != dim() || w.size() != dim())
        throw std::invalid_argument("bilinear: dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!gram_(i, j).is_zero() && !w[j].is_zero())
                acc += v[i] * gram_(i, j) * w[j];
    }
    return acc;
}

QVector QuadSpace::reflect(const QVector& mirror, const QVector& w) const {
    Rational qv = quadratic(mirror);
    if (qv.is_zero())
        throw std::domain_error("reflect: isotropic mirror vector");
    Rational f = Rational(2) * bilinear(w, mirror) / qv;
    return w - f * mirror;
}

std::vector<QVector> QuadSpace::radical() const {
    return gram_.null_space();
}

Signature QuadSpace::signature() const {
    SymDiag sd = sym_diagonalize(gram_);
    Signature s;
    for (const auto& d : sd.diag) {
        int sg = d.sign();
        if (sg > 0)
            ++s.pos;
        else if (sg < 0)
            ++s.neg;
        else
            ++s.zero;
    }
    return s;
}

std::vector<QVector> QuadSpace::orthogonal_basis() const {
    SymDiag sd = sym_diagonalize(gram_);
    std::vector<QVector> basis;
    for (std::size_t j = 0; j < dim(); ++j) {
        if (sd.diag[j].is_zero()) continue;
        QVector col(dim());
        for (std::size_t i = 0; i < dim(); ++i) col[i] = sd.transform(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

SpacePtr rescale(const SpacePtr& space, const Rational& lambda) {
    if (lambda.is_zero()) throw std::domain_error("rescale: zero factor");
    return QuadSpace::create(space->gram().scaled(lambda));
}

SpacePtr orthogonal_sum(const SpacePtr& a, const SpacePtr& b) {
    const std::size_t na = a->dim(), nb = b->dim();
    RatMat g(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) g(i, j) = a->gram()(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) g(na + i, na + j) = b->gram()(i, j);
    return QuadSpace::create(std::move(g));
}

SpacePtr hyperbolic_plane() {
    RatMat p(2, 2);
    p(0, 1) = Rational(-1, 2);
    p(1, 0) = Rational(-1, 2);
    return QuadSpace::create(std::move(p));
}

}  // namespace exactform
