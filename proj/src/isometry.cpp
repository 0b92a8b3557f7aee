#include "vweyl/isometry.hpp"

namespace exactform {

bool is_isometry_matrix(const QuadSpace& space, const RatMat& m) {
    if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
    return m.transpose() * space.gram() * m == space.gram();
}

Isometry Isometry::make(SpacePtr space, RatMat m) {
    if (!is_isometry_matrix(*space, m))
        throw std::domain_error("Isometry: matrix does not preserve the form");
    return Isometry{std::move(space), std::move(m)};
}

Isometry Isometry::identity(SpacePtr space) {
    RatMat id = RatMat::identity(space->dim());
    return Isometry{std::move(space), std::move(id)};
}

Isometry Isometry::operator*(const Isometry& o) const {
    if (!space->same_as(*o.space))
        throw std::invalid_argument("Isometry: space mismatch in composition");
    return Isometry{space, mat * o.mat};
}

Isometry Isometry::inverse() const {
    auto inv = mat.inverse();
    if (!inv) throw std::domain_error("Isometry: singular matrix");
    return Isometry{space, std::move(*inv)};
}

Isometry reflection(SpacePtr space, const QVector& mirror) {
    const std::size_t n = space->dim();
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        QVector ej(n);
        ej[j] = Rational(1);
        QVector img = space->reflect(mirror, ej);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
    }
    return Isometry{space, std::move(m)};
}

std::vector<QVector> cartan_dieudonne(const Isometry& sigma) {
    const QuadSpace& sp = *sigma.space;
    if (!sp.nonsingular())
        throw std::domain_error("cartan_dieudonne: singular space");
    if (!is_isometry_matrix(sp, sigma.mat))
        throw std::domain_error("cartan_dieudonne: matrix is not an isometry");
    const std::size_t n = sp.dim();
    std::vector<QVector> basis = sp.orthogonal_basis();

    // mirrors holds the decomposition of psi_i^{-1} ... read off left to
    // right: sigma = r_{mirrors[0]} ∘ r_{mirrors[1]} ∘ ...
    std::vector<QVector> mirrors;
    RatMat current = sigma.mat;  // psi_{i-1} ... psi_1 sigma

    auto apply_reflection = [&](const QVector& v) {
        // current <- r_v * current
        for (std::size_t j = 0; j < n; ++j) {
            QVector col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = current(i, j);
            QVector img = sp.reflect(v, col);
            for (std::size_t i = 0; i < n; ++i) current(i, j) = img[i];
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        const QVector& e = basis[i];
        QVector u = current * e;
        if (u == e) continue;  // already fixed, nothing to append
        QVector diff = u - e;
        if (!sp.quadratic(diff).is_zero()) {
            apply_reflection(diff);
            mirrors.push_back(std::move(diff));
        } else {
            // q(u - e) = 0 forces q(u + e) != 0; psi_i = r_e ∘ r_{u+e}
            QVector sum = u + e;
            apply_reflection(sum);
            apply_reflection(e);
            // psi_i^{-1} = r_{u+e} ∘ r_e, appended after earlier inverses
            mirrors.push_back(std::move(sum));
            mirrors.push_back(e);
        }
    }
    if (current != RatMat::identity(n))
        throw std::logic_error("cartan_dieudonne: decomposition did not close");
    return mirrors;
}

Isometry recompose(SpacePtr space, const std::vector<QVector>& mirrors) {
    Isometry acc = Isometry::identity(space);
    for (const auto& v : mirrors) acc = acc * reflection(space, v);
    return acc;
}

SquarefreeClass spinor_norm(const Isometry& sigma) {
    std::vector<QVector> mirrors = cartan_dieudonne(sigma);
    Rational prod(1);
    for (const auto& v : mirrors) prod *= sigma.space->quadratic(v);
    return squarefree_class(prod);
}

bool o_plus_member(const Isometry& sigma, const QVector& witness) {
    Signature sig = sigma.space->signature();
    if (sig.neg != 1 || sig.zero != 0)
        throw unsupported_space("o_plus_member: space is not of signature (k,1)");
    if (sigma.space->quadratic(witness).sign() >= 0)
        throw std::domain_error("o_plus_member: witness is not time-like");
    return sigma.space->bilinear(sigma.apply(witness), witness).sign() < 0;
}

QVector timelike_witness(const QuadSpace& space) {
    SymDiag sd = sym_diagonalize(space.gram());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        if (sd.diag[j].sign() < 0) {
            QVector col(space.dim());
            for (std::size_t i = 0; i < space.dim(); ++i) col[i] = sd.transform(i, j);
            return col;
        }
    }
    throw std::domain_error("timelike_witness: no negative direction");
}

}  // namespace exactform
