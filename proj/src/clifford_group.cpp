#include "vweyl/clifford_group.hpp"

namespace clifford {

using exactform::RatMat;

namespace {

std::vector<BladeMask> all_blades(std::size_t dim) {
    std::vector<BladeMask> blades(std::size_t(1) << dim);
    for (std::size_t i = 0; i < blades.size(); ++i) blades[i] = BladeMask(i);
    return blades;
}

Multivector generator(const AlgebraPtr& alg, std::size_t i) {
    return Multivector::basis_blade(alg, BladeMask(1) << i);
}

}  // namespace

Multivector inverse(const Multivector& x, bool allow_large) {
    const AlgebraPtr& alg = x.algebra();
    const std::size_t n = alg->dim();
    if (n > 10 && !allow_large)
        throw std::invalid_argument(
            "inverse: 2^" + std::to_string(n) + "-dimensional solve needs allow_large");
    if (x.is_zero()) throw std::domain_error("inverse: zero element");
    // Fast path: x = c + v with c scalar, v vector and x * conj(x) scalar.
    if (x.max_grade() <= 1) {
        Multivector xc = x.conjugation();
        Multivector nn = x * xc;
        if (nn.is_scalar()) {
            Rational s = nn.scalar_part();
            if (s.is_zero()) throw std::domain_error("inverse: element is not a unit");
            return s.reciprocal() * xc;
        }
    }
    const std::vector<BladeMask> blades = all_blades(n);
    const std::size_t N = blades.size();
    RatMat lmul(N, N);
    for (std::size_t j = 0; j < N; ++j) {
        Multivector col = x * Multivector::basis_blade(alg, blades[j]);
        for (const auto& [m, c] : col.terms()) lmul(m, j) = c;
    }
    QVector e0(N);
    e0[0] = Rational(1);
    auto sol = lmul.solve(e0);
    if (!sol) throw std::domain_error("inverse: element is not a unit");
    TermMap t;
    for (std::size_t j = 0; j < N; ++j)
        if (!(*sol)[j].is_zero()) t.emplace(blades[j], (*sol)[j]);
    Multivector y = Multivector::from_terms(alg, std::move(t));
    // Right inverse from the solve; confirm it is two-sided.
    if (!(y * x).is_scalar() || (y * x).scalar_part() != Rational(1))
        throw std::domain_error("inverse: element is not a unit");
    return y;
}

bool in_clifford_group(const Multivector& x) {
    const AlgebraPtr& alg = x.algebra();
    if (!alg->space().nonsingular())
        throw std::domain_error("in_clifford_group: singular space");
    Multivector xp_inv;
    try {
        xp_inv = inverse(x.grade_involution(), true);
    } catch (const std::domain_error&) {
        return false;
    }
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Multivector img = x * generator(alg, i) * xp_inv;
        if (!img.is_vector()) return false;
    }
    return true;
}

Isometry rho(const Multivector& x) {
    const AlgebraPtr& alg = x.algebra();
    const std::size_t n = alg->dim();
    Multivector xp_inv = inverse(x.grade_involution(), true);
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Multivector img = x * generator(alg, j) * xp_inv;
        if (!img.is_vector())
            throw std::domain_error("rho: element is not in the Clifford group");
        QVector col = img.vector_part();
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return Isometry::make(alg->space_ptr(), std::move(m));
}

Isometry chi(const Multivector& x) {
    const AlgebraPtr& alg = x.algebra();
    const std::size_t n = alg->dim();
    Multivector x_inv = inverse(x, true);
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Multivector img = x * generator(alg, j) * x_inv;
        if (!img.is_vector())
            throw std::domain_error("chi: conjugation does not preserve V");
        QVector col = img.vector_part();
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return Isometry::make(alg->space_ptr(), std::move(m));
}

Rational norm_N(const Multivector& x) {
    Multivector nn = x * x.conjugation();
    if (!nn.is_scalar())
        throw std::domain_error("norm_N: x * conj(x) is not scalar (x not in the Clifford group)");
    return nn.scalar_part();
}

bool pin_plus_member(const Multivector& x) {
    if (!in_clifford_group(x)) return false;
    return norm_N(x) == Rational(1);
}

bool spin_plus_member(const Multivector& x) {
    return pin_plus_member(x) && x.is_even();
}

std::vector<Multivector> center(const AlgebraPtr& alg) {
    const std::size_t n = alg->dim();
    if (!alg->space().nonsingular())
        throw std::domain_error("center: singular space");
    if (n > 8) throw std::invalid_argument("center: dimension too large");
    const std::vector<BladeMask> blades = all_blades(n);
    const std::size_t N = blades.size();
    // Rows: commutators with every generator; kernel = center.
    RatMat sys(N * std::max<std::size_t>(n, 1), N);
    for (std::size_t gi = 0; gi < n; ++gi) {
        Multivector g = generator(alg, gi);
        for (std::size_t j = 0; j < N; ++j) {
            Multivector b = Multivector::basis_blade(alg, blades[j]);
            Multivector comm = b * g - g * b;
            for (const auto& [m, c] : comm.terms()) sys(gi * N + m, j) = c;
        }
    }
    std::vector<QVector> kernel = sys.null_space();
    std::vector<Multivector> basis;
    for (const auto& v : kernel) {
        TermMap t;
        for (std::size_t j = 0; j < N; ++j)
            if (!v[j].is_zero()) t.emplace(blades[j], v[j]);
        basis.push_back(Multivector::from_terms(alg, std::move(t)));
    }
    return basis;
}

bool is_simply_laced_half(const exactform::QuadSpace& space) {
    const RatMat& g = space.gram();
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (g(i, i) != Rational(1)) return false;
        for (std::size_t j = 0; j < space.dim(); ++j) {
            if (i == j) continue;
            Rational twice = Rational(2) * g(i, j);
            if (!twice.is_integer() || twice.sign() > 0) return false;
        }
    }
    return true;
}

bool order_member(const Multivector& x) {
    if (!is_simply_laced_half(x.algebra()->space()))
        throw exactform::unsupported_space(
            "order_member: space is not a simply-laced V^(1/2)");
    for (const auto& [m, c] : x.terms())
        if (!c.is_integer()) return false;
    return true;
}

GroupElement GroupElement::from_mirrors(const AlgebraPtr& alg,
                                        std::vector<QVector> mirrors) {
    Multivector prod = Multivector::scalar(alg, Rational(1));
    for (const auto& v : mirrors) {
        if (alg->space().quadratic(v).is_zero())
            throw std::domain_error("GroupElement: isotropic factor");
        prod = prod * Multivector::embed(alg, v);
    }
    return GroupElement{std::move(prod), std::move(mirrors)};
}

bool GroupElement::verify() const {
    Multivector prod = Multivector::scalar(value.algebra(), Rational(1));
    for (const auto& v : mirrors) prod = prod * Multivector::embed(value.algebra(), v);
    return prod == value;
}

Multivector GroupElement::inverse() const {
    const AlgebraPtr& alg = value.algebra();
    Multivector prod = Multivector::scalar(alg, Rational(1));
    for (auto it = mirrors.rbegin(); it != mirrors.rend(); ++it) {
        // v^{-1} = -v / q(v)
        Rational q = alg->space().quadratic(*it);
        prod = prod * ((-q.reciprocal()) * Multivector::embed(alg, *it));
    }
    return prod;
}

Isometry GroupElement::action() const {
    const exactform::SpacePtr& sp = value.algebra()->space_ptr();
    Isometry acc = Isometry::identity(sp);
    for (const auto& v : mirrors) acc = acc * exactform::reflection(sp, v);
    return acc;
}

}  // namespace clifford
