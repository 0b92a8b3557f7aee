#include "vweyl/paravector.hpp"

namespace paravector {

using clifford::Algebra;
using clifford::BladeMask;
using exactform::QuadSpace;
using exactform::RatMat;

SpacePtr para_space(const SpacePtr& u_space) {
    RatMat line(1, 1);
    line(0, 0) = Rational(1);
    return exactform::orthogonal_sum(u_space, QuadSpace::create(std::move(line)));
}

Multivector to_multivector(const AlgebraPtr& u_alg, const Paravector& p) {
    return Multivector::scalar(u_alg, p.scalar) + Multivector::embed(u_alg, p.vec);
}

std::optional<Paravector> from_multivector(const Multivector& x) {
    if (x.max_grade() > 1) return std::nullopt;
    return Paravector{x.vector_part(), x.scalar_part()};
}

Rational s_para(const QuadSpace& u, const Paravector& a, const Paravector& b) {
    return a.scalar * b.scalar + u.bilinear(a.vec, b.vec);
}

Rational q_para(const QuadSpace& u, const Paravector& a) { return s_para(u, a, a); }

Paravector reflect_para(const QuadSpace& u, const Paravector& mirror, const Paravector& y) {
    Rational q = q_para(u, mirror);
    if (q.is_zero()) throw std::domain_error("reflect_para: isotropic mirror");
    Rational f = Rational(2) * s_para(u, y, mirror) / q;
    return y - f * mirror;
}

bool in_gamma_para(const Multivector& x) {
    const AlgebraPtr& alg = x.algebra();
    Multivector xp_inv;
    try {
        xp_inv = clifford::inverse(x.grade_involution(), true);
    } catch (const std::domain_error&) {
        return false;
    }
    Multivector one = Multivector::scalar(alg, Rational(1));
    if ((x * one * xp_inv).max_grade() > 1) return false;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Multivector g = Multivector::basis_blade(alg, BladeMask(1) << i);
        if ((x * g * xp_inv).max_grade() > 1) return false;
    }
    return true;
}

Paravector rho_para(const Multivector& x, const Paravector& y) {
    const AlgebraPtr& alg = x.algebra();
    Multivector xp_inv = clifford::inverse(x.grade_involution(), true);
    Multivector img = x * to_multivector(alg, y) * xp_inv;
    auto p = from_multivector(img);
    if (!p) throw std::domain_error("rho_para: action leaves U_para");
    return *p;
}

Isometry rho_para_isometry(const Multivector& x) {
    const AlgebraPtr& alg = x.algebra();
    const std::size_t n = alg->dim();
    SpacePtr up = para_space(alg->space_ptr());
    RatMat m(n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Paravector basis{QVector(n, Rational(0)), Rational(0)};
        if (k < n)
            basis.vec[k] = Rational(1);
        else
            basis.scalar = Rational(1);
        Paravector img = rho_para(x, basis);
        for (std::size_t i = 0; i < n; ++i) m(i, k) = img.vec[i];
        m(n, k) = img.scalar;
    }
    return Isometry::make(std::move(up), std::move(m));
}

Multivector lift(const Multivector& x, const AlgebraPtr& v_alg) {
    const QuadSpace& u = x.algebra()->space();
    const QuadSpace& v = v_alg->space();
    if (v.dim() != u.dim() + 1)
        throw std::invalid_argument("lift: target is not a line extension");
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j)
            if (v.gram()(i, j) != u.gram()(i, j))
                throw std::invalid_argument("lift: gram mismatch on the base");
    clifford::TermMap t(x.terms());
    return Multivector::from_terms(v_alg, std::move(t));
}

Multivector xi(const Multivector& x, const AlgebraPtr& v_alg) {
    const std::size_t n = x.algebra()->dim();
    Multivector e = Multivector::basis_blade(v_alg, BladeMask(1) << n);
    return lift(x.even_part(), v_alg) + e * lift(x.odd_part(), v_alg);
}

CliffMat2 Xi(const CliffMat2& m, const AlgebraPtr& v_alg) {
    const std::size_t n = m.algebra()->dim();
    Multivector e = Multivector::basis_blade(v_alg, BladeMask(1) << n);
    Rational half(1, 2);
    Multivector one = Multivector::scalar(v_alg, Rational(1));
    Multivector g1 = half * (one + e), g2 = half * (one - e);
    Multivector a = lift(m.a, v_alg), b = lift(m.b, v_alg);
    Multivector c = lift(m.c, v_alg), d = lift(m.d, v_alg);
    return CliffMat2(g1 * a + g2 * a.grade_involution(),
                     g1 * b - g2 * b.grade_involution(),
                     g2 * c - g1 * c.grade_involution(),
                     g2 * d + g1 * d.grade_involution());
}

namespace {

bool para_ok(const Multivector& x) { return x.max_grade() <= 1; }

}  // namespace

vahlen::VahlenVerdict is_vahlen_para(const CliffMat2& m) {
    const AlgebraPtr& alg = m.algebra();
    vahlen::VahlenVerdict out;

    Multivector as = m.a.reversion(), bs = m.b.reversion();
    Multivector cs = m.c.reversion(), ds = m.d.reversion();
    Multivector ac = m.a.conjugation(), bc = m.b.conjugation();
    Multivector cc = m.c.conjugation(), dc = m.d.conjugation();

    Multivector lam1 = m.a * ds - m.b * cs;
    Multivector lam2 = ds * m.a - bs * m.c;
    if (!lam1.is_scalar() || lam1 != lam2 || lam1.is_zero()) {
        out.failed = 1;
        return out;
    }
    if (!(m.b * as - m.a * bs).is_zero() || !(m.c * ds - m.d * cs).is_zero()) {
        out.failed = 2;
        return out;
    }
    if (!(as * m.c - cs * m.a).is_zero() || !(ds * m.b - bs * m.d).is_zero()) {
        out.failed = 3;
        return out;
    }
    for (const Multivector* e : {&m.a, &m.b, &m.c, &m.d}) {
        if (!(*e * e->conjugation()).is_scalar()) {
            out.failed = 4;
            return out;
        }
    }
    if (!para_ok(m.b * dc) || !para_ok(m.a * cc)) {
        out.failed = 5;
        return out;
    }
    // Quantifiers over U_para are linear in x; the basis {1, u_1, ...}
    // suffices.
    std::vector<Multivector> basis;
    basis.push_back(Multivector::scalar(alg, Rational(1)));
    for (std::size_t i = 0; i < alg->dim(); ++i)
        basis.push_back(Multivector::basis_blade(alg, BladeMask(1) << i));
    for (const Multivector& v : basis) {
        Multivector vc = v.conjugation();
        Multivector s1 = m.a * v * bc + m.b * vc * ac;
        Multivector s2 = m.c * v * dc + m.d * vc * cc;
        if (!s1.is_scalar() || !s2.is_scalar()) {
            out.failed = 6;
            return out;
        }
    }
    for (const Multivector& v : basis) {
        Multivector img = m.a * v * dc + m.b * v.conjugation() * cc;
        if (!para_ok(img)) {
            out.failed = 7;
            return out;
        }
    }
    out.member = true;
    out.lambda = lam1.scalar_part();
    out.failed = 0;
    return out;
}

bool is_s_vahlen_plus_para(const CliffMat2& m) {
    vahlen::VahlenVerdict v = is_vahlen_para(m);
    return v.member && v.lambda == Rational(1);
}

CliffMat2 para_h2_matrix(const AlgebraPtr& u_alg, const Paravector& x,
                         const Rational& l1, const Rational& l2) {
    Multivector xm = to_multivector(u_alg, x);
    return CliffMat2(xm, Multivector::scalar(u_alg, l1),
                     Multivector::scalar(u_alg, l2), xm.conjugation());
}

CliffMat2 hermitian_matrix(const AlgebraPtr& u_alg, const HermitianElement& h) {
    Multivector xm = to_multivector(u_alg, h.x);
    return CliffMat2(Multivector::scalar(u_alg, h.l1), xm, xm.conjugation(),
                     Multivector::scalar(u_alg, h.l2));
}

std::optional<HermitianElement> hermitian_from_matrix(const CliffMat2& m) {
    if (!m.a.is_scalar() || !m.d.is_scalar()) return std::nullopt;
    auto x = from_multivector(m.b);
    if (!x) return std::nullopt;
    if (m.c != m.b.conjugation()) return std::nullopt;
    return HermitianElement{m.a.scalar_part(), m.d.scalar_part(), *x};
}

CliffMat2 e2(const AlgebraPtr& alg) {
    Multivector one = Multivector::scalar(alg, Rational(1));
    Multivector zero = Multivector::zero(alg);
    return CliffMat2(zero, one, one, zero);
}

CliffMat2 dagger(const CliffMat2& m) {
    Multivector lam1 = m.a * m.d.reversion() - m.b * m.c.reversion();
    Multivector lam2 = m.d.reversion() * m.a - m.b.reversion() * m.c;
    if (!lam1.is_scalar() || lam1 != lam2 || lam1.is_zero())
        throw std::domain_error("dagger: ad* - bc* is not a nonzero scalar");
    Rational inv = lam1.scalar_part().reciprocal();
    return inv * CliffMat2(m.a.conjugation(), m.c.conjugation(),
                           m.b.conjugation(), m.d.conjugation());
}

HermitianElement hermitian_transport(const CliffMat2& a, const HermitianElement& x) {
    vahlen::VahlenVerdict v = is_vahlen_para(a);
    if (!v.member)
        throw std::domain_error("hermitian_transport: matrix fails paravector condition " +
                                std::to_string(v.failed));
    CliffMat2 image = a * hermitian_matrix(a.algebra(), x) * dagger(a);
    auto h = hermitian_from_matrix(image);
    if (!h) throw std::logic_error("hermitian_transport: image left the Hermitian space");
    return *h;
}

}  // namespace paravector
