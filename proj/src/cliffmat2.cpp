#include "vweyl/cliffmat2.hpp"

#include <sstream>

namespace vahlen {

using clifford::blade_lex_less;
using clifford::BladeMask;

CliffMat2::CliffMat2(Multivector a_, Multivector b_, Multivector c_, Multivector d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (!clifford::same_algebra(*a.algebra(), *b.algebra()) ||
        !clifford::same_algebra(*a.algebra(), *c.algebra()) ||
        !clifford::same_algebra(*a.algebra(), *d.algebra()))
        throw std::invalid_argument("CliffMat2: entries over different spaces");
}

CliffMat2 CliffMat2::identity(const AlgebraPtr& alg) {
    return scalar(alg, Rational(1));
}

CliffMat2 CliffMat2::scalar(const AlgebraPtr& alg, const Rational& c) {
    Multivector s = Multivector::scalar(alg, c);
    Multivector z = Multivector::zero(alg);
    return CliffMat2(s, z, z, s);
}

CliffMat2 CliffMat2::operator*(const CliffMat2& o) const {
    return CliffMat2(a * o.a + b * o.c, a * o.b + b * o.d,
                     c * o.a + d * o.c, c * o.b + d * o.d);
}

CliffMat2 CliffMat2::operator+(const CliffMat2& o) const {
    return CliffMat2(a + o.a, b + o.b, c + o.c, d + o.d);
}

CliffMat2 CliffMat2::operator-() const { return CliffMat2(-a, -b, -c, -d); }

CliffMat2 operator*(const Rational& c0, const CliffMat2& m) {
    return CliffMat2(c0 * m.a, c0 * m.b, c0 * m.c, c0 * m.d);
}

bool operator==(const CliffMat2& x, const CliffMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

CliffMat2 CliffMat2::alpha() const {
    return CliffMat2(a.grade_involution(), -b.grade_involution(),
                     -c.grade_involution(), d.grade_involution());
}

CliffMat2 CliffMat2::beta() const {
    return CliffMat2(d.conjugation(), b.conjugation(), c.conjugation(), a.conjugation());
}

CliffMat2 CliffMat2::gamma() const {
    return CliffMat2(d.reversion(), -b.reversion(), -c.reversion(), a.reversion());
}

bool CliffMat2::even_graded() const {
    return a.is_even() && d.is_even() && b.is_odd() && c.is_odd();
}

CliffMat2 CliffMat2::sign_normalized() const {
    for (const Multivector* e : {&a, &b, &c, &d}) {
        if (e->is_zero()) continue;
        BladeMask lead = e->terms().begin()->first;
        for (const auto& [m, coeff] : e->terms())
            if (blade_lex_less(m, lead)) lead = m;
        return e->coeff(lead).sign() < 0 ? -*this : *this;
    }
    return *this;
}

std::string CliffMat2::str() const {
    std::ostringstream os;
    os << "[" << a.str() << ", " << b.str() << "; " << c.str() << ", " << d.str() << "]";
    return os.str();
}

H2Element operator+(const H2Element& x, const H2Element& y) {
    return H2Element{x.v + y.v, x.l1 + y.l1, x.l2 + y.l2};
}

H2Element operator-(const H2Element& x, const H2Element& y) {
    return H2Element{x.v - y.v, x.l1 - y.l1, x.l2 - y.l2};
}

H2Element operator*(const Rational& c, const H2Element& x) {
    return H2Element{c * x.v, c * x.l1, c * x.l2};
}

CliffMat2 h2_matrix(const AlgebraPtr& alg, const H2Element& x) {
    Multivector v = Multivector::embed(alg, x.v);
    return CliffMat2(v, Multivector::scalar(alg, x.l1),
                     Multivector::scalar(alg, x.l2), v.conjugation());
}

std::optional<H2Element> h2_from_matrix(const CliffMat2& m) {
    if (!m.a.is_vector() || !m.b.is_scalar() || !m.c.is_scalar()) return std::nullopt;
    if (m.d != m.a.conjugation()) return std::nullopt;
    return H2Element{m.a.vector_part(), m.b.scalar_part(), m.c.scalar_part()};
}

Rational h2_quadratic(const exactform::QuadSpace& v_space, const H2Element& x) {
    return v_space.quadratic(x.v) - x.l1 * x.l2;
}

}  // namespace vahlen
