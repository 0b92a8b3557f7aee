#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vweyl/vahlen.hpp"

using namespace clifford;
using exactform::Isometry;
using exactform::QVector;
using exactform::Rational;
using exactform::SquarefreeClass;
using testutil::a2_half;
using testutil::diag_space;

namespace {

AlgebraPtr a2h_alg() { return Algebra::create(a2_half()); }

Multivector gen(const AlgebraPtr& alg, int i) {
    return Multivector::basis_blade(alg, BladeMask(1) << i);
}

std::vector<AlgebraPtr> sample_algebras() {
    std::vector<AlgebraPtr> algs;
    algs.push_back(Algebra::create(diag_space({1, 1})));
    algs.push_back(Algebra::create(diag_space({1, -2, 3})));
    algs.push_back(a2h_alg());
    for (auto t : {std::pair{cartan::FiniteType::A, 3}, {cartan::FiniteType::D, 4}})
        algs.push_back(Algebra::create(cartan::double_extend(t.first, t.second).V));
    algs.push_back(Algebra::create(cartan::double_extend(cartan::FiniteType::A, 4).W));
    return algs;
}

}  // namespace

TEST_CASE("embed and the defining relation") {
    auto alg = a2h_alg();
    Multivector a1 = Multivector::embed(alg, {Rational(1), Rational(0)});
    CHECK(a1 * a1 == Multivector::scalar(alg, Rational(-1)));
    CHECK(Multivector::embed(alg, {Rational(0), Rational(0)}).is_zero());

    auto w = vahlen::h2_space(a2_half());
    auto walg = Algebra::create(w);
    Multivector f1 = gen(walg, 2);
    CHECK((f1 * f1).is_zero());

    CHECK_THROWS_AS(Multivector::embed(alg, QVector(3)), std::invalid_argument);
}

TEST_CASE("products on orthogonal and root-space generators") {
    auto d = Algebra::create(diag_space({1, 1}));
    CHECK(gen(d, 0) * gen(d, 1) == Multivector::basis_blade(d, 0b11));
    CHECK(gen(d, 1) * gen(d, 0) == -Multivector::basis_blade(d, 0b11));

    auto alg = a2h_alg();
    Multivector a1 = gen(alg, 0), a2 = gen(alg, 1);
    CHECK((a1 * a2) * (a2 * a1) == Multivector::scalar(alg, Rational(1)));
    // alpha2 alpha1 = -alpha1 alpha2 - 2 S(alpha1, alpha2)
    CHECK(a2 * a1 ==
          -Multivector::basis_blade(alg, 0b11) + Multivector::scalar(alg, Rational(1)));
}

TEST_CASE("multiplication agrees with the transposition rewriter") {
    testutil::Rng rng(1001);
    for (const auto& alg : sample_algebras()) {
        for (int iter = 0; iter < 200; ++iter) {
            Multivector x = Multivector::basis_blade(alg, rng.blade(alg));
            Multivector y = Multivector::basis_blade(alg, rng.blade(alg));
            CHECK(x * y == testutil::oracle_multiply(x, y));
        }
    }
}

TEST_CASE("associativity on random sparse triples") {
    testutil::Rng rng(77);
    for (const auto& alg : sample_algebras()) {
        for (int iter = 0; iter < 300; ++iter) {
            Multivector x = rng.multivector(alg, 3), y = rng.multivector(alg, 3),
                        z = rng.multivector(alg, 3);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("involution fixed points and signs") {
    auto alg = a2h_alg();
    Multivector c = Multivector::scalar(alg, Rational(5, 3));
    CHECK(c.grade_involution() == c);
    CHECK(c.reversion() == c);
    CHECK(c.conjugation() == c);

    Multivector v = Multivector::embed(alg, {Rational(2), Rational(-1)});
    CHECK(v.grade_involution() == -v);
    CHECK(v.reversion() == v);
    CHECK(v.conjugation() == -v);

    auto d = Algebra::create(diag_space({1, -2, 3}));
    Multivector b = Multivector::basis_blade(d, 0b101);
    CHECK(b.grade_involution() == b);
    CHECK(b.reversion() == -b);
    CHECK(b.conjugation() == -b);
}

TEST_CASE("anti-automorphism laws") {
    testutil::Rng rng(123);
    for (const auto& alg : sample_algebras()) {
        for (int iter = 0; iter < 60; ++iter) {
            Multivector x = rng.multivector(alg, 3), y = rng.multivector(alg, 3);
            CHECK((x * y).reversion() == y.reversion() * x.reversion());
            CHECK((x * y).conjugation() == y.conjugation() * x.conjugation());
            CHECK((x * y).grade_involution() == x.grade_involution() * y.grade_involution());
            CHECK(x.reversion().grade_involution() == x.grade_involution().reversion());
            CHECK(x.conjugation() == x.reversion().grade_involution());
        }
    }
}

TEST_CASE("center of the algebra") {
    auto even = center(Algebra::create(diag_space({1, -1})));
    REQUIRE(even.size() == 1);
    CHECK(even[0].is_scalar());

    auto odd = center(Algebra::create(diag_space({1, 2, 3})));
    REQUIRE(odd.size() == 2);
    bool has_top = false;
    for (const auto& z : odd) has_top = has_top || !z.coeff(0b111).is_zero();
    CHECK(has_top);

    auto trivial = center(Algebra::create(exactform::QuadSpace::create(exactform::RatMat(0, 0))));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].is_scalar());

    // non-orthogonal odd-dimensional space: center still has dimension 2
    auto a3 = center(Algebra::create(cartan::double_extend(cartan::FiniteType::A, 3).V));
    CHECK(a3.size() == 2);
}

TEST_CASE("inverse") {
    auto alg = a2h_alg();
    Multivector v = Multivector::embed(alg, {Rational(1), Rational(1)});
    Rational q = alg->space().quadratic({Rational(1), Rational(1)});
    CHECK(inverse(v) == (-q.reciprocal()) * v);
    CHECK(inverse(Multivector::scalar(alg, Rational(2))) ==
          Multivector::scalar(alg, Rational(1, 2)));

    auto walg = Algebra::create(vahlen::h2_space(a2_half()));
    CHECK_THROWS_AS(inverse(gen(walg, 2)), std::domain_error);  // isotropic f1
    CHECK_THROWS_AS(inverse(Multivector::zero(alg)), std::domain_error);
}

TEST_CASE("clifford group membership and rho") {
    auto alg = a2h_alg();
    Multivector a1 = gen(alg, 0);
    CHECK(in_clifford_group(a1));
    Isometry r = exactform::reflection(a2_half(), {Rational(1), Rational(0)});
    CHECK(rho(a1) == r);

    Multivector three = Multivector::scalar(alg, Rational(3));
    CHECK(in_clifford_group(three));
    CHECK(rho(three) == Isometry::identity(a2_half()));

    // x = 1 + e01 in a positive-definite diagonal space: direct grade-1 test
    auto d = Algebra::create(diag_space({1, 1}));
    Multivector x = Multivector::scalar(d, Rational(1)) + Multivector::basis_blade(d, 0b11);
    Multivector xp_inv = inverse(x.grade_involution());
    bool direct = (x * gen(d, 0) * xp_inv).is_vector() && (x * gen(d, 1) * xp_inv).is_vector();
    CHECK(in_clifford_group(x) == direct);
    CHECK(direct);

    // a non-member: 1 + v is generally not in the group
    Multivector bad = Multivector::scalar(d, Rational(1)) + gen(d, 0);
    CHECK_FALSE(in_clifford_group(bad));
}

TEST_CASE("chi is the negated reflection on vectors") {
    auto alg = a2h_alg();
    Multivector a1 = gen(alg, 0);
    Isometry r = exactform::reflection(a2_half(), {Rational(1), Rational(0)});
    CHECK(chi(a1).mat == -r.mat);
    CHECK(chi(Multivector::scalar(alg, Rational(7))) == Isometry::identity(a2_half()));

    auto line = Algebra::create(diag_space({1}));
    CHECK(chi(gen(line, 0)) == Isometry::identity(diag_space({1})));
}

TEST_CASE("norm N") {
    auto alg = a2h_alg();
    CHECK(norm_N(gen(alg, 0) * gen(alg, 1)) == Rational(1));
    CHECK(norm_N(Multivector::scalar(alg, Rational(3))) == Rational(9));

    auto d = Algebra::create(diag_space({5}));
    CHECK(norm_N(gen(d, 0)) == Rational(5));

    auto dd = Algebra::create(diag_space({1, 1, 1}));
    Multivector not_group =
        Multivector::scalar(dd, Rational(1)) + Multivector::basis_blade(dd, 0b111);
    CHECK_THROWS_AS(norm_N(not_group), std::domain_error);
}

TEST_CASE("pin+ and spin+ membership") {
    auto alg = a2h_alg();
    Multivector a1 = gen(alg, 0), a2 = gen(alg, 1);
    CHECK(pin_plus_member(a1 * a2));
    CHECK(spin_plus_member(a1 * a2));
    CHECK(pin_plus_member(a1));
    CHECK_FALSE(spin_plus_member(a1));
    CHECK_FALSE(pin_plus_member(Multivector::scalar(alg, Rational(2))));
}

TEST_CASE("order membership") {
    auto alg = a2h_alg();
    Multivector x = gen(alg, 0) + Rational(3) * Multivector::basis_blade(alg, 0b11);
    CHECK(order_member(x));
    CHECK_FALSE(order_member(Multivector::scalar(alg, Rational(1, 2))));
    Multivector prod = gen(alg, 1) * gen(alg, 0);
    CHECK(order_member(prod));
    CHECK(prod.coeff(0b11) == Rational(-1));
    CHECK(prod.coeff(0) == Rational(1));

    auto b3 = cartan::double_extend(cartan::FiniteType::B, 3);
    auto balg = Algebra::create(b3.V);
    CHECK_THROWS_AS(order_member(Multivector::scalar(balg, Rational(1))),
                    exactform::unsupported_space);
}

TEST_CASE("order closed under products and involutions") {
    testutil::Rng rng(9);
    auto alg = Algebra::create(cartan::double_extend(cartan::FiniteType::A, 3).V);
    for (int iter = 0; iter < 80; ++iter) {
        TermMap tx, ty;
        for (int k = 0; k < 4; ++k) {
            tx[rng.blade(alg)] = Rational(rng.pick(-4, 4));
            ty[rng.blade(alg)] = Rational(rng.pick(-4, 4));
        }
        Multivector x = Multivector::from_terms(alg, std::move(tx));
        Multivector y = Multivector::from_terms(alg, std::move(ty));
        CHECK(order_member(x * y));
        CHECK(order_member(x.grade_involution()));
        CHECK(order_member(x.reversion()));
        CHECK(order_member(x.conjugation()));
    }
}

TEST_CASE("rho is a homomorphism with scalar kernel; spinor factorization") {
    testutil::Rng rng(321);
    for (const auto& alg : sample_algebras()) {
        if (!alg->space().nonsingular()) continue;
        auto sp = alg->space_ptr();
        for (int iter = 0; iter < 25; ++iter) {
            std::vector<QVector> m1, m2;
            for (int k = rng.pick(0, 3); k > 0; --k) m1.push_back(rng.non_isotropic(*sp));
            for (int k = rng.pick(0, 3); k > 0; --k) m2.push_back(rng.non_isotropic(*sp));
            auto g1 = GroupElement::from_mirrors(alg, m1);
            auto g2 = GroupElement::from_mirrors(alg, m2);
            CHECK(g1.verify());
            CHECK(rho(g1.value) == g1.action());
            CHECK(rho(g1.value * g2.value) == rho(g1.value) * rho(g2.value));
            CHECK(norm_N(g1.value * g2.value) == norm_N(g1.value) * norm_N(g2.value));
            // spinor factorization theta(rho(x)) = class(N(x))
            CHECK(exactform::spinor_norm(rho(g1.value)) ==
                  exactform::squarefree_class(m1.empty() ? Rational(1) : norm_N(g1.value)));
            // scalars act trivially
            Multivector scaled = Rational(rng.pick(1, 5)) * g1.value;
            CHECK(rho(scaled) == rho(g1.value));
            // kernel: rho = id forces scalar on these samples
            if (rho(g1.value) == Isometry::identity(sp)) CHECK(g1.value.is_scalar());
            // certified inverse matches the linear-solve inverse
            if (!m1.empty())
                CHECK(g1.inverse() * g1.value == Multivector::scalar(alg, Rational(1)));
        }
    }
}
