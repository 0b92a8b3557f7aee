#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vweyl/worked_examples.hpp"

using namespace paravector;
using clifford::Algebra;
using clifford::BladeMask;
using exactform::Isometry;
using exactform::Rational;
using exactform::RatMat;
using testutil::diag_space;

namespace {

struct Setup {
    SpacePtr u_space;
    AlgebraPtr u_alg;
    SpacePtr v_space;
    AlgebraPtr v_alg;
};

Setup make_setup(SpacePtr u) {
    Setup s;
    s.u_space = u;
    s.u_alg = Algebra::create(u);
    s.v_space = para_space(u);
    s.v_alg = Algebra::create(s.v_space);
    return s;
}

Paravector rand_paravector(testutil::Rng& rng, std::size_t dim) {
    return Paravector{rng.qvector(dim), rng.rational()};
}

Paravector rand_non_isotropic(testutil::Rng& rng, const exactform::QuadSpace& u) {
    for (;;) {
        Paravector p = rand_paravector(rng, u.dim());
        if (!q_para(u, p).is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("paravector form decomposes as F ⊥ U") {
    auto s = make_setup(diag_space({3, 5}));
    testutil::Rng rng(1);
    for (int iter = 0; iter < 30; ++iter) {
        Paravector x = rand_paravector(rng, 2), y = rand_paravector(rng, 2);
        CHECK(s_para(*s.u_space, x, y) ==
              x.scalar * y.scalar + s.u_space->bilinear(x.vec, y.vec));
        // q_para(x) = x * conj(x) inside the algebra
        auto xm = to_multivector(s.u_alg, x);
        CHECK(xm * xm.conjugation() ==
              clifford::Multivector::scalar(s.u_alg, q_para(*s.u_space, x)));
        CHECK(q_para(*s.u_space, x) == q_para(*s.u_space, x.conj()));
    }
}

TEST_CASE("rho_para of scalars and of 1") {
    auto s = make_setup(diag_space({3}));
    testutil::Rng rng(2);
    auto five = clifford::Multivector::scalar(s.u_alg, Rational(5));
    for (int iter = 0; iter < 10; ++iter) {
        Paravector y = rand_paravector(rng, 1);
        CHECK(rho_para(five, y) == y);
        Paravector one{exactform::QVector(1), Rational(1)};
        CHECK(rho_para(to_multivector(s.u_alg, one), y) == y);
        // -r_1(conj y) = y as the formula states
        Paravector formula = Rational(-1) * reflect_para(*s.u_space, one, y.conj());
        CHECK(formula == y);
    }
}

TEST_CASE("rho_para matches -r_x(conj y) on non-isotropic paravectors") {
    testutil::Rng rng(3);
    for (auto u : {diag_space({3}), diag_space({2, 5}), testutil::a2_half()}) {
        auto s = make_setup(u);
        for (int iter = 0; iter < 40; ++iter) {
            Paravector x = rand_non_isotropic(rng, *u);
            Paravector y = rand_paravector(rng, u->dim());
            auto xm = to_multivector(s.u_alg, x);
            CHECK(in_gamma_para(xm));
            Paravector lhs = rho_para(xm, y);
            Paravector rhs = Rational(-1) * reflect_para(*u, x, y.conj());
            CHECK(lhs == rhs);
            CHECK(q_para(*u, lhs) == q_para(*u, y));
        }
    }
}

TEST_CASE("rho_para composite: rho(x1 conj(x2)) = r_{x1} r_{x2}") {
    testutil::Rng rng(4);
    auto u = diag_space({2, 3});
    auto s = make_setup(u);
    for (int iter = 0; iter < 30; ++iter) {
        Paravector x1 = rand_non_isotropic(rng, *u), x2 = rand_non_isotropic(rng, *u);
        auto prod = to_multivector(s.u_alg, x1) * to_multivector(s.u_alg, x2).conjugation();
        Paravector y = rand_paravector(rng, 2);
        CHECK(rho_para(prod, y) == reflect_para(*u, x1, reflect_para(*u, x2, y)));
        // scalars do not change the action
        auto scaled = Rational(rng.pick(1, 4)) * prod;
        CHECK(rho_para(scaled, y) == rho_para(prod, y));
    }
}

TEST_CASE("xi is the even-part isomorphism") {
    auto s = make_setup(diag_space({3, 5}));
    const std::size_t n = 2;
    auto one_u = clifford::Multivector::scalar(s.u_alg, Rational(1));
    CHECK(xi(one_u, s.v_alg) == clifford::Multivector::scalar(s.v_alg, Rational(1)));

    clifford::Multivector e = clifford::Multivector::basis_blade(s.v_alg, BladeMask(1) << n);
    testutil::Rng rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        // xi(u) = e u for vectors
        exactform::QVector uv = rng.qvector(n);
        auto u_mv = clifford::Multivector::embed(s.u_alg, uv);
        exactform::QVector uv_ext = uv;
        uv_ext.push_back(Rational(0));
        CHECK(xi(u_mv, s.v_alg) == e * clifford::Multivector::embed(s.v_alg, uv_ext));

        // multiplicative and even-valued
        auto x = rng.multivector(s.u_alg, 3), y = rng.multivector(s.u_alg, 3);
        CHECK(xi(x * y, s.v_alg) == xi(x, s.v_alg) * xi(y, s.v_alg));
        CHECK(xi(x, s.v_alg).is_even());
        // e * xi(x') = xi(x) * e
        CHECK(e * xi(x.grade_involution(), s.v_alg) == xi(x, s.v_alg) * e);
        // injectivity on samples: xi(x) = 0 iff x = 0
        if (!x.is_zero()) CHECK_FALSE(xi(x, s.v_alg).is_zero());
    }
}

TEST_CASE("xi consistency on products of two vectors") {
    auto s = make_setup(diag_space({2, 7}));
    testutil::Rng rng(6);
    for (int iter = 0; iter < 25; ++iter) {
        auto u1 = clifford::Multivector::embed(s.u_alg, rng.qvector(2));
        auto u2 = clifford::Multivector::embed(s.u_alg, rng.qvector(2));
        CHECK(xi(u1 * u2, s.v_alg) == xi(u1, s.v_alg) * xi(u2, s.v_alg));
    }
}

TEST_CASE("Lemma-style intertwining: xi(x) v xi(x)^{-1} = sigma(x y (x')^{-1})") {
    // with para coordinates (vec..., scalar), sigma is the identity matrix
    testutil::Rng rng(7);
    auto u = diag_space({3, 2});
    auto s = make_setup(u);
    for (int iter = 0; iter < 25; ++iter) {
        Paravector x1 = rand_non_isotropic(rng, *u), x2 = rand_non_isotropic(rng, *u);
        auto x = to_multivector(s.u_alg, x1) * to_multivector(s.u_alg, x2);
        REQUIRE(in_gamma_para(x));
        Isometry lhs = clifford::rho(xi(x, s.v_alg));
        Isometry rhs = rho_para_isometry(x);
        CHECK(lhs.mat == rhs.mat);
    }
}

TEST_CASE("Xi bridges the two matrix groups") {
    auto s = make_setup(diag_space({3}));
    CHECK(Xi(CliffMat2::identity(s.u_alg), s.v_alg) == CliffMat2::identity(s.v_alg));

    testutil::Rng rng(8);
    for (int iter = 0; iter < 100; ++iter) {
        // members of V(U_para): products of non-isotropic paravector H2 matrices
        auto rand_member = [&](int len) {
            CliffMat2 acc = CliffMat2::identity(s.u_alg);
            for (int k = 0; k < len; ++k) {
                Paravector x = rand_non_isotropic(rng, *s.u_space);
                acc = acc * para_h2_matrix(s.u_alg, x, rng.rational(), rng.rational());
            }
            return acc;
        };
        CliffMat2 a = rand_member(1 + iter % 3);
        CliffMat2 b = rand_member(1 + iter % 2);
        auto va = is_vahlen_para(a);
        if (!va.member) continue;  // isotropic factor slipped in
        CHECK(Xi(a * b, s.v_alg) == Xi(a, s.v_alg) * Xi(b, s.v_alg));
    }
}

TEST_CASE("Xi on the A1 data matches the (a, ib; -ic, d) display") {
    auto s = make_setup(exactform::QuadSpace::create(RatMat(0, 0)));
    auto sc = [&](long v) { return clifford::Multivector::scalar(s.u_alg, Rational(v)); };
    CliffMat2 t_gen(sc(1), sc(1), sc(0), sc(1));
    CliffMat2 image = Xi(t_gen, s.v_alg);
    auto e = clifford::Multivector::basis_blade(s.v_alg, 1);
    CHECK(image.a == clifford::Multivector::scalar(s.v_alg, Rational(1)));
    CHECK(image.b == e);
    CHECK(image.c.is_zero());
    CHECK(image.d == clifford::Multivector::scalar(s.v_alg, Rational(1)));

    CliffMat2 s_gen(sc(0), sc(-1), sc(1), sc(0));
    CliffMat2 simg = Xi(s_gen, s.v_alg);
    CHECK(simg.b == -e);
    CHECK(simg.c == -e);
}

TEST_CASE("E2 is a paravector Vahlen element; dagger via E2 and sharp") {
    auto s = make_setup(diag_space({3}));
    CliffMat2 e2m = e2(s.u_alg);
    auto verdict = is_vahlen_para(e2m);
    CHECK(verdict.member);
    CHECK(verdict.lambda == Rational(-1));
    CHECK(dagger(e2m) == e2m * vahlen::sharp(e2m) * e2m);

    testutil::Rng rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        Paravector x = rand_non_isotropic(rng, *s.u_space);
        CliffMat2 a = para_h2_matrix(s.u_alg, x, rng.rational(), rng.rational());
        if (!is_vahlen_para(a).member) continue;
        CHECK(dagger(a) == e2m * vahlen::sharp(a) * e2m);
    }
}

TEST_CASE("hermitian transport and the psi intertwiner") {
    auto u = diag_space({3});
    auto s = make_setup(u);
    testutil::Rng rng(10);

    HermitianElement x0{Rational(2), Rational(-1),
                        Paravector{exactform::QVector{Rational(1)}, Rational(3)}};
    CHECK(hermitian_transport(CliffMat2::identity(s.u_alg), x0) == x0);

    for (int iter = 0; iter < 50; ++iter) {
        Paravector p1 = rand_non_isotropic(rng, *u);
        CliffMat2 a = para_h2_matrix(s.u_alg, p1, rng.rational(), rng.rational());
        if (!is_vahlen_para(a).member) continue;
        Paravector x = rand_paravector(rng, 1);
        Rational l1 = rng.rational(), l2 = rng.rational();
        // psi(A . X_{H2}) = A . psi(X)
        CliffMat2 h2x = para_h2_matrix(s.u_alg, x, l1, l2);
        CliffMat2 acted = a * h2x * vahlen::sharp(a);
        CliffMat2 lhs = acted * e2(s.u_alg);  // psi of the acted element
        HermitianElement rhs = hermitian_transport(a, HermitianElement{l1, l2, x});
        CHECK(lhs == hermitian_matrix(s.u_alg, rhs));
    }
}

TEST_CASE("hermitian reflections compose (Corollary-style)") {
    auto u = diag_space({3});
    auto s = make_setup(u);
    // Hermitian quadratic space: coordinates (vec, scalar, l1, l2)
    SpacePtr h_space = vahlen::h2_space(s.v_space);
    auto coords = [&](const HermitianElement& h) {
        exactform::QVector v = h.x.vec;
        v.push_back(h.x.scalar);
        v.push_back(h.l1);
        v.push_back(h.l2);
        return v;
    };
    testutil::Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        HermitianElement x1{rng.rational(), rng.rational(), rand_paravector(rng, 1)};
        HermitianElement x2{rng.rational(), rng.rational(), rand_paravector(rng, 1)};
        exactform::QVector c1 = coords(x1), c2 = coords(x2);
        if (h_space->quadratic(c1).is_zero() || h_space->quadratic(c2).is_zero()) continue;
        CliffMat2 m1 = hermitian_matrix(s.u_alg, x1), m2 = hermitian_matrix(s.u_alg, x2);
        CliffMat2 a = m1 * m2.gamma();
        if (!is_vahlen_para(a).member) continue;
        HermitianElement y{rng.rational(), rng.rational(), rand_paravector(rng, 1)};
        HermitianElement lhs = hermitian_transport(a, y);
        exactform::QVector rhs =
            h_space->reflect(c1, h_space->reflect(c2, coords(y)));
        CHECK(coords(lhs) == rhs);
    }
}

TEST_CASE("worked examples pass") {
    auto a1 = worked_example_a1(cartan::double_extend(cartan::FiniteType::A, 1));
    for (const auto& c : a1.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    auto a2 = worked_example_a2(cartan::double_extend(cartan::FiniteType::A, 2));
    for (const auto& c : a2.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(worked_example_a1(cartan::double_extend(cartan::FiniteType::A, 2)),
                    std::invalid_argument);
}
