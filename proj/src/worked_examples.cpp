#include "vweyl/worked_examples.hpp"

namespace paravector {

using clifford::Algebra;
using clifford::BladeMask;
using exactform::RatMat;

namespace {

void add(Report& r, const std::string& name, bool pass, const std::string& witness = "") {
    r.checks.push_back(Check{name, pass, witness});
}

}  // namespace

Report worked_example_a1(const cartan::ExtensionSpec& ext) {
    if (ext.type != cartan::FiniteType::A || ext.rank != 1)
        throw std::invalid_argument("worked_example_a1: needs the A_1 extension");
    Report report;
    report.title = "A1++ unimodular generators through Xi";

    // U = 0, so C(U) = Q and V = U ⊥ L is the rescaled root line itself.
    AlgebraPtr u_alg = Algebra::create(exactform::QuadSpace::create(RatMat(0, 0)));
    AlgebraPtr v_alg = Algebra::create(ext.V);
    add(report, "para_space(U) matches V^(1/2)",
        para_space(u_alg->space_ptr())->same_as(*ext.V));

    auto sc = [&](long v) { return Multivector::scalar(u_alg, Rational(v)); };
    CliffMat2 s_gen(sc(0), sc(-1), sc(1), sc(0));
    CliffMat2 t_gen(sc(1), sc(1), sc(0), sc(1));

    for (auto& [name, gen] : {std::pair<const char*, CliffMat2&>{"S", s_gen},
                              {"T", t_gen}}) {
        vahlen::VahlenVerdict para = is_vahlen_para(gen);
        add(report, std::string(name) + " in SV+(U_para)",
            para.member && para.lambda == Rational(1));
        CliffMat2 image = Xi(gen, v_alg);
        vahlen::VahlenVerdict order = vahlen::is_vahlen_order(image);
        add(report, std::string("Xi(") + name + ") passes the integral conditions",
            order.member && order.lambda == Rational(1), image.str());
        add(report, std::string("Xi(") + name + ") is even-graded", image.even_graded());
        exactform::Isometry iso = vahlen::eta(image);
        bool even_weyl = iso.det() == Rational(1) &&
                         exactform::spinor_norm(iso) == exactform::SquarefreeClass(1) &&
                         exactform::o_plus_member(iso, exactform::timelike_witness(*ext.W));
        add(report, std::string("eta(Xi(") + name + ")) is an even Weyl element", even_weyl);
    }

    // The display (a, ib; -ic, d): Xi(T) should be (1, e; 0, 1).
    Multivector e = Multivector::basis_blade(v_alg, BladeMask(1) << 0);
    CliffMat2 expected(Multivector::scalar(v_alg, Rational(1)), e,
                       Multivector::zero(v_alg), Multivector::scalar(v_alg, Rational(1)));
    add(report, "Xi(T) matches the (a, ib; -ic, d) display", Xi(t_gen, v_alg) == expected);
    return report;
}

Report worked_example_a2(const cartan::ExtensionSpec& ext) {
    if (ext.type != cartan::FiniteType::A || ext.rank != 2)
        throw std::invalid_argument("worked_example_a2: needs the A_2 extension");
    Report report;
    report.title = "A2++ quaternion order basis";

    AlgebraPtr v_alg = Algebra::create(ext.V);
    auto vec = [&](long c0, long c1) {
        return Multivector::embed(v_alg, QVector{Rational(c0), Rational(c1)});
    };
    Multivector one = Multivector::scalar(v_alg, Rational(1));
    Multivector qi = vec(1, 0);        // beta_1 = alpha_1
    Multivector qj = vec(1, 2);        // beta_2 = alpha_1 + 2 alpha_2
    Multivector qk = qi * qj;

    add(report, "i^2 = -1", qi * qi == Multivector::scalar(v_alg, Rational(-1)));
    add(report, "j^2 = -3", qj * qj == Multivector::scalar(v_alg, Rational(-3)));
    add(report, "ij = -ji", qi * qj == -(qj * qi));

    Rational half(1, 2);
    std::vector<std::pair<std::string, Multivector>> basis = {
        {"1", one},
        {"i", qi},
        {"(j-i)/2", half * (qj - qi)},
        {"(k+1)/2", half * (qk + one)},
    };

    for (const auto& [name, x] : basis)
        add(report, name + " lies in the order", clifford::order_member(x), x.str());

    bool closed_mul = true;
    for (const auto& [n1, x] : basis)
        for (const auto& [n2, y] : basis)
            closed_mul = closed_mul && clifford::order_member(x * y);
    add(report, "basis products stay in the order", closed_mul);

    bool closed_inv = true;
    for (const auto& [name, x] : basis) {
        closed_inv = closed_inv && clifford::order_member(x.grade_involution()) &&
                     clifford::order_member(x.reversion()) &&
                     clifford::order_member(x.conjugation());
    }
    add(report, "basis closed under ', *, conj", closed_inv);

    add(report, "((k+1)/2)* = (-k+1)/2",
        basis[3].second.reversion() == half * (one - qk));

    // Z-module equality with Z[alpha_1, alpha_2]: the coordinate matrix of
    // the quaternion basis over the blade basis is integral with det ±1.
    std::vector<BladeMask> blades = {0, 1, 2, 3};
    RatMat coords(4, 4);
    for (std::size_t col = 0; col < 4; ++col)
        for (std::size_t row = 0; row < 4; ++row)
            coords(row, col) = basis[col].second.coeff(blades[row]);
    Rational det = coords.det();
    bool unimodular = det == Rational(1) || det == Rational(-1);
    auto inv = coords.inverse();
    bool inv_integral = inv.has_value();
    if (inv)
        for (std::size_t i = 0; i < 4 && inv_integral; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (!(*inv)(i, j).is_integer()) inv_integral = false;
    add(report, "basis spans Z[alpha_1,alpha_2] (unimodular change of basis)",
        unimodular && inv_integral, "det = " + det.str());
    return report;
}

}  // namespace paravector
