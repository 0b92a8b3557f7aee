#include "vweyl/extension.hpp"

#include <sstream>

namespace cartan {

using exactform::Rational;
using exactform::RatMat;

ExtensionSpec double_extend(FiniteType t, int rank) {
    CartanMatrix fin = finite_cartan(t, rank);
    Symmetrization sym = symmetrize(fin);
    HighestRoot hr = highest_root(t, rank);
    const std::size_t n = static_cast<std::size_t>(rank);

    RatMat vg(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vg(i, j) = Rational(sym.b[i][j], hr.m);
    ExtensionSpec ext;
    ext.type = t;
    ext.rank = rank;
    ext.theta = hr.theta;
    ext.m = hr.m;
    ext.V = exactform::QuadSpace::create(std::move(vg));
    ext.W = exactform::orthogonal_sum(ext.V, exactform::hyperbolic_plane());

    ext.f1.assign(n + 2, Rational(0));
    ext.f2.assign(n + 2, Rational(0));
    ext.f1[n] = Rational(1);
    ext.f2[n + 1] = Rational(1);

    QVector theta_w(n + 2, Rational(0));
    for (std::size_t i = 0; i < n; ++i) theta_w[i] = Rational(hr.theta[i]);

    ext.simple_roots.resize(n + 2);
    ext.simple_roots[0] = ext.f1 - ext.f2;            // alpha_{-1}
    ext.simple_roots[1] = -ext.f1 - theta_w;          // alpha_0
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n + 2, Rational(0));
        e[i] = Rational(1);
        ext.simple_roots[2 + i] = std::move(e);
    }

    // C^{++} from the induced brackets; entries must come out integral.
    IntMat cpp(n + 2, std::vector<long long>(n + 2));
    for (std::size_t i = 0; i < n + 2; ++i) {
        Rational qi = ext.W->quadratic(ext.simple_roots[i]);
        for (std::size_t j = 0; j < n + 2; ++j) {
            Rational br =
                Rational(2) * ext.W->bilinear(ext.simple_roots[i], ext.simple_roots[j]) / qi;
            if (!br.is_integer())
                throw std::logic_error("double_extend: non-integral Cartan bracket");
            cpp[i][j] = br.num().get_si();
        }
    }
    ext.cpp = CartanMatrix(std::move(cpp));
    return ext;
}

Isometry diagram_isometry(const ExtensionSpec& ext, const Perm& perm) {
    const std::size_t n2 = ext.total_rank();
    if (perm.size() != n2) throw std::invalid_argument("diagram_isometry: size mismatch");
    RatMat roots(n2, n2), permuted(n2, n2);
    for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t i = 0; i < n2; ++i) {
            roots(i, k) = ext.simple_roots[k][i];
            permuted(i, k) = ext.simple_roots[perm[k]][i];
        }
    auto inv = roots.inverse();
    if (!inv) throw std::logic_error("diagram_isometry: simple roots do not span");
    return Isometry::make(ext.W, permuted * *inv);
}

std::string perm_cycles(const Perm& perm) {
    std::ostringstream os;
    std::vector<bool> seen(perm.size(), false);
    bool moved = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) continue;
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << ExtensionSpec::label(j);
            first = false;
            j = perm[j];
        }
        os << ')';
        moved = true;
    }
    return moved ? os.str() : "id";
}

OuterSpinorTable spinor_outer(const ExtensionSpec& ext) {
    OuterSpinorTable table;
    table.type = ext.type;
    table.rank = ext.rank;
    const std::size_t n2 = ext.total_rank();
    Isometry minus_id = Isometry::make(ext.W, -RatMat::identity(n2));
    table.theta_minus_id = exactform::spinor_norm(minus_id);
    for (const Perm& p : diagram_automorphisms(ext.cpp)) {
        bool is_id = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != i) is_id = false;
        if (is_id) continue;
        Isometry a = diagram_isometry(ext, p);
        OuterSpinorRow row;
        row.perm = p;
        row.cycles = perm_cycles(p);
        row.theta_a = exactform::spinor_norm(a);
        row.theta_minus_a = exactform::spinor_norm(minus_id * a);
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace cartan
