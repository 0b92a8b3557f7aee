#include "vweyl/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cartan {

using exactform::Rational;
using exactform::RatMat;

bool is_gcm(const IntMat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] != 2) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) return false;
            if ((m[i][j] == 0) != (m[j][i] == 0)) return false;
        }
    }
    return true;
}

CartanMatrix::CartanMatrix(IntMat e) : entries(std::move(e)) {
    if (!is_gcm(entries))
        throw std::invalid_argument("CartanMatrix: axioms violated");
}

namespace {

std::vector<std::size_t> component_of(const CartanMatrix& c, std::size_t start,
                                      const std::vector<bool>& alive) {
    std::vector<bool> seen(c.rank(), false);
    std::vector<std::size_t> stack{start}, comp;
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (std::size_t w = 0; w < c.rank(); ++w)
            if (alive[w] && !seen[w] && c(v, w) != 0 && v != w) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

CartanMatrix submatrix(const CartanMatrix& c, const std::vector<std::size_t>& idx) {
    IntMat m(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = c(idx[i], idx[j]);
    return CartanMatrix(std::move(m));
}

RatMat to_ratmat(const IntMat& m) {
    RatMat r(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m[i][j]);
    return r;
}

}  // namespace

bool is_irreducible(const CartanMatrix& c) {
    if (c.rank() == 0) return false;
    std::vector<bool> alive(c.rank(), true);
    return component_of(c, 0, alive).size() == c.rank();
}

Symmetrization symmetrize(const CartanMatrix& c) {
    const std::size_t n = c.rank();
    if (!is_irreducible(c))
        throw std::invalid_argument(
            "symmetrize: reducible matrix; split into irreducible blocks first");
    // Propagate eps_i c_ij = eps_j c_ji along edges from eps_0 = 1.
    std::vector<Rational> eps(n);
    std::vector<bool> known(n, false);
    eps[0] = Rational(1);
    known[0] = true;
    std::vector<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || c(i, j) == 0) continue;
            Rational need = eps[i] * Rational(c(i, j), c(j, i));
            if (!known[j]) {
                eps[j] = need;
                known[j] = true;
                queue.push_back(j);
            } else if (eps[j] != need) {
                throw std::invalid_argument("symmetrize: matrix is not symmetrizable");
            }
        }
    }
    // Scale to positive integers with gcd 1.
    exactform::Integer lcm_den(1), gcd_num(0);
    for (const auto& e : eps) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.den().get_mpz_t());
    }
    Symmetrization out;
    out.eps.resize(n);
    std::vector<exactform::Integer> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = eps[i].num() * (lcm_den / eps[i].den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) {
        exactform::Integer v = scaled[i] / gcd_num;
        if (v <= 0)
            throw std::invalid_argument("symmetrize: matrix is not symmetrizable");
        if (!v.fits_slong_p())
            throw std::invalid_argument("symmetrize: symmetrizer overflow");
        out.eps[i] = v.get_si();
    }
    out.b.assign(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.b[i][j] = out.eps[i] * c(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (out.b[i][j] != out.b[j][i])
                throw std::invalid_argument("symmetrize: matrix is not symmetrizable");
    return out;
}

namespace {

/// finite/affine/indefinite of one irreducible piece, by definiteness of B.
TypeKind kind_of(const CartanMatrix& c) {
    Symmetrization sym = symmetrize(c);
    auto space = exactform::QuadSpace::create(to_ratmat(sym.b));
    exactform::Signature sig = space->signature();
    if (sig.neg == 0 && sig.zero == 0) return TypeKind::finite;
    if (sig.neg == 0 && sig.zero == 1) return TypeKind::affine;
    return TypeKind::indefinite;
}

bool subdiagrams_finite_or_affine(const CartanMatrix& c) {
    // Delete one vertex at a time; every connected component of what is left
    // must be of finite or affine type (smaller subdiagrams follow).
    for (std::size_t drop = 0; drop < c.rank(); ++drop) {
        std::vector<bool> alive(c.rank(), true);
        alive[drop] = false;
        std::vector<bool> handled(c.rank(), false);
        for (std::size_t s = 0; s < c.rank(); ++s) {
            if (!alive[s] || handled[s]) continue;
            std::vector<std::size_t> comp = component_of(c, s, alive);
            for (auto v : comp) handled[v] = true;
            if (kind_of(submatrix(c, comp)) == TypeKind::indefinite) return false;
        }
    }
    return true;
}

}  // namespace

Classification classify(const CartanMatrix& c) {
    if (!is_irreducible(c)) throw std::invalid_argument("classify: reducible matrix");
    Symmetrization sym = symmetrize(c);
    auto space = exactform::QuadSpace::create(to_ratmat(sym.b));
    Classification out;
    out.sig = space->signature();
    if (out.sig.neg == 0 && out.sig.zero == 0)
        out.kind = TypeKind::finite;
    else if (out.sig.neg == 0 && out.sig.zero == 1)
        out.kind = TypeKind::affine;
    else
        out.kind = TypeKind::indefinite;
    out.lorentzian = out.sig.neg == 1 && out.sig.zero == 0;
    out.hyperbolic =
        out.kind == TypeKind::indefinite && subdiagrams_finite_or_affine(c);
    return out;
}

FiniteType finite_type_from_char(char t) {
    switch (t) {
        case 'A': return FiniteType::A;
        case 'B': return FiniteType::B;
        case 'C': return FiniteType::C;
        case 'D': return FiniteType::D;
        case 'E': return FiniteType::E;
        case 'F': return FiniteType::F;
        case 'G': return FiniteType::G;
        default: throw std::invalid_argument(std::string("unknown type '") + t + "'");
    }
}

char finite_type_char(FiniteType t) {
    switch (t) {
        case FiniteType::A: return 'A';
        case FiniteType::B: return 'B';
        case FiniteType::C: return 'C';
        case FiniteType::D: return 'D';
        case FiniteType::E: return 'E';
        case FiniteType::F: return 'F';
        case FiniteType::G: return 'G';
    }
    throw std::logic_error("finite_type_char");
}

bool valid_finite_rank(FiniteType t, int rank) {
    switch (t) {
        case FiniteType::A: return rank >= 1;
        case FiniteType::B: return rank >= 2;
        case FiniteType::C: return rank >= 3;
        case FiniteType::D: return rank >= 4;
        case FiniteType::E: return rank == 6 || rank == 7 || rank == 8;
        case FiniteType::F: return rank == 4;
        case FiniteType::G: return rank == 2;
    }
    return false;
}

CartanMatrix finite_cartan(FiniteType t, int rank) {
    if (!valid_finite_rank(t, rank))
        throw std::invalid_argument("finite_cartan: invalid rank for type");
    const std::size_t n = static_cast<std::size_t>(rank);
    IntMat m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
    auto edge = [&](std::size_t i, std::size_t j, long long cij = -1, long long cji = -1) {
        m[i][j] = cij;
        m[j][i] = cji;
    };
    auto path = [&](std::size_t upto) {
        for (std::size_t i = 0; i + 1 < upto; ++i) edge(i, i + 1);
    };
    switch (t) {
        case FiniteType::A:
            path(n);
            break;
        case FiniteType::B:
            // short root last: the double bond points into alpha_n
            path(n - 1);
            edge(n - 2, n - 1, -1, -2);
            break;
        case FiniteType::C:
            // long root last
            path(n - 1);
            edge(n - 2, n - 1, -2, -1);
            break;
        case FiniteType::D:
            path(n - 2);
            edge(n - 3, n - 2);
            edge(n - 3, n - 1);
            break;
        case FiniteType::E:
            // chain of n-1 nodes with the branch node attached at the
            // coefficient-peak vertex of the highest root
            path(n - 1);
            edge(n == 8 ? 4 : 2, n - 1);
            break;
        case FiniteType::F:
            edge(0, 1);
            edge(1, 2, -1, -2);
            edge(2, 3);
            break;
        case FiniteType::G:
            edge(0, 1, -1, -3);
            break;
    }
    return CartanMatrix(std::move(m));
}

HighestRoot highest_root(FiniteType t, int rank) {
    if (!valid_finite_rank(t, rank))
        throw std::invalid_argument("highest_root: invalid rank for type");
    const std::size_t n = static_cast<std::size_t>(rank);
    HighestRoot hr;
    hr.theta.assign(n, 0);
    switch (t) {
        case FiniteType::A:
            hr.theta.assign(n, 1);
            break;
        case FiniteType::B:
            hr.theta.assign(n, 2);
            hr.theta[0] = 1;
            break;
        case FiniteType::C:
            hr.theta.assign(n, 2);
            hr.theta[n - 1] = 1;
            break;
        case FiniteType::D:
            hr.theta.assign(n, 2);
            hr.theta[0] = 1;
            hr.theta[n - 2] = 1;
            hr.theta[n - 1] = 1;
            break;
        case FiniteType::E:
            if (n == 6) hr.theta = {1, 2, 3, 2, 1, 2};
            if (n == 7) hr.theta = {2, 3, 4, 3, 2, 1, 2};
            if (n == 8) hr.theta = {2, 3, 4, 5, 6, 4, 2, 3};
            break;
        case FiniteType::F:
            hr.theta = {2, 3, 4, 2};
            break;
        case FiniteType::G:
            hr.theta = {2, 3};
            break;
    }
    // m = kappa(theta, theta) = theta^T B theta with the normalized B.
    Symmetrization sym = symmetrize(finite_cartan(t, rank));
    long long m = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m += hr.theta[i] * sym.b[i][j] * hr.theta[j];
    hr.m = m;
    return hr;
}

std::vector<Perm> diagram_automorphisms(const CartanMatrix& c) {
    const std::size_t n = c.rank();
    // Row profile: diagonal-free sorted multiset of (c_ij, c_ji) pairs; an
    // automorphism must map rows to rows with equal profiles.
    auto profile = [&](std::size_t i) {
        std::vector<std::pair<long long, long long>> p;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && c(i, j) != 0) p.emplace_back(c(i, j), c(j, i));
        std::sort(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<std::pair<long long, long long>>> profiles(n);
    for (std::size_t i = 0; i < n; ++i) profiles[i] = profile(i);

    std::vector<Perm> found;
    Perm perm(n, n);
    std::vector<bool> used(n, false);
    auto consistent = [&](std::size_t i, std::size_t img) {
        if (profiles[i] != profiles[img]) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (c(i, j) != c(img, perm[j]) || c(j, i) != c(perm[j], img)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            found.push_back(perm);
            return;
        }
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img] || !consistent(i, img)) continue;
            perm[i] = img;
            used[img] = true;
            self(self, i + 1);
            used[img] = false;
            perm[i] = n;
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace cartan
