#pragma once

#include <string>
#include <vector>

#include "vweyl/quadspace.hpp"

namespace cartan {

using IntMat = std::vector<std::vector<long long>>;

/// c_ii = 2, off-diagonal entries in Z_{<=0}, zeros symmetric.
bool is_gcm(const IntMat& m);

struct CartanMatrix {
    IntMat entries;

    CartanMatrix() = default;  // rank 0
    explicit CartanMatrix(IntMat e);
    std::size_t rank() const { return entries.size(); }
    long long operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

bool is_irreducible(const CartanMatrix& c);

/// D * C = B with D = diag(eps) the normalized symmetrizer: positive
/// integers of gcd 1.  Throws on reducible or non-symmetrizable input.
struct Symmetrization {
    std::vector<long long> eps;
    IntMat b;
};
Symmetrization symmetrize(const CartanMatrix& c);

enum class TypeKind { finite, affine, indefinite };

struct Classification {
    TypeKind kind;
    bool lorentzian;  // exactly one negative, no zero in the signature of B
    bool hyperbolic;  // indefinite and all proper connected subdiagrams finite/affine
    exactform::Signature sig;
};
Classification classify(const CartanMatrix& c);

enum class FiniteType { A, B, C, D, E, F, G };

FiniteType finite_type_from_char(char t);
char finite_type_char(FiniteType t);
bool valid_finite_rank(FiniteType t, int rank);

/// Cartan matrix of the finite type in the node ordering fixed by the
/// highest-root table below.
CartanMatrix finite_cartan(FiniteType t, int rank);

struct HighestRoot {
    std::vector<long long> theta;  // coefficients over the simple roots
    long long m;                   // kappa(theta, theta) in the normalized form
};
HighestRoot highest_root(FiniteType t, int rank);

using Perm = std::vector<std::size_t>;

/// All index permutations preserving the matrix entries, identity first;
/// backtracking with row-profile pruning.
std::vector<Perm> diagram_automorphisms(const CartanMatrix& c);

}  // namespace cartan
