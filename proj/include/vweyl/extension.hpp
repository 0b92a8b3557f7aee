#pragma once

#include "vweyl/cartan.hpp"
#include "vweyl/isometry.hpp"

namespace cartan {

using exactform::Isometry;
using exactform::QVector;
using exactform::SpacePtr;

/// The canonical Lorentzian (double) extension T_n^{++}: the rescaled finite
/// root space summed with a hyperbolic plane, plus the two new simple roots
/// alpha_{-1} = f1 - f2 and alpha_0 = -f1 - theta.
///
/// Generator order of W: (alpha-basis of V, f1, f2); simple_roots are stored
/// in extension order (alpha_{-1}, alpha_0, alpha_1, ..., alpha_n), so label
/// of row k is k-1.
struct ExtensionSpec {
    FiniteType type;
    int rank;
    std::vector<long long> theta;
    long long m;
    CartanMatrix cpp;  // (n+2) x (n+2) extended matrix
    SpacePtr V;        // V^(1/m)
    SpacePtr W;        // V ⊥ P
    std::vector<QVector> simple_roots;
    QVector f1, f2;

    bool simply_laced() const { return m == 2; }
    std::size_t total_rank() const { return simple_roots.size(); }
    static std::string label(std::size_t row) {
        return std::to_string(static_cast<long>(row) - 1);
    }
};

ExtensionSpec double_extend(FiniteType t, int rank);

/// The lattice automorphism alpha_i -> alpha_{perm(i)} as an isometry of W.
Isometry diagram_isometry(const ExtensionSpec& ext, const Perm& perm);

/// Cycle notation over the labels (-1, 0, 1, ..., n); "id" for the identity.
std::string perm_cycles(const Perm& perm);

struct OuterSpinorRow {
    Perm perm;
    std::string cycles;
    exactform::SquarefreeClass theta_a;
    exactform::SquarefreeClass theta_minus_a;
};

struct OuterSpinorTable {
    FiniteType type;
    int rank;
    std::vector<OuterSpinorRow> rows;  // non-identity automorphisms only
    exactform::SquarefreeClass theta_minus_id;
};

/// Spinor norms of the outer automorphisms ±a of C^{++} (and of -id),
/// computed through exact reflection decompositions on W.
OuterSpinorTable spinor_outer(const ExtensionSpec& ext);

}  // namespace cartan
