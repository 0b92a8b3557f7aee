#pragma once

#include "vweyl/cliffmat2.hpp"
#include "vweyl/extension.hpp"
#include "vweyl/isometry.hpp"

namespace vahlen {

using exactform::Isometry;
using exactform::SpacePtr;

/// Raised when enumeration or CLI limits are exceeded.
struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

/// V ⊥ P with the standard hyperbolic plane appended as the last two
/// generators; this is the space H_2(V) is isometric to, with coordinates
/// (V-generators, lambda_1, lambda_2).
SpacePtr h2_space(const SpacePtr& v_space);

/// True when w_space has the V ⊥ P shape h2_space produces.
bool has_hyperbolic_tail(const exactform::QuadSpace& w_space);

/// The V-part of a V ⊥ P space.
SpacePtr hyperbolic_base(const exactform::QuadSpace& w_space);

/// The algebra isomorphism C(W) -> M_2(C(V)): on vectors
/// v + l1 f1 + l2 f2 -> (v, l1; l2, conj v), extended multiplicatively by
/// factoring each blade into its generator word.
CliffMat2 phi(const Multivector& x, const AlgebraPtr& v_alg);

/// Verdict of the seven Vahlen conditions (and the integral variant).
/// failed = 0 flags the entries-not-in-the-order precheck, otherwise the
/// 1-based index of the first failed condition.
struct VahlenVerdict {
    bool member = false;
    Rational lambda;
    int failed = 0;

    explicit operator bool() const { return member; }
};

VahlenVerdict is_vahlen(const CliffMat2& m);
bool is_vahlen_plus(const CliffMat2& m);   // member with lambda = 1
bool is_even(const CliffMat2& m);          // Lemma-4.7 grading
VahlenVerdict is_vahlen_order(const CliffMat2& m);  // throws unsupported_space

/// A^sharp = alpha(A)^{-1} = (1/lambda) beta(A).
CliffMat2 sharp(const CliffMat2& m);

/// The action X -> A X A^sharp as an isometry of h2_space(V).
Isometry eta(const CliffMat2& m);

/// X_{-1}, X_0, X_1..X_n of the extension, each with Q = 1.
std::vector<H2Element> generators(const cartan::ExtensionSpec& ext);

/// Lambda^{++} = H_2(Lambda): each X_i integral, and the elementary
/// integral matrices decompose over the X_i via the theta identity.
bool lattice_identity_check(const cartan::ExtensionSpec& ext);

struct WeylElement {
    std::vector<int> word;  // generator labels in {-1, 0, 1, ..., n}
    Isometry iso;
    CliffMat2 vahlen_rep;   // sign-normalized product of the X_i
};

/// Breadth-first closure of reflection words up to max_len, deduplicated by
/// exact isometry matrix; each element carries the matching Vahlen word.
std::vector<WeylElement> enumerate_weyl(const cartan::ExtensionSpec& ext, int max_len,
                                        int hard_cap = 10);

}  // namespace vahlen
