#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "vweyl/quadspace.hpp"

namespace clifford {

using exactform::QVector;
using exactform::Rational;
using exactform::SpacePtr;

/// A basis blade e_I as a bitmask of generator indices (bit i set = index i
/// present; the product is taken in strictly increasing index order).
using BladeMask = std::uint64_t;

inline int grade(BladeMask m) { return std::popcount(m); }

/// Lexicographic order on the increasing index sequences: {} < {0} < {0,1}
/// < {0,2} < {1} < ...
bool blade_lex_less(BladeMask a, BladeMask b);

std::vector<int> blade_indices(BladeMask m);
std::string blade_key(BladeMask m);                    // "0,2" (scalar: "")
BladeMask blade_from_key(const std::string& key, std::size_t dim);

using TermMap = std::map<BladeMask, Rational>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Universal Clifford algebra of a quadratic space: v^2 = -q(v), so
/// v w + w v = -2 S(v,w) on vectors.  Owns the per-space memo table of
/// normal-ordered blade-pair products (guarded for concurrent readers).
class Algebra {
public:
    static AlgebraPtr create(SpacePtr space);

    const exactform::QuadSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    std::size_t dim() const { return space_->dim(); }

    /// Normal-ordered product e_I * e_J as a term map.
    TermMap blade_product(BladeMask lhs, BladeMask rhs) const;

    /// Reversed generator word g_{i_s} ... g_{i_1} of the blade, normal
    /// ordered.  This is NOT a plain sign flip once generators fail to be
    /// orthogonal: commuting them back introduces lower-grade terms.
    TermMap blade_reversion(BladeMask m) const;

private:
    explicit Algebra(SpacePtr space) : space_(std::move(space)) {}

    /// e_I * g_j, recursively commuting g_j leftwards through the word of I
    /// with g_a g_b = -g_b g_a - 2 S(g_a, g_b).
    TermMap mul_blade_gen(BladeMask lhs, unsigned j) const;

    SpacePtr space_;
    mutable std::mutex memo_mu_;
    mutable std::unordered_map<std::uint64_t, TermMap> memo_;  // dim <= 32 only
    mutable std::unordered_map<BladeMask, TermMap> rev_memo_;
};

bool same_algebra(const Algebra& a, const Algebra& b);

/// Sparse element of the Clifford algebra: blade -> coefficient, no stored
/// zeros.
class Multivector {
public:
    Multivector() = default;  // detached zero; only assignable

    static Multivector zero(AlgebraPtr alg);
    static Multivector scalar(AlgebraPtr alg, const Rational& c);
    static Multivector basis_blade(AlgebraPtr alg, BladeMask m);
    static Multivector embed(AlgebraPtr alg, const QVector& v);
    static Multivector from_terms(AlgebraPtr alg, TermMap terms);

    const AlgebraPtr& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    bool is_vector() const;  // all terms of grade 1 (zero included)
    Rational scalar_part() const;
    QVector vector_part() const;
    Rational coeff(BladeMask m) const;
    int max_grade() const;

    Multivector grade_part(int k) const;
    Multivector even_part() const { return parity_part(0); }
    Multivector odd_part() const { return parity_part(1); }
    bool is_even() const;
    bool is_odd() const;

    /// The three (anti-)involutions: ' negates vectors, * fixes them,
    /// conjugation is their composite.  The involution is the per-blade
    /// parity sign; the anti-involutions reverse generator words.
    Multivector grade_involution() const;
    Multivector reversion() const;
    Multivector conjugation() const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Rational& c, const Multivector& x);

    friend bool operator==(const Multivector& a, const Multivector& b);
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    std::string str() const;

private:
    Multivector(AlgebraPtr alg, TermMap terms)
        : alg_(std::move(alg)), terms_(std::move(terms)) {}
    Multivector parity_part(int parity) const;
    Multivector signed_by_grade(int (*sign_exp)(int)) const;

    AlgebraPtr alg_;
    TermMap terms_;
};

}  // namespace clifford
