#pragma once

#include "vweyl/rational.hpp"

namespace exactform {

/// An element of ℚ^×/ℚ^×² represented by its canonical signed squarefree
/// integer.  Never zero.
struct SquarefreeClass {
    Integer value;

    SquarefreeClass() : value(1) {}
    explicit SquarefreeClass(const Integer& v) : value(v) {}
    explicit SquarefreeClass(long v) : value(v) {}

    friend bool operator==(const SquarefreeClass& a, const SquarefreeClass& b) {
        return a.value == b.value;
    }
    friend bool operator!=(const SquarefreeClass& a, const SquarefreeClass& b) {
        return !(a == b);
    }

    /// Group law of ℚ^×/ℚ^×²: multiply then strip the square part.
    friend SquarefreeClass operator*(const SquarefreeClass& a, const SquarefreeClass& b);

    std::string str() const { return value.get_str(); }
};

/// Signed squarefree part of a nonzero integer (sign preserved).
Integer squarefree_part(const Integer& n);

/// Class of a nonzero rational: squarefree part of numerator*denominator.
SquarefreeClass squarefree_class(const Rational& x);

}  // namespace exactform
