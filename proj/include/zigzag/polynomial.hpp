#pragma once

#include <string>
#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag {

// Integer polynomial, constant term first.  Kept normalized: no trailing
// zero coefficients, so the zero polynomial has an empty coefficient vector.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    void normalize();
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    BigInt at_one() const;
    bool is_zero() const { return coeffs.empty(); }

    bool operator==(const IntPolynomial&) const = default;

    // "1 + 3t + t^2" style; "0" for the zero polynomial.
    std::string pretty(char var = 't') const;
};

}  // namespace zigzag
