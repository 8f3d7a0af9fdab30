#pragma once

#include "motzeta/numbers.hpp"

#include <map>
#include <optional>
#include <string>

namespace motzeta {

// Sparse Laurent polynomial in one variable u over Z. Canonical form: no
// stored zero coefficients; equality is map equality. Immutable in spirit:
// every operation returns a fresh value.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) coeffs_[0] = c; }
    explicit LaurentPoly(const Int& c) { if (c != 0) coeffs_[0] = c; }

    static LaurentPoly monomial(Int coeff, long exp);
    static LaurentPoly u(long exp = 1) { return monomial(1, exp); }
    // The Lefschetz class L maps to u^2 under the Poincare specialization.
    static LaurentPoly lefschetz(long power = 1) { return monomial(1, 2 * power); }

    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(long exp) const;
    const std::map<long, Int>& terms() const { return coeffs_; }
    long min_exp() const; // requires nonzero
    long max_exp() const; // requires nonzero
    const Int& leading_coeff() const; // requires nonzero

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly pow(unsigned long e) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // u -> u^k, k >= 1 (exponent scaling; used for the Q(u^(1/b)) trick
    // with u = v^b and for the refined variable u^(1/e)).
    LaurentPoly substitute_pow(long k) const;

    Int eval_at_one() const;

    // Canonical rendering: descending exponents, explicit signs, u^k
    // notation, L never emitted. parse_class(to_string()) round-trips.
    std::string to_string(const std::string& var = "u") const;

private:
    std::map<long, Int> coeffs_;
};

// A Grothendieck-ring class through the Poincare specialization: the
// virtual Poincare polynomial P(Y, u). L is exactly u^2.
using MotClass = LaurentPoly;

// Topological Euler characteristic: P carries the sign (-1)^i, so chi is
// evaluation at u = 1. Ring homomorphism to Z.
Int euler_char(const MotClass& c);

// Dimension read off the class of an effective variety: degree/2 when the
// top degree is even with positive leading coefficient; nullopt flags a
// class that is not of effective-variety shape. Throws std::domain_error
// on the zero class ("dimension undefined").
std::optional<long> virtual_dim(const MotClass& c);

} // namespace motzeta
