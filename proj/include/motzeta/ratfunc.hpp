#pragma once

#include "motzeta/laurent.hpp"
#include "motzeta/numbers.hpp"

#include <string>
#include <vector>

namespace motzeta {

// Dense polynomial over Q in the auxiliary variable v (ascending
// coefficients, no trailing zeros).
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Rat& c) { if (c != 0) c_.push_back(c); }
    PolyQ(long c) : PolyQ(Rat(c)) {}
    static PolyQ monomial(const Rat& c, std::size_t exp);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const { return c_.back(); }

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
    // Monic gcd.
    static PolyQ gcd(PolyQ a, PolyQ b);

    std::string to_string(const std::string& var = "v") const;

private:
    std::vector<Rat> c_;
    void trim();
};

// Reduced rational function over Q in v: gcd(num, den) = 1, den monic,
// zero is 0/1. Equality is structural (the form is canonical).
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(PolyQ num, PolyQ den); // throws std::domain_error on zero denominator
    static RatFunc v_power(long k); // v^k, negative k allowed

    // Embeds a Laurent polynomial in v (numerator over a v-power).
    static RatFunc from_laurent(const LaurentPoly& p);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const; // throws on division by zero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    PolyQ num_, den_;
    void reduce();
};

} // namespace motzeta
