#pragma once

#include <gmpxx.h>
#include <string>

namespace motzeta {

// Exact integers and rationals. Coefficient arithmetic is arbitrary
// precision throughout; exponents are machine integers (they are bounded
// by the input data, not by intermediate results).
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(a, b) does not canonicalize; comparisons require canonical
// form. Every ratio built from raw parts must go through here.
inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical rendering: "0", "2", "-1/2".
std::string rat_str(const Rat& q);

// Parses "a" or "a/b" with optional leading '-'. Throws
// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Throws std::overflow_error when n does not fit in a long.
long to_long(const Int& n);

Int int_pow(const Int& base, unsigned long e);

} // namespace motzeta
