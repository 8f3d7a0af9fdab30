#pragma once

#include "motzeta/laurent.hpp"
#include "motzeta/numbers.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace motzeta {

// One denominator factor (1 - L^a T^b), b >= 1. Candidate pole a/b.
struct DenomFactor {
    long a = 0;
    long b = 1;
    Rat pole() const { return make_rat(a, b); }
};

// Canonical factor order: by a/b, then b, then a.
struct DenomFactorLess {
    bool operator()(const DenomFactor& x, const DenomFactor& y) const {
        // a1/b1 vs a2/b2 with positive b: cross multiply.
        const long long lhs = static_cast<long long>(x.a) * y.b;
        const long long rhs = static_cast<long long>(y.a) * x.b;
        if (lhs != rhs) return lhs < rhs;
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    }
};

inline bool operator==(const DenomFactor& x, const DenomFactor& y) {
    return x.a == y.a && x.b == y.b;
}

// Multiset of denominator factors with positive multiplicities.
using DenomMultiset = std::map<DenomFactor, int, DenomFactorLess>;

// coeff * T^tpow * prod (1 - L^a T^b)^-1. coeff absorbs pure L powers.
struct GeomTerm {
    MotClass coeff;
    long tpow = 0;
    DenomMultiset denom;
};

// Polynomial in T with MotClass coefficients, sparse by T-exponent.
using TPoly = std::map<long, MotClass>;

struct NormalForm {
    TPoly numerator;
    DenomMultiset denominator;
    bool operator==(const NormalForm& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }
    std::string to_string() const;
};

// A formal sum of geometric terms with a cached canonical normal form.
// Referentially transparent: all operations return new values; the cache
// is guarded so shared instances are safe across threads.
class ZetaExpr {
public:
    ZetaExpr() = default;
    explicit ZetaExpr(std::vector<GeomTerm> terms) : terms_(std::move(terms)) {}
    static ZetaExpr zero() { return ZetaExpr(); }
    static ZetaExpr single(GeomTerm t) { return ZetaExpr({std::move(t)}); }
    // Re-reads a normal form as a ZetaExpr (one term per numerator monomial,
    // all sharing the full denominator).
    static ZetaExpr from_normal_form(const NormalForm& nf);

    ZetaExpr(const ZetaExpr& o);
    ZetaExpr& operator=(const ZetaExpr& o);
    ZetaExpr(ZetaExpr&&) noexcept;
    ZetaExpr& operator=(ZetaExpr&&) noexcept;

    const std::vector<GeomTerm>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }

    // Term-list concatenation / coefficient scaling.
    friend ZetaExpr zadd(const ZetaExpr& x, const ZetaExpr& y);
    friend ZetaExpr zscale(const ZetaExpr& x, const MotClass& c);

    // Canonical single-fraction form: least multiset cover of the term
    // denominators, exact numerator arithmetic, then repeated whole-factor
    // cancellation. Two ZetaExpr are equal iff normal forms are identical.
    const NormalForm& normal_form() const;

    // Exact coefficients of T^1 .. T^D.
    std::vector<MotClass> series_expand(int depth) const;

    // T -> L^m T.
    ZetaExpr rescale_T(long m) const;

    // Reduced pole value -> multiplicity in the normal-form denominator.
    std::map<Rat, int> candidate_poles() const;

    // (certified lower order, upper order) at the reduced rational a/b.
    // Lower bound: exact pole order of the Poincare-specialized function
    // over Q(v) with u = v^b, evaluated at T = v^(-2a) by successive
    // synthetic division. Throws std::invalid_argument unless gcd(a,b)=1,
    // b >= 1.
    std::pair<int, int> certify_pole_order(long a, long b) const;
    std::pair<int, int> certify_pole_order(const Rat& q) const;

private:
    std::vector<GeomTerm> terms_;
    mutable std::mutex cache_mutex_;
    mutable std::shared_ptr<const NormalForm> cache_;
};

ZetaExpr zadd(const ZetaExpr& x, const ZetaExpr& y);
ZetaExpr zscale(const ZetaExpr& x, const MotClass& c);

// Certification report for a set of candidate poles.
struct PoleEntry {
    Rat q;
    int upper = 0;
    int lower = 0;
    bool certified() const { return lower == upper; }
};

// One entry per candidate pole, largest pole first.
std::vector<PoleEntry> pole_report(const ZetaExpr& z);

// Rendering helpers shared with the CLI.
std::string denom_factor_str(const DenomFactor& f);
std::string tpoly_str(const TPoly& p);

} // namespace motzeta
