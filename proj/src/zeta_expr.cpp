#include "motzeta/zeta_expr.hpp"

#include "motzeta/ratfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motzeta {

namespace {

TPoly tpoly_add(const TPoly& x, const TPoly& y) {
    TPoly r(x);
    for (const auto& [e, c] : y) {
        auto it = r.find(e);
        if (it == r.end()) {
            if (!c.is_zero()) r[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

TPoly tpoly_mul(const TPoly& x, const TPoly& y) {
    TPoly r;
    for (const auto& [e1, c1] : x)
        for (const auto& [e2, c2] : y) {
            MotClass& slot = r[e1 + e2];
            slot += c1 * c2;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

TPoly factor_poly(const DenomFactor& f) {
    // 1 - L^a T^b = 1 - u^(2a) T^b
    TPoly p;
    p[0] = MotClass(1);
    p[f.b] = -MotClass::lefschetz(f.a);
    return p;
}

// Exact division by (1 - L^a T^b); the divisor's top coefficient -L^a is a
// unit in Z[u, u^-1], so long division applies. Returns false when the
// remainder is nonzero.
bool tpoly_divide_exact(const TPoly& num, const DenomFactor& f, TPoly& quotient) {
    TPoly rem(num);
    TPoly q;
    const MotClass lead_inv = -MotClass::lefschetz(-f.a); // (-L^a)^-1
    while (!rem.empty() && rem.rbegin()->first >= f.b) {
        const long e = rem.rbegin()->first;
        MotClass c = rem.rbegin()->second * lead_inv;
        q[e - f.b] = c;
        // rem -= c T^(e-b) * (1 - L^a T^b)
        TPoly sub;
        sub[e - f.b] = c;
        sub[e] = -(c * MotClass::lefschetz(f.a));
        rem = tpoly_add(rem, [&] {
            TPoly neg;
            for (auto& [ee, cc] : sub) neg[ee] = -cc;
            return neg;
        }());
    }
    if (!rem.empty()) return false;
    quotient = std::move(q);
    return true;
}

// Cancellation scan order: descending b first (composite shapes carry the
// primitive ones), then ascending a/b, then ascending a.
std::vector<DenomFactor> cancellation_order(const DenomMultiset& den) {
    std::vector<DenomFactor> fs;
    fs.reserve(den.size());
    for (const auto& [f, m] : den) fs.push_back(f);
    std::sort(fs.begin(), fs.end(), [](const DenomFactor& x, const DenomFactor& y) {
        if (x.b != y.b) return x.b > y.b;
        const long long lhs = static_cast<long long>(x.a) * y.b;
        const long long rhs = static_cast<long long>(y.a) * x.b;
        if (lhs != rhs) return lhs < rhs;
        return x.a < y.a;
    });
    return fs;
}

NormalForm compute_normal_form(const std::vector<GeomTerm>& terms) {
    NormalForm nf;
    if (terms.empty()) return nf;

    // Least multiset cover of all term denominators.
    for (const auto& t : terms)
        for (const auto& [f, m] : t.denom) {
            int& slot = nf.denominator[f];
            slot = std::max(slot, m);
        }

    // Numerator: sum of coeff T^tpow times the cofactor of each term.
    TPoly num;
    for (const auto& t : terms) {
        TPoly part;
        if (!t.coeff.is_zero()) part[t.tpow] = t.coeff;
        for (const auto& [f, m] : nf.denominator) {
            auto it = t.denom.find(f);
            const int have = it == t.denom.end() ? 0 : it->second;
            for (int k = have; k < m; ++k) part = tpoly_mul(part, factor_poly(f));
        }
        num = tpoly_add(num, part);
    }

    if (num.empty()) {
        nf.denominator.clear();
        return nf;
    }

    // Repeated whole-factor cancellation until no denominator factor
    // divides the numerator.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DenomFactor& f : cancellation_order(nf.denominator)) {
            auto it = nf.denominator.find(f);
            if (it == nf.denominator.end()) continue;
            TPoly q;
            while (it->second > 0 && tpoly_divide_exact(num, f, q)) {
                num = std::move(q);
                --it->second;
                changed = true;
                if (num.empty()) break;
            }
            if (it->second == 0) nf.denominator.erase(it);
            if (num.empty()) break;
        }
        if (num.empty()) break;
    }
    if (num.empty()) nf.denominator.clear();
    nf.numerator = std::move(num);
    return nf;
}

} // namespace

ZetaExpr ZetaExpr::from_normal_form(const NormalForm& nf) {
    std::vector<GeomTerm> terms;
    terms.reserve(nf.numerator.size());
    for (const auto& [e, c] : nf.numerator) terms.push_back(GeomTerm{c, e, nf.denominator});
    return ZetaExpr(std::move(terms));
}

ZetaExpr::ZetaExpr(const ZetaExpr& o) : terms_(o.terms_) {
    std::lock_guard<std::mutex> lock(o.cache_mutex_);
    cache_ = o.cache_;
}

ZetaExpr& ZetaExpr::operator=(const ZetaExpr& o) {
    if (this == &o) return *this;
    std::shared_ptr<const NormalForm> c;
    {
        std::lock_guard<std::mutex> lock(o.cache_mutex_);
        c = o.cache_;
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    terms_ = o.terms_;
    cache_ = std::move(c);
    return *this;
}

ZetaExpr::ZetaExpr(ZetaExpr&& o) noexcept : terms_(std::move(o.terms_)), cache_(std::move(o.cache_)) {}

ZetaExpr& ZetaExpr::operator=(ZetaExpr&& o) noexcept {
    terms_ = std::move(o.terms_);
    cache_ = std::move(o.cache_);
    return *this;
}

ZetaExpr zadd(const ZetaExpr& x, const ZetaExpr& y) {
    std::vector<GeomTerm> terms(x.terms_);
    terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
    return ZetaExpr(std::move(terms));
}

ZetaExpr zscale(const ZetaExpr& x, const MotClass& c) {
    std::vector<GeomTerm> terms(x.terms_);
    for (auto& t : terms) t.coeff *= c;
    return ZetaExpr(std::move(terms));
}

const NormalForm& ZetaExpr::normal_form() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!cache_) cache_ = std::make_shared<const NormalForm>(compute_normal_form(terms_));
    return *cache_;
}

std::vector<MotClass> ZetaExpr::series_expand(int depth) const {
    if (depth < 0) throw std::invalid_argument("series depth must be >= 0");
    const std::size_t n = static_cast<std::size_t>(depth) + 1;
    std::vector<MotClass> acc(n);
    for (const auto& t : terms_) {
        if (t.coeff.is_zero() || t.tpow > depth) continue;
        std::vector<MotClass> part(n);
        part[static_cast<std::size_t>(t.tpow)] = t.coeff;
        for (const auto& [f, m] : t.denom) {
            for (int rep = 0; rep < m; ++rep) {
                // multiply by sum_k L^(a k) T^(b k), truncated
                std::vector<MotClass> next(n);
                for (std::size_t d = 0; d < n; ++d) {
                    if (part[d].is_zero()) continue;
                    for (long k = 0; d + static_cast<std::size_t>(k) * f.b < n; ++k)
                        next[d + static_cast<std::size_t>(k) * f.b] +=
                            part[d] * MotClass::lefschetz(f.a * k);
                }
                part = std::move(next);
            }
        }
        for (std::size_t d = 0; d < n; ++d) acc[d] += part[d];
    }
    return std::vector<MotClass>(acc.begin() + 1, acc.end());
}

ZetaExpr ZetaExpr::rescale_T(long m) const {
    std::vector<GeomTerm> terms(terms_);
    for (auto& t : terms) {
        t.coeff *= MotClass::lefschetz(m * t.tpow);
        DenomMultiset den;
        for (const auto& [f, mult] : t.denom) den[DenomFactor{f.a + m * f.b, f.b}] += mult;
        t.denom = std::move(den);
    }
    return ZetaExpr(std::move(terms));
}

std::map<Rat, int> ZetaExpr::candidate_poles() const {
    std::map<Rat, int> poles;
    for (const auto& [f, m] : normal_form().denominator) poles[f.pole()] += m;
    return poles;
}

std::pair<int, int> ZetaExpr::certify_pole_order(long a, long b) const {
    if (b < 1) throw std::invalid_argument("pole denominator must be >= 1");
    if (std::gcd(a < 0 ? -a : a, b) != 1 && !(a == 0 && b == 1))
        throw std::invalid_argument("pole must be given in reduced form");
    const NormalForm& nf = normal_form();

    int upper = 0;
    const Rat q(a, b);
    for (const auto& [f, m] : nf.denominator)
        if (f.pole() == q) upper += m;

    if (nf.numerator.empty()) return {0, 0};

    // Specialize u = v^b, so L = v^(2b) and classes become Laurent
    // polynomials in v; work over Q(v).
    const long point_exp = -2 * a; // T = u^(-2a/b) = v^(-2a)
    const RatFunc point = RatFunc::v_power(point_exp);

    auto specialize = [&](const TPoly& p) {
        const long deg = p.empty() ? 0 : p.rbegin()->first;
        std::vector<RatFunc> out(static_cast<std::size_t>(deg) + 1);
        for (const auto& [e, c] : p)
            out[static_cast<std::size_t>(e)] = RatFunc::from_laurent(c.substitute_pow(b));
        return out;
    };

    auto multiplicity = [&](std::vector<RatFunc> poly) {
        while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
        if (poly.empty()) return -1; // zero polynomial: infinite order
        int mult = 0;
        for (;;) {
            if (poly.size() == 1) return mult;
            // Synthetic division by (T - point): quotient top-down, the
            // running value at the point is the remainder.
            std::vector<RatFunc> quot(poly.size() - 1);
            RatFunc carry = poly.back();
            for (std::size_t i = poly.size() - 1; i-- > 0;) {
                quot[i] = carry;
                carry = poly[i] + point * carry;
            }
            if (!carry.is_zero()) return mult;
            ++mult;
            poly = std::move(quot);
        }
    };

    std::vector<RatFunc> num = specialize(nf.numerator);

    std::vector<RatFunc> den{RatFunc(1)};
    for (const auto& [f, m] : nf.denominator) {
        // (1 - v^(2 b a') T^(b'))^m
        std::vector<RatFunc> fac(static_cast<std::size_t>(f.b) + 1);
        fac[0] = RatFunc(1);
        fac[static_cast<std::size_t>(f.b)] = -RatFunc::v_power(2 * b * f.a);
        for (int rep = 0; rep < m; ++rep) {
            std::vector<RatFunc> prod(den.size() + fac.size() - 1);
            for (std::size_t i = 0; i < den.size(); ++i) {
                if (den[i].is_zero()) continue;
                for (std::size_t j = 0; j < fac.size(); ++j) {
                    if (fac[j].is_zero()) continue;
                    prod[i + j] += den[i] * fac[j];
                }
            }
            den = std::move(prod);
        }
    }

    const int mult_num = multiplicity(std::move(num));
    const int mult_den = multiplicity(std::move(den));
    int lower = mult_den - mult_num;
    if (lower < 0) lower = 0;
    return {lower, upper};
}

std::pair<int, int> ZetaExpr::certify_pole_order(const Rat& q) const {
    Rat c(q);
    c.canonicalize();
    return certify_pole_order(to_long(Int(c.get_num())), to_long(Int(c.get_den())));
}

std::vector<PoleEntry> pole_report(const ZetaExpr& z) {
    std::vector<PoleEntry> out;
    auto poles = z.candidate_poles();
    for (auto it = poles.rbegin(); it != poles.rend(); ++it) {
        auto [lower, upper] = z.certify_pole_order(it->first);
        out.push_back(PoleEntry{it->first, upper, lower});
    }
    return out;
}

std::string denom_factor_str(const DenomFactor& f) {
    std::ostringstream out;
    out << "(1 - ";
    if (f.a != 0) {
        out << "L";
        if (f.a != 1) out << "^" << f.a;
        out << "*";
    }
    out << "T";
    if (f.b != 1) out << "^" << f.b;
    out << ")";
    return out.str();
}

std::string tpoly_str(const TPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p) {
        if (!first) out << " + ";
        first = false;
        out << "[" << c.to_string() << "]";
        if (e != 0) {
            out << "*T";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::string NormalForm::to_string() const {
    if (numerator.empty()) return "0";
    std::ostringstream out;
    out << tpoly_str(numerator);
    if (!denominator.empty()) {
        std::ostringstream den;
        bool first = true;
        for (const auto& [f, m] : denominator) {
            if (!first) den << "*";
            first = false;
            den << denom_factor_str(f);
            if (m != 1) den << "^" << m;
        }
        return "(" + out.str() + ") / (" + den.str() + ")";
    }
    return out.str();
}

} // namespace motzeta
