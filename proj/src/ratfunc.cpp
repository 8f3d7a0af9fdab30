#include "motzeta/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace motzeta {

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::monomial(const Rat& c, std::size_t exp) {
    PolyQ p;
    if (c != 0) {
        p.c_.assign(exp + 1, Rat(0));
        p.c_[exp] = c;
    }
    return p;
}

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    PolyQ r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    PolyQ r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = PolyQ();
    r = a;
    const long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const long shift = r.degree() - db;
        Rat factor = r.leading() / b.leading();
        PolyQ t = PolyQ::monomial(factor, static_cast<std::size_t>(shift));
        q = q + t;
        r = r - t * b;
    }
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.leading() != 1) {
        PolyQ scaled;
        Rat inv = Rat(1) / a.leading();
        scaled = a * PolyQ(inv);
        return scaled;
    }
    return a;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rat c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) { out << rat_str(c); continue; }
        if (c != 1) out << rat_str(c) << "*";
        out << var;
        if (i != 1) out << "^" << i;
    }
    return out.str();
}

RatFunc::RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

RatFunc RatFunc::v_power(long k) {
    if (k >= 0) return RatFunc(PolyQ::monomial(Rat(1), static_cast<std::size_t>(k)), PolyQ(Rat(1)));
    return RatFunc(PolyQ(Rat(1)), PolyQ::monomial(Rat(1), static_cast<std::size_t>(-k)));
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return RatFunc();
    const long shift = std::min(0L, p.min_exp());
    PolyQ num;
    for (const auto& [e, c] : p.terms())
        num = num + PolyQ::monomial(Rat(c), static_cast<std::size_t>(e - shift));
    PolyQ den = PolyQ::monomial(Rat(1), static_cast<std::size_t>(-shift));
    return RatFunc(std::move(num), std::move(den));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = PolyQ(Rat(1));
        return;
    }
    PolyQ g = PolyQ::gcd(num_, den_);
    if (g.degree() > 0) {
        PolyQ q, r;
        PolyQ::divmod(num_, g, q, r);
        num_ = q;
        PolyQ::divmod(den_, g, q, r);
        den_ = q;
    }
    if (den_.leading() != 1) {
        Rat inv = Rat(1) / den_.leading();
        num_ = num_ * PolyQ(inv);
        den_ = den_ * PolyQ(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::to_string() const {
    if (den_ == PolyQ(Rat(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace motzeta
