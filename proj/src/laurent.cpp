#include "motzeta/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace motzeta {

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

const Int& LaurentPoly::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.rbegin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            Int& slot = r.coeffs_[e1 + e2];
            slot += c1 * c2;
        }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
        it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r(1);
    LaurentPoly base(*this);
    while (e > 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1UL;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_pow(long k) const {
    if (k < 1) throw std::invalid_argument("substitute_pow requires k >= 1");
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long e = it->first;
        Int c = it->second;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

Int euler_char(const MotClass& c) { return c.eval_at_one(); }

std::optional<long> virtual_dim(const MotClass& c) {
    if (c.is_zero()) throw std::domain_error("dimension undefined for the zero class");
    const long d = c.max_exp();
    if (d % 2 != 0 || d < 0 || c.leading_coeff() <= 0) return std::nullopt;
    return d / 2;
}

} // namespace motzeta
