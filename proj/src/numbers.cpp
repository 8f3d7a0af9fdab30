#include "motzeta/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace motzeta {

std::string rat_str(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    return c.get_str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t j = digits(i);
    if (j == i) throw std::invalid_argument("malformed rational literal: " + s);
    if (j < s.size()) {
        if (s[j] != '/') throw std::invalid_argument("malformed rational literal: " + s);
        std::size_t k = digits(j + 1);
        if (k == j + 1 || k != s.size())
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    Rat q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer out of machine range");
    return n.get_si();
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace motzeta
