#include "motzeta/class_parser.hpp"

#include <cctype>

namespace motzeta {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MotClass run() {
        MotClass v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MotClass expr() {
        MotClass v = (peek() == '-') ? (eat('-'), -term()) : term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    MotClass term() {
        MotClass v = factor();
        while (eat('*')) v *= factor();
        return v;
    }

    MotClass factor() {
        if (eat('-')) return -factor();
        MotClass base = atom();
        if (!eat('^')) return base;
        skip_ws();
        bool neg = eat('-');
        long e = integer_literal("exponent expected");
        if (!neg) return base.pow(static_cast<unsigned long>(e));
        // Negative exponents live in Z[u, u^-1] only for unit monomials.
        if (base.is_zero() || base.terms().size() != 1) fail("negative exponent on a non-monomial");
        const auto& [me, mc] = *base.terms().begin();
        if (mc != 1 && mc != -1) fail("negative exponent on a non-invertible coefficient");
        MotClass inv = MotClass::monomial(mc, -me); // (c u^e)^-1 = c u^-e for c = +-1
        return inv.pow(static_cast<unsigned long>(e));
    }

    MotClass atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MotClass v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'u') { ++pos_; return MotClass::u(); }
        if (c == 'L') { ++pos_; return MotClass::lefschetz(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MotClass(Int(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer_literal(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(what);
        Int n(s_.substr(start, pos_ - start));
        if (!n.fits_slong_p()) fail("exponent out of range");
        return n.get_si();
    }
};

} // namespace

MotClass parse_class(const std::string& text) { return Parser(text).run(); }

} // namespace motzeta
