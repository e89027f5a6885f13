#include "qwitt/textio.hpp"

#include <cctype>

#include "qwitt/errors.hpp"

namespace qwitt {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    QRat parse() {
        QRat v = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return v;
    }

private:
    QRat expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (next() == '-');
        QRat acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                next();
                QRat t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    QRat term() {
        QRat acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                next();
                QRat f = factor();
                if (c == '*') {
                    acc *= f;
                } else {
                    if (f.is_zero()) fail("division by zero");
                    acc = acc / f;
                }
            } else {
                return acc;
            }
        }
    }

    QRat factor() {
        skip_ws();
        if (peek() == '-') {
            next();
            return -factor();
        }
        QRat base = atom();
        skip_ws();
        if (peek() == '^') {
            next();
            skip_ws();
            bool eneg = false;
            if (peek() == '-') {
                next();
                eneg = true;
            }
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected exponent");
            long e = small_uint();
            return base.pow(eneg ? -e : e);
        }
        return base;
    }

    QRat atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            next();
            QRat v = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            next();
            return v;
        }
        if (c == 'q') {
            next();
            return QRat::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                digits.push_back(next());
            return QRat(Rat(Int(digits)));
        }
        fail("expected number, 'q' or '('");
        return QRat(); // unreachable
    }

    long small_uint() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            digits.push_back(next());
        if (digits.size() > 6) fail("exponent too large");
        return std::stol(digits);
    }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char next() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos_) +
                         " in \"" + s_ + "\"");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

QRat parse_qrat(const std::string& text) { return Parser(text).parse(); }

QPoly parse_qpoly(const std::string& text) {
    QRat v = parse_qrat(text);
    if (!v.is_poly())
        throw ParseError("expected a polynomial, got \"" + text + "\"");
    return v.poly();
}

} // namespace qwitt
