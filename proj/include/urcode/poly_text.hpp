#pragma once

#include <cctype>
#include <string>

#include "urcode/poly.hpp"

namespace urcode {

// Grammar: integer and p/q rational literals, X, ^, *, +, -, parentheses.
// Whitespace insensitive. Adjacency acts as multiplication ("3X" = 3*X).
class PolyParser {
   public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input or operator");
        return p;
    }

   private:
    Poly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == 'X' || c == '(') {
                acc = acc * factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned long e = uint_literal();
            Poly acc = Poly::constant(Rat(1));
            for (unsigned long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        char c = peek();
        if (c == 'X') {
            ++pos_;
            return Poly::x();
        }
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError(pos_, "')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = int_literal();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                Int den = int_literal();
                if (sgn(den) == 0) throw ParseError(pos_, "non-zero denominator");
                return Poly::constant(make_rat(num, den));
            }
            return Poly::constant(Rat(num));
        }
        throw ParseError(pos_, "number, 'X' or '('");
    }

    Int int_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "decimal digits");
        return Int(text_.substr(start, pos_ - start), 10);
    }

    unsigned long uint_literal() {
        Int v = int_literal();
        if (!v.fits_ulong_p() || v.get_ui() > 10000) throw ParseError(pos_, "exponent <= 10000");
        return v.get_ui();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

inline Poly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

// Canonical rendering: terms by descending exponent, coefficients as p/q,
// '*' explicit, no spaces. render(parse(s)) canonicalizes s.
inline std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const unsigned long k = it->first;
        const Rat& c = it->second;
        Rat a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? "-" : "+";
        }
        if (k == 0) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += "X";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace urcode
