#include "trimcc/parser.hpp"

#include <cctype>

#include "trimcc/errors.hpp"

namespace trimcc {

namespace {

class Parser {
public:
    Parser(PolynomialRing::Ptr ring, std::string text)
        : ring_(std::move(ring)), text_(std::move(text)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    PolynomialRing::Ptr ring_;
    std::string text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                         why + " in \"" + text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (eat('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        int sign = 1;
        for (;;) {
            if (eat('-'))
                sign = -sign;
            else if (eat('+'))
                ;
            else
                break;
        }
        Polynomial p = factor();
        return sign < 0 ? -p : p;
    }

    Polynomial factor() {
        Polynomial base = primary();
        while (eat('^')) {
            long e = integer_literal("exponent");
            if (e < 0) fail("negative exponent");
            if (e >= kMaxExponent)
                throw ComputationLimitError("parsed exponent exceeds limit 2^30");
            base = base.pow(e);
        }
        return base;
    }

    long integer_literal(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        try {
            return std::stol(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ComputationLimitError("integer literal too large for an exponent");
        }
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("unexpected character");
    }

    Polynomial number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        // a/b rational literal: '/' binds only between integer literals
        size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart) fail("expected denominator digits after '/'");
            std::string den = text_.substr(dstart, pos_ - dstart);
            return Polynomial::constant(ring_, Rational::parse(digits + "/" + den));
        }
        pos_ = save;
        return Polynomial::constant(ring_, Rational::parse(digits));
    }

    Polynomial variable() {
        size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        int idx = ring_->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        return Polynomial::variable(ring_, idx);
    }
};

} // namespace

Polynomial parse_polynomial(const PolynomialRing::Ptr& ring, const std::string& text) {
    // Normalize the UTF-8 minus sign some editors produce.
    std::string t;
    t.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            t += '-';
            i += 2;
        } else {
            t += text[i];
        }
    }
    return Parser(ring, t).run();
}

} // namespace trimcc
