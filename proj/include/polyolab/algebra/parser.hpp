#pragma once

#include "polyolab/algebra/qtpoly.hpp"
#include "polyolab/error.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace polyolab::algebra {

// Recursive-descent parser shared by all text formats:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' ['-'] int]
//   primary:= int | ident ['[' int (',' int)* ']'] | '(' expr ')'
// The Atoms policy turns numbers and identifiers into values and supplies
// division and integer powers for the value type.
template <class Value, class Atoms>
class ExprParser {
public:
    ExprParser(std::string_view src, Atoms atoms) : src_(src), atoms_(std::move(atoms)) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    std::size_t position() const { return pos_; }

private:
    void skip() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    BigInt integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
        if (start == pos_) fail("expected integer");
        return BigInt(std::string(src_.substr(start, pos_ - start)));
    }
    int small_int() {
        BigInt v = integer();
        if (!v.fits_sint_p()) fail("integer too large");
        return int(v.get_si());
    }

    Value expr() {
        skip();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Value v = term();
        if (neg) v = atoms_.negate(v);
        while (true) {
            if (accept('+')) v = atoms_.add(v, term());
            else if (accept('-')) v = atoms_.sub(v, term());
            else break;
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (true) {
            if (accept('*')) v = atoms_.mul(v, factor());
            else if (accept('/')) v = atoms_.div(v, factor(), pos_);
            else break;
        }
        return v;
    }

    Value factor() {
        Value v = primary();
        if (accept('^')) {
            bool neg = accept('-');
            int e = small_int();
            v = atoms_.power(v, neg ? -e : e, pos_);
        }
        return v;
    }

    Value primary() {
        skip();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit((unsigned char)c)) return atoms_.number(integer());
        if (std::isalpha((unsigned char)c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_')) ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            std::vector<int> index;
            bool indexed = false;
            skip();
            if (pos_ < src_.size() && src_[pos_] == '[') {
                ++pos_;
                indexed = true;
                skip();
                if (!accept(']')) {
                    do index.push_back(small_int());
                    while (accept(','));
                    expect(']');
                }
            }
            return atoms_.identifier(name, indexed, index, start);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Atoms atoms_;
};

}  // namespace polyolab::algebra
