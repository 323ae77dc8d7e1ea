#include "wa/parse.hpp"

#include <cctype>

#include "wa/weyl.hpp"

namespace wa {

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) {
            if (src[pos] == '\n') { ++line; col = 1; } else ++col;
            ++pos;
        }
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    char take() {
        char c = peek();
        if (c != '\0') { ++pos; ++col; }
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

struct Parser {
    Lexer lx;
    int n;
    bool weyl; // noncommutative product when true

    Parser(const std::string& s, int n_, bool weyl_) : lx(s), n(n_), weyl(weyl_) {}

    El mul(const El& a, const El& b) { return weyl ? weyl_mul(a, b) : comm_mul(a, b); }

    El parse() {
        El e = expr();
        if (lx.peek() != '\0') lx.fail("unexpected trailing input");
        return e;
    }

    El expr() {
        El acc = term();
        for (;;) {
            char c = lx.peek();
            if (c == '+') { lx.take(); acc = add(acc, term()); }
            else if (c == '-') { lx.take(); acc = sub(acc, term()); }
            else return acc;
        }
    }

    El term() {
        El acc = factor();
        while (lx.peek() == '*') {
            lx.take();
            acc = mul(acc, factor());
        }
        return acc;
    }

    El factor() {
        char c = lx.peek();
        if (c == '-') {
            lx.take();
            return scale(factor(), Q(-1));
        }
        if (c == '(') {
            lx.take();
            El e = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.take();
            return e;
        }
        if (std::isdigit((unsigned char)c)) return rational();
        if (std::isalpha((unsigned char)c)) return variable();
        lx.fail(std::string("unexpected character '") + c + "'");
    }

    El rational() {
        std::string num = digits();
        if (lx.peek() == '/') {
            lx.take();
            if (!std::isdigit((unsigned char)lx.peek())) lx.fail("expected denominator");
            std::string den = digits();
            Z d(den);
            if (d == 0) lx.fail("zero denominator");
            return el_const(n, make_q(Z(num), d));
        }
        return el_const(n, Q(Z(num)));
    }

    std::string digits() {
        // deliberately no whitespace skip: variable indices and exponents
        // must be adjacent to their introducer
        std::string s;
        while (lx.pos < lx.src.size() && std::isdigit((unsigned char)lx.src[lx.pos])) {
            s += lx.src[lx.pos++];
            ++lx.col;
        }
        return s;
    }

    El variable() {
        int vline = lx.line, vcol = lx.col;
        char name = lx.take();
        std::string idx = digits();
        int i;
        if (idx.empty()) {
            if (n != 1) throw ParseError(std::string("variable '") + name + "' needs an index when n > 1", vline, vcol);
            i = 1;
        } else {
            i = std::stoi(idx);
            if (i < 1 || i > n) throw ParseError("variable index out of range for n=" + std::to_string(n), vline, vcol);
        }
        int slot;
        if (weyl) {
            if (name == 'x') slot = i - 1;
            else if (name == 'd') slot = n + i - 1;
            else throw ParseError(std::string("unknown variable '") + name + "' (expected x or d)", vline, vcol);
        } else {
            if (name == 'X') slot = i - 1;
            else if (name == 'Y') slot = n + i - 1;
            else throw ParseError(std::string("unknown variable '") + name + "' (expected X or Y)", vline, vcol);
        }
        int32_t power = 1;
        if (lx.peek() == '^') {
            lx.take();
            if (!std::isdigit((unsigned char)lx.peek())) lx.fail("expected exponent");
            power = std::stoi(digits());
        }
        Exp e(2 * n, 0);
        e[slot] = power;
        return el_term(n, e, Q(1));
    }
};

} // namespace

WeylElement parse_weyl(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    return Parser(text, n, true).parse();
}

Poly parse_poly(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    return Parser(text, n, false).parse();
}

} // namespace wa
