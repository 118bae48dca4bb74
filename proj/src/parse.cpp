#include "poissonkit/parse.hpp"

#include <cctype>

namespace poissonkit {

namespace detail {

void Scanner::expect(char c, const char* what) {
    if (!accept(c))
        throw ParseError(pos, std::string("expected '") + c + "' (" + what + ")");
}

long Scanner::integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == digits)
        throw ParseError(start, std::string("expected integer (") + what + ")");
    return std::stol(text.substr(start, pos - start));
}

} // namespace detail

namespace {

using detail::Scanner;

// Parses an unsigned arbitrary-precision numeric literal "p" or "p/q".
Rational scan_rational(Scanner& s) {
    s.skip_ws();
    std::size_t start = s.pos;
    while (s.pos < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[s.pos])))
        ++s.pos;
    if (s.pos == start)
        throw ParseError(start, "expected numeric literal");
    std::string num = s.text.substr(start, s.pos - start);
    if (s.accept('/')) {
        s.skip_ws();
        std::size_t dstart = s.pos;
        while (s.pos < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[s.pos])))
            ++s.pos;
        if (s.pos == dstart)
            throw ParseError(dstart, "expected denominator");
        std::string den = s.text.substr(dstart, s.pos - dstart);
        if (Integer(den) == 0)
            throw ParseError(dstart, "zero denominator");
        return rational_from_string(num + "/" + den);
    }
    return rational_from_string(num);
}

// var := 'x' '[' i ',' j ']' | 't' '_' i | 't' -- returns a variable index.
int scan_variable(Scanner& s, const VarContext& ctx) {
    std::size_t start = s.pos;
    if (s.accept('x')) {
        if (ctx.kind() == ContextKind::Diagonal)
            throw ParseError(start, "variable x[i,j] is outside this roster");
        s.expect('[', "matrix variable");
        long i = s.integer("row index");
        s.expect(',', "matrix variable");
        long j = s.integer("column index");
        s.expect(']', "matrix variable");
        if (i < 1 || i > ctx.n() || j < 1 || j > ctx.n())
            throw ParseError(start, "variable x[" + std::to_string(i) + "," + std::to_string(j) +
                                        "] is outside this roster");
        return ctx.var(static_cast<int>(i), static_cast<int>(j));
    }
    if (s.accept('t')) {
        if (s.accept('_')) {
            long i = s.integer("diagonal index");
            if (ctx.kind() != ContextKind::Diagonal || i < 1 || i > ctx.n())
                throw ParseError(start, "variable t_" + std::to_string(i) + " is outside this roster");
            return ctx.t_i(static_cast<int>(i));
        }
        if (ctx.kind() != ContextKind::MatrixWithT)
            throw ParseError(start, "variable t is outside this roster");
        return ctx.t_var();
    }
    throw ParseError(s.pos, "expected a variable or numeric literal");
}

// term := factor ('*' factor)*
Polynomial scan_term(Scanner& s, const VarContext& ctx) {
    Polynomial p = Polynomial::constant(ctx, Rational(1));
    while (true) {
        char c = s.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            p = p.scaled(scan_rational(s));
        } else {
            int v = scan_variable(s, ctx);
            int exp = 1;
            if (s.accept('^')) {
                long e = s.integer("exponent");
                if (e < 0)
                    throw ParseError(s.pos, "negative exponents are not allowed here");
                exp = static_cast<int>(e);
            }
            p = p * Polynomial::monomial(ctx, ExponentVector::variable(v, exp));
        }
        if (!s.accept('*'))
            return p;
    }
}

} // namespace

Polynomial poly_parse(const std::string& text, const VarContext& ctx) {
    Scanner s(text);
    Polynomial p = Polynomial::zero(ctx);
    bool negate = false;
    if (s.accept('-'))
        negate = true;
    else
        s.accept('+');
    while (true) {
        Polynomial term = scan_term(s, ctx);
        p = negate ? p - term : p + term;
        if (s.done())
            return p;
        if (s.accept('+'))
            negate = false;
        else if (s.accept('-'))
            negate = true;
        else
            throw ParseError(s.pos, "expected '+', '-' or end of input");
    }
}

LaurentScalar laurent_parse(const std::string& text) {
    Scanner s(text);
    LaurentScalar total;
    bool negate = false;
    if (s.accept('-'))
        negate = true;
    else
        s.accept('+');
    while (true) {
        Rational coeff(1);
        int power = 0;
        bool saw_factor = false;
        while (true) {
            char c = s.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= scan_rational(s);
                saw_factor = true;
            } else if (c == 't') {
                ++s.pos;
                long e = 1;
                if (s.accept('^'))
                    e = s.integer("t exponent");
                power += static_cast<int>(e);
                saw_factor = true;
            } else {
                throw ParseError(s.pos, "expected numeric literal or t power");
            }
            if (!s.accept('*'))
                break;
        }
        if (!saw_factor)
            throw ParseError(s.pos, "empty term");
        LaurentScalar term = LaurentScalar::t_power(power, coeff);
        total = negate ? total - term : total + term;
        if (s.done())
            return total;
        if (s.accept('+'))
            negate = false;
        else if (s.accept('-'))
            negate = true;
        else
            throw ParseError(s.pos, "expected '+', '-' or end of input");
    }
}

} // namespace poissonkit
