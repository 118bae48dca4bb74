#pragma once

#include <string>

#include "poissonkit/laurent.hpp"
#include "poissonkit/polynomial.hpp"

namespace poissonkit {

/// Parses the canonical polynomial grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := var ['^' uint] | rational
///   var    := 'x' '[' i ',' j ']' | 't' '_' i | 't'
/// Whitespace is insignificant. Variables must belong to the context.
/// Throws ParseError with a position on bad syntax or unknown variables.
Polynomial poly_parse(const std::string& text, const VarContext& ctx);

/// Parses an element of Q[t,t^-1]; exponents may be negative ("t^-2").
LaurentScalar laurent_parse(const std::string& text);

namespace detail {

/// Shared cursor for the recursive-descent parsers.
struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    explicit Scanner(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what);
    long integer(const char* what);
};

} // namespace detail

} // namespace poissonkit
