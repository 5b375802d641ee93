#include "basis4/literal.hpp"

#include <cctype>
#include <cstdio>

namespace basis4 {
namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t base = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, base + pos);
    }
};

// Accumulated by hand: the BigInt string constructor would read a
// leading zero as an octal prefix.
BigInt parse_digits(Cursor& c) {
    std::size_t start = c.pos;
    BigInt value = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.peek() - '0');
        ++c.pos;
    }
    if (c.pos == start) c.fail("expected digits");
    return value;
}

/// unsigned rational: digits [ '/' digits ] | digits '.' digits
Rational parse_unsigned_rational(Cursor& c) {
    BigInt num = parse_digits(c);
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        std::size_t den_pos = c.pos;
        BigInt den = parse_digits(c);
        if (den.is_zero()) {
            c.pos = den_pos;
            c.fail("zero denominator");
        }
        return Rational(num, den);
    }
    if (!c.done() && c.peek() == '.') {
        ++c.pos;
        std::size_t start = c.pos;
        BigInt frac = parse_digits(c);
        BigInt scale = 1;
        for (std::size_t k = 0; k < c.pos - start; ++k) scale *= 10;
        return Rational(num * scale + frac, scale);
    }
    return Rational(num);
}

struct Term {
    Rational value;
    bool imaginary;
};

/// term: [sign] ( rational ['i'] | 'i' )
Term parse_term(Cursor& c, bool sign_required) {
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
    } else if (sign_required) {
        c.fail("expected '+' or '-'");
    }
    if (c.done()) c.fail("truncated scalar literal");
    Term t;
    if (c.peek() == 'i') {
        ++c.pos;
        t.value = Rational(sign);
        t.imaginary = true;
        return t;
    }
    t.value = sign * parse_unsigned_rational(c);
    t.imaginary = false;
    if (!c.done() && c.peek() == 'i') {
        ++c.pos;
        t.imaginary = true;
    }
    return t;
}

}  // namespace

ScalarParts parse_scalar_parts(std::string_view text, std::size_t base_offset) {
    Cursor c{text, 0, base_offset};
    for (char ch : text)
        if (std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError("whitespace inside scalar literal", base_offset);
    if (text.empty()) c.fail("empty scalar literal");

    ScalarParts out;
    Term first = parse_term(c, false);
    if (first.imaginary)
        out.im = first.value;
    else
        out.re = first.value;
    if (!c.done()) {
        std::size_t second_pos = c.pos;
        Term second = parse_term(c, true);
        if (second.imaginary == first.imaginary) {
            c.pos = second_pos;
            c.fail(first.imaginary ? "duplicate imaginary term" : "duplicate real term");
        }
        if (second.imaginary)
            out.im = second.value;
        else
            out.re = second.value;
    }
    if (!c.done()) c.fail("trailing characters in scalar literal");
    return out;
}

std::string format_scalar(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

namespace {
std::string format_imaginary_magnitude(const Rational& im) {
    Rational a = abs(im);
    if (a == 1) return "i";
    return format_scalar(a) + "i";
}
}  // namespace

std::string format_scalar(const GaussianRational& z) {
    if (z.im.is_zero()) return format_scalar(z.re);
    std::string imag = (z.im.sign() < 0 ? "-" : "") + format_imaginary_magnitude(z.im);
    if (z.re.is_zero()) return imag;
    if (z.im.sign() > 0) return format_scalar(z.re) + "+" + imag;
    return format_scalar(z.re) + imag;
}

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string format_scalar(const FloatScalar& x) {
    if (x.im == 0.0) return format_double(x.re);
    std::string imag = format_double(std::abs(x.im)) + "i";
    if (imag == "1i") imag = "i";
    std::string sign = x.im < 0 ? "-" : "";
    if (x.re == 0.0) return sign + imag;
    return format_double(x.re) + (x.im < 0 ? "-" : "+") + imag;
}

namespace detail {

std::vector<std::pair<std::string, std::size_t>> split_vector_literal(
    std::string_view text, std::size_t arity) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '(')
        throw ParseError("expected '(' opening a vector literal", i);
    ++i;
    std::vector<std::pair<std::string, std::size_t>> out;
    for (std::size_t k = 0; k < arity; ++k) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ')') ++i;
        std::size_t end = i;
        while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
        if (end == start)
            throw ParseError("empty vector component", start);
        out.emplace_back(std::string(text.substr(start, end - start)), start);
        skip_ws();
        if (k + 1 < arity) {
            if (i >= text.size() || text[i] != ',')
                throw ParseError("expected ',' (vector needs " + std::to_string(arity) +
                                     " components)",
                                 i);
            ++i;
        }
    }
    skip_ws();
    if (i >= text.size() || text[i] != ')')
        throw ParseError("expected ')' closing a vector literal", i);
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters after vector literal", i);
    return out;
}

}  // namespace detail
}  // namespace basis4
