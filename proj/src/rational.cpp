#include "cubicwalls/rational.hpp"

#include <cctype>

namespace cubicwalls {

Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer floor(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer f = n / d;
    if (f * d != n && n < 0) f -= 1;
    return f;
}

Integer ceil(const Rational& q) { return -floor(-q); }

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
int sign(const Integer& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative integer");
    return boost::multiprecision::sqrt(n);
}

Rational sqrt_upper(const Rational& q) {
    if (q < 0) throw std::domain_error("sqrt_upper of a negative rational");
    Integer d = denominator(q);
    Integer m = numerator(q) * d;
    Integer s = isqrt(m);
    if (s * s != m) s += 1;
    return Rational(s, d);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t i) {
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    if (text.empty()) throw ParseError("empty number", offset);
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t end = scan_digits(text, i);
    if (end == i) throw ParseError("expected digits", offset + i);
    std::string digits(text.substr(0, end));
    if (digits[0] == '+') digits.erase(0, 1);
    Integer num(digits);
    Integer den = 1;
    if (end < text.size()) {
        if (text[end] == '.') throw ParseError("decimal notation is not accepted, use p/q", offset + end);
        if (text[end] != '/') throw ParseError("unexpected character '" + std::string(1, text[end]) + "'", offset + end);
        std::size_t start = end + 1;
        std::size_t dend = scan_digits(text, start);
        if (dend == start) throw ParseError("expected denominator digits", offset + start);
        if (dend != text.size()) {
            if (text[dend] == '.') throw ParseError("decimal notation is not accepted, use p/q", offset + dend);
            throw ParseError("unexpected character '" + std::string(1, text[dend]) + "'", offset + dend);
        }
        den = Integer(std::string(text.substr(start, dend - start)));
        if (den == 0) throw ParseError("zero denominator", offset + start);
    }
    return Rational(num, den);
}

Integer parse_integer(std::string_view text, std::size_t offset) {
    Rational q = parse_rational(text, offset);
    if (!is_integer(q)) throw ParseError("expected an integer", offset);
    return numerator(q);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace cubicwalls
