#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicwalls {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Base of every domain error; `kind` is the short machine-readable name.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("ParseError", message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);
Rational abs(const Rational& q);

// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);
// Smallest rational of the form k/den(q) with value >= sqrt(q), for q >= 0.
Rational sqrt_upper(const Rational& q);

// "p/q" or "p"; the denominator is always positive and reduced.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts an optional sign, digits and an optional "/digits" part. `offset`
// shifts reported error positions when parsing a field of a larger string.
Rational parse_rational(std::string_view text, std::size_t offset = 0);
Integer parse_integer(std::string_view text, std::size_t offset = 0);

double to_double(const Rational& q);

}  // namespace cubicwalls
