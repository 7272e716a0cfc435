#pragma once

#include "cubicwalls/rational.hpp"

#include <compare>
#include <string>

namespace cubicwalls {

// a + b sqrt(D) with D a squarefree positive integer; D = 1 forces b = 0.
class QuadraticSurd {
public:
    QuadraticSurd(Rational a = 0) : a_(std::move(a)), b_(0), radicand_(1) {}
    QuadraticSurd(Rational a, Rational b, const Integer& radicand);

    // sqrt(q) for q >= 0.
    static QuadraticSurd sqrt(const Rational& q);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_coefficient() const noexcept { return b_; }
    const Integer& radicand() const noexcept { return radicand_; }
    bool is_rational() const noexcept { return b_ == 0; }

    QuadraticSurd operator-() const { return {-a_, -b_, radicand_}; }

    bool operator==(const QuadraticSurd& other) const;
    std::strong_ordering operator<=>(const QuadraticSurd& other) const;
    std::strong_ordering operator<=>(const Rational& q) const { return *this <=> QuadraticSurd(q); }
    bool operator==(const Rational& q) const { return *this == QuadraticSurd(q); }

private:
    Rational a_;
    Rational b_;
    Integer radicand_;
};

// Largest square dividing n (n > 0) is k^2 with n = k^2 * rest.
void split_square(const Integer& n, Integer& k, Integer& rest);
// Sign of p + q sqrt(m) with m >= 0.
int surd_sign(const Rational& p, const Rational& q, const Integer& m);

std::string to_string(const QuadraticSurd& x);
double to_double(const QuadraticSurd& x);

}  // namespace cubicwalls
