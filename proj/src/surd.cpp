#include "cubicwalls/surd.hpp"

#include <cmath>

namespace cubicwalls {

void split_square(const Integer& n, Integer& k, Integer& rest) {
    if (n <= 0) throw std::domain_error("split_square needs a positive integer");
    k = 1;
    rest = n;
    for (Integer p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            k *= p;
        }
    }
}

int surd_sign(const Rational& p, const Rational& q, const Integer& m) {
    const int sp = sign(p);
    const int sq = m == 0 ? 0 : sign(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: compare p^2 with q^2 m.
    const Rational diff = p * p - q * q * m;
    return sign(diff) * sp;
}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, const Integer& radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(1) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    if (radicand == 0 || b_ == 0) {
        b_ = 0;
        return;
    }
    Integer k, rest;
    split_square(radicand, k, rest);
    if (rest == 1) {
        a_ += b_ * k;
        b_ = 0;
        return;
    }
    b_ *= k;
    radicand_ = rest;
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("square root of a negative rational");
    Integer d = denominator(q);
    return QuadraticSurd(0, Rational(1, d), numerator(q) * d);
}

bool QuadraticSurd::operator==(const QuadraticSurd& other) const {
    return a_ == other.a_ && b_ == other.b_ && radicand_ == other.radicand_;
}

std::strong_ordering QuadraticSurd::operator<=>(const QuadraticSurd& other) const {
    // Sign of (a1 - a2) + b1 sqrt(D1) - b2 sqrt(D2).
    const Rational p = a_ - other.a_;
    int s;
    if (b_ == 0 || other.b_ == 0 || radicand_ == other.radicand_) {
        const Integer m = b_ != 0 ? radicand_ : other.radicand_;
        s = surd_sign(p, b_ - other.b_, m);
    } else {
        // x = b1 sqrt(D1) - b2 sqrt(D2) is nonzero since D1 != D2 are squarefree.
        const int s1 = sign(b_);
        int sx = s1;
        if (s1 != -sign(other.b_)) {
            const Rational d = b_ * b_ * radicand_ - other.b_ * other.b_ * other.radicand_;
            sx = sign(d) * s1;
        }
        const int sp = sign(p);
        if (sp == 0 || sp == sx) {
            s = sx;
        } else {
            // p^2 - x^2 = p^2 - b1^2 D1 - b2^2 D2 + 2 b1 b2 sqrt(D1 D2)
            const Rational u = p * p - b_ * b_ * radicand_ - other.b_ * other.b_ * other.radicand_;
            const Rational v = 2 * b_ * other.b_;
            s = surd_sign(u, v, radicand_ * other.radicand_) * sp;
        }
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const QuadraticSurd& x) {
    if (x.is_rational()) return to_string(x.rational_part());
    std::string root = "sqrt(" + to_string(x.radicand()) + ")";
    const Rational& b = x.surd_coefficient();
    Rational mag = abs(b);
    std::string term;
    if (numerator(mag) != 1) term = to_string(numerator(mag)) + "*";
    term += root;
    if (denominator(mag) != 1) term += "/" + to_string(denominator(mag));
    if (x.rational_part() == 0) return (b < 0 ? "-" : "") + term;
    return to_string(x.rational_part()) + (b < 0 ? " - " : " + ") + term;
}

double to_double(const QuadraticSurd& x) {
    return to_double(x.rational_part()) +
           to_double(x.surd_coefficient()) * std::sqrt(x.radicand().convert_to<double>());
}

}  // namespace cubicwalls
