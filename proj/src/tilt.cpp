#include "cubicwalls/tilt.hpp"

namespace cubicwalls {

namespace {

std::strong_ordering order_of(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

TiltPoint::TiltPoint(Rational beta, Rational alpha_sq) : beta_(std::move(beta)), alpha_sq_(std::move(alpha_sq)) {
    if (alpha_sq_ <= 0) throw Error("InvalidPoint", "alpha^2 must be positive, got " + to_string(alpha_sq_));
}

bool SlopeValue::operator==(const SlopeValue& other) const {
    if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
    return value_ == other.value_;
}

std::strong_ordering SlopeValue::operator<=>(const SlopeValue& other) const {
    if (infinite_ && other.infinite_) return std::strong_ordering::equal;
    if (infinite_) return std::strong_ordering::greater;
    if (other.infinite_) return std::strong_ordering::less;
    return order_of(sign(Rational(value_ - other.value_)));
}

std::string to_string(const SlopeValue& v) { return v.is_infinite() ? "inf" : to_string(v.value()); }

Rational ch1_twisted(const TruncatedClass& w, const Rational& beta) { return Rational(w.c()) - beta * w.r(); }

Rational ch2_twisted(const TruncatedClass& w, const Rational& beta) {
    return w.s() - beta * w.c() + beta * beta * w.r() / 2;
}

Rational nu_numerator(const TiltPoint& p, const TruncatedClass& w) {
    return ch2_twisted(w, p.beta()) - p.alpha_sq() * w.r() / 2;
}

SlopeValue mu(const Rational& beta, const TruncatedClass& w) {
    if (w.r() == 0) return SlopeValue::plus_infinity();
    return SlopeValue::finite(ch1_twisted(w, beta) / w.r());
}

Rational reduced_discriminant(const TruncatedClass& w) {
    return Rational(w.c() * w.c()) - 2 * w.s() * w.r();
}

Rational discriminant(const TruncatedClass& w, const Polarization& pol) {
    return Rational(pol.degree() * pol.degree()) * reduced_discriminant(w);
}

SlopeValue nu(const TiltPoint& p, const TruncatedClass& w) {
    Rational den = ch1_twisted(w, p.beta());
    if (den == 0) return SlopeValue::plus_infinity();
    return SlopeValue::finite(nu_numerator(p, w) / den);
}

bool equal_slope_projective(const TiltPoint& p, const TruncatedClass& w, const TruncatedClass& u) {
    return nu_numerator(p, w) * ch1_twisted(u, p.beta()) == nu_numerator(p, u) * ch1_twisted(w, p.beta());
}

std::string to_string(HeartMembership h) {
    switch (h) {
        case HeartMembership::yes_sheaf_part: return "yes_sheaf_part";
        case HeartMembership::yes_shift_part: return "yes_shift_part";
        case HeartMembership::boundary: return "boundary";
        case HeartMembership::no: return "no";
    }
    return "no";
}

HeartMembership in_heart_numerically(const Rational& beta, const TruncatedClass& w) {
    Rational t = ch1_twisted(w, beta);
    if (t == 0) return HeartMembership::boundary;
    if (t < 0) return HeartMembership::no;
    return w.r() >= 0 ? HeartMembership::yes_sheaf_part : HeartMembership::yes_shift_part;
}

LargeVolumeComparison compare_large_volume(const Rational& beta, const TruncatedClass& w,
                                           const TruncatedClass& u) {
    const Rational dw = ch1_twisted(w, beta);
    const Rational du = ch1_twisted(u, beta);
    if (dw == 0 && du == 0) return {std::strong_ordering::equal, 0};
    if (dw == 0) return {std::strong_ordering::greater, 0};
    if (du == 0) return {std::strong_ordering::less, 0};
    // (nu_w - nu_u) D_w D_u = a + b alpha^2
    const Rational a = ch2_twisted(w, beta) * du - ch2_twisted(u, beta) * dw;
    const Rational b = -(Rational(w.r()) * du - Rational(u.r()) * dw) / 2;
    const int sd = sign(Rational(dw * du));
    if (b == 0) return {order_of(sign(a) * sd), 0};
    Rational root = -a / b;
    return {order_of(sign(b) * sd), root > 0 ? root : Rational(0)};
}

}  // namespace cubicwalls
