#pragma once

#include "cubicwalls/core.hpp"

#include <compare>
#include <string>

namespace cubicwalls {

// A point of the upper half-plane, carried as (beta, alpha^2).
class TiltPoint {
public:
    TiltPoint(Rational beta, Rational alpha_sq);
    const Rational& beta() const noexcept { return beta_; }
    const Rational& alpha_sq() const noexcept { return alpha_sq_; }
    bool operator==(const TiltPoint&) const = default;

private:
    Rational beta_;
    Rational alpha_sq_;
};

class SlopeValue {
public:
    static SlopeValue finite(Rational value) { return SlopeValue(false, std::move(value)); }
    static SlopeValue plus_infinity() { return SlopeValue(true, 0); }

    bool is_infinite() const noexcept { return infinite_; }
    // Only meaningful when finite.
    const Rational& value() const noexcept { return value_; }

    bool operator==(const SlopeValue& other) const;
    std::strong_ordering operator<=>(const SlopeValue& other) const;

private:
    SlopeValue(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) {}
    bool infinite_;
    Rational value_;
};

std::string to_string(const SlopeValue& v);

// ch_1^beta / H and ch_2^beta / H^2 of a truncated class.
Rational ch1_twisted(const TruncatedClass& w, const Rational& beta);
Rational ch2_twisted(const TruncatedClass& w, const Rational& beta);
// Numerator of nu after cancelling d: ch_2^beta - alpha^2 r / 2.
Rational nu_numerator(const TiltPoint& p, const TruncatedClass& w);

SlopeValue mu(const Rational& beta, const TruncatedClass& w);
Rational discriminant(const TruncatedClass& w, const Polarization& pol = {});
// c^2 - 2rs, i.e. the discriminant divided by d^2.
Rational reduced_discriminant(const TruncatedClass& w);
SlopeValue nu(const TiltPoint& p, const TruncatedClass& w);

// N_w D_u == N_u D_w with N, D the numerator and denominator of nu.
bool equal_slope_projective(const TiltPoint& p, const TruncatedClass& w, const TruncatedClass& u);

enum class HeartMembership { yes_sheaf_part, yes_shift_part, boundary, no };
std::string to_string(HeartMembership h);
// Numerical necessary condition only.
HeartMembership in_heart_numerically(const Rational& beta, const TruncatedClass& w);

struct LargeVolumeComparison {
    // Sign of nu(w) - nu(u) for every alpha^2 > threshold.
    std::strong_ordering ordering;
    Rational threshold;
};

LargeVolumeComparison compare_large_volume(const Rational& beta, const TruncatedClass& w,
                                           const TruncatedClass& u);

}  // namespace cubicwalls
