#pragma once

#include "cubicwalls/surd.hpp"
#include "cubicwalls/tilt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubicwalls {

// Solution set of nu(w) = nu(u) in the (beta, alpha^2) half-plane.
class WallDescriptor {
public:
    enum class Kind { vertical, semicircle, coincident, empty };

    static WallDescriptor vertical(Rational beta);
    static WallDescriptor semicircle(Rational center, Rational radius_sq);
    static WallDescriptor coincident();
    static WallDescriptor empty();

    Kind kind() const noexcept { return kind_; }
    bool is_semicircle() const noexcept { return kind_ == Kind::semicircle; }
    // beta for vertical walls, center for semicircles.
    const Rational& beta() const noexcept { return value_; }
    const Rational& center() const noexcept { return value_; }
    const Rational& radius_sq() const noexcept { return radius_sq_; }

    // The point of the semicircle with the largest alpha.
    TiltPoint top() const;
    bool contains(const TiltPoint& p) const;

    bool operator==(const WallDescriptor&) const = default;

private:
    WallDescriptor(Kind kind, Rational value, Rational radius_sq)
        : kind_(kind), value_(std::move(value)), radius_sq_(std::move(radius_sq)) {}
    Kind kind_;
    Rational value_;
    Rational radius_sq_;
};

std::string to_string(WallDescriptor::Kind kind);
std::string to_string(const WallDescriptor& wall);

WallDescriptor wall_between(const TruncatedClass& w, const TruncatedClass& u);
std::optional<Rational> straight_wall(const TruncatedClass& w);
// Roots of s - beta c + beta^2 r / 2, ascending. A single root when r = 0.
std::vector<QuadraticSurd> accumulation_points(const TruncatedClass& w);

struct VerticalIntersection {
    enum class Kind { none, point, whole_line };
    Kind kind = Kind::none;
    Rational alpha_sq;
};

VerticalIntersection intersect_vertical(const WallDescriptor& wall, const Rational& beta0);

enum class NestingRelation { inside, outside, equal, crossing, disjoint };
std::string to_string(NestingRelation r);

struct Nesting {
    // Position of the first wall relative to the second.
    NestingRelation relation;
    bool tangent = false;
};

Nesting is_nested(const WallDescriptor& w1, const WallDescriptor& w2);

}  // namespace cubicwalls
