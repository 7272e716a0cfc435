#include "cubicwalls/walls.hpp"

namespace cubicwalls {

WallDescriptor WallDescriptor::vertical(Rational beta) { return {Kind::vertical, std::move(beta), 0}; }

WallDescriptor WallDescriptor::semicircle(Rational center, Rational radius_sq) {
    if (radius_sq <= 0) return empty();
    return {Kind::semicircle, std::move(center), std::move(radius_sq)};
}

WallDescriptor WallDescriptor::coincident() { return {Kind::coincident, 0, 0}; }
WallDescriptor WallDescriptor::empty() { return {Kind::empty, 0, 0}; }

TiltPoint WallDescriptor::top() const {
    if (!is_semicircle()) throw Error("NotSemicircle", "only semicircular walls have a top point");
    return {value_, radius_sq_};
}

bool WallDescriptor::contains(const TiltPoint& p) const {
    switch (kind_) {
        case Kind::vertical: return p.beta() == value_;
        case Kind::semicircle: {
            Rational d = p.beta() - value_;
            return p.alpha_sq() + d * d == radius_sq_;
        }
        case Kind::coincident: return true;
        case Kind::empty: return false;
    }
    return false;
}

std::string to_string(WallDescriptor::Kind kind) {
    switch (kind) {
        case WallDescriptor::Kind::vertical: return "vertical";
        case WallDescriptor::Kind::semicircle: return "semicircle";
        case WallDescriptor::Kind::coincident: return "coincident";
        case WallDescriptor::Kind::empty: return "empty";
    }
    return "empty";
}

std::string to_string(const WallDescriptor& wall) {
    switch (wall.kind()) {
        case WallDescriptor::Kind::vertical: return "vertical(beta = " + to_string(wall.beta()) + ")";
        case WallDescriptor::Kind::semicircle:
            return "semicircle(center = " + to_string(wall.center()) +
                   ", radius_sq = " + to_string(wall.radius_sq()) + ")";
        default: return to_string(wall.kind());
    }
}

WallDescriptor wall_between(const TruncatedClass& w, const TruncatedClass& u) {
    if (w.is_zero() || u.is_zero()) throw Error("ZeroClass", "walls are defined for nonzero classes");
    // N_w D_u - N_u D_w = Z - beta Y - (X/2)(beta^2 + alpha^2)
    const Rational x = Rational(w.r() * u.c() - u.r() * w.c());
    const Rational y = w.s() * u.r() - u.s() * w.r();
    const Rational z = w.s() * u.c() - u.s() * w.c();
    if (x == 0) {
        if (y != 0) return WallDescriptor::vertical(z / y);
        return z == 0 ? WallDescriptor::coincident() : WallDescriptor::empty();
    }
    const Rational center = -y / x;
    return WallDescriptor::semicircle(center, 2 * z / x + center * center);
}

std::optional<Rational> straight_wall(const TruncatedClass& w) {
    if (w.r() == 0) return std::nullopt;
    return Rational(w.c(), w.r());
}

std::vector<QuadraticSurd> accumulation_points(const TruncatedClass& w) {
    if (w.r() == 0) {
        if (w.c() == 0) throw Error("DegenerateClass", "ch_2^beta is constant for " + to_string(w));
        return {QuadraticSurd(w.s() / w.c())};
    }
    // beta = (c +- sqrt(c^2 - 2rs)) / r
    const Rational disc = reduced_discriminant(w);
    if (disc < 0)
        throw Error("ComplexAccumulation", "ch_2^beta has no real roots for " + to_string(w));
    const Rational r = w.r();
    QuadraticSurd root = QuadraticSurd::sqrt(disc);
    QuadraticSurd a(Rational(w.c()) / r, root.surd_coefficient() / r, root.radicand());
    QuadraticSurd b(Rational(w.c()) / r, -root.surd_coefficient() / r, root.radicand());
    if (root.is_rational()) {
        a = QuadraticSurd(Rational(w.c() + root.rational_part()) / r);
        b = QuadraticSurd(Rational(w.c() - root.rational_part()) / r);
    }
    if (b < a) std::swap(a, b);
    return {a, b};
}

VerticalIntersection intersect_vertical(const WallDescriptor& wall, const Rational& beta0) {
    switch (wall.kind()) {
        case WallDescriptor::Kind::semicircle: {
            Rational d = beta0 - wall.center();
            Rational a = wall.radius_sq() - d * d;
            if (a > 0) return {VerticalIntersection::Kind::point, a};
            return {};
        }
        case WallDescriptor::Kind::vertical:
            if (wall.beta() == beta0) return {VerticalIntersection::Kind::whole_line, 0};
            return {};
        case WallDescriptor::Kind::coincident: return {VerticalIntersection::Kind::whole_line, 0};
        case WallDescriptor::Kind::empty: return {};
    }
    return {};
}

std::string to_string(NestingRelation r) {
    switch (r) {
        case NestingRelation::inside: return "inside";
        case NestingRelation::outside: return "outside";
        case NestingRelation::equal: return "equal";
        case NestingRelation::crossing: return "crossing";
        case NestingRelation::disjoint: return "disjoint";
    }
    return "crossing";
}

Nesting is_nested(const WallDescriptor& w1, const WallDescriptor& w2) {
    if (!w1.is_semicircle() || !w2.is_semicircle())
        throw Error("IncomparableWalls", "nesting compares two semicircular walls");
    if (w1 == w2) return {NestingRelation::equal, false};
    const Rational dc = w1.center() - w2.center();
    const Rational d2 = dc * dc;
    const Rational& a = w1.radius_sq();
    const Rational& b = w2.radius_sq();
    // Circles cross iff |R1 - R2| < dist < R1 + R2; with S = R1^2 + R2^2 - dist^2
    // this reads S^2 < 4 R1^2 R2^2.
    const Rational s = a + b - d2;
    const Rational lhs = s * s;
    const Rational rhs = 4 * a * b;
    if (lhs < rhs) return {NestingRelation::crossing, false};
    const bool tangent = lhs == rhs;
    if (s > 0 || (s == 0 && tangent)) {
        // One disc contains the other.
        return {a < b ? NestingRelation::inside : NestingRelation::outside, tangent};
    }
    return {NestingRelation::disjoint, tangent};
}

}  // namespace cubicwalls
