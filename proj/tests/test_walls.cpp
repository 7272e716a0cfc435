#include "cubicwalls/walls.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cubicwalls;

namespace {

const TruncatedClass v2_prime{3, 0, -1};
const TruncatedClass f_l{3, -1, Rational(-1, 2)};
const auto w0 = WallDescriptor::semicircle(Rational(-5, 6), Rational(1, 36));

}  // namespace

TEST_CASE("wall between two classes") {
    CHECK(wall_between(v2_prime, TruncatedClass(1, -1, Rational(1, 2))) == w0);
    CHECK(wall_between(v2_prime, TruncatedClass(-2, 2, -1)) == w0);
    CHECK(wall_between(v2_prime, Integer(2) * v2_prime).kind() == WallDescriptor::Kind::coincident);
    CHECK(wall_between(v2_prime, TruncatedClass(1, 0, 0)) == WallDescriptor::vertical(0));
    CHECK(wall_between(v2_prime, TruncatedClass(0, 0, 1)) == WallDescriptor::vertical(0));
    // Torsion classes of the form (0, 1, s) never give the vertical wall.
    for (int twice_s = -10; twice_s <= 10; ++twice_s)
        CHECK(wall_between(v2_prime, TruncatedClass(0, 1, Rational(twice_s, 2))).kind() !=
              WallDescriptor::Kind::vertical);
    // Equal ch_1^beta: the slopes only agree where both are infinite.
    CHECK(wall_between(TruncatedClass(1, 0, 0), TruncatedClass(1, 0, 1)) == WallDescriptor::vertical(0));
    CHECK(wall_between(TruncatedClass(0, 0, 1), TruncatedClass(0, 0, 2)).kind() == WallDescriptor::Kind::coincident);
    CHECK(wall_between(TruncatedClass(0, 1, 0), TruncatedClass(0, 1, 1)).kind() == WallDescriptor::Kind::empty);
    CHECK_THROWS_AS(wall_between(TruncatedClass(), v2_prime), Error);
    CHECK(to_string(w0) == "semicircle(center = -5/6, radius_sq = 1/36)");
    CHECK(w0.top() == TiltPoint(Rational(-5, 6), Rational(1, 36)));
    CHECK(WallDescriptor::semicircle(0, 0).kind() == WallDescriptor::Kind::empty);
}

TEST_CASE("straight walls and accumulation points") {
    CHECK(straight_wall(v2_prime) == Rational(0));
    CHECK(straight_wall(f_l) == Rational(-1, 3));
    CHECK_FALSE(straight_wall(TruncatedClass(0, 1, 0)).has_value());

    auto acc = accumulation_points(v2_prime);
    REQUIRE(acc.size() == 2);
    CHECK(acc[0] == QuadraticSurd(0, Rational(-1, 3), 6));
    CHECK(acc[1] == QuadraticSurd(0, Rational(1, 3), 6));
    CHECK(to_string(acc[0]) == "-sqrt(6)/3");

    auto acc_f = accumulation_points(f_l);
    REQUIRE(acc_f.size() == 2);
    CHECK(acc_f[0] == Rational(-1));
    CHECK(acc_f[1] == Rational(1, 3));

    auto acc_o = accumulation_points(TruncatedClass(1, 0, 0));
    REQUIRE(acc_o.size() == 2);
    CHECK(acc_o[0] == Rational(0));
    CHECK(acc_o[1] == Rational(0));

    auto acc_t = accumulation_points(TruncatedClass(0, 2, 1));
    REQUIRE(acc_t.size() == 1);
    CHECK(acc_t[0] == Rational(1, 2));
    CHECK_THROWS_AS(accumulation_points(TruncatedClass(0, 0, 1)), Error);
    CHECK_THROWS_AS(accumulation_points(TruncatedClass(1, 0, 1)), Error);
}

TEST_CASE("intersection with vertical lines") {
    CHECK(intersect_vertical(w0, -1).kind == VerticalIntersection::Kind::none);
    auto top = intersect_vertical(w0, Rational(-5, 6));
    CHECK(top.kind == VerticalIntersection::Kind::point);
    CHECK(top.alpha_sq == Rational(1, 36));
    CHECK(intersect_vertical(w0, Rational(-3, 4)).alpha_sq == Rational(1, 36) - Rational(1, 144));
    CHECK(intersect_vertical(WallDescriptor::empty(), 0).kind == VerticalIntersection::Kind::none);
    CHECK(intersect_vertical(WallDescriptor::vertical(2), 2).kind == VerticalIntersection::Kind::whole_line);
    CHECK(intersect_vertical(WallDescriptor::vertical(2), 1).kind == VerticalIntersection::Kind::none);
}

TEST_CASE("nesting of walls") {
    CHECK(is_nested(w0, wall_between(v2_prime, TruncatedClass(-2, 2, -1))).relation == NestingRelation::equal);
    auto small = WallDescriptor::semicircle(Rational(-5, 6), Rational(1, 64));
    CHECK(is_nested(small, w0).relation == NestingRelation::inside);
    CHECK(is_nested(w0, small).relation == NestingRelation::outside);
    CHECK(is_nested(w0, WallDescriptor::semicircle(Rational(-1, 2), Rational(1, 16))).relation ==
          NestingRelation::crossing);
    CHECK(is_nested(w0, WallDescriptor::semicircle(1, Rational(1, 16))).relation == NestingRelation::disjoint);
    auto tangent = is_nested(WallDescriptor::semicircle(Rational(-11, 12), Rational(1, 144)), w0);
    CHECK(tangent.relation == NestingRelation::inside);
    CHECK(tangent.tangent);
    CHECK_THROWS_AS(is_nested(w0, WallDescriptor::vertical(0)), Error);
}

TEST_CASE("wall symmetry, complement symmetry and points on the wall") {
    oracle::RandomRationals rng(41);
    for (int i = 0; i < 400; ++i) {
        auto w = rng.object_class(6), u = rng.object_class(6);
        if (w.is_zero() || u.is_zero() || (w - u).is_zero()) continue;
        auto wall = wall_between(w, u);
        CHECK(wall == wall_between(u, w));
        if (wall.kind() != WallDescriptor::Kind::coincident)
            CHECK(wall == wall_between(w, w - u));
        if (wall.is_semicircle()) {
            for (Rational t : {Rational(0), Rational(1, 3), Rational(-2, 7)}) {
                Rational a2 = wall.radius_sq() - t * t;
                if (a2 <= 0) continue;
                TiltPoint p(wall.center() + t, a2);
                CHECK(wall.contains(p));
                CHECK(equal_slope_projective(p, w, u));
                CHECK_FALSE(equal_slope_projective(TiltPoint(p.beta(), a2 * 2), w, u));
            }
        } else if (wall.kind() == WallDescriptor::Kind::vertical) {
            CHECK(equal_slope_projective(TiltPoint(wall.beta(), Rational(5, 7)), w, u));
        }
    }
}

TEST_CASE("numerical walls of a fixed class form a nested pencil") {
    oracle::RandomRationals rng(8);
    for (const auto& w : {v2_prime, f_l}) {
        auto acc = accumulation_points(w);
        Rational straight = *straight_wall(w);
        std::vector<WallDescriptor> walls;
        for (int i = 0; i < 300; ++i) {
            auto u = rng.object_class(8);
            if (u.is_zero()) continue;
            auto wall = wall_between(w, u);
            if (!wall.is_semicircle()) continue;
            // radius^2 = (center - b1)(center - b2), centers outside [b1, b2]
            Rational c = wall.center();
            CHECK(wall.radius_sq() == c * c - 2 * c * Rational(w.c()) / Rational(w.r()) + 2 * w.s() / Rational(w.r()));
            CHECK(((c < straight && QuadraticSurd(c) < acc[0]) || (c > straight && QuadraticSurd(c) > acc[1])));
            walls.push_back(wall);
        }
        REQUIRE(walls.size() > 50);
        for (std::size_t i = 0; i < walls.size(); ++i)
            for (std::size_t j = i + 1; j < walls.size(); ++j) {
                auto rel = is_nested(walls[i], walls[j]).relation;
                CHECK(rel != NestingRelation::crossing);
                bool same_side = (walls[i].center() < straight) == (walls[j].center() < straight);
                CHECK((rel == NestingRelation::disjoint) == !same_side);
            }
    }
}
