#pragma once

#include "cubicwalls/walls.hpp"

#include <compare>
#include <vector>

namespace cubicwalls {

struct DestabCandidate {
    TruncatedClass sub;   // F
    TruncatedClass quot;  // G = E - F
    WallDescriptor wall;
    TiltPoint witness;    // where the inequality system was checked
};

// Every solution has |r| <= r_bound and c_min <= c <= c_max.
struct SearchBox {
    Integer r_bound = 0;
    Integer c_min = 0;
    Integer c_max = 0;
};

struct Enumeration {
    std::vector<DestabCandidate> candidates;
    SearchBox box;
};

struct EnumerationOptions {
    unsigned jobs = 1;
};

// The inequality system for a destabilizing sequence F -> E -> G at p:
// equal nu, 0 < ch_1^beta(F), ch_1^beta(G) < ch_1^beta(E),
// 0 <= Delta(F), Delta(G) < Delta(E), and F, G classes of objects.
bool satisfies_wall_system(const TiltPoint& p, const TruncatedClass& e, const TruncatedClass& u);

Enumeration enumerate_at(const TiltPoint& p, const TruncatedClass& e, const EnumerationOptions& opts = {});
Enumeration walls_crossing_vertical(const TruncatedClass& e, const Rational& beta0,
                                    const EnumerationOptions& opts = {});

enum class Side { beta_negative, beta_positive };

struct LargestWall {
    WallDescriptor wall;
    std::vector<TruncatedClass> witnesses;
    std::vector<Rational> scanned;  // every beta0 swept
};

// On the side where ch_1^beta(E) < 0 the witnesses are subobjects of E[1].
LargestWall largest_wall(const TruncatedClass& e, Side side, const EnumerationOptions& opts = {});

std::strong_ordering slope_inequality_on_wall(const TiltPoint& p, const WallDescriptor& wall,
                                              const TruncatedClass& a, const TruncatedClass& b);

}  // namespace cubicwalls
