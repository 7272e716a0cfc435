#include "cubicwalls/destab.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>

namespace cubicwalls {

namespace {

Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

void require_positive_discriminant(const TruncatedClass& e) {
    if (reduced_discriminant(e) <= 0)
        throw Error("UnboundedRegion", "enumeration needs Delta(E) > 0, got class " + to_string(e));
}

void sort_candidates(std::vector<DestabCandidate>& out) {
    std::sort(out.begin(), out.end(),
              [](const DestabCandidate& a, const DestabCandidate& b) { return a.sub < b.sub; });
}

// Splits [-bound, bound] into `jobs` contiguous ranges and concatenates results.
template <typename Scan>
std::vector<DestabCandidate> scan_r_range(const Integer& bound, unsigned jobs, Scan scan) {
    jobs = std::max(1u, jobs);
    const Integer total = 2 * bound + 1;
    if (jobs == 1 || total < jobs) return scan(-bound, bound);
    std::vector<std::future<std::vector<DestabCandidate>>> parts;
    Integer lo = -bound;
    for (unsigned j = 0; j < jobs; ++j) {
        Integer size = total / jobs + (Integer(j) < total % jobs ? 1 : 0);
        Integer hi = lo + size - 1;
        parts.push_back(std::async(std::launch::async, scan, lo, hi));
        lo = hi + 1;
    }
    std::vector<DestabCandidate> out;
    for (auto& f : parts) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

SearchBox box_for(const Integer& r_bound, const Rational& beta, const Rational& t_max) {
    // c - beta r lies in (0, t_max)
    Rational lo = -abs(beta) * r_bound;
    Rational hi = abs(beta) * r_bound + t_max;
    return {r_bound, floor(lo), ceil(hi)};
}

}  // namespace

bool satisfies_wall_system(const TiltPoint& p, const TruncatedClass& e, const TruncatedClass& u) {
    const TruncatedClass g = e - u;
    if (!u.is_object_class() || !g.is_object_class()) return false;
    if (!equal_slope_projective(p, e, u)) return false;
    const Rational te = ch1_twisted(e, p.beta());
    const Rational tu = ch1_twisted(u, p.beta());
    const Rational tg = ch1_twisted(g, p.beta());
    if (!(tu > 0 && tg > 0 && tu < te && tg < te)) return false;
    const Rational de = reduced_discriminant(e);
    const Rational du = reduced_discriminant(u);
    const Rational dg = reduced_discriminant(g);
    return du >= 0 && dg >= 0 && du < de && dg < de;
}

Enumeration enumerate_at(const TiltPoint& p, const TruncatedClass& e, const EnumerationOptions& opts) {
    require_positive_discriminant(e);
    const Rational& beta = p.beta();
    const Rational& a = p.alpha_sq();
    const Rational t_e = ch1_twisted(e, beta);
    if (t_e <= 0) return {};
    const Rational nu_e = nu_numerator(p, e) / t_e;
    // With s eliminated, Delta(u)/d^2 = t^2 - 2 nu_E r t - A r^2, which is
    // negative unless |r| <= t (|nu_E| + sqrt(nu_E^2 + A)) / A.
    const Integer r_bound = ceil(t_e * (abs(nu_e) + sqrt_upper(nu_e * nu_e + a)) / a);

    auto scan = [&](Integer r_lo, Integer r_hi) {
        std::vector<DestabCandidate> out;
        for (Integer r = r_lo; r <= r_hi; ++r) {
            const Rational br = beta * r;
            for (Integer c = floor(br) + 1; Rational(c) < br + t_e; ++c) {
                const Rational t = Rational(c) - br;
                const Rational sigma = nu_e * t + a * r / 2;
                const Rational s = sigma + beta * c - beta * beta * r / 2;
                if (!is_integer(2 * s)) continue;
                TruncatedClass u(r, c, s);
                if (!satisfies_wall_system(p, e, u)) continue;
                out.push_back({u, e - u, wall_between(e, u), p});
            }
        }
        return out;
    };

    Enumeration result{scan_r_range(r_bound, opts.jobs, scan), box_for(r_bound, beta, t_e)};
    sort_candidates(result.candidates);
    return result;
}

Enumeration walls_crossing_vertical(const TruncatedClass& e, const Rational& beta0, const EnumerationOptions& opts) {
    require_positive_discriminant(e);
    // Coordinates twisted by beta0: u -> (r, t, sigma), E -> (R, T, S).
    const Rational big_r = e.r();
    const Rational big_t = ch1_twisted(e, beta0);
    const Rational big_s = ch2_twisted(e, beta0);
    const Rational delta = reduced_discriminant(e);
    if (big_t <= 0) return {};

    // 2 r sigma and 2 (R - r)(S - sigma) both lie in (-delta, T^2].
    const Rational m = max_of(delta, big_t * big_t);
    Integer r_bound;
    if (big_s != 0) {
        // R sigma + S r = K with |K| <= |R S| + m, and 2 r sigma = P, so
        // S r^2 - K r + R P / 2 = 0.
        const Rational k = abs(big_r * big_s) + m;
        const Rational disc = k * k + 2 * abs(big_r * big_s) * m;
        r_bound = ceil((k + sqrt_upper(disc)) / (2 * abs(big_s)));
    } else if (big_r != 0) {
        // sigma lies in Z / (2 q^2) and must be nonzero for alpha^2 > 0.
        const Integer q = denominator(beta0);
        r_bound = ceil(m * q * q);
    } else {
        throw Error("UnboundedRegion", "degenerate class " + to_string(e) + " at beta0 = " + to_string(beta0));
    }

    auto scan = [&](Integer r_lo, Integer r_hi) {
        std::vector<DestabCandidate> out;
        for (Integer r = r_lo; r <= r_hi; ++r) {
            const Rational br = beta0 * r;
            const Rational rr = r;
            const Rational rest_r = big_r - rr;
            for (Integer c = floor(br) + 1; Rational(c) < br + big_t; ++c) {
                const Rational t = Rational(c) - br;
                const Rational tt = big_t - t;
                if (Rational(big_t * rr - t * big_r) == 0) continue;
                // Closed interval for sigma from both discriminant windows.
                bool bounded = false;
                Rational lo, hi;
                auto clip = [&](const Rational& x, const Rational& y) {
                    Rational a = x < y ? x : y;
                    Rational b = x < y ? y : x;
                    if (!bounded || a > lo) lo = a;
                    if (!bounded || b < hi) hi = b;
                    bounded = true;
                };
                if (rr != 0) {
                    // 2 r sigma in (t^2 - delta, t^2]
                    clip((t * t - delta) / (2 * rr), t * t / (2 * rr));
                } else if (!(t * t < delta)) {
                    continue;
                }
                if (rest_r != 0) {
                    // 2 (R - r)(S - sigma) in ((T - t)^2 - delta, (T - t)^2]
                    clip(big_s - (tt * tt - delta) / (2 * rest_r), big_s - tt * tt / (2 * rest_r));
                } else if (!(tt * tt < delta)) {
                    continue;
                }
                if (!bounded || lo > hi) continue;
                const Rational shift = beta0 * c - beta0 * beta0 * rr / 2;
                const Integer s2_lo = ceil(2 * (lo + shift));
                const Integer s2_hi = floor(2 * (hi + shift));
                for (Integer s2 = s2_lo; s2 <= s2_hi; ++s2) {
                    TruncatedClass u(r, c, Rational(s2, 2));
                    if (!u.is_object_class()) continue;
                    const Rational sigma = ch2_twisted(u, beta0);
                    const Rational a = 2 * (big_t * sigma - t * big_s) / (big_t * rr - t * big_r);
                    if (a <= 0) continue;
                    TiltPoint p(beta0, a);
                    if (!satisfies_wall_system(p, e, u)) continue;
                    WallDescriptor wall = wall_between(e, u);
                    auto hit = intersect_vertical(wall, beta0);
                    if (hit.kind != VerticalIntersection::Kind::point || hit.alpha_sq != a)
                        throw std::logic_error("wall intersection disagrees with the slope equation");
                    out.push_back({u, e - u, wall, p});
                }
            }
        }
        return out;
    };

    Enumeration result{scan_r_range(r_bound, opts.jobs, scan), box_for(r_bound, beta0, big_t)};
    sort_candidates(result.candidates);
    return result;
}

namespace {

// Rounds x outward to a multiple of 1/12.
Rational round_outward(const QuadraticSurd& x, bool down) {
    const Integer den = 12;
    Integer k(static_cast<long long>(to_double(x) * 12));
    // Exact correction of the floating estimate.
    while (QuadraticSurd(Rational(k, den)) > x) --k;
    while (QuadraticSurd(Rational(k + 1, den)) <= x) ++k;
    if (!down && QuadraticSurd(Rational(k, den)) != x) ++k;
    return Rational(k, den);
}

struct LevelResult {
    WallDescriptor wall;
    std::vector<TruncatedClass> classes;
    bool operator==(const LevelResult&) const = default;
};

}  // namespace

LargestWall largest_wall(const TruncatedClass& e, Side side, const EnumerationOptions& opts) {
    if (reduced_discriminant(e) <= 0) throw Error("NoWall", "no walls for a class with Delta <= 0");
    auto straight = straight_wall(e);
    if (!straight) throw Error("DegenerateClass", "rank zero class has no straight wall");
    const auto roots = accumulation_points(e);
    const bool negative = side == Side::beta_negative;
    const Rational start = round_outward(negative ? roots.front() : roots.back(), negative);
    // Past the straight wall E itself leaves the heart and E[1] enters.
    const TruncatedClass target = ch1_twisted(e, start) < 0 ? -e : e;

    std::map<Rational, std::vector<DestabCandidate>> sweeps;
    LargestWall result{WallDescriptor::empty(), {}, {}};
    std::vector<LevelResult> history;
    const int max_level = 7;
    for (int level = 0; level <= max_level; ++level) {
        const Integer steps = Integer(1) << level;
        for (Integer k = 0; k < steps; ++k) {
            Rational beta0 = start + (*straight - start) * Rational(k, steps);
            if (sweeps.count(beta0)) continue;
            sweeps.emplace(beta0, walls_crossing_vertical(target, beta0, opts).candidates);
            result.scanned.push_back(beta0);
        }
        std::optional<WallDescriptor> best;
        for (const auto& [beta0, cands] : sweeps)
            for (const auto& cand : cands) {
                if (!cand.wall.is_semicircle()) continue;
                if (!best || is_nested(cand.wall, *best).relation == NestingRelation::outside) best = cand.wall;
            }
        if (!best) {
            history.push_back({WallDescriptor::empty(), {}});
        } else {
            std::vector<TruncatedClass> classes;
            for (const auto& [beta0, cands] : sweeps)
                for (const auto& cand : cands)
                    if (cand.wall == *best) classes.push_back(cand.sub);
            std::sort(classes.begin(), classes.end());
            classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
            history.push_back({*best, classes});
        }
        const auto n = history.size();
        if (n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3]) break;
    }

    const LevelResult& last = history.back();
    if (!last.wall.is_semicircle()) throw Error("NoWall", "no candidate wall on this side of " + to_string(e));
    for (const auto& [beta0, cands] : sweeps)
        for (const auto& cand : cands) {
            if (!cand.wall.is_semicircle()) continue;
            auto rel = is_nested(cand.wall, last.wall).relation;
            if (rel != NestingRelation::inside && rel != NestingRelation::equal)
                throw Error("InconsistentNesting", "wall " + to_string(cand.wall) + " is not inside " +
                                                       to_string(last.wall));
        }
    result.wall = last.wall;
    for (const auto& cand : enumerate_at(last.wall.top(), target, opts).candidates)
        if (cand.wall == last.wall) result.witnesses.push_back(cand.sub);
    std::sort(result.scanned.begin(), result.scanned.end());
    return result;
}

std::strong_ordering slope_inequality_on_wall(const TiltPoint& p, const WallDescriptor& wall,
                                              const TruncatedClass& a, const TruncatedClass& b) {
    if (!wall.contains(p)) throw Error("PointNotOnWall", "point is not on " + to_string(wall));
    return nu(p, a) <=> nu(p, b);
}

}  // namespace cubicwalls
