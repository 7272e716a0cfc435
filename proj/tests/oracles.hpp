#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call into the library's numerical routines.

#include "cubicwalls/core.hpp"
#include "cubicwalls/rational.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using cubicwalls::Integer;
using cubicwalls::Rational;
using cubicwalls::TruncatedClass;
using Series = std::vector<Rational>;

inline Series series_mul(const Series& a, const Series& b, std::size_t n) {
    Series out(n + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= n; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Series series_inverse(const Series& a, std::size_t n) {
    Series out(n + 1, Rational(0));
    out[0] = 1 / a[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * out[k - j];
        out[k] = -acc / a[0];
    }
    return out;
}

inline Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Q(x) = x / (1 - e^{-x}) through inverting (1 - e^{-x}) / x.
inline Series todd_generator(std::size_t n) {
    Series a(n + 1);
    for (std::size_t k = 0; k <= n; ++k) a[k] = Rational((k % 2) ? -1 : 1) / factorial(static_cast<int>(k) + 1);
    return series_inverse(a, n);
}

// td of a degree-d hypersurface in P^{n+1}: Q(H)^{n+2} / Q(dH).
inline Series hypersurface_todd(int n, int d) {
    auto q = todd_generator(n);
    Series num{1};
    for (int i = 0; i < n + 2; ++i) num = series_mul(num, q, n);
    Series qd = q;
    Rational scale = 1;
    for (auto& c : qd) {
        c *= scale;
        scale *= d;
    }
    return series_mul(num, series_inverse(qd, n), n);
}

// Binomial coefficient as the polynomial n(n-1)...(n-k+1)/k!.
inline Rational binomial(const Rational& n, int k) {
    Rational out = 1;
    for (int i = 0; i < k; ++i) out *= (n - i);
    return out / factorial(k);
}

inline Rational ch1b(const TruncatedClass& w, const Rational& beta) { return Rational(w.c()) - beta * Rational(w.r()); }

inline Rational ch2b(const TruncatedClass& w, const Rational& beta) {
    return w.s() - beta * Rational(w.c()) + beta * beta * Rational(w.r()) / 2;
}

inline Rational delta(const TruncatedClass& w) {
    return Rational(w.c() * w.c()) - 2 * Rational(w.r()) * w.s();
}

// c_1^2 / 2 - ch_2 must be an integer multiple of H^2.
inline bool object_class(const TruncatedClass& w) {
    Rational c2 = Rational(w.c() * w.c()) / 2 - w.s();
    return cubicwalls::is_integer(c2);
}

// The destabilizing-sequence system at (beta, alpha^2), checked directly.
inline bool destabilizes(const Rational& beta, const Rational& a2, const TruncatedClass& e, const TruncatedClass& u) {
    TruncatedClass g = e - u;
    Rational de = ch1b(e, beta), du = ch1b(u, beta), dg = ch1b(g, beta);
    if (!(du > 0 && dg > 0 && du < de && dg < de)) return false;
    Rational ne = ch2b(e, beta) - a2 * Rational(e.r()) / 2;
    Rational nu = ch2b(u, beta) - a2 * Rational(u.r()) / 2;
    if (ne * du != nu * de) return false;
    Rational big = delta(e);
    if (!(delta(u) >= 0 && delta(g) >= 0 && delta(u) < big && delta(g) < big)) return false;
    return object_class(u) && object_class(g);
}

// Every half-integer s for which Delta(u) or Delta(e - u) lies in [0, Delta(e)).
inline std::vector<Rational> s_range(const TruncatedClass& e, const Integer& r, const Integer& c) {
    Rational big = delta(e);
    Rational lo, hi;
    if (r != 0) {
        Rational a = (Rational(c * c) - big) / (2 * Rational(r));
        Rational b = Rational(c * c) / (2 * Rational(r));
        lo = std::min(a, b);
        hi = std::max(a, b);
    } else if (e.r() != 0) {
        Integer cg = e.c() - c;
        Rational a = e.s() - Rational(cg * cg) / (2 * Rational(e.r()));
        Rational b = e.s() - (Rational(cg * cg) - big) / (2 * Rational(e.r()));
        lo = std::min(a, b);
        hi = std::max(a, b);
    } else {
        lo = -60;
        hi = 60;
    }
    std::vector<Rational> out;
    for (Integer k = cubicwalls::ceil(2 * lo); k <= cubicwalls::floor(2 * hi); ++k) out.push_back(Rational(k, 2));
    return out;
}

// All u with (r, c) in [-bound, bound]^2 destabilizing e at the given point.
inline std::set<TruncatedClass> brute_force_at(const Rational& beta, const Rational& a2, const TruncatedClass& e,
                                               int bound = 20) {
    std::set<TruncatedClass> out;
    for (int r = -bound; r <= bound; ++r)
        for (int c = -bound; c <= bound; ++c)
            for (const auto& s : s_range(e, r, c)) {
                TruncatedClass u{r, c, s};
                if (destabilizes(beta, a2, e, u)) out.insert(u);
            }
    return out;
}

// All u in the box whose wall with e meets beta = beta0 at some alpha^2 > 0
// where the system holds. The equal-slope condition is linear in alpha^2.
inline std::set<TruncatedClass> brute_force_line(const Rational& beta0, const TruncatedClass& e, int bound = 20) {
    std::set<TruncatedClass> out;
    for (int r = -bound; r <= bound; ++r)
        for (int c = -bound; c <= bound; ++c)
            for (const auto& s : s_range(e, r, c)) {
                TruncatedClass u{r, c, s};
                Rational de = ch1b(e, beta0), du = ch1b(u, beta0);
                Rational den = Rational(e.r()) * du - Rational(u.r()) * de;
                if (den == 0) continue;
                Rational a2 = 2 * (ch2b(e, beta0) * du - ch2b(u, beta0) * de) / den;
                if (a2 > 0 && destabilizes(beta0, a2, e, u)) out.insert(u);
            }
    return out;
}

class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : gen_(seed) {}

    Integer integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    Rational rational(int range = 20, int max_den = 12) {
        int den = std::uniform_int_distribution<int>(1, max_den)(gen_);
        int num = std::uniform_int_distribution<int>(-range * den, range * den)(gen_);
        return Rational(num, den);
    }
    Rational positive(int range = 20, int max_den = 12) {
        int den = std::uniform_int_distribution<int>(1, max_den)(gen_);
        int num = std::uniform_int_distribution<int>(1, range * den)(gen_);
        return Rational(num, den);
    }
    // An object class (s - c^2/2 integral) with entries of modest size.
    TruncatedClass object_class(int range = 10) {
        Integer r = integer(-range, range), c = integer(-range, range);
        Rational s = Rational(c * c) / 2 - Rational(integer(-range * range, range * range));
        return {r, c, s};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace oracle
