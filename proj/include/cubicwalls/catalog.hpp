#pragma once

#include "cubicwalls/riemannroch.hpp"

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cubicwalls {

// A named catalog object tensored with O(kH); printed as NAME or NAME(k).
struct Generator {
    std::string base;
    Integer twist = 0;

    bool operator==(const Generator&) const = default;
    bool operator<(const Generator& other) const {
        return base != other.base ? base < other.base : twist < other.twist;
    }
};

std::string to_string(const Generator& g);
Generator parse_generator(std::string_view text, std::size_t offset = 0);

// Numerical data of a sheaf on the cubic surface cut out by a P^3:
// ch = rank + (class of degree `degree`) + points * pt.
struct SurfaceCharacter {
    Rational rank;
    Rational degree;
    Rational points;
};

// Chern character on Y of i_* of a genus-g curve of degree e twisted by a
// line bundle of degree k, by Grothendieck-Riemann-Roch.
ChernCharacter pushforward_curve(const Rational& degree, const Rational& genus, const Rational& line_degree,
                                 const Variety& x);
// i_* from the linear-section surface S = Y cap P^3, normal bundle O(1)^2.
ChernCharacter pushforward_surface(const SurfaceCharacter& f, const Variety& x);
// Inverse of the pushforward from the cubic surface S into P^3, given
// ch on P^3 as coefficients of (1, h, h^2, h^3) with vanishing rank.
SurfaceCharacter surface_character_from_p3(const std::vector<Rational>& ch_p3);

class Catalog;

struct Construction {
    std::string kind;     // line_bundle, point, koszul, pushforward, resolution, kernel, triangle, mutation
    std::string formula;  // human readable
    std::function<ChernCharacter(const Catalog&)> compute;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    ChernCharacter character;
    std::vector<Construction> constructions;
    bool exceptional = false;
};

class Catalog {
public:
    // Only the cubic fourfold is supported.
    explicit Catalog(Variety x = Variety::cubic_fourfold());

    const Variety& variety() const noexcept { return variety_; }
    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    const CatalogEntry& entry(std::string_view name) const;
    bool contains(std::string_view name) const;

    ChernCharacter character(const Generator& g) const;
    ChernCharacter character(std::string_view generator_text) const;
    bool is_exceptional(const Generator& g) const;

private:
    void add(std::string name, std::string description, std::vector<Construction> constructions,
             bool exceptional = false);

    Variety variety_;
    std::vector<CatalogEntry> entries_;
};

}  // namespace cubicwalls
