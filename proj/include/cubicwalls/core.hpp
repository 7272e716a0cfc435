#pragma once

#include "cubicwalls/rational.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubicwalls {

// Dimension n of the variety and degree d = H^n of the polarization.
class Polarization {
public:
    Polarization() = default;
    Polarization(int dimension, int degree);

    int dimension() const noexcept { return dimension_; }
    int degree() const noexcept { return degree_; }
    bool is_cubic_fourfold() const noexcept { return dimension_ == 4 && degree_ == 3; }

    bool operator==(const Polarization&) const = default;

private:
    int dimension_ = 4;
    int degree_ = 3;
};

// ch = sum_k a_k H^k, stored in the H-power basis.
class ChernCharacter {
public:
    explicit ChernCharacter(std::vector<Rational> coeffs);
    ChernCharacter(std::initializer_list<Rational> coeffs);

    static ChernCharacter zero(int dimension);
    static ChernCharacter unit(int dimension);
    static ChernCharacter line_bundle(int dimension, const Integer& k);

    int dimension() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    ChernCharacter& operator+=(const ChernCharacter& other);
    ChernCharacter& operator-=(const ChernCharacter& other);
    ChernCharacter& operator*=(const Rational& scalar);
    ChernCharacter operator-() const;

    bool operator==(const ChernCharacter&) const = default;

    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
    friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
    friend ChernCharacter operator*(const Rational& s, ChernCharacter a) { return a *= s; }

private:
    std::vector<Rational> coeffs_;
};

// A class in the rank three lattice of (ch_0, ch_1, ch_2) = (r, cH, sH^2).
class TruncatedClass {
public:
    TruncatedClass() = default;
    TruncatedClass(Integer r, Integer c, Rational s);

    const Integer& r() const noexcept { return r_; }
    const Integer& c() const noexcept { return c_; }
    const Rational& s() const noexcept { return s_; }

    bool is_zero() const { return r_ == 0 && c_ == 0 && s_ == 0; }
    // True for classes of actual objects on a very general cubic fourfold,
    // where ch_2 = c_1^2/2 - c_2 and c_2 is an integer multiple of H^2.
    bool is_object_class() const;

    TruncatedClass& operator+=(const TruncatedClass& other);
    TruncatedClass& operator-=(const TruncatedClass& other);
    TruncatedClass operator-() const { return {-r_, -c_, -s_}; }

    bool operator==(const TruncatedClass&) const = default;
    std::strong_ordering operator<=>(const TruncatedClass& other) const;

    friend TruncatedClass operator+(TruncatedClass a, const TruncatedClass& b) { return a += b; }
    friend TruncatedClass operator-(TruncatedClass a, const TruncatedClass& b) { return a -= b; }
    friend TruncatedClass operator*(const Integer& k, const TruncatedClass& a) {
        return {k * a.r_, k * a.c_, Rational(k) * a.s_};
    }

private:
    Integer r_ = 0;
    Integer c_ = 0;
    Rational s_ = 0;
};

ChernCharacter twist(const ChernCharacter& ch, const Rational& beta);
ChernCharacter tensor_line_bundle(const ChernCharacter& ch, const Integer& k);
ChernCharacter dual(const ChernCharacter& ch);
// Product in Q[H]/(H^{n+1}).
ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b);
// Degree of the top-degree part: d * a_n.
Rational integrate(const ChernCharacter& ch, const Polarization& pol);

// Throws NotInLattice unless a_0, a_1 and 2 a_2 are integers.
TruncatedClass truncate(const ChernCharacter& ch);

// Coefficients in the basis (1, H, H^2, l, pt) with l = H^3/d and pt = H^4/d.
std::vector<Rational> to_line_point_basis(const ChernCharacter& ch, const Polarization& pol);
ChernCharacter from_line_point_basis(std::span<const Rational> coeffs, const Polarization& pol);

std::string to_string(const ChernCharacter& ch);
std::string to_string(const TruncatedClass& w);

ChernCharacter parse_chern_character(std::string_view text);
TruncatedClass parse_truncated_class(std::string_view text);
// Splits on commas, returning (field, offset) pairs.
std::vector<std::pair<std::string_view, std::size_t>> split_fields(std::string_view text);

}  // namespace cubicwalls
