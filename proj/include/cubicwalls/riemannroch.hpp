#pragma once

#include "cubicwalls/core.hpp"

#include <string>
#include <vector>

namespace cubicwalls {

// td = sum_k t_k H^k.
struct ToddClass {
    std::vector<Rational> coeffs;
    bool operator==(const ToddClass&) const = default;
};

// Total Chern class of T_X for a degree-d hypersurface X in P^{n+1}:
// (1+H)^{n+2} / (1+dH) truncated at H^{n+1}.
std::vector<Rational> tangent_chern_class(const Polarization& pol);

// Applies the universal Todd polynomials (supported up to dimension 4).
ToddClass todd_from_chern(const std::vector<Rational>& c);
ToddClass todd_class(const Polarization& pol);
ToddClass todd_cubic_fourfold();

// The immutable context for every Riemann-Roch computation.
struct Variety {
    Polarization polarization;
    ToddClass todd;

    static Variety cubic_fourfold();
    static Variety hypersurface(const Polarization& pol);
    int dimension() const noexcept { return polarization.dimension(); }
};

class HilbertPolynomial {
public:
    explicit HilbertPolynomial(std::vector<Rational> coeffs);

    // coeffs()[m] is the coefficient of n^m.
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    int degree() const;
    Rational operator()(const Rational& n) const;

    // Equal as polynomials; trailing zero coefficients are ignored.
    bool operator==(const HilbertPolynomial& other) const;

private:
    std::vector<Rational> coeffs_;
};

// Human readable, e.g. "1/8*n^4 + 3/4*n^3 + 11/8*n^2 + 3/4*n".
std::string to_string(const HilbertPolynomial& p);
// Coefficient list from degree 0 upwards, comma separated.
std::string to_coefficient_list(const HilbertPolynomial& p);

Rational euler_characteristic(const ChernCharacter& ch, const Variety& x = Variety::cubic_fourfold());
// chi(a, b) = int dual(a) b td.
Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b,
                       const Variety& x = Variety::cubic_fourfold());
HilbertPolynomial hilbert_polynomial(const ChernCharacter& ch, const Variety& x = Variety::cubic_fourfold());
// Divided by ch_0 when ch_0 != 0, unchanged for torsion classes.
HilbertPolynomial reduced_hilbert_polynomial(const ChernCharacter& ch,
                                             const Variety& x = Variety::cubic_fourfold());

}  // namespace cubicwalls
