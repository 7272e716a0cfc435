#include "cubicwalls/catalog.hpp"
#include "cubicwalls/identities.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cubicwalls;

namespace {

const Catalog& cat() {
    static const Catalog c;
    return c;
}

ChernCharacter lp(std::initializer_list<Rational> coeffs) {
    std::vector<Rational> v(coeffs);
    return from_line_point_basis(v, Polarization());
}

// (1 - e^{-H})^2 from the power series.
ChernCharacter koszul_two_hyperplanes() {
    oracle::Series one_minus_exp(5, Rational(0));
    for (int k = 1; k <= 4; ++k) one_minus_exp[k] = Rational(k % 2 ? 1 : -1) / oracle::factorial(k);
    return ChernCharacter(oracle::series_mul(one_minus_exp, one_minus_exp, 4));
}

}  // namespace

TEST_CASE("structure sheaves of subvarieties") {
    CHECK(cat().character("O_S") == koszul_two_hyperplanes());
    CHECK(cat().character("O_S") == ChernCharacter({0, 0, 1, -1, Rational(7, 12)}));
    CHECK(cat().character("O_pt") == ChernCharacter({0, 0, 0, 0, Rational(1, 3)}));
    // chi(O_C) = 1 and chi(O_L) = 1 fix the top coefficients.
    CHECK(cat().character("O_C") == ChernCharacter({0, 0, 0, 1, Rational(-7, 6)}));
    CHECK(cat().character("O_L") == ChernCharacter({0, 0, 0, Rational(1, 3), Rational(-1, 6)}));
    for (int k = -3; k <= 3; ++k)
        CHECK(cat().character(Generator{"O_L", k}) == ChernCharacter({0, 0, 0, Rational(1, 3), Rational(-1, 6) + Rational(k, 3)}));
}

TEST_CASE("character table") {
    CHECK(cat().character("I_S/Y") == lp({1, 0, -1, 3, Rational(-7, 4)}));
    CHECK(cat().character("K_C") == lp({3, 0, -2, 3, 0}));
    CHECK(Rational(3) * cat().character("O_Y(-1)") ==
          ChernCharacter({3, -3, Rational(3, 2), Rational(-1, 2), Rational(1, 8)}));
    const ChernCharacter v1{0, 0, 1, 0, Rational(-1, 4)};
    const ChernCharacter v2{3, 0, -1, 0, Rational(1, 4)};
    const ChernCharacter v3{6, -3, Rational(-1, 2), Rational(1, 2), Rational(1, 8)};
    CHECK(cat().character("M_C") == v3);
    CHECK(cat().character("F_C") == v2);
    CHECK(cat().character("E_p") == v2);
    CHECK(cat().character("I_C/S(2)") == v1);
    CHECK(cat().character("I_p/S(1)") == v1);
    CHECK(v1 + v2 == Rational(3) * ChernCharacter::unit(4));
    CHECK(cat().character("F_L") == ChernCharacter({3, -1, Rational(-1, 2), Rational(1, 6), Rational(1, 8)}));
    CHECK(cat().character("P_L") == cat().character("I_L/Y") - cat().character("O_Y(-1)"));
    CHECK(truncate(cat().character("F_C'")) == TruncatedClass(3, 0, -1));
}

TEST_CASE("Hilbert polynomials of catalog objects") {
    const auto& y = cat().variety();
    CHECK(hilbert_polynomial(cat().character("O_S"), y) == HilbertPolynomial({1, Rational(3, 2), Rational(3, 2)}));
    CHECK(hilbert_polynomial(cat().character("O_C"), y) == HilbertPolynomial({1, 3}));
    auto ics = hilbert_polynomial(cat().character("I_C/S"), y);
    for (int n = -6; n <= 6; ++n) CHECK(ics(n) == Rational(3, 2) * n * (n - 1));
    CHECK(to_string(reduced_hilbert_polynomial(cat().character("M_C"), y)) == "1/8*n^4 + 1/2*n^3 + 5/8*n^2 + 1/4*n");
    CHECK(to_string(reduced_hilbert_polynomial(cat().character("K_C"), y)) == "1/8*n^4 + 3/4*n^3 + 7/8*n^2 + 1/4*n");
    CHECK(reduced_hilbert_polynomial(cat().character("E_p"), y) == reduced_hilbert_polynomial(cat().character("F_C"), y));
}

TEST_CASE("curve and surface pushforwards") {
    const auto& y = cat().variety();
    // Rational curve of degree e with a degree-k line bundle: chi(n) = e n + k + 1.
    for (int e = 1; e <= 4; ++e)
        for (int k = -2; k <= 2; ++k) {
            auto p = hilbert_polynomial(pushforward_curve(e, 0, k, y), y);
            CHECK(p == HilbertPolynomial({Rational(k + 1), Rational(e)}));
        }
    // Plane cubic: genus one, chi(n) = 3n.
    CHECK(hilbert_polynomial(pushforward_curve(3, 1, 0, y), y) == HilbertPolynomial({0, 3}));

    // O_S in P^3: 1 - e^{-3h}.
    auto s = surface_character_from_p3({0, 3, Rational(-9, 2), Rational(9, 2)});
    CHECK(s.rank == 1);
    CHECK(s.degree == 0);
    CHECK(s.points == 0);
    CHECK(pushforward_surface(s, y) == cat().character("O_S"));
    CHECK(pushforward_surface({0, 0, 1}, y) == cat().character("O_pt"));
    CHECK_THROWS_AS(surface_character_from_p3({1, 0, 0, 0}), Error);
    CHECK_THROWS_AS(pushforward_curve(1, 0, 0, Variety::hypersurface(Polarization(3, 3))), Error);
}

TEST_CASE("every entry is consistent and lies in the lattice") {
    for (const auto& entry : cat().entries()) {
        CAPTURE(entry.name);
        REQUIRE_FALSE(entry.constructions.empty());
        for (const auto& c : entry.constructions) CHECK(c.compute(cat()) == entry.character);
        auto w = truncate(entry.character);
        CHECK(w.is_object_class());
    }
    CHECK(cat().entries().size() >= 19);
    CHECK(cat().entry("K_C").constructions.size() >= 2);
    CHECK(cat().is_exceptional(Generator{"O_Y", 2}));
    CHECK_FALSE(cat().is_exceptional(Generator{"F_C", 0}));
    CHECK_THROWS_AS(cat().entry("nonsense"), Error);
    CHECK_THROWS_AS(Catalog(Variety::hypersurface(Polarization(3, 2))), Error);
}

TEST_CASE("generators") {
    CHECK(parse_generator("O_Y(-1)") == Generator{"O_Y", -1});
    CHECK(parse_generator("F_C'") == Generator{"F_C'", 0});
    CHECK(parse_generator("I_C/S(2)") == Generator{"I_C/S", 2});
    CHECK(to_string(Generator{"O_L", 1}) == "O_L(1)");
    CHECK(to_string(Generator{"O_Y", 0}) == "O_Y");
    CHECK_THROWS_AS(parse_generator("O_Y(1"), ParseError);
    CHECK_THROWS_AS(parse_generator(""), ParseError);
    CHECK(cat().character("O_Y(2)") == ChernCharacter::line_bundle(4, 2));
}

TEST_CASE("catalog identities") {
    for (const auto& r : verify_all_identities(cat())) {
        CAPTURE(r.id);
        CAPTURE(r.lhs);
        CAPTURE(r.rhs);
        CHECK(r.passed);
    }
    CHECK(identity_ids().size() >= 25);
    CHECK(verify_identity(cat(), "F_C_is_v2").passed);
    CHECK_THROWS_AS(verify_identity(cat(), "no_such_identity"), Error);
}
