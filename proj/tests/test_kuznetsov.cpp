#include "cubicwalls/kuznetsov.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cubicwalls;

namespace {

const Catalog& cat() {
    static const Catalog c;
    return c;
}

KExpression gen(const char* name, int k = 0) { return KExpression(Generator{name, k}); }

Rational chi(const ChernCharacter& a, const ChernCharacter& b) { return euler_pairing(a, b, cat().variety()); }

}  // namespace

TEST_CASE("K-expressions parse, print and resolve linearly") {
    auto e = parse_kexpression("O_L(1) - O_Y(1) + 4*O_Y");
    CHECK(e == gen("O_L", 1) - gen("O_Y", 1) + Integer(4) * gen("O_Y"));
    CHECK(to_string(e) == "O_L(1) - O_Y(1) + 4*O_Y");
    CHECK(parse_kexpression(to_string(e)) == e);
    CHECK(resolve(e, cat()) ==
          cat().character("O_L(1)") - cat().character("O_Y(1)") + Rational(4) * cat().character("O_Y"));
    CHECK(resolve(gen("F_C"), cat()) == cat().character("F_C"));
    CHECK((gen("F_C") - gen("F_C")).is_zero());
    CHECK(gen("F_C").is_single());
    CHECK_THROWS_AS(parse_kexpression("O_Y +"), ParseError);
    CHECK_THROWS_AS(parse_kexpression(""), ParseError);
    CHECK_THROWS_AS(resolve(gen("unknown"), cat()), Error);
}

TEST_CASE("mutations") {
    CHECK(mutate_left(gen("O_Y"), gen("O_Y"), cat()).is_zero());
    auto g = gen("O_L", 1) - gen("O_Y", 1);
    CHECK(chi(cat().character("O_Y"), cat().character("O_L(1)")) == 2);
    CHECK(chi(cat().character("O_Y"), cat().character("O_Y(1)")) == 6);
    CHECK(mutate_left(gen("O_Y"), g, cat()) == g + Integer(4) * gen("O_Y"));

    // Mutating twice changes nothing more.
    for (const char* name : {"F_C", "O_L", "I_S/Y", "K_C", "O_pt"})
        for (int i = 0; i <= 2; ++i) {
            auto once = mutate_left(gen("O_Y", i), gen(name), cat());
            CHECK(mutate_left(gen("O_Y", i), once, cat()) == once);
            auto right = mutate_right(gen("O_Y", i), gen(name), cat());
            CHECK(mutate_right(gen("O_Y", i), right, cat()) == right);
        }

    auto p = mutate_right(gen("O_Y", -1), gen("F_L", -1), cat());
    CHECK(resolve(p, cat()) == -resolve(gen("P_L"), cat()));
    CHECK(mukai_vector(gen("P_L"), cat()) == MukaiVector{1, 1});

    CHECK_THROWS_AS(mutate_left(gen("F_C"), gen("O_Y"), cat()), Error);
    CHECK_THROWS_AS(mutate_left(Integer(2) * gen("O_Y"), gen("F_C"), cat()), Error);
    CHECK_THROWS_AS(mutate_right(gen("O_S"), gen("O_Y"), cat()), Error);
}

TEST_CASE("projection to the Kuznetsov component") {
    CHECK(resolve(project_to_kuznetsov(gen("O_L", 1), cat()), cat()) == cat().character("F_L"));
    CHECK(project_to_kuznetsov(gen("F_C"), cat()) == gen("F_C"));
    for (int i = 0; i <= 2; ++i) CHECK(project_to_kuznetsov(gen("O_Y", i), cat()).is_zero());
    CHECK(resolve(gen("F_C'"), cat()) == cat().character("F_C"));

    for (const auto& entry : cat().entries())
        for (int k = -2; k <= 2; ++k) {
            CAPTURE(entry.name);
            auto pr = project_to_kuznetsov(gen(entry.name.c_str(), k), cat());
            auto ch = resolve(pr, cat());
            for (int i = 0; i <= 2; ++i) CHECK(chi(ChernCharacter::line_bundle(4, i), ch) == 0);
            CHECK(project_to_kuznetsov(pr, cat()) == pr);
        }
}

TEST_CASE("Mukai lattice") {
    auto basis = lambda_basis(cat());
    CHECK(basis.ch1 == cat().character("F_L"));
    CHECK(basis.ch2 == ChernCharacter({-3, 2, 0, Rational(-1, 3), 0}));
    auto gram = gram_from_characters(cat());
    CHECK(gram[0][0] == 2);
    CHECK(gram[0][1] == -1);
    CHECK(gram[1][0] == -1);
    CHECK(gram[1][1] == 2);
    CHECK(-chi(basis.ch1, basis.ch2) == -1);

    CHECK(mukai_vector(gen("F_L"), cat()) == MukaiVector{1, 0});
    CHECK(mukai_vector(gen("F_C'"), cat()) == MukaiVector{2, 1});
    CHECK(mukai_vector(gen("F_C"), cat()) == MukaiVector{2, 1});
    CHECK(mukai_pairing({1, 0}, {1, 0}) == 2);
    CHECK(mukai_pairing({1, 0}, {0, 1}) == -1);
    CHECK(mukai_pairing({2, 1}, {2, 1}) == 6);
    CHECK(mukai_pairing({1, 0}, {1, 1}) == 1);
    CHECK(mukai_pairing({1, 1}, {1, 1}) == 2);

    // The pairing agrees with -chi on resolved characters.
    oracle::RandomRationals rng(5);
    for (int i = 0; i < 50; ++i) {
        MukaiVector a{rng.integer(-5, 5), rng.integer(-5, 5)}, b{rng.integer(-5, 5), rng.integer(-5, 5)};
        auto ca = Rational(a.x1) * basis.ch1 + Rational(a.x2) * basis.ch2;
        auto cb = Rational(b.x1) * basis.ch1 + Rational(b.x2) * basis.ch2;
        CHECK(Rational(mukai_pairing(a, b)) == -chi(ca, cb));
        CHECK(mukai_pairing(a, b) == mukai_pairing(b, a));
        CHECK(mukai_pairing(a, a) % 2 == 0);
        CHECK(mukai_vector(ca, cat()) == a);
    }

    CHECK_THROWS_AS(mukai_vector(gen("O_Y"), cat()), Error);
    CHECK_THROWS_AS(mukai_vector(Rational(1, 2) * (basis.ch1 + basis.ch2), cat()), Error);
    CHECK(to_string(MukaiVector{2, -1}) == "2,-1");
    CHECK(parse_mukai_vector("2,-1") == MukaiVector{2, -1});
    CHECK_THROWS_AS(parse_mukai_vector("2"), ParseError);
}
