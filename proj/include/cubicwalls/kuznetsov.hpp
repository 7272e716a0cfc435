#pragma once

#include "cubicwalls/catalog.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace cubicwalls {

// Integer combination of catalog generators in the Grothendieck group.
class KExpression {
public:
    KExpression() = default;
    KExpression(const Generator& g, Integer coefficient = 1);

    const std::map<Generator, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // The generator when the expression is +-1 times a single generator.
    bool is_single() const;

    KExpression& operator+=(const KExpression& other);
    KExpression& operator-=(const KExpression& other);
    KExpression operator-() const;

    bool operator==(const KExpression&) const = default;

    friend KExpression operator+(KExpression a, const KExpression& b) { return a += b; }
    friend KExpression operator-(KExpression a, const KExpression& b) { return a -= b; }
    friend KExpression operator*(const Integer& k, const KExpression& a);

private:
    void add_term(const Generator& g, const Integer& k);
    std::map<Generator, Integer> terms_;
};

std::string to_string(const KExpression& e);
// Terms like "O_L(1) - O_Y(1) + 4*O_Y".
KExpression parse_kexpression(std::string_view text);

ChernCharacter resolve(const KExpression& e, const Catalog& cat);

// L_F(G) = G - chi(F, G) F for an exceptional generator F.
KExpression mutate_left(const KExpression& f, const KExpression& g, const Catalog& cat);
// R_F(G) = G - chi(G, F) F.
KExpression mutate_right(const KExpression& f, const KExpression& g, const Catalog& cat);
// L_{O} L_{O(H)} L_{O(2H)}.
KExpression project_to_kuznetsov(const KExpression& g, const Catalog& cat);

struct MukaiVector {
    Integer x1 = 0;  // coefficient of lambda_1
    Integer x2 = 0;  // coefficient of lambda_2
    bool operator==(const MukaiVector&) const = default;
};

std::string to_string(const MukaiVector& v);
MukaiVector parse_mukai_vector(std::string_view text);

struct LambdaBasis {
    KExpression lambda1;  // pr(O_L(1))
    KExpression lambda2;  // pr(O_L(2))
    ChernCharacter ch1;
    ChernCharacter ch2;
};

LambdaBasis lambda_basis(const Catalog& cat);
MukaiVector mukai_vector(const KExpression& g, const Catalog& cat);
MukaiVector mukai_vector(const ChernCharacter& ch, const Catalog& cat);
Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b);
// -chi(lambda_i, lambda_j) computed from resolved characters.
std::array<std::array<Rational, 2>, 2> gram_from_characters(const Catalog& cat);

}  // namespace cubicwalls
