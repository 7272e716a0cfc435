#include "cubicwalls/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace cubicwalls {

std::string to_string(const Generator& g) {
    if (g.twist == 0) return g.base;
    return g.base + "(" + to_string(g.twist) + ")";
}

Generator parse_generator(std::string_view text, std::size_t offset) {
    if (text.empty()) throw ParseError("empty generator name", offset);
    std::size_t open = text.find('(');
    std::string_view base = text.substr(0, open);
    if (base.empty()) throw ParseError("missing generator name", offset);
    for (std::size_t i = 0; i < base.size(); ++i) {
        char ch = base[i];
        bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '/' || ch == '\'';
        if (!ok) throw ParseError("unexpected character '" + std::string(1, ch) + "' in name", offset + i);
    }
    Generator g{std::string(base), 0};
    if (open == std::string_view::npos) return g;
    if (text.back() != ')') throw ParseError("expected ')'", offset + text.size());
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    g.twist = parse_integer(inner, offset + open + 1);
    return g;
}

ChernCharacter pushforward_curve(const Rational& degree, const Rational& genus, const Rational& line_degree,
                                 const Variety& x) {
    if (!x.polarization.is_cubic_fourfold())
        throw Error("UnsupportedGeometry", "curve pushforward is implemented on the cubic fourfold");
    const Rational d = x.polarization.degree();
    // i_*(ch(L) td(C)) = e l + (k + 1 - g) pt, then multiply by td(Y)^{-1} = 1 - t_1 H + ...
    const Rational t1 = x.todd.coeffs[1];
    return ChernCharacter{0, 0, 0, degree / d, (line_degree + 1 - genus - t1 * degree) / d};
}

ChernCharacter pushforward_surface(const SurfaceCharacter& f, const Variety& x) {
    if (!x.polarization.is_cubic_fourfold())
        throw Error("UnsupportedGeometry", "surface pushforward is implemented on the cubic fourfold");
    const Rational d = x.polarization.degree();
    // td(N)^{-1} = (1 - h/2 + h^2/6)^2 = 1 - h + 7/12 h^2 with h^2 = 3 pt on S.
    const Rational curve = f.degree - 3 * f.rank;
    const Rational points = f.points - f.degree + Rational(7, 4) * f.rank;
    return ChernCharacter{0, 0, f.rank, curve / d, points / d};
}

SurfaceCharacter surface_character_from_p3(const std::vector<Rational>& ch_p3) {
    if (ch_p3.size() != 4 || ch_p3[0] != 0)
        throw Error("InvalidInput", "expected a rank-zero character on P^3 with four coefficients");
    // ch_{P^3}(j_* F) = j_*(ch(F) (1 - 3/2 h + 3/2 h^2)) for the cubic surface j: S -> P^3,
    // with j_* 1 = 3h, j_*(curve of degree e) = e h^2, j_* pt = h^3.
    SurfaceCharacter f;
    f.rank = ch_p3[1] / 3;
    f.degree = ch_p3[2] + Rational(9, 2) * f.rank;
    f.points = ch_p3[3] + Rational(3, 2) * f.degree - Rational(9, 2) * f.rank;
    return f;
}

namespace {

using Term = std::pair<int, std::string>;

Construction combination(std::string kind, const std::vector<Term>& terms) {
    std::string formula;
    for (const auto& [k, name] : terms) {
        std::string mag = std::abs(k) == 1 ? name : std::to_string(std::abs(k)) + "*" + name;
        if (formula.empty())
            formula = (k < 0 ? "-" : "") + mag;
        else
            formula += (k < 0 ? " - " : " + ") + mag;
    }
    auto compute = [terms](const Catalog& cat) {
        ChernCharacter acc = ChernCharacter::zero(cat.variety().dimension());
        for (const auto& [k, name] : terms) acc += Rational(k) * cat.character(name);
        return acc;
    };
    return {std::move(kind), formula, compute};
}

// Class of the kernel of H^0(F) (x) O -> F, assuming F is globally generated
// with no higher cohomology, so that h^0 = chi.
Construction evaluation_kernel(const std::string& name) {
    return {"mutation", "chi(" + name + ")*O_Y - " + name, [name](const Catalog& cat) {
                ChernCharacter f = cat.character(name);
                Rational chi = euler_characteristic(f, cat.variety());
                return chi * cat.character("O_Y") - f;
            }};
}

}  // namespace

Catalog::Catalog(Variety x) : variety_(std::move(x)) {
    if (!variety_.polarization.is_cubic_fourfold())
        throw Error("UnsupportedGeometry", "the catalog describes objects on the cubic fourfold only");
    const Variety& v = variety_;

    add("O_Y", "structure sheaf", {{"line_bundle", "e^{0}", [](const Catalog& c) {
                                        return ChernCharacter::unit(c.variety().dimension());
                                    }}},
        true);
    add("O_pt", "skyscraper sheaf of a point", {{"point", "pt", [](const Catalog& c) {
                                                    Rational d = c.variety().polarization.degree();
                                                    return ChernCharacter{0, 0, 0, 0, 1 / d};
                                                }}});
    add("O_S", "structure sheaf of a linear section cubic surface",
        {combination("koszul", {{1, "O_Y"}, {-2, "O_Y(-1)"}, {1, "O_Y(-2)"}}),
         {"pushforward", "i_*(1)", [v](const Catalog&) { return pushforward_surface({1, 0, 0}, v); }}});
    add("I_S/Y", "ideal sheaf of the surface", {combination("triangle", {{1, "O_Y"}, {-1, "O_S"}})});
    add("O_C", "structure sheaf of a twisted cubic",
        {{"pushforward", "GRR(e=3, g=0, k=0)", [v](const Catalog&) { return pushforward_curve(3, 0, 0, v); }}});
    add("I_C/Y", "ideal sheaf of the twisted cubic", {combination("triangle", {{1, "O_Y"}, {-1, "O_C"}})});
    add("I_C/S", "ideal sheaf of the cubic inside the surface",
        {combination("triangle", {{1, "O_S"}, {-1, "O_C"}}),
         {"resolution", "0 -> O(-3)^2 -> O(-2)^3 -> I_C -> 0 in P^3, modulo O(-3)", [v](const Catalog&) {
              // ch_{P^3} = 3 e^{-2h} - 3 e^{-3h}
              std::vector<Rational> p3(4, Rational(0));
              Rational e2 = 1, e3 = 1;
              for (int k = 0; k < 4; ++k) {
                  p3[k] = 3 * e2 - 3 * e3;
                  e2 = e2 * -2 / (k + 1);
                  e3 = e3 * -3 / (k + 1);
              }
              return pushforward_surface(surface_character_from_p3(p3), v);
          }}});
    add("I_p/S", "ideal sheaf of a point inside the surface", {combination("triangle", {{1, "O_S"}, {-1, "O_pt"}})});
    add("O_L", "structure sheaf of a line",
        {{"pushforward", "GRR(e=1, g=0, k=0)", [v](const Catalog&) { return pushforward_curve(1, 0, 0, v); }}});
    add("I_L/Y", "ideal sheaf of a line", {combination("triangle", {{1, "O_Y"}, {-1, "O_L"}})});
    add("F_C", "kernel of the evaluation map of I_C/S(2)",
        {combination("kernel", {{3, "O_Y"}, {-1, "I_C/S(2)"}}), evaluation_kernel("I_C/S(2)")});
    add("E_p", "kernel of the evaluation map of I_p/S(1)",
        {combination("kernel", {{3, "O_Y"}, {-1, "I_p/S(1)"}}), evaluation_kernel("I_p/S(1)")});
    add("G_C", "cokernel of I_C/S(3) -> O_S(1)^3", {combination("resolution", {{3, "O_S(1)"}, {-1, "I_C/S(3)"}})});
    add("K_C", "kernel of O_Y^3 -> G_C",
        {combination("kernel", {{3, "O_Y"}, {-1, "G_C"}}),
         combination("triangle", {{2, "I_S/Y"}, {1, "I_C/Y"}}),
         combination("triangle", {{3, "I_S/Y"}, {1, "I_C/S"}})});
    add("M_C", "extension of K_C by O_Y(-1)^3",
        {combination("triangle", {{3, "O_Y(-1)"}, {1, "K_C"}}), evaluation_kernel("F_C(1)")});
    add("F_L", "kernel of the evaluation map of I_L/Y(1)",
        {combination("kernel", {{4, "O_Y"}, {-1, "I_L/Y(1)"}}), evaluation_kernel("I_L/Y(1)")});
    add("P_L", "extension O(-H)[1] -> P_L -> I_L/Y", {combination("triangle", {{1, "I_L/Y"}, {-1, "O_Y(-1)"}})});
    add("N_C", "extension N_C -> F_C -> O(-H)[1]", {combination("triangle", {{1, "F_C"}, {1, "O_Y(-1)"}})});
    add("F_C'", "extension O(-H)[1] -> F_C' -> N_C",
        {combination("triangle", {{1, "N_C"}, {-1, "O_Y(-1)"}}),
         {"mutation", "F_C - chi(F_C, O_Y(-1))*O_Y(-1)", [](const Catalog& cat) {
              ChernCharacter f = cat.character("F_C");
              ChernCharacter o = cat.character("O_Y(-1)");
              return f - euler_pairing(f, o, cat.variety()) * o;
          }}});
}

void Catalog::add(std::string name, std::string description, std::vector<Construction> constructions,
                  bool exceptional) {
    ChernCharacter primary = constructions.front().compute(*this);
    for (std::size_t i = 1; i < constructions.size(); ++i) {
        ChernCharacter other = constructions[i].compute(*this);
        if (other != primary)
            throw Error("InconsistentConstruction", name + ": " + constructions.front().formula + " gives " +
                                                        to_string(primary) + " but " + constructions[i].formula +
                                                        " gives " + to_string(other));
    }
    entries_.push_back({std::move(name), std::move(description), primary, std::move(constructions), exceptional});
}

bool Catalog::contains(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return true;
    return false;
}

const CatalogEntry& Catalog::entry(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw Error("UnknownEntry", "no catalog entry named '" + std::string(name) + "'");
}

ChernCharacter Catalog::character(const Generator& g) const {
    return tensor_line_bundle(entry(g.base).character, g.twist);
}

ChernCharacter Catalog::character(std::string_view generator_text) const {
    return character(parse_generator(generator_text));
}

bool Catalog::is_exceptional(const Generator& g) const { return entry(g.base).exceptional; }

}  // namespace cubicwalls
