#include "cubicwalls/identities.hpp"

#include "cubicwalls/kuznetsov.hpp"

#include <functional>

namespace cubicwalls {

namespace {

struct Identity {
    std::string id;
    std::string description;
    std::function<std::pair<std::string, std::string>(const Catalog&)> sides;
};

std::string ch(const Catalog& cat, std::string_view name) { return to_string(cat.character(name)); }

std::string reduced(const Catalog& cat, std::string_view name) {
    return to_string(reduced_hilbert_polynomial(cat.character(name), cat.variety()));
}

std::string hilbert(const Catalog& cat, std::string_view name) {
    return to_string(hilbert_polynomial(cat.character(name), cat.variety()));
}

std::string sum(const Catalog& cat, std::initializer_list<std::pair<int, const char*>> terms) {
    ChernCharacter acc = ChernCharacter::zero(cat.variety().dimension());
    for (const auto& [k, name] : terms) acc += Rational(k) * cat.character(name);
    return to_string(acc);
}

std::string line_point(const Catalog& cat, std::string_view name) {
    auto coeffs = to_line_point_basis(cat.character(name), cat.variety().polarization);
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += (i ? "," : "") + to_string(coeffs[i]);
    return out;
}

const std::string v1 = "0,0,1,0,-1/4";
const std::string v2 = "3,0,-1,0,1/4";
const std::string v3 = "6,-3,-1/2,1/2,1/8";
const std::string reduced_f_c = "1/8*n^4 + 3/4*n^3 + 11/8*n^2 + 3/4*n";

const std::vector<Identity>& identities() {
    static const std::vector<Identity> table = {
        {"v1_plus_v2", "ch(I_C/S(2)) + ch(F_C) = 3 ch(O_Y)",
         [](const Catalog& c) { return std::pair{sum(c, {{1, "I_C/S(2)"}, {1, "F_C"}}), sum(c, {{3, "O_Y"}})}; }},
        {"F_C_is_v2", "ch(F_C) = v2",
         [](const Catalog& c) { return std::pair{ch(c, "F_C"), v2}; }},
        {"I_C/S_twist_v1", "ch(I_C/S(2)) = v1",
         [](const Catalog& c) { return std::pair{ch(c, "I_C/S(2)"), v1}; }},
        {"I_p/S_twist_v1", "ch(I_p/S(1)) = v1",
         [](const Catalog& c) { return std::pair{ch(c, "I_p/S(1)"), v1}; }},
        {"I_C/S_two_routes", "O_S - O_C agrees with the P^3 resolution",
         [](const Catalog& c) {
             const auto& cons = c.entry("I_C/S").constructions;
             return std::pair{to_string(cons.at(0).compute(c)), to_string(cons.at(1).compute(c))};
         }},
        {"K_C_two_ways", "2 ch(I_S/Y) + ch(I_C/Y) = 3 ch(I_S/Y) + ch(I_C/S)",
         [](const Catalog& c) {
             return std::pair{sum(c, {{2, "I_S/Y"}, {1, "I_C/Y"}}), sum(c, {{3, "I_S/Y"}, {1, "I_C/S"}})};
         }},
        {"K_C_kernel", "3 ch(O_Y) - ch(G_C) = ch(K_C)",
         [](const Catalog& c) { return std::pair{sum(c, {{3, "O_Y"}, {-1, "G_C"}}), ch(c, "K_C")}; }},
        {"M_C_extension", "3 ch(O_Y(-1)) + ch(K_C) = v3",
         [](const Catalog& c) { return std::pair{sum(c, {{3, "O_Y(-1)"}, {1, "K_C"}}), v3}; }},
        {"ch_I_S/Y", "ch(I_S/Y) in the (1, H, H^2, l, pt) basis",
         [](const Catalog& c) { return std::pair{line_point(c, "I_S/Y"), std::string("1,0,-1,3,-7/4")}; }},
        {"ch_K_C", "ch(K_C) in the (1, H, H^2, l, pt) basis",
         [](const Catalog& c) { return std::pair{line_point(c, "K_C"), std::string("3,0,-2,3,0")}; }},
        {"ch_F_L", "ch(F_L) = (3, -1, -1/2, 1/6, 1/8)",
         [](const Catalog& c) { return std::pair{ch(c, "F_L"), std::string("3,-1,-1/2,1/6,1/8")}; }},
        {"reduced_F_C", "reduced Hilbert polynomial of F_C",
         [](const Catalog& c) { return std::pair{reduced(c, "F_C"), reduced_f_c}; }},
        {"E_p_same_reduced", "E_p has the reduced Hilbert polynomial of F_C",
         [](const Catalog& c) { return std::pair{reduced(c, "E_p"), reduced_f_c}; }},
        {"reduced_M_C", "reduced Hilbert polynomial of M_C",
         [](const Catalog& c) {
             return std::pair{reduced(c, "M_C"), std::string("1/8*n^4 + 1/2*n^3 + 5/8*n^2 + 1/4*n")};
         }},
        {"reduced_K_C", "reduced Hilbert polynomial of K_C",
         [](const Catalog& c) {
             return std::pair{reduced(c, "K_C"), std::string("1/8*n^4 + 3/4*n^3 + 7/8*n^2 + 1/4*n")};
         }},
        {"hilbert_O_C", "P(O_C, n) = 3n + 1",
         [](const Catalog& c) { return std::pair{hilbert(c, "O_C"), std::string("3*n + 1")}; }},
        {"hilbert_O_S", "P(O_S, n) = (3n^2 + 3n + 2)/2",
         [](const Catalog& c) { return std::pair{hilbert(c, "O_S"), std::string("3/2*n^2 + 3/2*n + 1")}; }},
        {"hilbert_I_C/S", "P(I_C/S, n) = (3/2) n (n - 1)",
         [](const Catalog& c) { return std::pair{hilbert(c, "I_C/S"), std::string("3/2*n^2 - 3/2*n")}; }},
        {"hilbert_O_L", "P(O_L(k), n) = n + k + 1 for k = -2..2",
         [](const Catalog& c) {
             std::string lhs, rhs;
             for (int k = -2; k <= 2; ++k) {
                 lhs += (k > -2 ? "; " : "") + to_string(hilbert_polynomial(c.character(Generator{"O_L", k}), c.variety()));
                 rhs += (k > -2 ? "; " : "") + to_string(HilbertPolynomial({Rational(k + 1), Rational(1)}));
             }
             return std::pair{lhs, rhs};
         }},
        {"F_C_in_T_Y", "chi(O_Y(i), F_C) = 0 for i = 0, 1, 2",
         [](const Catalog& c) {
             std::string lhs;
             for (int i = 0; i <= 2; ++i)
                 lhs += (i ? "," : "") +
                        to_string(euler_pairing(c.character(Generator{"O_Y", i}), c.character("F_C"), c.variety()));
             return std::pair{lhs, std::string("0,0,0")};
         }},
        {"chi_F_C_zero", "chi(F_C) = 0",
         [](const Catalog& c) {
             return std::pair{to_string(euler_characteristic(c.character("F_C"), c.variety())), std::string("0")};
         }},
        {"F_L_projection", "ch(pr O_L(1)) = ch(F_L)",
         [](const Catalog& c) {
             return std::pair{to_string(resolve(project_to_kuznetsov(KExpression(Generator{"O_L", 1}), c), c)),
                              ch(c, "F_L")};
         }},
        {"mukai_F_L", "v(F_L) = lambda_1",
         [](const Catalog& c) {
             return std::pair{to_string(mukai_vector(KExpression(Generator{"F_L", 0}), c)), std::string("1,0")};
         }},
        {"mukai_F_C'", "v(F_C') = 2 lambda_1 + lambda_2",
         [](const Catalog& c) {
             return std::pair{to_string(mukai_vector(KExpression(Generator{"F_C'", 0}), c)), std::string("2,1")};
         }},
        {"mukai_P_L", "v(P_L) = lambda_1 + lambda_2",
         [](const Catalog& c) {
             return std::pair{to_string(mukai_vector(KExpression(Generator{"P_L", 0}), c)), std::string("1,1")};
         }},
        {"P_L_right_mutation", "R_{O(-1)}(F_L(-1)) = -[P_L], i.e. P_L up to the shift [1]",
         [](const Catalog& c) {
             KExpression m = mutate_right(KExpression(Generator{"O_Y", -1}), KExpression(Generator{"F_L", -1}), c);
             return std::pair{to_string(resolve(m, c)), to_string(-c.character("P_L"))};
         }},
        {"F_C'_same_class", "ch(F_C') = ch(F_C)",
         [](const Catalog& c) { return std::pair{ch(c, "F_C'"), ch(c, "F_C")}; }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& i : identities()) out.push_back(i.id);
        return out;
    }();
    return ids;
}

std::string identity_description(std::string_view id) {
    for (const auto& identity : identities())
        if (identity.id == id) return identity.description;
    throw Error("UnknownIdentity", "no identity named '" + std::string(id) + "'");
}

IdentityReport verify_identity(const Catalog& cat, std::string_view id) {
    for (const auto& identity : identities()) {
        if (identity.id != id) continue;
        try {
            auto [lhs, rhs] = identity.sides(cat);
            return {identity.id, identity.description, lhs == rhs, lhs, rhs};
        } catch (const Error& e) {
            return {identity.id, identity.description, false, e.kind() + ": " + e.what(), ""};
        }
    }
    throw Error("UnknownIdentity", "no identity named '" + std::string(id) + "'");
}

std::vector<IdentityReport> verify_all_identities(const Catalog& cat) {
    std::vector<IdentityReport> out;
    for (const auto& id : identity_ids()) out.push_back(verify_identity(cat, id));
    return out;
}

}  // namespace cubicwalls
