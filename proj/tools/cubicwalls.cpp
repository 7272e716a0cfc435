// Command-line front end for the cubicwalls library.

#include "cubicwalls/destab.hpp"
#include "cubicwalls/identities.hpp"
#include "cubicwalls/kuznetsov.hpp"
#include "cubicwalls/plot.hpp"
#include "cubicwalls/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>

using namespace cubicwalls;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
    int degree = 3;
    int dimension = 4;
    bool json = false;
    std::string out;
    unsigned jobs = 1;
    std::string todd;

    Variety variety() const {
        Variety x = Variety::hypersurface(Polarization(dimension, degree));
        if (!todd.empty()) {
            ChernCharacter t = parse_chern_character(todd);
            x.todd.coeffs.assign(t.coeffs().begin(), t.coeffs().end());
            if (static_cast<int>(x.todd.coeffs.size()) != dimension + 1)
                throw ParseError("Todd class needs " + std::to_string(dimension + 1) + " coefficients", 0);
        }
        return x;
    }
    Polarization polarization() const { return Polarization(dimension, degree); }
};

// Thrown for failed checks so the exit code becomes 1 after output.
struct ChecksFailed {};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw Error("IOError", "cannot write " + g.out);
    f << text;
}

void emit(const Globals& g, const json& j, const std::string& text) { emit(g, g.json ? j.dump(2) + "\n" : text); }

json class_json(const TruncatedClass& w) {
    return {{"r", to_string(w.r())}, {"c", to_string(w.c())}, {"s", to_string(w.s())}, {"text", to_string(w)}};
}

json wall_json(const WallDescriptor& w) {
    json j = {{"kind", to_string(w.kind())}};
    if (w.kind() == WallDescriptor::Kind::semicircle) {
        j["center"] = to_string(w.center());
        j["radius_sq"] = to_string(w.radius_sq());
    } else if (w.kind() == WallDescriptor::Kind::vertical) {
        j["beta"] = to_string(w.beta());
    }
    return j;
}

json ch_json(const ChernCharacter& ch) {
    json j = json::array();
    for (const auto& a : ch.coeffs()) j.push_back(to_string(a));
    return j;
}

json poly_json(const HilbertPolynomial& p) {
    json coeffs = json::array();
    for (const auto& a : p.coeffs()) coeffs.push_back(to_string(a));
    return {{"coefficients", coeffs}, {"text", to_string(p)}};
}

bool looks_like_expression(const std::string& text) {
    for (char ch : text)
        if (std::isalpha(static_cast<unsigned char>(ch))) return true;
    return false;
}

// A literal character "a0,...,an" or a K-expression over catalog names.
ChernCharacter read_character(const Globals& g, const std::string& text) {
    if (!looks_like_expression(text)) {
        ChernCharacter ch = parse_chern_character(text);
        if (ch.dimension() != g.dimension)
            throw ParseError("expected " + std::to_string(g.dimension + 1) + " coefficients", 0);
        return ch;
    }
    Catalog cat(g.variety());
    return resolve(parse_kexpression(text), cat);
}

// A literal class "r,c,s" or the truncation of a K-expression.
TruncatedClass read_class(const Globals& g, const std::string& text) {
    if (!looks_like_expression(text)) return parse_truncated_class(text);
    Catalog cat(g.variety());
    return truncate(resolve(parse_kexpression(text), cat));
}

json candidates_json(const Enumeration& e) {
    json list = json::array();
    for (const auto& c : e.candidates)
        list.push_back({{"sub", class_json(c.sub)},
                        {"quot", class_json(c.quot)},
                        {"wall", wall_json(c.wall)},
                        {"witness", {{"beta", to_string(c.witness.beta())}, {"alpha_sq", to_string(c.witness.alpha_sq())}}},
                        {"delta_sub", to_string(reduced_discriminant(c.sub))},
                        {"delta_quot", to_string(reduced_discriminant(c.quot))}});
    return {{"count", e.candidates.size()},
            {"candidates", list},
            {"box", {{"r_bound", to_string(e.box.r_bound)}, {"c_min", to_string(e.box.c_min)}, {"c_max", to_string(e.box.c_max)}}}};
}

std::string candidates_text(const Enumeration& e, const Polarization& pol) {
    std::string out = std::to_string(e.candidates.size()) + " candidate(s), |r| <= " + to_string(e.box.r_bound) + "\n";
    for (const auto& c : e.candidates) {
        out += "  sub (" + to_string(c.sub) + ")  quot (" + to_string(c.quot) + ")  " + to_string(c.wall);
        if (discriminant(c.sub, pol) == 0 || discriminant(c.quot, pol) == 0) out += "  [Delta = 0 member]";
        out += "\n";
    }
    return out;
}

std::string report_text_or_json(const Globals& g, const VerificationReport& r) {
    return g.json ? report_to_json(r) + "\n" : report_to_text(r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tilt-stability walls, destabilizers and Mukai lattice computations on a cubic fourfold"};
    app.require_subcommand(1);
    // Global flags may follow the subcommand.
    app.fallthrough();
    Globals g;
    app.add_option("--degree", g.degree, "degree of the hypersurface")->capture_default_str();
    app.add_option("--dimension", g.dimension, "dimension of the hypersurface")->capture_default_str();
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--out", g.out, "write output to this file");
    app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str();
    app.add_option("--todd", g.todd, "override the Todd class t0,...,tn");

    std::function<void()> action;
    auto on = [&](CLI::App* cmd, std::function<void()> f) { cmd->callback([&action, f] { action = f; }); };

    std::string cls, cls2, beta, alpha2, expr, expr2, side = "negative", id, name;
    std::string k_text = "0";
    bool reduced = false, all = false;

    auto* chern = app.add_subcommand("chern", "operations on Chern characters");
    chern->require_subcommand(1);
    auto* twist_cmd = chern->add_subcommand("twist", "ch^beta = e^{-beta H} ch");
    twist_cmd->add_option("--class", cls, "a0,...,an")->required();
    twist_cmd->add_option("--beta", beta, "rational p/q")->required();
    on(twist_cmd, [&] {
        ChernCharacter out = twist(read_character(g, cls), parse_rational(beta));
        emit(g, json{{"character", ch_json(out)}}, to_string(out));
    });
    auto* dual_cmd = chern->add_subcommand("dual", "ch with signs (-1)^k");
    dual_cmd->add_option("--class", cls, "a0,...,an")->required();
    on(dual_cmd, [&] {
        ChernCharacter out = dual(read_character(g, cls));
        emit(g, json{{"character", ch_json(out)}}, to_string(out));
    });
    auto* tensor_cmd = chern->add_subcommand("tensor", "ch tensored with O(kH)");
    tensor_cmd->add_option("--class", cls, "a0,...,an")->required();
    tensor_cmd->add_option("--k", k_text, "integer twist")->required();
    on(tensor_cmd, [&] {
        ChernCharacter out = tensor_line_bundle(read_character(g, cls), parse_integer(k_text));
        emit(g, json{{"character", ch_json(out)}}, to_string(out));
    });
    auto* truncate_cmd = chern->add_subcommand("truncate", "(ch_0, ch_1, ch_2) in the rank three lattice");
    truncate_cmd->add_option("--class", cls, "a0,...,an")->required();
    on(truncate_cmd, [&] {
        TruncatedClass w = truncate(read_character(g, cls));
        emit(g, class_json(w), to_string(w));
    });

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert polynomial P(n) = chi(F(nH))");
    hilbert_cmd->add_option("--class", cls, "a0,...,an or a catalog expression")->required();
    hilbert_cmd->add_flag("--reduced", reduced, "divide by the rank");
    on(hilbert_cmd, [&] {
        ChernCharacter ch = read_character(g, cls);
        Variety x = g.variety();
        HilbertPolynomial p = reduced ? reduced_hilbert_polynomial(ch, x) : hilbert_polynomial(ch, x);
        emit(g, poly_json(p), to_string(p));
    });

    auto* euler_cmd = app.add_subcommand("euler", "chi(a) or chi(a, b)");
    euler_cmd->add_option("--class", cls, "a0,...,an or a catalog expression")->required();
    euler_cmd->add_option("--with", cls2, "second argument b of chi(a, b)");
    on(euler_cmd, [&] {
        Variety x = g.variety();
        ChernCharacter a = read_character(g, cls);
        Rational chi = cls2.empty() ? euler_characteristic(a, x) : euler_pairing(a, read_character(g, cls2), x);
        emit(g, json{{"chi", to_string(chi)}}, to_string(chi));
    });

    auto* tilt = app.add_subcommand("tilt", "tilt slopes");
    tilt->require_subcommand(1);
    auto* nu_cmd = tilt->add_subcommand("nu", "nu_{alpha,beta}");
    nu_cmd->add_option("--beta", beta)->required();
    nu_cmd->add_option("--alpha2", alpha2, "alpha^2")->required();
    nu_cmd->add_option("--class", cls, "r,c,s")->required();
    on(nu_cmd, [&] {
        SlopeValue v = nu(TiltPoint(parse_rational(beta), parse_rational(alpha2)), read_class(g, cls));
        emit(g, json{{"nu", to_string(v)}}, to_string(v));
    });
    auto* mu_cmd = tilt->add_subcommand("mu", "mu_beta");
    mu_cmd->add_option("--beta", beta)->required();
    mu_cmd->add_option("--class", cls, "r,c,s")->required();
    on(mu_cmd, [&] {
        SlopeValue v = mu(parse_rational(beta), read_class(g, cls));
        emit(g, json{{"mu", to_string(v)}}, to_string(v));
    });
    auto* delta_cmd = tilt->add_subcommand("delta", "discriminant Delta");
    delta_cmd->add_option("--class", cls, "r,c,s")->required();
    on(delta_cmd, [&] {
        Rational d = discriminant(read_class(g, cls), g.polarization());
        emit(g, json{{"delta", to_string(d)}}, to_string(d));
    });
    auto* heart_cmd = tilt->add_subcommand("heart", "numerical heart membership test");
    heart_cmd->add_option("--beta", beta)->required();
    heart_cmd->add_option("--class", cls, "r,c,s")->required();
    on(heart_cmd, [&] {
        std::string h = to_string(in_heart_numerically(parse_rational(beta), read_class(g, cls)));
        emit(g, json{{"heart", h}}, h);
    });

    auto* wall = app.add_subcommand("wall", "numerical walls");
    wall->require_subcommand(1);
    auto* between_cmd = wall->add_subcommand("between", "wall defined by nu(w) = nu(u)");
    between_cmd->add_option("--w", cls, "r,c,s")->required();
    between_cmd->add_option("--u", cls2, "r,c,s")->required();
    on(between_cmd, [&] {
        WallDescriptor w = wall_between(read_class(g, cls), read_class(g, cls2));
        emit(g, wall_json(w), to_string(w));
    });
    auto* straight_cmd = wall->add_subcommand("straight", "the vertical wall beta = c/r");
    straight_cmd->add_option("--class", cls, "r,c,s")->required();
    on(straight_cmd, [&] {
        auto b = straight_wall(read_class(g, cls));
        emit(g, json{{"beta", b ? json(to_string(*b)) : json(nullptr)}}, b ? to_string(*b) : "none");
    });
    auto* acc_cmd = wall->add_subcommand("accumulation", "roots of ch_2^beta");
    acc_cmd->add_option("--class", cls, "r,c,s")->required();
    on(acc_cmd, [&] {
        auto roots = accumulation_points(read_class(g, cls));
        json j = json::array();
        std::string text;
        for (const auto& r : roots) {
            j.push_back({{"value", to_string(r)}, {"approx", to_double(r)}});
            text += (text.empty() ? "" : "\n") + to_string(r);
        }
        emit(g, json{{"points", j}}, text);
    });

    auto* destab = app.add_subcommand("destab", "destabilizing classes");
    destab->require_subcommand(1);
    auto* enum_cmd = destab->add_subcommand("enumerate", "all solutions of the wall inequalities at a point");
    enum_cmd->add_option("--class", cls, "r,c,s")->required();
    enum_cmd->add_option("--beta", beta)->required();
    enum_cmd->add_option("--alpha2", alpha2)->required();
    on(enum_cmd, [&] {
        Enumeration e = enumerate_at(TiltPoint(parse_rational(beta), parse_rational(alpha2)),
                                     read_class(g, cls), {g.jobs});
        emit(g, candidates_json(e), candidates_text(e, g.polarization()));
    });
    auto* line_cmd = destab->add_subcommand("line", "walls meeting the vertical line beta = beta0");
    line_cmd->add_option("--class", cls, "r,c,s")->required();
    line_cmd->add_option("--beta0", beta)->required();
    on(line_cmd, [&] {
        Enumeration e = walls_crossing_vertical(read_class(g, cls), parse_rational(beta), {g.jobs});
        emit(g, candidates_json(e), candidates_text(e, g.polarization()));
    });
    auto* largest_cmd = destab->add_subcommand("largest", "largest wall on one side of the straight wall");
    largest_cmd->add_option("--class", cls, "r,c,s")->required();
    largest_cmd->add_option("--side", side, "negative or positive")
        ->check(CLI::IsMember({"negative", "positive"}))
        ->capture_default_str();
    on(largest_cmd, [&] {
        LargestWall lw = largest_wall(read_class(g, cls),
                                      side == "negative" ? Side::beta_negative : Side::beta_positive, {g.jobs});
        json wit = json::array();
        std::string text = to_string(lw.wall) + "\nwitnesses:";
        for (const auto& w : lw.witnesses) {
            wit.push_back(class_json(w));
            text += " (" + to_string(w) + ")";
        }
        emit(g, json{{"wall", wall_json(lw.wall)}, {"witnesses", wit}, {"lines_scanned", lw.scanned.size()}}, text);
    });

    auto* mukai = app.add_subcommand("mukai", "Kuznetsov component and Mukai lattice");
    mukai->require_subcommand(1);
    auto* project_cmd = mukai->add_subcommand("project", "class of the projection to the Kuznetsov component");
    project_cmd->add_option("--expr", expr, "catalog expression, e.g. \"O_L(1)\"")->required();
    on(project_cmd, [&] {
        Catalog cat(g.variety());
        KExpression p = project_to_kuznetsov(parse_kexpression(expr), cat);
        ChernCharacter ch = resolve(p, cat);
        emit(g, json{{"expression", to_string(p)}, {"character", ch_json(ch)}},
             to_string(p) + "\nch = " + to_string(ch));
    });
    auto* vector_cmd = mukai->add_subcommand("vector", "coordinates in lambda_1, lambda_2");
    vector_cmd->add_option("--expr", expr, "catalog expression")->required();
    on(vector_cmd, [&] {
        Catalog cat(g.variety());
        MukaiVector v = mukai_vector(parse_kexpression(expr), cat);
        emit(g, json{{"x1", to_string(v.x1)}, {"x2", to_string(v.x2)}}, to_string(v));
    });
    auto* pair_cmd = mukai->add_subcommand("pair", "Mukai pairing of two vectors x1,x2");
    pair_cmd->add_option("--a", expr, "x1,x2")->required();
    pair_cmd->add_option("--b", expr2, "x1,x2")->required();
    on(pair_cmd, [&] {
        Integer p = mukai_pairing(parse_mukai_vector(expr), parse_mukai_vector(expr2));
        emit(g, json{{"pairing", to_string(p)}}, to_string(p));
    });

    auto* catalog = app.add_subcommand("catalog", "named objects");
    catalog->require_subcommand(1);
    auto* show_cmd = catalog->add_subcommand("show", "character and constructions of an entry");
    show_cmd->add_option("name", name, "entry, optionally twisted, e.g. F_C or O_Y(-1)")->required();
    on(show_cmd, [&] {
        Catalog cat(g.variety());
        Generator gen = parse_generator(name);
        const CatalogEntry& e = cat.entry(gen.base);
        ChernCharacter ch = cat.character(gen);
        json cons = json::array();
        std::string text = to_string(gen) + ": " + e.description + "\nch = " + to_string(ch);
        auto lp = to_line_point_basis(ch, cat.variety().polarization);
        text += "\nch in (1, H, H^2, l, pt) = ";
        for (std::size_t i = 0; i < lp.size(); ++i) text += (i ? "," : "") + to_string(lp[i]);
        if (e.exceptional) text += "\nexceptional";
        for (const auto& c : e.constructions) {
            cons.push_back({{"kind", c.kind}, {"formula", c.formula}});
            text += "\n  " + c.kind + ": " + c.formula;
        }
        text += "\nreduced Hilbert polynomial: " + to_string(reduced_hilbert_polynomial(ch, cat.variety()));
        emit(g,
             json{{"name", to_string(gen)},
                  {"description", e.description},
                  {"character", ch_json(ch)},
                  {"exceptional", e.exceptional},
                  {"constructions", cons}},
             text);
    });
    auto* list_cmd = catalog->add_subcommand("list", "all entries");
    on(list_cmd, [&] {
        Catalog cat(g.variety());
        json j = json::array();
        std::string text;
        for (const auto& e : cat.entries()) {
            j.push_back({{"name", e.name}, {"character", ch_json(e.character)}});
            text += e.name + "  " + to_string(e.character) + "\n";
        }
        emit(g, j, text);
    });
    auto* cverify_cmd = catalog->add_subcommand("verify", "check catalog identities");
    cverify_cmd->add_flag("--all", all, "every identity");
    cverify_cmd->add_option("--id", id, "a single identity");
    on(cverify_cmd, [&] {
        Catalog cat(g.variety());
        std::vector<IdentityReport> reports;
        if (!id.empty())
            reports.push_back(verify_identity(cat, id));
        else
            reports = verify_all_identities(cat);
        json j = json::array();
        std::string text;
        bool ok = true;
        for (const auto& r : reports) {
            ok = ok && r.passed;
            j.push_back({{"id", r.id}, {"description", r.description}, {"status", r.passed ? "PASS" : "FAIL"},
                         {"lhs", r.lhs}, {"rhs", r.rhs}});
            text += (r.passed ? "PASS " : "FAIL ") + r.id + ": " + r.description + "\n  lhs: " + r.lhs +
                    "\n  rhs: " + r.rhs + "\n";
        }
        emit(g, json{{"checks", j}}, text);
        if (!ok) throw ChecksFailed{};
    });

    auto* verify_cmd = app.add_subcommand("verify", "run every reproduction check");
    on(verify_cmd, [&] {
        VerificationReport r = run_verify_all(g.variety(), g.jobs);
        emit(g, report_text_or_json(g, r));
        if (!r.all_passed()) throw ChecksFailed{};
    });

    auto* plot_cmd = app.add_subcommand("plot", "SVG diagram of the walls of a class");
    plot_cmd->add_option("--class", cls, "r,c,s")->default_val("3,0,-1");
    plot_cmd->add_option("--side", side, "negative, positive or both")
        ->check(CLI::IsMember({"negative", "positive", "both"}))
        ->capture_default_str();
    on(plot_cmd, [&] {
        PlotSpec spec = default_plot_spec(read_class(g, cls), side != "positive", side != "negative");
        emit(g, render_walls(spec));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (action) action();
    } catch (const ChecksFailed&) {
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
