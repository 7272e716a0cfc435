#include "cubicwalls/report.hpp"

#include "cubicwalls/destab.hpp"
#include "cubicwalls/identities.hpp"
#include "cubicwalls/kuznetsov.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace cubicwalls {

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

namespace {

using Sides = std::pair<std::string, std::string>;

struct Task {
    std::string id;
    std::string description;
    std::string source;
    std::function<Sides()> sides;
};

const TruncatedClass v2_prime{3, 0, Rational(-1)};
const TruncatedClass f_l_class{3, -1, Rational(-1, 2)};
const TiltPoint w0_top{Rational(-5, 6), Rational(1, 36)};

std::string classes_to_string(std::vector<TruncatedClass> classes) {
    std::sort(classes.begin(), classes.end());
    std::string out;
    for (const auto& c : classes) out += (out.empty() ? "" : "; ") + to_string(c);
    return out.empty() ? "none" : out;
}

std::string subs(const Enumeration& e) {
    std::vector<TruncatedClass> out;
    for (const auto& c : e.candidates) out.push_back(c.sub);
    return classes_to_string(out);
}

std::string surds(const std::vector<QuadraticSurd>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + to_string(x);
    return out;
}

Rational binomial(const Rational& n, int k) {
    Rational out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

std::string w0_classes() {
    return classes_to_string({{-1, 1, Rational(-1, 2)}, {-2, 2, Rational(-1)}, {-3, 3, Rational(-3, 2)},
                              {-4, 4, Rational(-2)},    {-5, 5, Rational(-5, 2)}, {-6, 6, Rational(-3)},
                              {4, -1, Rational(-1, 2)}, {5, -2, Rational(0)},     {6, -3, Rational(1, 2)},
                              {7, -4, Rational(1)},     {8, -5, Rational(3, 2)},  {9, -6, Rational(2)}});
}

std::string ordering_name(std::strong_ordering o) {
    if (o < 0) return "less";
    if (o > 0) return "greater";
    return "equal";
}

std::vector<Task> build_tasks(const Variety& x, const std::optional<Catalog>& catalog, const std::string& catalog_error) {
    auto cat = [&catalog, catalog_error]() -> const Catalog& {
        if (!catalog) throw Error("CatalogUnavailable", catalog_error);
        return *catalog;
    };
    std::vector<Task> tasks;

    for (const auto& id : identity_ids())
        tasks.push_back({"catalog." + id, identity_description(id), "catalog", [cat, id] {
                             IdentityReport r = verify_identity(cat(), id);
                             return Sides{r.lhs, r.rhs};
                         }});

    tasks.push_back({"riemannroch.todd", "Todd class of the cubic fourfold", "riemannroch", [x] {
                         std::string lhs;
                         for (const auto& t : x.todd.coeffs) lhs += (lhs.empty() ? "" : ",") + to_string(t);
                         return Sides{lhs, "1,3/2,5/4,3/4,1/3"};
                     }});
    tasks.push_back({"riemannroch.chi_O_Y", "chi(O_Y) = 1", "riemannroch", [x] {
                         return Sides{to_string(euler_characteristic(ChernCharacter::unit(x.dimension()), x)), "1"};
                     }});
    tasks.push_back({"riemannroch.chi_line_bundles", "chi(O(n)) = C(n+5,5) - C(n+2,5) for -5 <= n <= 10",
                     "riemannroch", [x] {
                         std::string lhs, rhs;
                         for (int n = -5; n <= 10; ++n) {
                             lhs += (n > -5 ? "," : "") +
                                    to_string(euler_characteristic(ChernCharacter::line_bundle(x.dimension(), n), x));
                             rhs += (n > -5 ? "," : "") + to_string(binomial(n + 5, 5) - binomial(n + 2, 5));
                         }
                         return Sides{lhs, rhs};
                     }});

    tasks.push_back({"walls.W0", "wall between v2' and O_Y(-1)", "walls", [] {
                         return Sides{to_string(wall_between(v2_prime, {1, -1, Rational(1, 2)})),
                                      "semicircle(center = -5/6, radius_sq = 1/36)"};
                     }});
    tasks.push_back({"walls.W0_misses_beta_-1", "W0 meets beta = -1 only on the boundary", "walls", [] {
                         auto hit = intersect_vertical(wall_between(v2_prime, {1, -1, Rational(1, 2)}), -1);
                         return Sides{hit.kind == VerticalIntersection::Kind::none ? "none" : to_string(hit.alpha_sq),
                                      "none"};
                     }});
    tasks.push_back({"walls.straight_v2'", "straight wall of v2'", "walls",
                     [] { return Sides{to_string(*straight_wall(v2_prime)), "0"}; }});
    tasks.push_back({"walls.straight_F_L", "straight wall of ch(F_L)", "walls",
                     [] { return Sides{to_string(*straight_wall(f_l_class)), "-1/3"}; }});
    tasks.push_back({"walls.accumulation_v2'", "accumulation points of v2'", "walls",
                     [] { return Sides{surds(accumulation_points(v2_prime)), "-sqrt(6)/3, sqrt(6)/3"}; }});
    tasks.push_back({"walls.accumulation_F_L", "accumulation points of ch(F_L)", "walls",
                     [] { return Sides{surds(accumulation_points(f_l_class)), "-1, 1/3"}; }});

    tasks.push_back({"destab.W0_classes", "classes at (beta, alpha^2) = (-5/6, 1/36) for v2'", "destab",
                     [] { return Sides{subs(enumerate_at(w0_top, v2_prime)), w0_classes()}; }});
    tasks.push_back({"destab.W0_complements", "the enumeration is closed under u -> v2' - u", "destab", [] {
                         auto e = enumerate_at(w0_top, v2_prime);
                         std::vector<TruncatedClass> comp;
                         for (const auto& c : e.candidates) comp.push_back(c.quot);
                         return Sides{classes_to_string(comp), subs(e)};
                     }});
    tasks.push_back({"destab.line_-1_v2'", "no wall for v2' meets beta = -1", "destab",
                     [] { return Sides{subs(walls_crossing_vertical(v2_prime, -1)), "none"}; }});
    tasks.push_back({"destab.line_-5/6_v2'", "every wall for v2' meeting beta = -5/6 is W0", "destab", [] {
                         auto e = walls_crossing_vertical(v2_prime, Rational(-5, 6));
                         std::string lhs;
                         for (const auto& c : e.candidates)
                             if (lhs.find(to_string(c.wall)) == std::string::npos)
                                 lhs += (lhs.empty() ? "" : "; ") + to_string(c.wall);
                         return Sides{lhs, "semicircle(center = -5/6, radius_sq = 1/36)"};
                     }});
    tasks.push_back({"destab.largest_v2'", "largest wall for v2' with beta < 0", "destab", [] {
                         auto lw = largest_wall(v2_prime, Side::beta_negative);
                         return Sides{to_string(lw.wall) + " witnesses " + classes_to_string(lw.witnesses),
                                      "semicircle(center = -5/6, radius_sq = 1/36) witnesses " + w0_classes()};
                     }});
    tasks.push_back({"destab.line_-1_F_L", "no wall for ch(F_L) meets beta = -1", "destab",
                     [] { return Sides{subs(walls_crossing_vertical(f_l_class, -1)), "none"}; }});
    tasks.push_back({"destab.nu_F_L_on_W0", "nu(F_L) < nu(v2') at the top of W0", "destab", [] {
                         auto wall = wall_between(v2_prime, {1, -1, Rational(1, 2)});
                         return Sides{ordering_name(slope_inequality_on_wall(w0_top, wall, f_l_class, v2_prime)) +
                                          " (" + to_string(nu(w0_top, f_l_class)) + " vs " +
                                          to_string(nu(w0_top, v2_prime)) + ")",
                                      "less (-2/9 vs 0)"};
                     }});

    tasks.push_back({"kuznetsov.gram", "-chi on lambda_1, lambda_2", "kuznetsov", [cat] {
                         auto g = gram_from_characters(cat());
                         return Sides{to_string(g[0][0]) + "," + to_string(g[0][1]) + ";" + to_string(g[1][0]) + "," +
                                          to_string(g[1][1]),
                                      "2,-1;-1,2"};
                     }});
    tasks.push_back({"kuznetsov.lambda2", "ch(pr O_L(2))", "kuznetsov",
                     [cat] { return Sides{to_string(lambda_basis(cat()).ch2), "-3,2,0,-1/3,0"}; }});
    tasks.push_back({"kuznetsov.v0_square", "(2 lambda_1 + lambda_2)^2 = 6", "kuznetsov",
                     [] { return Sides{to_string(mukai_pairing({2, 1}, {2, 1})), "6"}; }});
    tasks.push_back({"kuznetsov.A_B", "v(A)^2, v(B)^2, (v(A), v(B)) for v(A) = lambda_1, v(B) = lambda_1 + lambda_2",
                     "kuznetsov", [] {
                         MukaiVector a{1, 0}, b{1, 1};
                         return Sides{to_string(mukai_pairing(a, a)) + "," + to_string(mukai_pairing(b, b)) + "," +
                                          to_string(mukai_pairing(a, b)),
                                      "2,2,1"};
                     }});
    tasks.push_back({"kuznetsov.pairing_matches_chi", "(v(F_L), v(F_C')) = -chi(F_L, F_C')", "kuznetsov", [cat] {
                         const Catalog& c = cat();
                         auto a = mukai_vector(c.character("F_L"), c);
                         auto b = mukai_vector(c.character("F_C'"), c);
                         return Sides{to_string(mukai_pairing(a, b)),
                                      to_string(-euler_pairing(c.character("F_L"), c.character("F_C'"), c.variety()))};
                     }});
    return tasks;
}

}  // namespace

VerificationReport run_verify_all(const Variety& x, unsigned jobs) {
    std::optional<Catalog> catalog;
    std::string catalog_error;
    try {
        catalog.emplace(x);
    } catch (const Error& e) {
        catalog_error = e.kind() + ": " + e.what();
    }
    const std::vector<Task> tasks = build_tasks(x, catalog, catalog_error);

    VerificationReport report;
    report.checks.resize(tasks.size());
    auto run = [&](std::size_t i) {
        const Task& t = tasks[i];
        Check& c = report.checks[i];
        c.id = t.id;
        c.description = t.description;
        c.source = t.source;
        try {
            auto [lhs, rhs] = t.sides();
            c.lhs = lhs;
            c.rhs = rhs;
            c.passed = lhs == rhs;
        } catch (const std::exception& e) {
            c.lhs = std::string("error: ") + e.what();
            c.passed = false;
        }
    };
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run(i);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"id", c.id},
                               {"description", c.description},
                               {"source", c.source},
                               {"status", c.passed ? "PASS" : "FAIL"},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs}});
    }
    j["summary"] = {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}};
    return j.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += (c.passed ? "PASS " : "FAIL ") + c.id + ": " + c.description + "\n";
        if (!c.passed) out += "  lhs: " + c.lhs + "\n  rhs: " + c.rhs + "\n";
    }
    out += std::to_string(report.passed()) + "/" + std::to_string(report.checks.size()) + " checks passed\n";
    return out;
}

}  // namespace cubicwalls
