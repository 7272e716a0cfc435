#include "cubicwalls/plot.hpp"
#include "cubicwalls/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <regex>

using namespace cubicwalls;

TEST_CASE("verification report passes on the cubic fourfold") {
    auto report = run_verify_all();
    for (const auto& c : report.checks) {
        CAPTURE(c.id);
        CAPTURE(c.lhs);
        CAPTURE(c.rhs);
        CHECK(c.passed);
    }
    CHECK(report.checks.size() >= 40);
    CHECK(report.all_passed());

    auto j = nlohmann::json::parse(report_to_json(report));
    CHECK(j["summary"]["total"] == report.checks.size());
    CHECK(j["summary"]["failed"] == 0);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c["status"] == "PASS");
        CHECK(c["lhs"] == c["rhs"]);
    }
    CHECK(report_to_text(report).find("checks passed") != std::string::npos);
}

TEST_CASE("report output is deterministic across thread counts") {
    auto one = report_to_json(run_verify_all(Variety::cubic_fourfold(), 1));
    auto four = report_to_json(run_verify_all(Variety::cubic_fourfold(), 4));
    CHECK(one == four);
}

TEST_CASE("a tampered Todd class is detected") {
    auto y = Variety::cubic_fourfold();
    y.todd.coeffs[4] = Rational(1, 2);
    auto report = run_verify_all(y);
    CHECK_FALSE(report.all_passed());
    bool chi_failed = false;
    for (const auto& c : report.checks)
        if (c.id == "riemannroch.chi_O_Y") chi_failed = !c.passed;
    CHECK(chi_failed);
}

TEST_CASE("wall plots") {
    auto spec = default_plot_spec(TruncatedClass(3, 0, -1));
    REQUIRE(spec.walls.size() == 1);
    CHECK(spec.walls[0] == WallDescriptor::semicircle(Rational(-5, 6), Rational(1, 36)));
    REQUIRE(spec.straight_wall.has_value());
    CHECK(*spec.straight_wall == 0);
    CHECK(spec.accumulation.size() == 2);

    auto svg = render_walls(spec);
    CHECK(svg == render_walls(spec));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("data-center=\"-5/6\"") != std::string::npos);
    CHECK(svg.find("data-radius-sq=\"1/36\"") != std::string::npos);
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, std::regex("d=\"M (\\S+) 0 A (\\S+) (\\S+) 0 0 0 (\\S+) 0\"")));
    CHECK(std::stod(m[1]) == doctest::Approx(-1.0));
    CHECK(std::stod(m[2]) == doctest::Approx(1.0 / 6));
    CHECK(std::stod(m[4]) == doctest::Approx(-2.0 / 3));
    CHECK(svg.find("-sqrt(6)/3") != std::string::npos);

    auto line_bundle = default_plot_spec(TruncatedClass(1, 0, 0));
    CHECK(line_bundle.walls.empty());
    CHECK(line_bundle.accumulation.empty());
    auto lb_svg = render_walls(line_bundle);
    CHECK(lb_svg.find("<path") == std::string::npos);
    CHECK(lb_svg.find("<circle") == std::string::npos);

    CHECK_THROWS_AS(render_walls(PlotSpec{}), Error);
}
