#include "cubicwalls/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cubicwalls {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

// Rounds outward to a multiple of 1/4.
Rational quarter_floor(double x) { return Rational(static_cast<long long>(std::floor(x * 4)), 4); }
Rational quarter_ceil(double x) { return Rational(static_cast<long long>(std::ceil(x * 4)), 4); }

void add_guide(std::vector<Guide>& guides, const Rational& beta, const std::string& label) {
    for (const auto& g : guides)
        if (g.beta == beta) return;
    guides.push_back({beta, label});
}

}  // namespace

PlotSpec default_plot_spec(const TruncatedClass& w, bool negative_side, bool positive_side) {
    PlotSpec spec;
    spec.cls = w;
    spec.straight_wall = straight_wall(w);
    const bool has_walls = reduced_discriminant(w) > 0;
    if (has_walls) {
        spec.accumulation = accumulation_points(w);
        std::vector<Side> sides;
        if (negative_side) sides.push_back(Side::beta_negative);
        if (positive_side) sides.push_back(Side::beta_positive);
        for (Side side : sides) {
            if (!spec.straight_wall) break;
            try {
                spec.walls.push_back(largest_wall(w, side).wall);
            } catch (const Error& e) {
                if (e.kind() != "NoWall") throw;
            }
        }
    }
    if (spec.straight_wall) add_guide(spec.guides, *spec.straight_wall, to_string(*spec.straight_wall));
    for (const auto& wall : spec.walls) {
        add_guide(spec.guides, wall.center(), to_string(wall.center()));
        // Endpoints center -+ radius, when the radius is rational.
        QuadraticSurd radius = QuadraticSurd::sqrt(wall.radius_sq());
        if (radius.is_rational()) {
            const Rational lo = wall.center() - radius.rational_part();
            const Rational hi = wall.center() + radius.rational_part();
            // The endpoint away from the straight wall.
            const Rational pivot = spec.straight_wall ? *spec.straight_wall : wall.center();
            const Rational outer = abs(lo - pivot) >= abs(hi - pivot) ? lo : hi;
            add_guide(spec.guides, outer, to_string(outer));
        }
    }
    std::sort(spec.guides.begin(), spec.guides.end(), [](const Guide& a, const Guide& b) { return a.beta < b.beta; });

    // Frame: everything drawn plus a margin.
    std::vector<double> xs;
    double top = 0;
    for (const auto& g : spec.guides) xs.push_back(to_double(g.beta));
    for (const auto& a : spec.accumulation) xs.push_back(to_double(a));
    for (const auto& wall : spec.walls) {
        double r = std::sqrt(to_double(wall.radius_sq()));
        xs.push_back(to_double(wall.center()) - r);
        xs.push_back(to_double(wall.center()) + r);
        top = std::max(top, r);
    }
    if (xs.empty()) xs.push_back(0);
    const double lo = *std::min_element(xs.begin(), xs.end());
    const double hi = *std::max_element(xs.begin(), xs.end());
    const double margin = std::max(0.25, (hi - lo) * 0.15);
    spec.beta_min = quarter_floor(lo - margin);
    spec.beta_max = quarter_ceil(hi + margin);
    spec.alpha_max = quarter_ceil(std::max(top * 1.5, to_double(spec.beta_max - spec.beta_min) / 3));
    return spec;
}

std::string render_walls(const PlotSpec& spec) {
    if (spec.walls.empty() && !spec.straight_wall && spec.accumulation.empty() && spec.guides.empty())
        throw Error("EmptyPlot", "nothing to draw");
    const double width = 800, height = 420, pad = 40;
    const double b0 = to_double(spec.beta_min), b1 = to_double(spec.beta_max);
    const double a1 = to_double(spec.alpha_max);
    const double scale = std::min((width - 2 * pad) / (b1 - b0), (height - 2 * pad) / a1);
    // Plot coordinates (beta, alpha) map to pixels via this transform.
    const double ox = pad - b0 * scale, oy = height - pad;
    auto px = [&](double beta) { return ox + beta * scale; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "<title>Numerical walls";
    if (spec.cls) svg += " for (" + to_string(*spec.cls) + ")";
    svg += "</title>\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<g id=\"plot\" data-scale=\"" + num(scale) + "\" transform=\"translate(" + num(ox) + "," + num(oy) +
           ") scale(" + num(scale) + "," + num(-scale) + ")\" fill=\"none\" stroke=\"black\">\n";
    svg += "<line class=\"axis\" x1=\"" + num(b0) + "\" y1=\"0\" x2=\"" + num(b1) +
           "\" y2=\"0\" vector-effect=\"non-scaling-stroke\"/>\n";
    for (const auto& g : spec.guides)
        svg += "<line class=\"guide\" data-beta=\"" + to_string(g.beta) + "\" x1=\"" + num(to_double(g.beta)) +
               "\" y1=\"0\" x2=\"" + num(to_double(g.beta)) + "\" y2=\"" + num(a1) +
               "\" stroke=\"gray\" stroke-dasharray=\"4 4\" vector-effect=\"non-scaling-stroke\"/>\n";
    if (spec.straight_wall)
        svg += "<line class=\"straight-wall\" data-beta=\"" + to_string(*spec.straight_wall) + "\" x1=\"" +
               num(to_double(*spec.straight_wall)) + "\" y1=\"0\" x2=\"" + num(to_double(*spec.straight_wall)) +
               "\" y2=\"" + num(a1) + "\" stroke=\"blue\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
    for (const auto& wall : spec.walls) {
        if (!wall.is_semicircle()) continue;
        const double c = to_double(wall.center());
        const double r = std::sqrt(to_double(wall.radius_sq()));
        svg += "<path class=\"wall\" data-center=\"" + to_string(wall.center()) + "\" data-radius-sq=\"" +
               to_string(wall.radius_sq()) + "\" d=\"M " + num(c - r) + " 0 A " + num(r) + " " + num(r) +
               " 0 0 0 " + num(c + r) + " 0\" stroke=\"red\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    for (const auto& a : spec.accumulation)
        svg += "<circle class=\"accumulation\" data-beta=\"" + to_string(a) + "\" cx=\"" + num(to_double(a)) +
               "\" cy=\"0\" r=\"" + num(4 / scale) + "\" fill=\"black\"/>\n";
    svg += "</g>\n";
    // Labels live outside the flipped group so text stays upright.
    for (const auto& g : spec.guides)
        svg += "<text class=\"guide-label\" x=\"" + num(px(to_double(g.beta))) + "\" y=\"" + num(oy + 16) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + g.label + "</text>\n";
    for (const auto& a : spec.accumulation)
        svg += "<text class=\"accumulation-label\" x=\"" + num(px(to_double(a))) + "\" y=\"" + num(oy + 30) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + to_string(a) + "</text>\n";
    svg += "<text x=\"" + num(width - pad) + "\" y=\"" + num(oy + 16) + "\" font-size=\"12\">beta</text>\n";
    svg += "<text x=\"" + num(pad / 4) + "\" y=\"" + num(pad) + "\" font-size=\"12\">alpha</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace cubicwalls
