#pragma once

#include "cubicwalls/destab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubicwalls {

struct Guide {
    Rational beta;
    std::string label;
};

struct PlotSpec {
    std::optional<TruncatedClass> cls;
    Rational beta_min = -2;
    Rational beta_max = 1;
    Rational alpha_max = 1;
    std::vector<WallDescriptor> walls;
    std::optional<Rational> straight_wall;
    std::vector<QuadraticSurd> accumulation;
    std::vector<Guide> guides;
};

// Largest walls on the requested sides, the straight wall, accumulation
// points (when Delta > 0) and guides at the straight wall, the wall centers
// and rational wall endpoints.
PlotSpec default_plot_spec(const TruncatedClass& w, bool negative_side = true, bool positive_side = false);

// SVG in which beta runs horizontally and alpha vertically. Throws EmptyPlot.
std::string render_walls(const PlotSpec& spec);

}  // namespace cubicwalls
