#pragma once

#include <string>
#include <vector>

#include "debox/analysis.hpp"
#include "debox/de.hpp"

namespace debox {

// One small panel of the lattice figure: the run series of a single
// configuration, drawn at its (Cr, F) data coordinates.
struct PlotPanel {
    double scale_factor = 0;    // F — vertical placement
    double crossover_rate = 0;  // Cr — horizontal placement
    std::vector<double> pois_sorted;  // ascending; bar heights
    ColorClass color = ColorClass::Violet;
};

// The one-figure-per-family descriptor used in titles.
struct PlotFamily {
    Mutation mutation = Mutation::Rand1;
    Crossover crossover = Crossover::Bin;
    Strategy strategy = Strategy::Saturation;
    int pop_size = 0;
};

// Small-multiples figure: global axes Cr in [0, 1] (horizontal) and
// F in (0, 2] (vertical, origin lower-left); each panel's lower-left corner
// sits exactly at its (Cr, F) point, bars colored by the panel's class, and
// a blue marker layer on top restates each panel's true grid location.
// Output is self-contained SVG with fixed-precision coordinates, so the
// bytes are identical across platforms for identical input.
std::string render_lattice_svg(const PlotFamily& family,
                               const std::vector<PlotPanel>& panels);

// Shaded-region figure for the per-dimension probability bound: threshold t
// on the horizontal axis, p_max on a log vertical axis, one curve per n
// with the region [0, p_max] shaded beneath it.
std::string render_pmax_svg(const PmaxTable& table);

}  // namespace debox
