#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "debox/analysis.hpp"
#include "debox/errors.hpp"
#include "debox/svg.hpp"

using debox::ArgumentError;
using debox::classify;
using debox::Crossover;
using debox::Mutation;
using debox::PlotFamily;
using debox::PlotPanel;
using debox::PmaxTable;
using debox::Strategy;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

PlotFamily reference_family() {
    return PlotFamily{Mutation::Rand1, Crossover::Bin, Strategy::Saturation, 5};
}

PlotPanel panel(double f, double cr, std::vector<double> values) {
    PlotPanel p;
    p.scale_factor = f;
    p.crossover_rate = cr;
    p.pois_sorted = values;
    p.color = classify({values});
    return p;
}

// Five panels spanning the axis corners, the three classes, an all-zero
// series, and a single-run series. The rendering of exactly this input is
// committed as a reference file.
std::vector<PlotPanel> reference_panels() {
    return {
        panel(0.05, 0.0, {0.0, 0.0, 0.0}),
        panel(1.0, 0.5, {0.0005, 0.001, 0.9995}),
        panel(1.0, 1.0, {0.002, 0.01}),
        panel(2.0, 0.0, {0.3, 0.5, 0.8, 1.0}),
        panel(2.0, 1.0, {1.0}),
    };
}

}  // namespace

TEST_CASE("the lattice figure reproduces the committed reference byte for byte") {
    const std::string got =
        debox::render_lattice_svg(reference_family(), reference_panels());
    CHECK(got == slurp(std::string(DEBOX_TEST_DATA_DIR) + "/lattice_reference.svg"));
    // And twice in a row, for determinism within a process.
    CHECK(got == debox::render_lattice_svg(reference_family(), reference_panels()));
}

TEST_CASE("the lattice carries one frame and one marker per panel, bars as data") {
    const std::string svg =
        debox::render_lattice_svg(reference_family(), reference_panels());
    CHECK(count_of(svg, "<g>") == 5);
    CHECK(count_of(svg, "<circle") == 5);
    // Rects: the page background, five panel frames, and only the non-zero
    // bars (3 + 2 + 4 + 1; the all-zero series draws none).
    CHECK(count_of(svg, "<rect") == 1 + 5 + 10);
    // The marker layer sits on top: every circle comes after the last panel.
    CHECK(svg.rfind("<circle") > svg.rfind("</g>"));
    // Title names the family.
    CHECK(svg.find("rand1 / bin / saturation / N=5") != std::string::npos);
}

TEST_CASE("panels anchor their lower-left corner at the true data point") {
    const std::string svg =
        debox::render_lattice_svg(reference_family(), reference_panels());
    // (Cr=0.5, F=1.0) maps to x = 70 + 0.5*600 = 370, y = 100 + 880 - 440 = 540.
    CHECK(svg.find("<circle cx=\"370.00\" cy=\"540.00\"") != std::string::npos);
    CHECK(svg.find("<rect x=\"370.00\" y=\"460.00\" width=\"120.00\" height=\"80.00\"") !=
          std::string::npos);
    // (Cr=1.0, F=2.0) maps to x = 670, y = 100 (the axis top).
    CHECK(svg.find("<circle cx=\"670.00\" cy=\"100.00\"") != std::string::npos);
}

TEST_CASE("bars take the class color of their panel") {
    const std::string svg =
        debox::render_lattice_svg(reference_family(), reference_panels());
    CHECK(svg.find("#008080") != std::string::npos);  // tightly confined series
    CHECK(svg.find("#ff8c00") != std::string::npos);  // near-confined series
    CHECK(svg.find("#9400d3") != std::string::npos);  // spread-out series
    CHECK(count_of(svg, "#1f77b4") == 5);             // one marker per panel
    // The spread-out panel draws four bars in its color.
    CHECK(count_of(svg, "fill=\"#9400d3\"") == 4);
}

TEST_CASE("lattice input is validated") {
    const PlotFamily fam = reference_family();
    CHECK_THROWS_AS(debox::render_lattice_svg(fam, {}), ArgumentError);
    PlotPanel p = panel(1.0, 0.5, {0.1});
    p.scale_factor = 0.0;
    CHECK_THROWS_AS(debox::render_lattice_svg(fam, {p}), ArgumentError);
    p = panel(1.0, 0.5, {0.1});
    p.scale_factor = 2.5;
    CHECK_THROWS_AS(debox::render_lattice_svg(fam, {p}), ArgumentError);
    p = panel(1.0, 0.5, {0.1});
    p.crossover_rate = -0.1;
    CHECK_THROWS_AS(debox::render_lattice_svg(fam, {p}), ArgumentError);
    p = panel(1.0, 0.5, {0.1});
    p.crossover_rate = 1.1;
    CHECK_THROWS_AS(debox::render_lattice_svg(fam, {p}), ArgumentError);
    p = panel(1.0, 0.5, {0.1});
    p.pois_sorted.clear();
    CHECK_THROWS_AS(debox::render_lattice_svg(fam, {p}), ArgumentError);
}

TEST_CASE("the tolerance figure reproduces the committed reference byte for byte") {
    const PmaxTable table = debox::tabulate_pmax(
        {0.0, 0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5},
        {1, 5, 10, 30, 50, 100, 500, 1000});
    const std::string got = debox::render_pmax_svg(table);
    CHECK(got == slurp(std::string(DEBOX_TEST_DATA_DIR) + "/pmax_reference.svg"));
}

TEST_CASE("the tolerance figure carries one curve, region, and label per row") {
    const PmaxTable table = debox::tabulate_pmax({0.0, 0.1, 0.5}, {1, 30, 500});
    const std::string svg = debox::render_pmax_svg(table);
    CHECK(count_of(svg, "<polyline") == 3);
    CHECK(count_of(svg, "<polygon") == 3);
    CHECK(count_of(svg, "fill-opacity=\"0.12\"") == 3);
    CHECK(svg.find(">n=1<") != std::string::npos);
    CHECK(svg.find(">n=30<") != std::string::npos);
    CHECK(svg.find(">n=500<") != std::string::npos);
    CHECK(svg.find("1e-7") != std::string::npos);  // log axis reaches its floor
    CHECK(svg.find("threshold t") != std::string::npos);

    CHECK_THROWS_AS(debox::render_pmax_svg(PmaxTable{}), ArgumentError);
    PmaxTable zeros;
    zeros.t_grid = {0.0};
    zeros.n_grid = {10};
    zeros.rows = {{0.0}};
    CHECK_THROWS_AS(debox::render_pmax_svg(zeros), ArgumentError);
}
