#include "debox/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "debox/errors.hpp"
#include "debox/format.hpp"

namespace debox {

namespace {

// Palette and geometry shared by both figures. Numbers are pinned — the
// rendering is covered by a golden-bytes test.
constexpr const char* kTeal = "#008080";
constexpr const char* kOrange = "#ff8c00";
constexpr const char* kViolet = "#9400d3";
constexpr const char* kBlue = "#1f77b4";
constexpr const char* kAxis = "#333333";
constexpr const char* kPanelBorder = "#bbbbbb";

const char* color_fill(ColorClass c) {
    switch (c) {
        case ColorClass::Teal: return kTeal;
        case ColorClass::Orange: return kOrange;
        case ColorClass::Violet: return kViolet;
    }
    return kViolet;
}

std::string px(double v) { return format_fixed(v, 2); }

// Tick labels: trim trailing zeros from a fixed rendering so 0.5 stays
// "0.5" and 0.285 stays "0.285".
std::string tick_label(double v) {
    std::string s = format_fixed(v, 3);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

struct LatticeGeometry {
    double left = 70, axis_w = 600, right = 140;
    double top = 100, axis_h = 880, bottom = 60;
    double panel_w = 120, panel_h = 80;

    double width() const { return left + axis_w + right; }
    double height() const { return top + axis_h + bottom; }
    double x(double cr) const { return left + cr * axis_w; }
    double y(double f) const { return top + axis_h - (f / 2.0) * axis_h; }
};

}  // namespace

std::string render_lattice_svg(const PlotFamily& family,
                               const std::vector<PlotPanel>& panels) {
    if (panels.empty()) throw ArgumentError("cannot render an empty lattice");
    for (const auto& p : panels) {
        if (!(p.scale_factor > 0.0 && p.scale_factor <= 2.0)) {
            throw ArgumentError("panel scale factor " + format_real(p.scale_factor) +
                                " outside (0, 2]");
        }
        if (!(p.crossover_rate >= 0.0 && p.crossover_rate <= 1.0)) {
            throw ArgumentError("panel crossover rate " +
                                format_real(p.crossover_rate) + " outside [0, 1]");
        }
        if (p.pois_sorted.empty()) {
            throw ArgumentError("panel without run values at F=" +
                                format_real(p.scale_factor) + ", Cr=" +
                                format_real(p.crossover_rate));
        }
    }

    // Deterministic draw order: by (F, Cr) ascending.
    std::vector<const PlotPanel*> ordered;
    ordered.reserve(panels.size());
    for (const auto& p : panels) ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(),
              [](const PlotPanel* a, const PlotPanel* b) {
                  if (a->scale_factor != b->scale_factor) {
                      return a->scale_factor < b->scale_factor;
                  }
                  return a->crossover_rate < b->crossover_rate;
              });

    std::set<double> f_ticks, cr_ticks;
    for (const auto& p : panels) {
        f_ticks.insert(p.scale_factor);
        cr_ticks.insert(p.crossover_rate);
    }

    LatticeGeometry g;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(g.width())
      << "\" height=\"" << px(g.height()) << "\" viewBox=\"0 0 "
      << px(g.width()) << ' ' << px(g.height()) << "\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << px(g.width()) << "\" height=\""
      << px(g.height()) << "\" fill=\"#ffffff\"/>\n";

    s << "<text x=\"" << px(g.left) << "\" y=\"30\" font-family=\"monospace\" "
         "font-size=\"18\" fill=\"" << kAxis << "\">"
      << mutation_name(family.mutation) << " / " << crossover_name(family.crossover)
      << " / " << strategy_name(family.strategy) << " / N=" << family.pop_size
      << "</text>\n";

    // Axes.
    const double x0 = g.left, x1 = g.left + g.axis_w;
    const double y0 = g.top + g.axis_h, y1 = g.top;
    s << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x1)
      << "\" y2=\"" << px(y0) << "\" stroke=\"" << kAxis << "\" stroke-width=\"1\"/>\n";
    s << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x0)
      << "\" y2=\"" << px(y1) << "\" stroke=\"" << kAxis << "\" stroke-width=\"1\"/>\n";
    for (double cr : cr_ticks) {
        const double x = g.x(cr);
        s << "<line x1=\"" << px(x) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x)
          << "\" y2=\"" << px(y0 + 6) << "\" stroke=\"" << kAxis
          << "\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << px(x) << "\" y=\"" << px(y0 + 22)
          << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" fill=\""
          << kAxis << "\">" << tick_label(cr) << "</text>\n";
    }
    for (double f : f_ticks) {
        const double y = g.y(f);
        s << "<line x1=\"" << px(x0 - 6) << "\" y1=\"" << px(y) << "\" x2=\""
          << px(x0) << "\" y2=\"" << px(y) << "\" stroke=\"" << kAxis
          << "\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << px(x0 - 10) << "\" y=\"" << px(y + 4)
          << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"end\" fill=\""
          << kAxis << "\">" << tick_label(f) << "</text>\n";
    }
    s << "<text x=\"" << px(x0 + g.axis_w / 2) << "\" y=\"" << px(y0 + 45)
      << "\" font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\" fill=\""
      << kAxis << "\">Cr</text>\n";
    s << "<text x=\"22\" y=\"" << px(y1 + g.axis_h / 2)
      << "\" font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\" fill=\""
      << kAxis << "\" transform=\"rotate(-90 22 " << px(y1 + g.axis_h / 2)
      << ")\">F</text>\n";

    // First layer: the panels.
    for (const PlotPanel* p : ordered) {
        const double ax = g.x(p->crossover_rate);   // panel lower-left corner
        const double ay = g.y(p->scale_factor);
        const double top = ay - g.panel_h;
        s << "<g>\n";
        s << "<rect x=\"" << px(ax) << "\" y=\"" << px(top) << "\" width=\""
          << px(g.panel_w) << "\" height=\"" << px(g.panel_h)
          << "\" fill=\"#ffffff\" stroke=\"" << kPanelBorder
          << "\" stroke-width=\"0.8\"/>\n";
        const char* fill = color_fill(p->color);
        const double bar_w = g.panel_w / static_cast<double>(p->pois_sorted.size());
        for (std::size_t i = 0; i < p->pois_sorted.size(); ++i) {
            const double h = p->pois_sorted[i] * g.panel_h;
            if (h <= 0.0) continue;  // zero bars render as nothing
            s << "<rect x=\"" << px(ax + static_cast<double>(i) * bar_w)
              << "\" y=\"" << px(ay - h) << "\" width=\"" << px(bar_w)
              << "\" height=\"" << px(h) << "\" fill=\"" << fill << "\"/>\n";
        }
        s << "</g>\n";
    }

    // Second layer: blue markers at the true (Cr, F) locations.
    for (const PlotPanel* p : ordered) {
        s << "<circle cx=\"" << px(g.x(p->crossover_rate)) << "\" cy=\""
          << px(g.y(p->scale_factor)) << "\" r=\"3.5\" fill=\"" << kBlue
          << "\"/>\n";
    }

    s << "</svg>\n";
    return s.str();
}

namespace {

struct PmaxGeometry {
    double left = 80, axis_w = 560, right = 150;
    double top = 50, axis_h = 420, bottom = 70;
    double log_floor = 1e-7;  // p_max values clip here on the log axis

    double width() const { return left + axis_w + right; }
    double height() const { return top + axis_h + bottom; }
};

}  // namespace

std::string render_pmax_svg(const PmaxTable& table) {
    if (table.t_grid.empty() || table.n_grid.empty()) {
        throw ArgumentError("cannot render an empty table");
    }
    PmaxGeometry g;
    const double t_max = *std::max_element(table.t_grid.begin(), table.t_grid.end());
    if (!(t_max > 0.0)) throw ArgumentError("threshold grid needs a positive value");

    auto x_of = [&](double t) { return g.left + (t / t_max) * g.axis_w; };
    // log10 axis from log_floor up to 1.
    const double lf = std::log10(g.log_floor);
    auto y_of = [&](double p) {
        const double clipped = std::max(p, g.log_floor);
        const double frac = (std::log10(clipped) - lf) / (0.0 - lf);
        return g.top + g.axis_h - frac * g.axis_h;
    };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(g.width())
      << "\" height=\"" << px(g.height()) << "\" viewBox=\"0 0 "
      << px(g.width()) << ' ' << px(g.height()) << "\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << px(g.width()) << "\" height=\""
      << px(g.height()) << "\" fill=\"#ffffff\"/>\n";
    s << "<text x=\"" << px(g.left) << "\" y=\"28\" font-family=\"monospace\" "
         "font-size=\"16\" fill=\"" << kAxis
      << "\">largest per-dimension escape probability within threshold</text>\n";

    const double x0 = g.left, x1 = g.left + g.axis_w;
    const double y0 = g.top + g.axis_h, y1 = g.top;
    s << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x1)
      << "\" y2=\"" << px(y0) << "\" stroke=\"" << kAxis << "\" stroke-width=\"1\"/>\n";
    s << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x0)
      << "\" y2=\"" << px(y1) << "\" stroke=\"" << kAxis << "\" stroke-width=\"1\"/>\n";

    for (double t : table.t_grid) {
        const double x = x_of(t);
        s << "<line x1=\"" << px(x) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x)
          << "\" y2=\"" << px(y0 + 6) << "\" stroke=\"" << kAxis
          << "\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << px(x) << "\" y=\"" << px(y0 + 22)
          << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" fill=\""
          << kAxis << "\">" << tick_label(t) << "</text>\n";
    }
    for (int e = 0; e >= static_cast<int>(lf); --e) {
        const double p = std::pow(10.0, e);
        const double y = y_of(p);
        s << "<line x1=\"" << px(x0 - 6) << "\" y1=\"" << px(y) << "\" x2=\""
          << px(x0) << "\" y2=\"" << px(y) << "\" stroke=\"" << kAxis
          << "\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << px(x0 - 10) << "\" y=\"" << px(y + 4)
          << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\" fill=\""
          << kAxis << "\">1e" << e << "</text>\n";
    }
    s << "<text x=\"" << px(x0 + g.axis_w / 2) << "\" y=\"" << px(y0 + 48)
      << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" fill=\""
      << kAxis << "\">threshold t</text>\n";
    s << "<text x=\"24\" y=\"" << px(y1 + g.axis_h / 2)
      << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" fill=\""
      << kAxis << "\" transform=\"rotate(-90 24 " << px(y1 + g.axis_h / 2)
      << ")\">p_max</text>\n";

    for (std::size_t i = 0; i < table.n_grid.size(); ++i) {
        const auto& row = table.rows[i];
        // Shaded region [0, p_max]: the area under the curve down to the
        // axis floor.
        std::ostringstream pts;
        pts << px(x_of(table.t_grid.front())) << ',' << px(y0) << ' ';
        for (std::size_t j = 0; j < table.t_grid.size(); ++j) {
            pts << px(x_of(table.t_grid[j])) << ',' << px(y_of(row[j])) << ' ';
        }
        pts << px(x_of(table.t_grid.back())) << ',' << px(y0);
        s << "<polygon points=\"" << pts.str() << "\" fill=\"" << kTeal
          << "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";

        std::ostringstream line;
        for (std::size_t j = 0; j < table.t_grid.size(); ++j) {
            if (j) line << ' ';
            line << px(x_of(table.t_grid[j])) << ',' << px(y_of(row[j]));
        }
        s << "<polyline points=\"" << line.str() << "\" fill=\"none\" stroke=\""
          << kTeal << "\" stroke-width=\"1.5\"/>\n";
        s << "<text x=\"" << px(x1 + 8) << "\" y=\""
          << px(y_of(row.back()) + 4)
          << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << kAxis
          << "\">n=" << table.n_grid[i] << "</text>\n";
    }

    s << "</svg>\n";
    return s.str();
}

}  // namespace debox
