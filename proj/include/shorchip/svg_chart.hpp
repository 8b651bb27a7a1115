#pragma once

// Self-contained SVG bar chart of an outcome distribution: solid bars for the
// measured frequencies, a dashed step line for the ideal probabilities. The
// numbers in the JSON report are normative; this image is informational.

#include "shorchip/distribution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace shorchip {

inline std::string bar_chart_svg(const OutcomeDistribution& measured,
                                 const OutcomeDistribution& ideal,
                                 const std::string& title = "Outcome distribution") {
    std::set<std::string> keys;
    for (const auto& [k, p] : measured.probabilities) keys.insert(k);
    for (const auto& [k, p] : ideal.probabilities) keys.insert(k);
    const std::vector<std::string> outcomes(keys.begin(), keys.end());
    const int n = std::max<int>(1, static_cast<int>(outcomes.size()));

    double top = 0.0;
    for (const std::string& k : outcomes)
        top = std::max({top, measured.probability(k), ideal.probability(k)});
    if (top <= 0.0) top = 1.0;
    top *= 1.15;  // headroom above the tallest bar

    const double width = 520.0, height = 340.0;
    const double left = 60.0, right = 20.0, bottom = 50.0, margin_top = 40.0;
    const double plot_w = width - left - right;
    const double plot_h = height - margin_top - bottom;
    const double slot = plot_w / n;
    const double bar_w = slot * 0.55;

    auto y_of = [&](double p) { return margin_top + plot_h * (1.0 - p / top); };

    std::ostringstream svg;
    svg.precision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "  <text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // Axes and horizontal gridlines at quarters of the range.
    svg << "  <line x1=\"" << left << "\" y1=\"" << margin_top << "\" x2=\"" << left << "\" y2=\""
        << margin_top + plot_h << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << left << "\" y1=\"" << margin_top + plot_h << "\" x2=\""
        << left + plot_w << "\" y2=\"" << margin_top + plot_h << "\" stroke=\"black\"/>\n";
    for (int g = 0; g <= 4; ++g) {
        const double p = top * g / 4.0;
        const double y = y_of(p);
        if (g > 0)
            svg << "  <line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plot_w
                << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
        svg << "  <text x=\"" << left - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << p
            << "</text>\n";
    }

    for (int i = 0; i < static_cast<int>(outcomes.size()); ++i) {
        const std::string& k = outcomes[i];
        const double x_mid = left + slot * (i + 0.5);
        const double mp = measured.probability(k);
        svg << "  <rect x=\"" << x_mid - bar_w / 2 << "\" y=\"" << y_of(mp) << "\" width=\""
            << bar_w << "\" height=\"" << y_of(0.0) - y_of(mp)
            << "\" fill=\"#4477aa\" fill-opacity=\"0.85\"/>\n";
        const double ip = ideal.probability(k);
        svg << "  <line x1=\"" << x_mid - slot * 0.45 << "\" y1=\"" << y_of(ip) << "\" x2=\""
            << x_mid + slot * 0.45 << "\" y2=\"" << y_of(ip)
            << "\" stroke=\"#cc3311\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
        svg << "  <text x=\"" << x_mid << "\" y=\"" << margin_top + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" << k
            << "</text>\n";
    }

    svg << "  <text x=\"" << left << "\" y=\"" << height - 12
        << "\" font-family=\"sans-serif\" font-size=\"11\">bars: measured frequency, dashed: "
           "ideal probability</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace shorchip
