#include "rulerfold/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace rulerfold {

namespace {

constexpr double kMargin = 60.0;
constexpr double kColumn = 60.0;
constexpr double kPlotHeight = 320.0;
constexpr double kBracketGap = 50.0;
constexpr double kLabelWidth = 170.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

// Vertical pixel position of each prefix sum; larger sums sit higher.
std::vector<double> vertical_positions(const FoldingEvaluation& ev, bool schematic) {
    std::vector<double> ys;
    ys.reserve(ev.prefix_sums.size());
    if (schematic) {
        std::vector<Rational> levels = ev.prefix_sums;
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        const double step = levels.size() > 1 ? kPlotHeight / static_cast<double>(levels.size() - 1) : 0.0;
        for (const Rational& s : ev.prefix_sums) {
            auto rank = std::lower_bound(levels.begin(), levels.end(), s) - levels.begin();
            ys.push_back(kMargin + kPlotHeight - step * static_cast<double>(rank));
        }
        return ys;
    }
    const double range = ev.range.to_double();
    const double scale = range > 0 ? kPlotHeight / range : 0.0;
    for (const Rational& s : ev.prefix_sums) {
        ys.push_back(kMargin + (ev.max_s - s).to_double() * scale + (range > 0 ? 0.0 : kPlotHeight / 2));
    }
    return ys;
}

}  // namespace

std::string render_folding_svg(const RulerInstance& instance, const SignVector& signs, const SvgOptions& options) {
    const FoldingEvaluation ev = evaluate_folding(instance, signs);
    const std::size_t n = instance.size();
    const std::vector<double> ys = vertical_positions(ev, options.schematic);
    auto x_at = [](std::size_t i) { return kMargin + kColumn * static_cast<double>(i); };

    const double bracket_x = x_at(n) + kBracketGap;
    const double width = bracket_x + kLabelWidth + kMargin;
    const double height = kPlotHeight + 2 * kMargin;

    const auto max_it = std::find(ev.prefix_sums.begin(), ev.prefix_sums.end(), ev.max_s);
    const auto min_it = std::find(ev.prefix_sums.begin(), ev.prefix_sums.end(), ev.min_s);
    const std::size_t i_max = static_cast<std::size_t>(max_it - ev.prefix_sums.begin());
    const std::size_t i_min = static_cast<std::size_t>(min_it - ev.prefix_sums.begin());

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\" font-family=\"serif\" font-size=\"14\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i <= n; ++i) svg << (i ? " " : "") << fmt(x_at(i)) << ',' << fmt(ys[i]);
    svg << "\"/>\n";

    for (std::size_t i = 0; i < n; ++i) {
        const double mx = (x_at(i) + x_at(i + 1)) / 2;
        const double my = (ys[i] + ys[i + 1]) / 2;
        const std::string text = std::string(signs[i] == Sign::Plus ? "+" : "-") + instance[i].str();
        svg << "<text class=\"step\" x=\"" << fmt(mx - 6) << "\" y=\"" << fmt(my) << "\" text-anchor=\"end\">"
            << escape(text) << "</text>\n";
    }

    for (std::size_t i = 0; i <= n; ++i) {
        svg << "<circle class=\"hinge\" cx=\"" << fmt(x_at(i)) << "\" cy=\"" << fmt(ys[i]) << "\" r=\"3\" fill=\"black\"/>\n";
        if (i == i_max || i == i_min) {
            svg << "<circle class=\"extreme\" cx=\"" << fmt(x_at(i)) << "\" cy=\"" << fmt(ys[i])
                << "\" r=\"8\" fill=\"none\" stroke=\"black\"/>\n";
        }
        const bool below = i == i_min && i != i_max;
        svg << "<text class=\"hinge-label\" x=\"" << fmt(x_at(i)) << "\" y=\"" << fmt(ys[i] + (below ? 24 : -14))
            << "\" text-anchor=\"middle\">s<tspan baseline-shift=\"sub\" font-size=\"10\">" << i
            << "</tspan></text>\n";
    }

    const double top = ys[i_max];
    const double bottom = ys[i_min];
    svg << "<g class=\"range-bracket\" stroke=\"black\">\n";
    svg << "<line x1=\"" << fmt(bracket_x) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(bracket_x) << "\" y2=\""
        << fmt(bottom) << "\"/>\n";
    for (double y : {top, bottom}) {
        svg << "<line x1=\"" << fmt(bracket_x - 6) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(bracket_x + 6)
            << "\" y2=\"" << fmt(y) << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<text class=\"range-label\" x=\"" << fmt(bracket_x + 12) << "\" y=\"" << fmt((top + bottom) / 2 + 5)
        << "\">range = " << escape(ev.range.str()) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rulerfold
