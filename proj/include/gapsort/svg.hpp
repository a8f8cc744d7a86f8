#pragma once

// Minimal self-contained SVG charts: line/point panels with axes, ticks and
// a legend, and a histogram panel.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stats/diagnostics.hpp"

namespace gapsort::svg {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f77b4";
    bool lines = true;
    bool markers = true;
};

struct Panel {
    double x = 0, y = 0, width = 640, height = 400;
    std::string title;
    std::string x_label;
    std::string y_label;
};

namespace detail {

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Range {
    double lo = 0, hi = 1;

    void pad() {
        if (!(hi > lo)) {
            const double d = lo == 0.0 ? 1.0 : std::fabs(lo) * 0.1;
            lo -= d;
            hi += d;
        } else {
            const double d = (hi - lo) * 0.05;
            lo -= d;
            hi += d;
        }
    }
};

// Frame, ticks, labels; returns the mapping (data -> pixel) through out-params.
struct Frame {
    double left, top, w, h;
    Range xr, yr;

    double px(double x) const { return left + (x - xr.lo) / (xr.hi - xr.lo) * w; }
    double py(double y) const { return top + h - (y - yr.lo) / (yr.hi - yr.lo) * h; }
};

inline Frame draw_frame(std::ostringstream& os, const Panel& p, Range xr, Range yr) {
    Frame f{p.x + 70, p.y + 36, p.width - 90, p.height - 86, xr, yr};
    os << "<rect x=\"" << fmt(f.left) << "\" y=\"" << fmt(f.top) << "\" width=\"" << fmt(f.w) << "\" height=\""
       << fmt(f.h) << "\" fill=\"white\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << fmt(p.x + p.width / 2) << "\" y=\"" << fmt(p.y + 22)
       << "\" text-anchor=\"middle\" font-size=\"15\" font-weight=\"bold\">" << escape(p.title) << "</text>\n";
    os << "<text x=\"" << fmt(f.left + f.w / 2) << "\" y=\"" << fmt(p.y + p.height - 12)
       << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(p.x_label) << "</text>\n";
    os << "<text transform=\"translate(" << fmt(p.x + 16) << "," << fmt(f.top + f.h / 2)
       << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"12\">" << escape(p.y_label) << "</text>\n";
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
        const double yv = yr.lo + (yr.hi - yr.lo) * i / kTicks;
        const double tx = f.px(xv);
        const double ty = f.py(yv);
        os << "<line x1=\"" << fmt(tx) << "\" y1=\"" << fmt(f.top + f.h) << "\" x2=\"" << fmt(tx) << "\" y2=\""
           << fmt(f.top + f.h + 5) << "\" stroke=\"#333\"/>\n";
        os << "<text x=\"" << fmt(tx) << "\" y=\"" << fmt(f.top + f.h + 18)
           << "\" text-anchor=\"middle\" font-size=\"10\">" << fmt(xv) << "</text>\n";
        os << "<line x1=\"" << fmt(f.left - 5) << "\" y1=\"" << fmt(ty) << "\" x2=\"" << fmt(f.left) << "\" y2=\""
           << fmt(ty) << "\" stroke=\"#333\"/>\n";
        os << "<text x=\"" << fmt(f.left - 8) << "\" y=\"" << fmt(ty + 3)
           << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(yv) << "</text>\n";
    }
    return f;
}

}  // namespace detail

/// One x/y panel with any number of series.
inline void xy_panel(std::ostringstream& os, const Panel& p, const std::vector<Series>& series,
                     bool zero_line = false) {
    detail::Range xr{INFINITY, -INFINITY}, yr{INFINITY, -INFINITY};
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            xr.lo = std::min(xr.lo, x);
            xr.hi = std::max(xr.hi, x);
            yr.lo = std::min(yr.lo, y);
            yr.hi = std::max(yr.hi, y);
        }
    }
    if (!std::isfinite(xr.lo)) xr = {0, 1};
    if (!std::isfinite(yr.lo)) yr = {0, 1};
    xr.pad();
    yr.pad();
    const auto f = detail::draw_frame(os, p, xr, yr);

    if (zero_line && yr.lo < 0 && yr.hi > 0) {
        os << "<line x1=\"" << detail::fmt(f.left) << "\" y1=\"" << detail::fmt(f.py(0)) << "\" x2=\""
           << detail::fmt(f.left + f.w) << "\" y2=\"" << detail::fmt(f.py(0))
           << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        if (s.lines && s.points.size() > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
            for (auto [x, y] : s.points) os << detail::fmt(f.px(x)) << ',' << detail::fmt(f.py(y)) << ' ';
            os << "\"/>\n";
        }
        if (s.markers) {
            for (auto [x, y] : s.points) {
                os << "<circle cx=\"" << detail::fmt(f.px(x)) << "\" cy=\"" << detail::fmt(f.py(y))
                   << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
            }
        }
        if (!s.name.empty()) {
            const double ly = f.top + 14 + 16 * static_cast<double>(k);
            os << "<rect x=\"" << detail::fmt(f.left + 10) << "\" y=\"" << detail::fmt(ly - 8)
               << "\" width=\"10\" height=\"10\" fill=\"" << s.color << "\"/>\n";
            os << "<text x=\"" << detail::fmt(f.left + 26) << "\" y=\"" << detail::fmt(ly + 1)
               << "\" font-size=\"11\">" << detail::escape(s.name) << "</text>\n";
        }
    }
}

inline void histogram_panel(std::ostringstream& os, const Panel& p, const std::vector<stats::HistogramBin>& bins) {
    detail::Range xr{0, 1}, yr{0, 1};
    if (!bins.empty()) {
        xr = {bins.front().lo, bins.back().hi};
        for (const auto& b : bins) yr.hi = std::max(yr.hi, static_cast<double>(b.count));
    }
    if (!(xr.hi > xr.lo)) xr.pad();
    yr.hi *= 1.1;
    const auto f = detail::draw_frame(os, p, xr, yr);
    for (const auto& b : bins) {
        const double lo = bins.size() == 1 ? xr.lo : b.lo;
        const double hi = bins.size() == 1 ? xr.hi : b.hi;
        const double x0 = f.px(lo);
        const double x1 = f.px(hi);
        const double y0 = f.py(static_cast<double>(b.count));
        os << "<rect x=\"" << detail::fmt(x0) << "\" y=\"" << detail::fmt(y0) << "\" width=\""
           << detail::fmt(std::max(0.0, x1 - x0)) << "\" height=\"" << detail::fmt(f.py(0) - y0)
           << "\" fill=\"#7fa7d8\" stroke=\"#333\"/>\n";
    }
}

inline std::string document(double width, double height, const std::string& body) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width) << "\" height=\""
       << detail::fmt(height) << "\" viewBox=\"0 0 " << detail::fmt(width) << ' ' << detail::fmt(height)
       << "\" font-family=\"sans-serif\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body << "</svg>\n";
    return os.str();
}

/// n versus mean time for several algorithms.
inline std::string comparison_chart(const std::string& title, const std::vector<Series>& series) {
    std::ostringstream body;
    xy_panel(body, {0, 0, 720, 460, title, "n", "mean time (s)"}, series);
    return document(720, 460, body.str());
}

/// Residual plots in a 2x2 grid: normal probability, versus fits,
/// histogram, versus order.
inline std::string residual_chart(const std::string& title, const stats::ResidualSeries& s) {
    std::ostringstream body;
    constexpr double W = 480, H = 340, kTop = 36;
    body << "<text x=\"" << detail::fmt(W) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"17\" "
         << "font-weight=\"bold\">" << detail::escape(title) << "</text>\n";
    xy_panel(body, {0, kTop, W, H, "Normal Probability Plot", "normal quantile", "residual"},
             {{"", s.normal_probability, "#1f77b4", false, true}});
    xy_panel(body, {W, kTop, W, H, "Versus Fits", "fitted value", "residual"},
             {{"", s.versus_fits, "#1f77b4", false, true}}, true);
    histogram_panel(body, {0, kTop + H, W, H, "Histogram", "residual", "frequency"}, s.histogram);
    xy_panel(body, {W, kTop + H, W, H, "Versus Order", "observation order", "residual"},
             {{"", s.versus_order, "#1f77b4", true, true}}, true);
    return document(2 * W, kTop + 2 * H, body.str());
}

}  // namespace gapsort::svg
