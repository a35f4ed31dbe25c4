#include "amrtriad/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "amrtriad/errors.hpp"

namespace amrtriad {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 85.0;
constexpr double kRight = 25.0;
constexpr double kTop = 45.0;
constexpr double kBottom = 55.0;
constexpr std::size_t kMaxDrawnPoints = 2000;

const char* const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
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

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
    double span() const { return hi - lo; }
};

// Expands a degenerate range and pads slightly so curves do not sit on the frame.
Range padded(double lo, double hi) {
    if (!(std::isfinite(lo) && std::isfinite(hi))) throw Error("svg: non-finite data range");
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) {
        const double pad = (lo == 0.0) ? 1.0 : std::fabs(lo) * 0.1;
        return {lo - pad, hi + pad};
    }
    const double pad = (hi - lo) * 0.04;
    return {lo - pad, hi + pad};
}

// Rounds a raw step to 1, 2, or 5 times a power of ten.
double nice_step(double raw) {
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    if (frac <= 1.0) return mag;
    if (frac <= 2.0) return 2.0 * mag;
    if (frac <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

std::vector<double> ticks(const Range& r, int target = 6) {
    const double step = nice_step(r.span() / target);
    std::vector<double> out;
    double t = std::ceil(r.lo / step) * step;
    for (; t <= r.hi + step * 1e-9; t += step) {
        if (std::fabs(t) < step * 1e-9) t = 0.0;
        out.push_back(t);
    }
    return out;
}

class Canvas {
public:
    Canvas(Range x, Range y) : x_(x), y_(y) {
        buf_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
                "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " +
                fmt(kHeight) + "\">\n";
        buf_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    double px(double x) const { return kLeft + (x - x_.lo) / x_.span() * (kWidth - kLeft - kRight); }
    double py(double y) const {
        return kHeight - kBottom - (y - y_.lo) / y_.span() * (kHeight - kTop - kBottom);
    }

    void frame_and_ticks(const std::string& title, const std::string& x_label,
                         const std::string& y_label) {
        buf_ += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
                fmt(kWidth - kLeft - kRight) + "\" height=\"" + fmt(kHeight - kTop - kBottom) +
                "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        for (double t : ticks(x_)) {
            const double x = px(t);
            line(x, kHeight - kBottom, x, kHeight - kBottom + 5, "#333", 1.0, false);
            text(x, kHeight - kBottom + 20, fmt(t, "%.4g"), 12, "middle");
        }
        for (double t : ticks(y_)) {
            const double y = py(t);
            line(kLeft - 5, y, kLeft, y, "#333", 1.0, false);
            text(kLeft - 9, y + 4, fmt(t, "%.4g"), 12, "end");
            line(kLeft, y, kWidth - kRight, y, "#eee", 1.0, false);
        }
        text(kWidth / 2, kTop - 18, xml_escape(title), 16, "middle");
        text(kWidth / 2, kHeight - 14, xml_escape(x_label), 13, "middle");
        buf_ += "<text x=\"20\" y=\"" + fmt(kHeight / 2) +
                "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                "transform=\"rotate(-90 20 " + fmt(kHeight / 2) + ")\">" +
                xml_escape(y_label) + "</text>\n";
    }

    void line(double x1, double y1, double x2, double y2, const char* color, double w,
              bool dashed) {
        buf_ += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
                "\" y2=\"" + fmt(y2) + "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(w) +
                "\"";
        if (dashed) buf_ += " stroke-dasharray=\"6 4\"";
        buf_ += "/>\n";
    }

    void text(double x, double y, const std::string& s, int size, const char* anchor) {
        buf_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" +
                std::to_string(size) + "\" text-anchor=\"" + anchor +
                "\" font-family=\"sans-serif\">" + s + "</text>\n";
    }

    void polyline(const std::vector<double>& xs, const std::vector<double>& ys, const char* color,
                  bool dashed) {
        const std::size_t n = xs.size();
        const std::size_t stride = (n > kMaxDrawnPoints) ? (n + kMaxDrawnPoints - 1) / kMaxDrawnPoints : 1;
        buf_ += "<polyline fill=\"none\" stroke=\"";
        buf_ += color;
        buf_ += "\" stroke-width=\"1.5\"";
        if (dashed) buf_ += " stroke-dasharray=\"6 4\"";
        buf_ += " points=\"";
        for (std::size_t i = 0; i < n; i += stride) {
            buf_ += fmt(px(xs[i]), "%.2f");
            buf_ += ',';
            buf_ += fmt(py(ys[i]), "%.2f");
            buf_ += ' ';
        }
        // Keep the final sample so the curve reaches its terminal value.
        if (stride > 1 && (n - 1) % stride != 0) {
            buf_ += fmt(px(xs[n - 1]), "%.2f");
            buf_ += ',';
            buf_ += fmt(py(ys[n - 1]), "%.2f");
        }
        buf_ += "\"/>\n";
    }

    void bar(double x1, double x2, double y, const char* color) {
        const double top = py(y);
        const double base = py(std::max(y_.lo, 0.0));
        buf_ += "<rect x=\"" + fmt(px(x1), "%.2f") + "\" y=\"" + fmt(top, "%.2f") + "\" width=\"" +
                fmt(std::max(0.5, px(x2) - px(x1) - 0.5), "%.2f") + "\" height=\"" +
                fmt(std::max(0.0, base - top), "%.2f") + "\" fill=\"" + color +
                "\" fill-opacity=\"0.85\" stroke=\"#333\" stroke-width=\"0.4\"/>\n";
    }

    void legend(const std::vector<SvgSeries>& series) {
        double y = kTop + 16;
        const double x = kWidth - kRight - 180;
        for (std::size_t i = 0; i < series.size(); ++i) {
            const char* color = kPalette[i % kPaletteSize];
            line(x, y - 4, x + 26, y - 4, color, 2.0, series[i].dashed);
            text(x + 32, y, xml_escape(series[i].label), 12, "start");
            y += 17;
        }
    }

    std::string finish() {
        buf_ += "</svg>\n";
        return std::move(buf_);
    }

private:
    Range x_, y_;
    std::string buf_;
};

}  // namespace

std::string render_line_chart(const SvgChart& chart) {
    if (chart.series.empty()) throw Error("svg: chart has no series");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& s : chart.series) {
        if (s.x.empty() || s.x.size() != s.y.size())
            throw Error("svg: series \"" + s.label + "\" is empty or ragged");
        for (double v : s.x) { xlo = std::min(xlo, v); xhi = std::max(xhi, v); }
        for (double v : s.y) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
    }
    Canvas c(padded(xlo, xhi), padded(ylo, yhi));
    c.frame_and_ticks(chart.title, chart.x_label, chart.y_label);
    for (std::size_t i = 0; i < chart.series.size(); ++i)
        c.polyline(chart.series[i].x, chart.series[i].y, kPalette[i % kPaletteSize],
                   chart.series[i].dashed);
    c.legend(chart.series);
    return c.finish();
}

std::string render_histogram_chart(const Histogram& hist, const std::string& title,
                                   const std::string& x_label) {
    if (hist.bin_edges.size() < 2) throw Error("svg: histogram has no bins");
    double yhi = 0.0;
    for (double m : hist.bin_mass) yhi = std::max(yhi, m);
    if (yhi == 0.0) yhi = 1.0;
    Canvas c(padded(hist.bin_edges.front(), hist.bin_edges.back()), padded(0.0, yhi));
    c.frame_and_ticks(title, x_label, "mass");
    for (std::size_t i = 0; i + 1 < hist.bin_edges.size(); ++i)
        if (hist.bin_mass[i] > 0.0)
            c.bar(hist.bin_edges[i], hist.bin_edges[i + 1], hist.bin_mass[i], kPalette[0]);
    return c.finish();
}

}  // namespace amrtriad
