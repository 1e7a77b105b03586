#include "hypershape/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hypershape/errors.hpp"

namespace hypershape {

const std::string& palette_color(std::size_t index) {
    static const std::array<std::string, 10> palette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[index % palette.size()];
}

namespace {

std::string num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

// Tick label with just enough digits.
std::string tick_label(double v) {
    if (v == 0.0) return "0";
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

struct Frame {
    double x_min, x_max, y_min, y_max;
    double left, right, top, bottom;  // pixel edges of the plot area

    double px(double x) const {
        return left + (x - x_min) / (x_max - x_min) * (right - left);
    }
    double py(double y) const {
        return bottom - (y - y_min) / (y_max - y_min) * (bottom - top);
    }
};

// Round tick spacing to 1/2/5 * 10^k.
std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / target)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (span / (step * mult) <= target) {
            step *= mult;
            break;
        }
    }
    std::vector<double> ticks;
    double t = std::ceil(lo / step) * step;
    for (; t <= hi + step * 1e-9; t += step) {
        ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    }
    return ticks;
}

void open_svg(std::ostream& out, int width, int height) {
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "' viewBox='0 0 " << width << " " << height << "'>\n"
        << "<rect width='" << width << "' height='" << height << "' fill='white'/>\n";
}

void draw_axes(std::ostream& out, const Frame& f, const std::string& title,
               const std::string& x_label, const std::string& y_label) {
    out << "<g stroke='black' stroke-width='1' fill='none'>\n"
        << "<rect x='" << num(f.left) << "' y='" << num(f.top) << "' width='"
        << num(f.right - f.left) << "' height='" << num(f.bottom - f.top) << "'/>\n"
        << "</g>\n";

    for (double t : nice_ticks(f.x_min, f.x_max)) {
        const double x = f.px(t);
        out << "<line x1='" << num(x) << "' y1='" << num(f.bottom) << "' x2='" << num(x)
            << "' y2='" << num(f.bottom + 5) << "' stroke='black'/>\n"
            << "<text x='" << num(x) << "' y='" << num(f.bottom + 18)
            << "' font-size='11' text-anchor='middle'>" << tick_label(t) << "</text>\n";
    }
    for (double t : nice_ticks(f.y_min, f.y_max)) {
        const double y = f.py(t);
        out << "<line x1='" << num(f.left - 5) << "' y1='" << num(y) << "' x2='" << num(f.left)
            << "' y2='" << num(y) << "' stroke='black'/>\n"
            << "<text x='" << num(f.left - 8) << "' y='" << num(y + 4)
            << "' font-size='11' text-anchor='end'>" << tick_label(t) << "</text>\n";
    }

    const double mid_x = (f.left + f.right) / 2;
    out << "<text x='" << num(mid_x) << "' y='" << num(f.top - 8)
        << "' font-size='14' text-anchor='middle'>" << title << "</text>\n"
        << "<text x='" << num(mid_x) << "' y='" << num(f.bottom + 34)
        << "' font-size='12' text-anchor='middle'>" << x_label << "</text>\n"
        << "<text x='14' y='" << num((f.top + f.bottom) / 2)
        << "' font-size='12' text-anchor='middle' transform='rotate(-90 14 "
        << num((f.top + f.bottom) / 2) << ")'>" << y_label << "</text>\n";
}

void draw_legend(std::ostream& out, const Frame& f, const std::vector<std::string>& labels,
                 const std::vector<std::string>& colors) {
    double y = f.top + 14;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double x = f.right - 130;
        out << "<line x1='" << num(x) << "' y1='" << num(y - 4) << "' x2='" << num(x + 22)
            << "' y2='" << num(y - 4) << "' stroke='" << colors[i] << "' stroke-width='2'/>\n"
            << "<text x='" << num(x + 27) << "' y='" << num(y)
            << "' font-size='11'>" << labels[i] << "</text>\n";
        y += 16;
    }
}

void polyline(std::ostream& out, const Frame& f, const std::vector<double>& x,
              const std::vector<double>& y, const std::string& color, bool dotted) {
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='"
        << (dotted ? "1.2" : "2") << "'";
    if (dotted) out << " stroke-dasharray='3,4'";
    out << " points='";
    for (std::size_t i = 0; i < x.size(); ++i) {
        out << num(f.px(x[i])) << ',' << num(f.py(y[i])) << ' ';
    }
    out << "'/>\n";
}

}  // namespace

void write_line_chart(const std::filesystem::path& path, const LineChartSpec& spec) {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const auto& s : spec.series) {
        for (double v : s.x) { x_min = std::min(x_min, v); x_max = std::max(x_max, v); }
        for (double v : s.mean) { y_min = std::min(y_min, v); y_max = std::max(y_max, v); }
        for (double v : s.lo) { y_min = std::min(y_min, v); y_max = std::max(y_max, v); }
        for (double v : s.hi) { y_min = std::min(y_min, v); y_max = std::max(y_max, v); }
    }
    if (spec.series.empty() || !(x_min <= x_max)) {
        throw EmptyInputError("line chart needs at least one series with data");
    }
    if (spec.reference) {
        y_min = std::min(y_min, *spec.reference);
        y_max = std::max(y_max, *spec.reference);
    }
    if (x_min == x_max) { x_min -= 0.5; x_max += 0.5; }
    if (y_min == y_max) { y_min -= 0.5; y_max += 0.5; }
    const double y_pad = (y_max - y_min) * 0.06;
    const double x_pad = (x_max - x_min) * 0.03;

    Frame f{x_min - x_pad, x_max + x_pad, y_min - y_pad, y_max + y_pad,
            62.0, spec.width - 18.0, 36.0, spec.height - 46.0};

    std::ostringstream out;
    open_svg(out, spec.width, spec.height);
    draw_axes(out, f, spec.title, spec.x_label, spec.y_label);

    if (spec.reference) {
        const double y = f.py(*spec.reference);
        out << "<line x1='" << num(f.left) << "' y1='" << num(y) << "' x2='" << num(f.right)
            << "' y2='" << num(y) << "' stroke='black' stroke-width='1.6'/>\n";
    }

    std::vector<std::string> labels, colors;
    for (const auto& s : spec.series) {
        labels.push_back(s.label);
        colors.push_back(s.color);
        if (spec.interval_bars) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                const double x = f.px(s.x[i]);
                if (i < s.lo.size() && i < s.hi.size()) {
                    out << "<line x1='" << num(x) << "' y1='" << num(f.py(s.lo[i])) << "' x2='"
                        << num(x) << "' y2='" << num(f.py(s.hi[i])) << "' stroke='" << s.color
                        << "' stroke-width='1.4'/>\n";
                }
                out << "<circle cx='" << num(x) << "' cy='" << num(f.py(s.mean[i]))
                    << "' r='3' fill='" << s.color << "'/>\n";
            }
        } else {
            if (!s.lo.empty()) polyline(out, f, s.x, s.lo, s.color, true);
            if (!s.hi.empty()) polyline(out, f, s.x, s.hi, s.color, true);
            polyline(out, f, s.x, s.mean, s.color, false);
        }
    }
    draw_legend(out, f, labels, colors);
    out << "</svg>\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    file << out.str();
}

void write_box_chart(const std::filesystem::path& path, const BoxChartSpec& spec) {
    if (spec.groups.empty() || spec.series_labels.empty()) {
        throw EmptyInputError("box chart needs groups and series labels");
    }
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -y_min;
    for (const auto& g : spec.groups) {
        for (const auto& b : g.boxes) {
            y_min = std::min(y_min, b.min);
            y_max = std::max(y_max, b.max);
        }
    }
    if (y_min == y_max) { y_min -= 0.5; y_max += 0.5; }
    const double y_pad = (y_max - y_min) * 0.06;

    const std::size_t n_groups = spec.groups.size();
    const std::size_t n_series = spec.series_labels.size();
    Frame f{0.0, static_cast<double>(n_groups), y_min - y_pad, y_max + y_pad,
            62.0, spec.width - 18.0, 36.0, spec.height - 46.0};

    std::ostringstream out;
    open_svg(out, spec.width, spec.height);
    draw_axes(out, f, spec.title, spec.x_label, spec.y_label);

    const double group_width = (f.right - f.left) / static_cast<double>(n_groups);
    const double slot = group_width / (static_cast<double>(n_series) + 1.0);
    const double box_w = slot * 0.72;

    for (std::size_t gi = 0; gi < n_groups; ++gi) {
        const auto& group = spec.groups[gi];
        const double gx = f.left + group_width * (static_cast<double>(gi));
        out << "<text x='" << num(gx + group_width / 2) << "' y='" << num(f.bottom + 18)
            << "' font-size='11' text-anchor='middle'>" << group.label << "</text>\n";
        for (std::size_t si = 0; si < group.boxes.size() && si < n_series; ++si) {
            const BoxStats& b = group.boxes[si];
            const std::string& color = palette_color(si);
            const double cx = gx + slot * (static_cast<double>(si) + 1.0);
            const double x0 = cx - box_w / 2;
            // whiskers
            out << "<line x1='" << num(cx) << "' y1='" << num(f.py(b.min)) << "' x2='" << num(cx)
                << "' y2='" << num(f.py(b.q1)) << "' stroke='" << color << "'/>\n"
                << "<line x1='" << num(cx) << "' y1='" << num(f.py(b.q3)) << "' x2='" << num(cx)
                << "' y2='" << num(f.py(b.max)) << "' stroke='" << color << "'/>\n"
                << "<line x1='" << num(x0) << "' y1='" << num(f.py(b.min)) << "' x2='"
                << num(x0 + box_w) << "' y2='" << num(f.py(b.min)) << "' stroke='" << color
                << "'/>\n"
                << "<line x1='" << num(x0) << "' y1='" << num(f.py(b.max)) << "' x2='"
                << num(x0 + box_w) << "' y2='" << num(f.py(b.max)) << "' stroke='" << color
                << "'/>\n";
            // box + median
            out << "<rect x='" << num(x0) << "' y='" << num(f.py(b.q3)) << "' width='"
                << num(box_w) << "' height='" << num(f.py(b.q1) - f.py(b.q3)) << "' fill='"
                << color << "' fill-opacity='0.35' stroke='" << color << "'/>\n"
                << "<line x1='" << num(x0) << "' y1='" << num(f.py(b.median)) << "' x2='"
                << num(x0 + box_w) << "' y2='" << num(f.py(b.median)) << "' stroke='" << color
                << "' stroke-width='2'/>\n";
        }
    }

    std::vector<std::string> colors;
    for (std::size_t i = 0; i < n_series; ++i) colors.push_back(palette_color(i));
    draw_legend(out, f, spec.series_labels, colors);
    out << "</svg>\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    file << out.str();
}

}  // namespace hypershape
