#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hypershape {

// One plotted series: mean polyline, optionally flanked by dotted lo/hi
// quantile lines (same length as x when present).
struct ChartSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> mean;
    std::vector<double> lo;
    std::vector<double> hi;
};

struct LineChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
    // Horizontal reference drawn as a solid black line (the theoretical value).
    std::optional<double> reference;
    // Draw point markers with vertical lo..hi bars instead of ribbon lines.
    bool interval_bars = false;
    int width = 760;
    int height = 480;
};

void write_line_chart(const std::filesystem::path& path, const LineChartSpec& spec);

// Five-number summary for one box.
struct BoxStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

// A cluster of boxes sharing one x position (e.g. one bin count).
struct BoxGroup {
    std::string label;
    std::vector<BoxStats> boxes;  // one per series, in series order
};

struct BoxChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<std::string> series_labels;  // colors assigned in order
    std::vector<BoxGroup> groups;
    int width = 920;
    int height = 480;
};

void write_box_chart(const std::filesystem::path& path, const BoxChartSpec& spec);

// Categorical 10-color palette; wraps around.
const std::string& palette_color(std::size_t index);

}  // namespace hypershape
