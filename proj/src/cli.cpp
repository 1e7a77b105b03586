#include "hypershape/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hypershape/analytic.hpp"
#include "hypershape/csv.hpp"
#include "hypershape/metrics.hpp"
#include "hypershape/rng.hpp"
#include "hypershape/sim.hpp"
#include "hypershape/stats.hpp"
#include "hypershape/svg.hpp"

namespace hypershape::cli {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

void write_manifest(const std::filesystem::path& out_dir, const std::string& command,
                    const std::vector<std::string>& argv, std::uint64_t seed,
                    const std::vector<std::string>& outputs, const json& extra = {}) {
    json manifest;
    manifest["command"] = command;
    manifest["argv"] = argv;
    manifest["software_version"] = kVersion;
    manifest["seed"] = seed;
    manifest["rng_algorithm"] = kRngAlgorithm;
    manifest["bin_convention"] = kBinConvention;
    manifest["outputs"] = outputs;
    manifest["timestamp"] = utc_timestamp();
    if (!extra.empty()) manifest["parameters"] = extra;

    std::ofstream file(out_dir / "manifest.json", std::ios::binary);
    if (!file) throw Error("cannot write " + (out_dir / "manifest.json").string());
    file << manifest.dump(2) << '\n';
}

std::string normalize_species(std::string value) {
    std::transform(value.begin(), value.end(), value.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (value.rfind("iris-", 0) == 0) value = value.substr(5);
    return value;
}

std::string normalize_subset(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) {
        return ch == '-' || ch == '_' || ch == ' ' ? '\0' : static_cast<char>(std::tolower(ch));
    });
    name.erase(std::remove(name.begin(), name.end(), '\0'), name.end());
    return name;
}

AnalyticShape parse_shape(const std::string& text, int dims) {
    if (text == "ball") return AnalyticShape::ball(dims);
    if (text == "cube") return AnalyticShape::cube(dims);
    if (text == "simplex") return AnalyticShape::simplex(dims);
    if (text == "orthoplex") return AnalyticShape::orthoplex(dims);
    if (text.rfind("platonic:", 0) == 0) {
        const std::string solid = text.substr(9);
        if (dims != 3) {
            throw UnsupportedShapeError("platonic solids are 3-dimensional; got --dims " +
                                        std::to_string(dims));
        }
        if (solid == "tetrahedron") return AnalyticShape::platonic(PlatonicSolid::Tetrahedron);
        if (solid == "cube") return AnalyticShape::platonic(PlatonicSolid::Cube);
        if (solid == "octahedron") return AnalyticShape::platonic(PlatonicSolid::Octahedron);
        if (solid == "dodecahedron") return AnalyticShape::platonic(PlatonicSolid::Dodecahedron);
        if (solid == "icosahedron") return AnalyticShape::platonic(PlatonicSolid::Icosahedron);
        throw UnsupportedShapeError("unknown platonic solid '" + solid + "'");
    }
    throw UnsupportedShapeError("unknown shape '" + text + "'");
}

struct FeatureTable {
    PointCloud points;
    std::vector<std::string> species;  // empty when no species column was used
};

// Pulls the numeric feature matrix out of a CSV table. When `subset` is
// nonempty the species column (named "species", otherwise the last column)
// is split off, rows are filtered, and the remaining columns are parsed.
FeatureTable load_features(const CsvTable& table, const std::vector<std::string>& columns,
                           const std::string& subset, const std::string& source_name) {
    std::vector<std::size_t> feature_cols;
    std::size_t species_col = table.header.size();

    if (!subset.empty()) {
        const auto it = std::find(table.header.begin(), table.header.end(), "species");
        species_col = it != table.header.end()
                          ? static_cast<std::size_t>(it - table.header.begin())
                          : table.header.size() - 1;
    }
    if (!columns.empty()) {
        for (const auto& name : columns) feature_cols.push_back(table.column_index(name));
    } else {
        for (std::size_t col = 0; col < table.header.size(); ++col) {
            if (col != species_col) feature_cols.push_back(col);
        }
    }

    std::vector<std::string> species;
    std::vector<std::size_t> keep;
    if (!subset.empty()) {
        species.reserve(table.rows.size());
        for (const auto& row : table.rows) species.push_back(row[species_col]);
        keep = subset_rows(species, subset);
    } else {
        keep.resize(table.rows.size());
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    }
    if (keep.empty()) {
        throw CsvError(source_name + ": no rows match subset '" + subset + "'", 0, 0);
    }

    std::vector<double> values;
    values.reserve(keep.size() * feature_cols.size());
    for (std::size_t row : keep) {
        for (std::size_t col : feature_cols) {
            values.push_back(parse_double_cell(table.rows[row][col],
                                               static_cast<long>(row) + 2,
                                               static_cast<long>(col) + 1, source_name));
        }
    }
    std::vector<std::string> names;
    for (std::size_t col : feature_cols) names.push_back(table.header[col]);
    return {PointCloud(keep.size(), feature_cols.size(), std::move(values), std::move(names)),
            std::move(species)};
}

std::string metric_row_csv(const ShapeMetrics& m, int bins) {
    std::ostringstream row;
    row << m.n << ',' << bins << ',' << m.volume << ',' << m.radius << ',' << m.surface << ','
        << format_double(m.sp) << ',' << format_double(m.sphericity) << ','
        << (m.degenerate_radius ? 1 : 0) << ',' << (m.erosion_empty ? 1 : 0);
    return row.str();
}

constexpr const char* kMetricsHeader =
    "n,bins,volume,radius,surface,sp,sphericity,degenerate_radius,erosion_empty";

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
    const auto dots = text.find("..");
    long lo, hi;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stol(text);
        } else {
            lo = std::stol(text.substr(0, dots));
            hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw EmptyInputError("cannot parse integer range '" + text + "'");
    }
    if (hi < lo) throw EmptyInputError("descending range '" + text + "'");
    std::vector<int> values;
    for (long v = lo; v <= hi; ++v) values.push_back(static_cast<int>(v));
    return values;
}

std::vector<AxisRange> parse_ranges(const std::string& text) {
    std::vector<AxisRange> ranges;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
            throw EmptyInputError("range '" + part + "' is not lo:hi");
        }
        try {
            ranges.push_back({std::stod(part.substr(0, colon)), std::stod(part.substr(colon + 1))});
        } catch (const std::exception&) {
            throw EmptyInputError("cannot parse range '" + part + "'");
        }
    }
    if (ranges.empty()) throw EmptyInputError("empty --ranges");
    return ranges;
}

std::vector<std::size_t> subset_rows(const std::vector<std::string>& species,
                                     const std::string& subset) {
    const std::string want = normalize_subset(subset);
    if (want != "all" && want != "setosa" && want != "versicolor" && want != "notsetosa") {
        throw CsvError("unknown subset '" + subset +
                           "' (expected all, setosa, versicolor or notsetosa)",
                       0, 0);
    }
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < species.size(); ++i) {
        const std::string value = normalize_species(species[i]);
        if (value != "setosa" && value != "versicolor" && value != "virginica") {
            throw CsvError("unknown species '" + species[i] + "' in data row " +
                               std::to_string(i + 1),
                           static_cast<long>(i) + 2, 0);
        }
        const bool match = want == "all" || (want == "notsetosa" && value != "setosa") ||
                           value == want;
        if (match) rows.push_back(i);
    }
    return rows;
}

int run_analytic(const AnalyticOptions& options, std::ostream& out) {
    if (options.variant != "paper" && options.variant != "geometric") {
        throw EmptyInputError("--variant must be paper or geometric");
    }
    const AnalyticShape shape = parse_shape(options.shape, options.dims);
    const double paper = sp_closed_form(shape, SpVariant::PaperFormula);
    const double geometric = sp_closed_form(shape, SpVariant::GeometricReference);

    out << "shape " << shape.name() << "\n";
    out << "sp " << format_double(options.variant == "geometric" ? geometric : paper) << " ("
        << options.variant << ")\n";
    out << "sp_paper " << format_double(paper) << "\n";
    out << "sp_geometric " << format_double(geometric) << "\n";
    if (shape.kind == ShapeKind::Ball) {
        out << "sphericity " << format_double(sphericity_ball(shape.dim)) << "\n";
    }
    if (std::abs(paper - geometric) > 1e-9 * std::max(1.0, std::abs(geometric))) {
        out << "note published formula and circumradius geometry disagree here; "
               "the Monte Carlo oracle sides with sp_geometric\n";
    }
    if (options.oracle_samples > 0) {
        const McEstimate estimate = mc_sp_oracle(shape, options.oracle_samples, options.seed);
        out << "sp_oracle " << format_double(estimate.value) << " +- "
            << format_double(estimate.std_error) << " (samples " << estimate.samples
            << ", seed " << options.seed << ")\n";
    }
    return kExitOk;
}

int run_metrics(const MetricsOptions& options, std::ostream& out) {
    const CsvTable table = read_csv(options.input);
    const FeatureTable features =
        load_features(table, options.columns, options.subset, options.input.string());

    BinningSpec spec{options.bins, options.ranges};
    const ShapeMetrics metrics = analyze(features.points, spec, options.cell_budget);

    out << kMetricsHeader << "\n" << metric_row_csv(metrics, options.bins) << "\n";

    if (!options.out_dir.empty()) {
        std::filesystem::create_directories(options.out_dir);
        const auto csv_path = options.out_dir / "metrics.csv";
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw Error("cannot write " + csv_path.string());
        file << kMetricsHeader << "\n" << metric_row_csv(metrics, options.bins) << "\n";
        write_manifest(options.out_dir, "metrics", options.argv, 0, {"metrics.csv"},
                       json{{"bins", options.bins}, {"subset", options.subset}});
    }
    return kExitOk;
}

int run_simulate_ball(const SimulateBallOptions& options, std::ostream& out) {
    std::filesystem::create_directories(options.out_dir);

    BallExperimentConfig config;
    config.dims = options.dims;
    config.bins = options.bins;
    config.samples_per_cell = options.samples;
    config.points = options.points;
    config.seed = options.seed;
    config.cell_budget = options.cell_budget;
    config.threads = options.threads;
    const std::vector<BallExperimentRow> rows = run_ball_experiment(config);

    CsvTable raw;
    raw.header = {"dim", "bins", "sample", "sp", "sphericity"};
    for (const auto& row : rows) {
        raw.rows.push_back({std::to_string(row.dim), std::to_string(row.bins),
                            std::to_string(row.sample), format_double(row.sp),
                            format_double(row.sphericity)});
    }
    write_csv(options.out_dir / "ball_raw.csv", raw);

    // Per-(dim, bins) summaries, in sweep order.
    CsvTable summary;
    summary.header = {"dim",     "bins",     "count",      "sp_mean",         "sp_q025",
                      "sp_median", "sp_q975", "sphericity_mean", "sphericity_q025",
                      "sphericity_median", "sphericity_q975"};
    struct CellSummary {
        int dim, bins;
        QuantileSummary sp, sphericity;
    };
    std::vector<CellSummary> cells;
    for (int dim : options.dims) {
        for (int bins : options.bins) {
            std::vector<double> sp_values, sph_values;
            for (const auto& row : rows) {
                if (row.dim == dim && row.bins == bins) {
                    sp_values.push_back(row.sp);
                    sph_values.push_back(row.sphericity);
                }
            }
            if (sp_values.empty()) continue;
            CellSummary cell{dim, bins, summarize(sp_values), summarize(sph_values)};
            cells.push_back(cell);
            summary.rows.push_back(
                {std::to_string(dim), std::to_string(bins), std::to_string(sp_values.size()),
                 format_double(cell.sp.mean), format_double(cell.sp.q025),
                 format_double(cell.sp.median), format_double(cell.sp.q975),
                 format_double(cell.sphericity.mean), format_double(cell.sphericity.q025),
                 format_double(cell.sphericity.median), format_double(cell.sphericity.q975)});
        }
    }
    write_csv(options.out_dir / "ball_summary.csv", summary);

    // One figure per metric plus the log-SP panel; figures derive purely
    // from the summaries.
    auto build_chart = [&](auto value_of_mean, auto value_of_lo, auto value_of_hi,
                           const std::string& title, const std::string& y_label,
                           std::optional<double> reference) {
        LineChartSpec chart;
        chart.title = title;
        chart.x_label = "bins";
        chart.y_label = y_label;
        chart.reference = reference;
        std::size_t color = 0;
        for (int dim : options.dims) {
            ChartSeries series;
            series.label = "n=" + std::to_string(dim);
            series.color = palette_color(color++);
            for (const auto& cell : cells) {
                if (cell.dim != dim) continue;
                series.x.push_back(cell.bins);
                series.mean.push_back(value_of_mean(cell));
                series.lo.push_back(value_of_lo(cell));
                series.hi.push_back(value_of_hi(cell));
            }
            if (!series.x.empty()) chart.series.push_back(std::move(series));
        }
        return chart;
    };

    write_line_chart(options.out_dir / "ball_sphericity.svg",
                     build_chart([](const CellSummary& c) { return c.sphericity.mean; },
                                 [](const CellSummary& c) { return c.sphericity.q025; },
                                 [](const CellSummary& c) { return c.sphericity.q975; },
                                 "Sphericity of simulated n-balls", "sphericity", 1.0));
    write_line_chart(options.out_dir / "ball_sp.svg",
                     build_chart([](const CellSummary& c) { return c.sp.mean; },
                                 [](const CellSummary& c) { return c.sp.q025; },
                                 [](const CellSummary& c) { return c.sp.q975; },
                                 "SP of simulated n-balls", "SP", 1.0));
    write_line_chart(options.out_dir / "ball_log_sp.svg",
                     build_chart([](const CellSummary& c) { return std::log(c.sp.mean); },
                                 [](const CellSummary& c) { return std::log(c.sp.q025); },
                                 [](const CellSummary& c) { return std::log(c.sp.q975); },
                                 "log SP of simulated n-balls", "ln SP", 0.0));

    write_manifest(options.out_dir, "simulate-ball", options.argv, options.seed,
                   {"ball_raw.csv", "ball_summary.csv", "ball_sphericity.svg", "ball_sp.svg",
                    "ball_log_sp.svg"},
                   json{{"points", options.points},
                        {"samples_per_cell", options.samples},
                        {"dims", options.dims},
                        {"bins", options.bins}});

    out << "wrote " << rows.size() << " raw rows, " << summary.rows.size()
        << " summary rows to " << options.out_dir.string() << "\n";
    return kExitOk;
}

int run_iris(const IrisOptions& options, std::ostream& out) {
    std::filesystem::create_directories(options.out_dir);
    const CsvTable table = read_csv(options.input);

    const std::vector<std::string> subsets =
        options.subsets.empty()
            ? std::vector<std::string>{"setosa", "versicolor", "notsetosa", "all"}
            : options.subsets;

    struct CellResult {
        std::string subset;
        int bins;
        BootstrapResult boot;
    };
    std::vector<CellResult> cells;
    for (std::size_t si = 0; si < subsets.size(); ++si) {
        const std::string& subset = subsets[si];
        const FeatureTable features = load_features(table, {}, subset, options.input.string());
        for (int bins : options.bins) {
            // Seed by subset position, not name hash, so runs reproduce
            // across standard libraries.
            const std::uint64_t cell_seed =
                derive_seed(options.seed, si + 1, static_cast<std::uint64_t>(bins));
            cells.push_back({subset, bins,
                             bootstrap_metric(features.points, {bins, {}}, options.replicates,
                                              cell_seed, options.cell_budget, options.threads)});
        }
    }

    CsvTable result;
    result.header = {"subset",    "bins",      "sp_q025",        "sp_median",
                     "sp_q975",   "sp_mean",   "sphericity_q025", "sphericity_median",
                     "sphericity_q975", "sphericity_mean"};
    for (const auto& cell : cells) {
        result.rows.push_back({cell.subset, std::to_string(cell.bins),
                               format_double(cell.boot.sp.q025),
                               format_double(cell.boot.sp.median),
                               format_double(cell.boot.sp.q975),
                               format_double(cell.boot.sp.mean),
                               format_double(cell.boot.sphericity.q025),
                               format_double(cell.boot.sphericity.median),
                               format_double(cell.boot.sphericity.q975),
                               format_double(cell.boot.sphericity.mean)});
    }
    write_csv(options.out_dir / "iris_table.csv", result);

    // Interval figures over the logs of the replicate values.
    auto interval_chart = [&](bool use_sp, const std::string& title, const std::string& y_label) {
        LineChartSpec chart;
        chart.title = title;
        chart.x_label = "bins";
        chart.y_label = y_label;
        chart.interval_bars = true;
        std::size_t color = 0;
        for (const auto& subset : subsets) {
            ChartSeries series;
            series.label = subset;
            series.color = palette_color(color);
            const double jitter = 0.08 * static_cast<double>(color) - 0.12;
            ++color;
            for (const auto& cell : cells) {
                if (cell.subset != subset) continue;
                const auto& values = use_sp ? cell.boot.sp_values : cell.boot.sphericity_values;
                std::vector<double> logs;
                logs.reserve(values.size());
                for (double v : values) logs.push_back(std::log(v));
                const QuantileSummary s = summarize(logs);
                series.x.push_back(cell.bins + jitter);
                series.mean.push_back(s.mean);
                series.lo.push_back(s.q025);
                series.hi.push_back(s.q975);
            }
            if (!series.x.empty()) chart.series.push_back(std::move(series));
        }
        return chart;
    };
    write_line_chart(options.out_dir / "iris_log_sp_intervals.svg",
                     interval_chart(true, "Bootstrapped log SP (95% CI)", "ln SP"));
    write_line_chart(options.out_dir / "iris_log_sphericity_intervals.svg",
                     interval_chart(false, "Bootstrapped log sphericity (95% CI)",
                                    "ln sphericity"));

    // Box summaries of the raw replicate values, grouped by bin count.
    auto box_chart = [&](bool use_sp, const std::string& title, const std::string& y_label) {
        BoxChartSpec chart;
        chart.title = title;
        chart.x_label = "bins";
        chart.y_label = y_label;
        chart.series_labels = subsets;
        for (int bins : options.bins) {
            BoxGroup group;
            group.label = std::to_string(bins);
            for (const auto& subset : subsets) {
                for (const auto& cell : cells) {
                    if (cell.subset != subset || cell.bins != bins) continue;
                    const auto& values =
                        use_sp ? cell.boot.sp_values : cell.boot.sphericity_values;
                    BoxStats box;
                    box.min = *std::min_element(values.begin(), values.end());
                    box.q1 = quantile(values, 0.25);
                    box.median = quantile(values, 0.5);
                    box.q3 = quantile(values, 0.75);
                    box.max = *std::max_element(values.begin(), values.end());
                    group.boxes.push_back(box);
                }
            }
            if (!group.boxes.empty()) chart.groups.push_back(std::move(group));
        }
        return chart;
    };
    write_box_chart(options.out_dir / "iris_sp_box.svg",
                    box_chart(true, "Bootstrapped SP by bin count", "SP"));
    write_box_chart(options.out_dir / "iris_sphericity_box.svg",
                    box_chart(false, "Bootstrapped sphericity by bin count", "sphericity"));

    write_manifest(options.out_dir, "iris", options.argv, options.seed,
                   {"iris_table.csv", "iris_log_sp_intervals.svg",
                    "iris_log_sphericity_intervals.svg", "iris_sp_box.svg",
                    "iris_sphericity_box.svg"},
                   json{{"replicates", options.replicates},
                        {"subsets", subsets},
                        {"bins", options.bins}});

    out << "wrote " << result.rows.size() << " table rows to " << options.out_dir.string()
        << "\n";
    return kExitOk;
}

}  // namespace hypershape::cli
