#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypershape/errors.hpp"
#include "hypershape/grid.hpp"

namespace hypershape {

// m points in n dimensions, row-major. Every entry must be finite.
class PointCloud {
public:
    PointCloud(std::size_t rows, std::size_t cols, std::vector<double> values,
               std::vector<std::string> column_names = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t row, std::size_t col) const { return values_[row * cols_ + col]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& column_names() const { return column_names_; }

    // New cloud made of the given rows (repeats allowed); used by the bootstrap.
    PointCloud select_rows(const std::vector<std::size_t>& row_indices) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
    std::vector<std::string> column_names_;
};

struct AxisRange {
    double lo = 0.0;
    double hi = 0.0;
};

// Equal-width histogram spec: the same bin count on every axis. When
// `ranges` is empty, each axis spans its own data min..max.
struct BinningSpec {
    int bins = 0;
    std::vector<AxisRange> ranges;
};

// Default guard on bins^n; override per call (the CLI reads
// HYPERSHAPE_CELL_BUDGET).
inline constexpr std::size_t kDefaultCellBudget = std::size_t{1} << 26;

// Occupancy image of an equal-width n-D histogram: a cell is 1 iff at
// least one point lands in it. Bins are left-closed/right-open with the
// last bin closed, so the axis maximum is counted. Points outside an
// explicit range are dropped.
GridImage bin_points(const PointCloud& points, const BinningSpec& spec,
                     std::size_t cell_budget = kDefaultCellBudget);

}  // namespace hypershape
