#include "hypershape/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace hypershape {

namespace {

std::vector<std::size_t> compute_strides(const std::vector<int>& shape) {
    std::vector<std::size_t> strides(shape.size(), 1);
    for (int axis = static_cast<int>(shape.size()) - 2; axis >= 0; --axis) {
        strides[axis] = strides[axis + 1] * static_cast<std::size_t>(shape[axis + 1]);
    }
    return strides;
}

std::size_t checked_cell_count(const std::vector<int>& shape) {
    if (shape.size() < 2) {
        throw DimensionTooLargeError("grid needs at least 2 axes, got " +
                                     std::to_string(shape.size()));
    }
    std::size_t count = 1;
    for (int extent : shape) {
        if (extent < 1) {
            throw DimensionTooLargeError("axis extent must be positive, got " +
                                         std::to_string(extent));
        }
        if (extent > kMaxExtent) {
            throw DimensionTooLargeError("axis extent " + std::to_string(extent) +
                                         " exceeds the limit of " + std::to_string(kMaxExtent));
        }
        if (count > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(extent)) {
            throw DimensionTooLargeError("grid cell count overflows");
        }
        count *= static_cast<std::size_t>(extent);
    }
    return count;
}

// Smallest integer r with r*r >= value.
int ceil_isqrt(long long value) {
    int r = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(value))));
    while (static_cast<long long>(r) * r < value) ++r;
    while (r > 0 && static_cast<long long>(r - 1) * (r - 1) >= value) --r;
    return r;
}

}  // namespace

GridImage::GridImage(std::vector<int> shape)
    : shape_(std::move(shape)),
      strides_(compute_strides(shape_)),
      cells_(checked_cell_count(shape_), 0) {}

GridImage::GridImage(std::vector<int> shape, std::vector<std::uint8_t> cells)
    : shape_(std::move(shape)), strides_(compute_strides(shape_)), cells_(std::move(cells)) {
    if (cells_.size() != checked_cell_count(shape_)) {
        throw OutOfBoundsError("cell array size " + std::to_string(cells_.size()) +
                               " does not match grid shape");
    }
    for (std::uint8_t cell : cells_) {
        if (cell > 1) {
            throw OutOfBoundsError("binary image cells must be 0 or 1");
        }
    }
}

std::size_t GridImage::flat_index(std::span<const int> coords) const {
    if (!in_bounds(coords)) {
        std::string msg = "voxel index (";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            msg += (i ? "," : "") + std::to_string(coords[i]);
        }
        throw OutOfBoundsError(msg + ") out of bounds");
    }
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < coords.size(); ++axis) {
        flat += static_cast<std::size_t>(coords[axis]) * strides_[axis];
    }
    return flat;
}

void GridImage::unflatten(std::size_t flat, std::span<int> coords_out) const {
    for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
        coords_out[axis] = static_cast<int>(flat / strides_[axis]);
        flat %= strides_[axis];
    }
}

bool GridImage::in_bounds(std::span<const int> coords) const {
    if (coords.size() != shape_.size()) return false;
    for (std::size_t axis = 0; axis < coords.size(); ++axis) {
        if (coords[axis] < 0 || coords[axis] >= shape_[axis]) return false;
    }
    return true;
}

long long volume(const GridImage& image) {
    const auto& cells = image.cells();
    return std::accumulate(cells.begin(), cells.end(), 0LL);
}

VoxelIndex center_of_mass(const GridImage& image) {
    const int n = image.ndim();
    std::vector<long long> sums(n, 0);
    long long count = 0;
    std::vector<int> coords(n, 0);
    const auto& shape = image.shape();
    for (std::size_t flat = 0; flat < image.size(); ++flat) {
        if (image[flat]) {
            ++count;
            for (int axis = 0; axis < n; ++axis) sums[axis] += coords[axis];
        }
        for (int axis = n - 1; axis >= 0; --axis) {
            if (++coords[axis] < shape[axis]) break;
            coords[axis] = 0;
        }
    }
    if (count == 0) throw EmptyImageError();

    VoxelIndex center;
    center.coords.resize(n);
    for (int axis = 0; axis < n; ++axis) {
        // Coordinates are non-negative, so round-half-away-from-zero is
        // floor(mean + 1/2), done in exact integer arithmetic.
        long long rounded = (2 * sums[axis] + count) / (2 * count);
        rounded = std::clamp<long long>(rounded, 0, shape[axis] - 1);
        center.coords[axis] = static_cast<int>(rounded);
    }
    return center;
}

std::vector<double> distance_field(const std::vector<int>& shape, const VoxelIndex& center) {
    GridImage probe(shape);  // validates the shape
    if (!probe.in_bounds(center.coords)) {
        throw OutOfBoundsError("distance field center out of bounds");
    }
    const int n = static_cast<int>(shape.size());
    std::vector<double> field(probe.size());
    std::vector<int> coords(n, 0);
    for (std::size_t flat = 0; flat < field.size(); ++flat) {
        long long sq = 0;
        for (int axis = 0; axis < n; ++axis) {
            const long long d = coords[axis] - center.coords[axis];
            sq += d * d;
        }
        field[flat] = std::sqrt(static_cast<double>(sq));
        for (int axis = n - 1; axis >= 0; --axis) {
            if (++coords[axis] < shape[axis]) break;
            coords[axis] = 0;
        }
    }
    return field;
}

EnclosingRadius min_enclosing_radius(const GridImage& image, const VoxelIndex& center) {
    if (!image.in_bounds(center.coords)) {
        throw OutOfBoundsError("radius center out of bounds");
    }
    const int n = image.ndim();
    const auto& shape = image.shape();
    long long max_sq = -1;
    std::vector<int> coords(n, 0);
    for (std::size_t flat = 0; flat < image.size(); ++flat) {
        if (image[flat]) {
            long long sq = 0;
            for (int axis = 0; axis < n; ++axis) {
                const long long d = coords[axis] - center.coords[axis];
                sq += d * d;
            }
            max_sq = std::max(max_sq, sq);
        }
        for (int axis = n - 1; axis >= 0; --axis) {
            if (++coords[axis] < shape[axis]) break;
            coords[axis] = 0;
        }
    }
    if (max_sq < 0) throw EmptyImageError();
    if (max_sq == 0) return {1, true};
    return {ceil_isqrt(max_sq), false};
}

GridImage erode(const GridImage& image) {
    const int n = image.ndim();
    const auto& shape = image.shape();

    std::vector<std::size_t> strides(n, 1);
    for (int axis = n - 2; axis >= 0; --axis) {
        strides[axis] = strides[axis + 1] * static_cast<std::size_t>(shape[axis + 1]);
    }

    std::vector<std::uint8_t> out_cells(image.size(), 0);
    std::vector<int> coords(n, 0);
    for (std::size_t flat = 0; flat < image.size(); ++flat) {
        if (image[flat]) {
            bool keep = true;
            for (int axis = 0; axis < n && keep; ++axis) {
                keep = coords[axis] > 0 && image[flat - strides[axis]] &&
                       coords[axis] < shape[axis] - 1 && image[flat + strides[axis]];
            }
            if (keep) out_cells[flat] = 1;
        }
        for (int axis = n - 1; axis >= 0; --axis) {
            if (++coords[axis] < shape[axis]) break;
            coords[axis] = 0;
        }
    }
    return GridImage(shape, std::move(out_cells));
}

long long surface_count(const GridImage& image) {
    const long long total = volume(image);
    if (total == 0) throw EmptyImageError();
    return total - volume(erode(image));
}

}  // namespace hypershape
