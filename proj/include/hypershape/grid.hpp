#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypershape/errors.hpp"

namespace hypershape {

// Largest allowed extent per axis. Grids come from equal-width histograms,
// so every axis shares the bin count; 64 is far above the useful range.
inline constexpr int kMaxExtent = 64;

struct VoxelIndex {
    std::vector<int> coords;

    bool operator==(const VoxelIndex&) const = default;
};

// Dense n-dimensional binary image, row-major, one byte per cell.
// Immutable in spirit: operations below never modify their input.
class GridImage {
public:
    // All-zero image. Throws if n < 2, an extent is < 1 or > kMaxExtent,
    // or the cell count overflows.
    explicit GridImage(std::vector<int> shape);

    // Image with explicit cell contents (must match product(shape); every
    // value must be 0 or 1).
    GridImage(std::vector<int> shape, std::vector<std::uint8_t> cells);

    int ndim() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }
    std::size_t size() const { return cells_.size(); }
    const std::vector<std::uint8_t>& cells() const { return cells_; }

    std::uint8_t operator[](std::size_t flat) const { return cells_[flat]; }
    std::uint8_t at(std::span<const int> coords) const { return cells_[flat_index(coords)]; }
    void set(std::span<const int> coords, bool value) {
        cells_[flat_index(coords)] = value ? 1 : 0;
    }

    // Row-major flat index; throws OutOfBoundsError on a bad coordinate.
    std::size_t flat_index(std::span<const int> coords) const;

    // Inverse of flat_index.
    void unflatten(std::size_t flat, std::span<int> coords_out) const;

    bool in_bounds(std::span<const int> coords) const;

private:
    std::vector<int> shape_;
    std::vector<std::size_t> strides_;
    std::vector<std::uint8_t> cells_;
};

// Number of occupied cells (V). Zero for an all-zero image.
long long volume(const GridImage& image);

// Per-component mean of the occupied coordinates, rounded to the nearest
// integer voxel with ties going away from zero. Throws EmptyImageError.
VoxelIndex center_of_mass(const GridImage& image);

// Exact Euclidean distance from every voxel of a grid with the given shape
// to the voxel `center`; field[center] == 0. Row-major layout.
std::vector<double> distance_field(const std::vector<int>& shape, const VoxelIndex& center);

struct EnclosingRadius {
    int value = 0;
    // Set when the object is a single voxel sitting at `center`: the raw
    // maximum distance is 0 and the radius is clamped to 1.
    bool degenerate = false;
};

// Ceiling of the largest center-to-occupied-voxel distance.
EnclosingRadius min_enclosing_radius(const GridImage& image, const VoxelIndex& center);

// Binary erosion by the 2n-neighbor cross: a cell survives iff it and all
// its face-adjacent neighbors are occupied. Cells outside the grid count
// as background, so the hull of the image always erodes.
GridImage erode(const GridImage& image);

// Surface voxel count S = volume(image) - volume(erode(image)).
// At least 1 for any nonempty image.
long long surface_count(const GridImage& image);

}  // namespace hypershape
