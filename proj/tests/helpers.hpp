#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hypershape/grid.hpp"
#include "hypershape/rng.hpp"

namespace hypershape::testing {

inline GridImage make_grid(std::vector<int> shape,
                           std::initializer_list<std::vector<int>> occupied) {
    GridImage image(std::move(shape));
    for (const auto& coords : occupied) image.set(coords, true);
    return image;
}

// 3x3 plus: center plus its four face neighbors.
inline GridImage plus_shape() {
    return make_grid({3, 3}, {{1, 1}, {0, 1}, {2, 1}, {1, 0}, {1, 2}});
}

inline GridImage full_grid(std::vector<int> shape) {
    GridImage image(shape);
    std::vector<std::uint8_t> cells(image.size(), 1);
    return GridImage(std::move(shape), std::move(cells));
}

// Random binary image with the given occupancy probability.
inline GridImage random_grid(std::vector<int> shape, double density, std::uint64_t seed) {
    GridImage image(shape);
    Rng rng(seed);
    std::vector<std::uint8_t> cells(image.size());
    for (auto& cell : cells) cell = rng.uniform01() < density ? 1 : 0;
    return GridImage(std::move(shape), std::move(cells));
}

}  // namespace hypershape::testing
