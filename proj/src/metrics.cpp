#include "hypershape/metrics.hpp"

#include "hypershape/analytic.hpp"

namespace hypershape {

ShapeMetrics image_metrics(const GridImage& image) {
    ShapeMetrics m;
    m.n = image.ndim();
    m.volume = volume(image);
    if (m.volume == 0) throw EmptyImageError();

    const VoxelIndex center = center_of_mass(image);
    const EnclosingRadius radius = min_enclosing_radius(image, center);
    m.radius = radius.value;
    m.degenerate_radius = radius.degenerate;

    m.surface = surface_count(image);
    m.erosion_empty = m.surface == m.volume;

    m.sp = static_cast<double>(m.volume) / ball_volume(m.n, m.radius);
    m.sphericity = static_cast<double>(m.n) * static_cast<double>(m.volume) /
                   (static_cast<double>(m.radius) * static_cast<double>(m.surface));
    return m;
}

SpResult sp_from_image(const GridImage& image) {
    const ShapeMetrics m = image_metrics(image);
    return {m.sp, m.radius, m.volume, m.degenerate_radius};
}

SphericityResult sphericity_from_image(const GridImage& image) {
    const ShapeMetrics m = image_metrics(image);
    return {m.sphericity, m.surface, m.erosion_empty};
}

ShapeMetrics analyze(const PointCloud& points, const BinningSpec& spec,
                     std::size_t cell_budget) {
    return image_metrics(bin_points(points, spec, cell_budget));
}

}  // namespace hypershape
