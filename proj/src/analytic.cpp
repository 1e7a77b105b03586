#include "hypershape/analytic.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hypershape/sim.hpp"

namespace hypershape {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int n, int minimum) {
    if (n < minimum) {
        throw UnsupportedShapeError("dimension must be at least " + std::to_string(minimum) +
                                    ", got " + std::to_string(n));
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct PlatonicInfo {
    const char* name;
    int faces;
    int sides;
    double volume_coef;  // V = coef * R^3 at circumradius R
};

// Circumradius-1 volumes from the standard edge formulas.
PlatonicInfo platonic_info(PlatonicSolid solid) {
    const double s5 = std::sqrt(5.0);
    const double s3 = std::sqrt(3.0);
    switch (solid) {
        case PlatonicSolid::Tetrahedron:
            return {"tetrahedron", 4, 3, 8.0 / (9.0 * s3)};
        case PlatonicSolid::Cube:
            return {"cube", 6, 4, 8.0 / (3.0 * s3)};
        case PlatonicSolid::Octahedron:
            return {"octahedron", 8, 3, 4.0 / 3.0};
        case PlatonicSolid::Dodecahedron: {
            const double edge = 4.0 / (s3 * (1.0 + s5));
            return {"dodecahedron", 12, 5, (15.0 + 7.0 * s5) / 4.0 * edge * edge * edge};
        }
        case PlatonicSolid::Icosahedron: {
            const double edge = 4.0 / std::sqrt(10.0 + 2.0 * s5);
            return {"icosahedron", 20, 3, 5.0 / 12.0 * (3.0 + s5) * edge * edge * edge};
        }
    }
    throw UnsupportedShapeError("unknown platonic solid");
}

}  // namespace

AnalyticShape AnalyticShape::ball(int n) {
    require_dim(n, 2);
    return {ShapeKind::Ball, n, PlatonicSolid::Tetrahedron};
}

AnalyticShape AnalyticShape::cube(int n) {
    require_dim(n, 2);
    return {ShapeKind::Cube, n, PlatonicSolid::Tetrahedron};
}

AnalyticShape AnalyticShape::simplex(int n) {
    require_dim(n, 2);
    return {ShapeKind::Simplex, n, PlatonicSolid::Tetrahedron};
}

AnalyticShape AnalyticShape::orthoplex(int n) {
    require_dim(n, 2);
    return {ShapeKind::Orthoplex, n, PlatonicSolid::Tetrahedron};
}

AnalyticShape AnalyticShape::platonic(PlatonicSolid solid) {
    return {ShapeKind::Platonic, 3, solid};
}

int AnalyticShape::faces() const {
    if (kind != ShapeKind::Platonic) {
        throw UnsupportedShapeError("faces() only applies to platonic solids");
    }
    return platonic_info(solid).faces;
}

int AnalyticShape::sides_per_face() const {
    if (kind != ShapeKind::Platonic) {
        throw UnsupportedShapeError("sides_per_face() only applies to platonic solids");
    }
    return platonic_info(solid).sides;
}

std::string AnalyticShape::name() const {
    switch (kind) {
        case ShapeKind::Ball: return "ball(n=" + std::to_string(dim) + ")";
        case ShapeKind::Cube: return "cube(n=" + std::to_string(dim) + ")";
        case ShapeKind::Simplex: return "simplex(n=" + std::to_string(dim) + ")";
        case ShapeKind::Orthoplex: return "orthoplex(n=" + std::to_string(dim) + ")";
        case ShapeKind::Platonic: return platonic_info(solid).name;
    }
    return "?";
}

double gamma_half(int twice_x) {
    if (twice_x < 1) {
        throw UnsupportedShapeError("gamma_half needs a positive half-integer argument");
    }
    // Walk Gamma(x+1) = x Gamma(x) up from Gamma(1/2) or Gamma(1).
    double value = (twice_x % 2 == 1) ? std::sqrt(kPi) : 1.0;
    for (int t = twice_x % 2 == 1 ? 1 : 2; t < twice_x; t += 2) {
        value *= 0.5 * t;
    }
    return value;
}

double ball_volume(int n, double radius) {
    require_dim(n, 1);
    return std::pow(kPi, 0.5 * n) * std::pow(radius, n) / gamma_half(n + 2);
}

double ball_surface(int n, double radius) {
    require_dim(n, 2);
    return 2.0 * std::pow(kPi, 0.5 * n) * std::pow(radius, n - 1) / gamma_half(n);
}

double sphericity_ball(int n) {
    require_dim(n, 2);
    const double radius = 1.0;
    return n * ball_volume(n, radius) / (radius * ball_surface(n, radius));
}

double sp_closed_form(const AnalyticShape& shape, SpVariant variant) {
    const int n = shape.dim;
    switch (shape.kind) {
        case ShapeKind::Ball:
            return 1.0;

        case ShapeKind::Cube:
            if (variant == SpVariant::PaperFormula) {
                // Gamma(n/2+1) / (2 pi)^(n/2)
                return gamma_half(n + 2) / std::pow(2.0 * kPi, 0.5 * n);
            }
            // Edge 2r/sqrt(n) for circumradius r.
            return std::pow(2.0 / std::sqrt(static_cast<double>(n)), n) / ball_volume(n, 1.0);

        case ShapeKind::Simplex:
            if (variant == SpVariant::PaperFormula) {
                // sqrt(n+1) Gamma(n/2+1) 4^n / (n! (12 pi)^(n/2))
                return std::sqrt(n + 1.0) * gamma_half(n + 2) * std::pow(4.0, n) /
                       (factorial(n) * std::pow(12.0 * kPi, 0.5 * n));
            } else {
                // Edge r*sqrt(2(n+1)/n); V = sqrt(n+1)/(n! 2^(n/2)) l^n.
                const double edge = std::sqrt(2.0 * (n + 1.0) / n);
                const double vol =
                    std::sqrt(n + 1.0) / (factorial(n) * std::pow(2.0, 0.5 * n)) * std::pow(edge, n);
                return vol / ball_volume(n, 1.0);
            }

        case ShapeKind::Orthoplex:
            if (variant == SpVariant::PaperFormula) {
                // 2^n Gamma(n/2+1) / (n! pi^(n/2))
                return std::pow(2.0, n) * gamma_half(n + 2) / (factorial(n) * std::pow(kPi, 0.5 * n));
            }
            // Vertices at +-r e_i: V = 2^n r^n / n!.
            return std::pow(2.0, n) / factorial(n) / ball_volume(n, 1.0);

        case ShapeKind::Platonic: {
            if (n != 3) {
                throw UnsupportedShapeError("platonic solids are 3-dimensional");
            }
            const PlatonicInfo info = platonic_info(shape.solid);
            if (variant == SpVariant::PaperFormula) {
                // f s sin(360deg/s) Gamma(5/2) / (6 pi^(3/2)); the angle is
                // printed in degrees and converted here.
                const double angle = 2.0 * kPi / info.sides;
                return info.faces * info.sides * std::sin(angle) * gamma_half(5) /
                       (6.0 * std::pow(kPi, 1.5));
            }
            return info.volume_coef / ball_volume(3, 1.0);
        }
    }
    throw UnsupportedShapeError("unknown shape kind");
}

namespace {

// Vertices of the regular n-simplex inscribed in the unit sphere: unit
// vectors with pairwise dot -1/n, via the Helmert basis of the hyperplane
// sum(x) = 0 in R^(n+1).
std::vector<std::vector<double>> simplex_vertices(int n) {
    std::vector<std::vector<double>> vertices(n + 1, std::vector<double>(n, 0.0));
    const double scale = std::sqrt((n + 1.0) / n);
    for (int k = 1; k <= n; ++k) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i <= n; ++i) {
            const double h = i < k ? norm : (i == k ? -k * norm : 0.0);
            vertices[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] = scale * h;
        }
    }
    return vertices;
}

struct HalfSpaceSet {
    std::vector<std::array<double, 3>> normals;  // unit outward normals
    double offset = 0.0;                         // inradius at circumradius 1
};

HalfSpaceSet platonic_half_spaces(PlatonicSolid solid) {
    const double s5 = std::sqrt(5.0);
    const double s3 = std::sqrt(3.0);
    const double phi = (1.0 + s5) / 2.0;
    HalfSpaceSet hs;
    switch (solid) {
        case PlatonicSolid::Tetrahedron: {
            const double a = 1.0 / s3;
            hs.normals = {{-a, -a, -a}, {-a, a, a}, {a, -a, a}, {a, a, -a}};
            hs.offset = 1.0 / 3.0;
            return hs;
        }
        case PlatonicSolid::Cube: {
            hs.normals = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
            hs.offset = 1.0 / s3;
            return hs;
        }
        case PlatonicSolid::Octahedron: {
            const double a = 1.0 / s3;
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) hs.normals.push_back({sx * a, sy * a, sz * a});
            hs.offset = a;
            return hs;
        }
        case PlatonicSolid::Dodecahedron: {
            // Face normals point at the dual icosahedron's vertices.
            const double norm = 1.0 / std::sqrt(1.0 + phi * phi);
            for (int s1 : {-1, 1}) {
                for (int s2 : {-1, 1}) {
                    hs.normals.push_back({0.0, s1 * norm, s2 * phi * norm});
                    hs.normals.push_back({s1 * norm, s2 * phi * norm, 0.0});
                    hs.normals.push_back({s2 * phi * norm, 0.0, s1 * norm});
                }
            }
            hs.offset = 2.0 * std::sqrt((25.0 + 11.0 * s5) / 10.0) / (s3 * (1.0 + s5));
            return hs;
        }
        case PlatonicSolid::Icosahedron: {
            // Face normals point at the dual dodecahedron's vertices.
            const double inv_phi = 1.0 / phi;
            const double corner_norm = 1.0 / s3;
            const double edge_norm = 1.0 / std::sqrt(inv_phi * inv_phi + phi * phi);
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1})
                        hs.normals.push_back(
                            {sx * corner_norm, sy * corner_norm, sz * corner_norm});
            for (int s1 : {-1, 1}) {
                for (int s2 : {-1, 1}) {
                    hs.normals.push_back({0.0, s1 * inv_phi * edge_norm, s2 * phi * edge_norm});
                    hs.normals.push_back({s1 * inv_phi * edge_norm, s2 * phi * edge_norm, 0.0});
                    hs.normals.push_back({s2 * phi * edge_norm, 0.0, s1 * inv_phi * edge_norm});
                }
            }
            hs.offset = s3 * (3.0 + s5) / (3.0 * std::sqrt(10.0 + 2.0 * s5));
            return hs;
        }
    }
    throw UnsupportedShapeError("unknown platonic solid");
}

}  // namespace

McEstimate mc_sp_oracle(const AnalyticShape& shape, long long samples, std::uint64_t seed) {
    if (samples < 1) throw EmptyInputError("oracle needs at least one sample");
    const int n = shape.dim;

    // Membership test against the shape scaled to circumradius 1.
    std::function<bool(const double*)> inside;
    switch (shape.kind) {
        case ShapeKind::Ball:
            inside = [](const double*) { return true; };
            break;
        case ShapeKind::Cube: {
            const double half_edge = 1.0 / std::sqrt(static_cast<double>(n));
            inside = [n, half_edge](const double* x) {
                for (int i = 0; i < n; ++i)
                    if (std::abs(x[i]) > half_edge) return false;
                return true;
            };
            break;
        }
        case ShapeKind::Orthoplex:
            inside = [n](const double* x) {
                double l1 = 0.0;
                for (int i = 0; i < n; ++i) l1 += std::abs(x[i]);
                return l1 <= 1.0;
            };
            break;
        case ShapeKind::Simplex: {
            auto vertices = simplex_vertices(n);
            const double bound = -1.0 / n;
            inside = [n, vertices = std::move(vertices), bound](const double* x) {
                for (const auto& v : vertices) {
                    double dot = 0.0;
                    for (int i = 0; i < n; ++i) dot += x[i] * v[static_cast<std::size_t>(i)];
                    if (dot < bound) return false;
                }
                return true;
            };
            break;
        }
        case ShapeKind::Platonic: {
            if (n != 3) throw UnsupportedShapeError("platonic solids are 3-dimensional");
            auto hs = platonic_half_spaces(shape.solid);
            inside = [hs = std::move(hs)](const double* x) {
                for (const auto& u : hs.normals) {
                    if (x[0] * u[0] + x[1] * u[1] + x[2] * u[2] > hs.offset) return false;
                }
                return true;
            };
            break;
        }
    }

    const PointCloud cloud = sample_ball({n, samples, seed});
    long long hits = 0;
    for (long long row = 0; row < samples; ++row) {
        if (inside(cloud.values().data() + static_cast<std::size_t>(row) * n)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return {p, se, samples};
}

}  // namespace hypershape
