#pragma once

#include <cstdint>
#include <string>

#include "hypershape/errors.hpp"

namespace hypershape {

enum class ShapeKind { Ball, Cube, Simplex, Orthoplex, Platonic };

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

// One of the shape families with a closed-form SP value. Platonic solids
// are 3-D by definition; the other kinds take any dimension n >= 2.
struct AnalyticShape {
    ShapeKind kind = ShapeKind::Ball;
    int dim = 3;
    PlatonicSolid solid = PlatonicSolid::Tetrahedron;

    static AnalyticShape ball(int n);
    static AnalyticShape cube(int n);
    static AnalyticShape simplex(int n);
    static AnalyticShape orthoplex(int n);
    static AnalyticShape platonic(PlatonicSolid solid);

    // Face count / sides-per-face of a Platonic solid.
    int faces() const;
    int sides_per_face() const;

    std::string name() const;
};

// The published algebra, or the variant whose edge lengths are consistent
// with the shape's circumradius. The two agree for balls and orthoplexes
// at every n, for simplexes exactly at n = 3, and for cubes at n = 8;
// elsewhere they differ and the Monte Carlo oracle sides with the
// geometric values.
enum class SpVariant { PaperFormula, GeometricReference };

// Gamma at half-integer arguments: gamma_half(t) == Gamma(t / 2), built
// from Gamma(1/2) = sqrt(pi), Gamma(1) = 1 and the recurrence.
double gamma_half(int twice_x);

// pi^(n/2) r^n / Gamma(n/2 + 1)
double ball_volume(int n, double radius);

// 2 pi^(n/2) r^(n-1) / Gamma(n/2)
double ball_surface(int n, double radius);

// n V / (r S) evaluated through ball_volume and ball_surface; the algebra
// cancels to 1 for every n.
double sphericity_ball(int n);

// Closed-form SP for the shape under the chosen variant.
double sp_closed_form(const AnalyticShape& shape, SpVariant variant);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

// SP estimated by uniform sampling in the unit n-ball: the hit fraction of
// the shape (scaled to circumradius 1) is exactly V / V_ball. Serves as the
// independent arbiter between the two closed-form variants.
McEstimate mc_sp_oracle(const AnalyticShape& shape, long long samples, std::uint64_t seed);

}  // namespace hypershape
