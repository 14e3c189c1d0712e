#pragma once

// Gaussian interpolation experiment: sample g(x) = exp(-|x - p|^2) on F_M,
// take its C-transform and measure how well the continuous extension T
// tracks g.  Distances are Euclidean, i.e. taken in the orthonormal basis.

#include <vector>

#include "lietrans/transform.hpp"

namespace lietrans::demo {

inline Field gaussian(AlgebraId id, const Vec3d& p) {
    const Vec3d pe = to_orthonormal(p, Basis::OmegaCheck, id);
    return [id, pe](const Vec3d& x) {
        const Vec3d d = to_orthonormal(x, Basis::OmegaCheck, id) - pe;
        return Complex(std::exp(-dot(d, d)), 0.0);
    };
}

inline GridSpec uniform_spec(AlgebraId id, int M) {
    return GridSpec{std::vector<int>(static_cast<std::size_t>(cartan(id).factor_count()), M)};
}

inline std::vector<Complex> sample(const Field& f, const std::vector<GridPoint>& grid) {
    std::vector<Complex> v;
    v.reserve(grid.size());
    for (const auto& p : grid) v.push_back(f(p.point()));
    return v;
}

struct ErrorRow {
    int M = 0;
    std::size_t grid_size = 0;
    Estimate error;
};

struct Run {
    DiscreteTransform transform;
    Spectrum spectrum;
};

// C-transform of g on F_M, optionally with every weight moved by `shift`.
inline Run interpolate(AlgebraId id, const Field& g, int M, const Vec3i& shift = {0, 0, 0}) {
    const GridSpec spec = uniform_spec(id, M);
    std::vector<Weight> weights = lambda_set(id, spec, Family::C).weights;
    if (shift != Vec3i{0, 0, 0}) weights = shifted_lambda_set(id, spec, {Family::C, weights, {}}, shift, 1).weights;
    DiscreteTransform t(id, spec, Family::C, std::move(weights));
    Spectrum s = t.forward(sample(g, t.grid()));
    return {std::move(t), std::move(s)};
}

inline std::vector<ErrorRow> error_table(AlgebraId id, const Field& g, const std::vector<int>& Ms, std::size_t n,
                                         std::uint64_t seed) {
    std::vector<ErrorRow> rows;
    for (int M : Ms) {
        Run r = interpolate(id, g, M);
        rows.push_back({M, r.transform.grid().size(), error_integral(g, r.spectrum, n, seed)});
    }
    return rows;
}

struct CutValue {
    double k = 0, l = 0;
    Vec3d x{};
    Complex T{};
    double g = 0;
};

// Diagonal line (k,k,k), k in [0,1], in omega-check coordinates.
inline std::vector<CutValue> line_cut(const Spectrum& s, const Field& g, int steps) {
    const Synthesizer T(s);
    std::vector<CutValue> out;
    for (int i = 0; i <= steps; ++i) {
        const double k = static_cast<double>(i) / steps;
        const Vec3d x{k, k, k};
        out.push_back({k, 0, x, T(x), g(x).real()});
    }
    return out;
}

// Surface (k+l, 2k, k+l), k and l in [0,1/2], in omega-check coordinates.
inline std::vector<CutValue> surface_cut(const Spectrum& s, const Field& g, int steps) {
    const Synthesizer T(s);
    std::vector<CutValue> out;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            const double k = 0.5 * i / steps, l = 0.5 * j / steps;
            const Vec3d x{k + l, 2 * k, k + l};
            out.push_back({k, l, x, T(x), g(x).real()});
        }
    return out;
}

} // namespace lietrans::demo
