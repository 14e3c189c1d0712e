#pragma once

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "lietrans/lietrans.hpp"

namespace support {

using namespace lietrans;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
inline std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Vec3d random_point(double lo = -2, double hi = 2) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

// Point strictly inside F, away from its walls by `margin` in level units.
inline Vec3d random_interior(AlgebraId id, double margin = 0.05) {
    RegionSampler sampler(id, Family::C);
    for (;;) {
        Vec3d x = sampler(rng());
        bool ok = x[0] > margin && x[1] > margin && x[2] > margin;
        for (int f = 0; f < cartan(id).factor_count(); ++f) ok = ok && highest_root_level(x, id, f) < 1 - margin;
        if (ok) return x;
    }
}

inline Weight random_weight(int lo, int hi) { return {uniform_int(lo, hi), uniform_int(lo, hi), uniform_int(lo, hi)}; }

inline GridSpec uniform_spec(AlgebraId id, int M) {
    return GridSpec{std::vector<int>(static_cast<std::size_t>(cartan(id).factor_count()), M)};
}

// Every spec with all densities in [1, max].
inline std::vector<GridSpec> all_specs(AlgebraId id, int max) {
    const int n = cartan(id).factor_count();
    std::vector<GridSpec> out;
    std::vector<int> d(static_cast<std::size_t>(n), 1);
    for (;;) {
        out.push_back({d});
        int k = 0;
        while (k < n && d[static_cast<std::size_t>(k)] == max) d[static_cast<std::size_t>(k++)] = 1;
        if (k == n) return out;
        ++d[static_cast<std::size_t>(k)];
    }
}

// Root system generated from the simple roots by reflections, in the
// orthonormal basis.  Independent of the Cartan tables apart from alpha_ortho.
inline std::vector<Vec3d> root_system(AlgebraId id) {
    const auto& a = cartan(id).alpha_ortho;
    auto key = [](const Vec3d& v) {
        return std::array<long long, 3>{std::llround(v[0] * 1e8), std::llround(v[1] * 1e8), std::llround(v[2] * 1e8)};
    };
    std::map<std::array<long long, 3>, Vec3d> seen;
    std::vector<Vec3d> todo;
    for (const auto& r : a) {
        Vec3d v{r[0], r[1], r[2]};
        if (seen.emplace(key(v), v).second) todo.push_back(v);
    }
    while (!todo.empty()) {
        Vec3d v = todo.back();
        todo.pop_back();
        for (const auto& r : a) {
            Vec3d s{r[0], r[1], r[2]};
            Vec3d w = v - scaled(s, 2 * dot(v, s) / dot(s, s));
            if (seen.emplace(key(w), w).second) todo.push_back(w);
        }
    }
    std::vector<Vec3d> out;
    for (const auto& [k, v] : seen) out.push_back(v);
    return out;
}

// Coefficients of v over the simple roots: c_j = <v, omegacheck_j>.
inline Vec3d alpha_coefficients(const Vec3d& v, AlgebraId id) {
    const auto& w = cartan(id).omegacheck_ortho;
    return {dot(v, Vec3d{w[0][0], w[0][1], w[0][2]}), dot(v, Vec3d{w[1][0], w[1][1], w[1][2]}),
            dot(v, Vec3d{w[2][0], w[2][1], w[2][2]})};
}

// Coefficients of v over the simple coroots: d_j = <v, omega_j>.
inline Vec3d alphacheck_coefficients(const Vec3d& v, AlgebraId id) {
    const auto& w = cartan(id).omega_ortho;
    return {dot(v, Vec3d{w[0][0], w[0][1], w[0][2]}), dot(v, Vec3d{w[1][0], w[1][1], w[1][2]}),
            dot(v, Vec3d{w[2][0], w[2][1], w[2][2]})};
}

// Positive roots of one simple factor with the largest height, restricted to
// roots of the given squared length (0 = any length).
inline Vec3d highest_root_of(AlgebraId id, int factor, double len2 = 0) {
    const auto& f = cartan(id).factors[static_cast<std::size_t>(factor)];
    Vec3d best{};
    double best_height = -1;
    for (const auto& r : root_system(id)) {
        Vec3d c = alpha_coefficients(r, id);
        bool inside = true, positive = true;
        double height = 0;
        for (int i = 0; i < 3; ++i) {
            const bool member = i >= f.offset && i < f.offset + f.rank;
            if (!member && std::abs(c[i]) > 1e-9) inside = false;
            if (c[i] < -1e-9) positive = false;
            height += c[i];
        }
        if (!inside || !positive) continue;
        if (len2 > 0 && std::abs(dot(r, r) - len2) > 1e-9) continue;
        if (height > best_height) {
            best_height = height;
            best = r;
        }
    }
    return best;
}

inline double row_length2(const Mat3d& m, int i) { return m[i][0] * m[i][0] + m[i][1] * m[i][1] + m[i][2] * m[i][2]; }

} // namespace support
