#pragma once

// Fundamental regions, grids F_M, torus multiplicities and admissible weight sets.

#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lietrans/weyl.hpp"

namespace lietrans {

enum class Family { C, S, E };

inline std::string_view name(Family f) {
    switch (f) {
    case Family::C: return "C";
    case Family::S: return "S";
    case Family::E: return "E";
    }
    return "?";
}

inline Family parse_family(std::string_view text) {
    if (text == "C" || text == "c") return Family::C;
    if (text == "S" || text == "s") return Family::S;
    if (text == "E" || text == "e") return Family::E;
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

// One density per simple factor.
struct GridSpec {
    std::vector<int> densities;

    bool operator==(const GridSpec&) const = default;

    void validate(AlgebraId id) const {
        const auto& d = cartan(id);
        if (static_cast<int>(densities.size()) != d.factor_count())
            throw std::invalid_argument(std::string(name(id)) + " needs " + std::to_string(d.factor_count()) +
                                        " grid densities, got " + std::to_string(densities.size()));
        for (int m : densities)
            if (m < 1) throw std::invalid_argument("grid densities must be positive");
    }

    // Density seen by each of the three coordinates.
    Vec3<int> per_coordinate(AlgebraId id) const {
        validate(id);
        const auto& d = cartan(id);
        return {densities[d.factor_of(0)], densities[d.factor_of(1)], densities[d.factor_of(2)]};
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < densities.size(); ++i) out += (i ? "," : "") + std::to_string(densities[i]);
        return out;
    }
};

inline GridSpec parse_grid_spec(std::string_view text) {
    GridSpec spec;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad grid density '" + item + "'");
        spec.densities.push_back(value);
    }
    if (spec.densities.empty()) throw std::invalid_argument("empty grid spec");
    return spec;
}

// A point sum_i (s_i / M_i) omegacheck_i.  Indices can be negative for the
// reflected half of an E-grid.
struct GridPoint {
    Vec3i s{};
    Vec3<int> M{1, 1, 1};
    std::int64_t eps = 1;

    Vec3q coords() const { return {Rational(s[0], M[0]), Rational(s[1], M[1]), Rational(s[2], M[2])}; }
    Vec3d point() const {
        return {static_cast<double>(s[0]) / M[0], static_cast<double>(s[1]) / M[1], static_cast<double>(s[2]) / M[2]};
    }
};

// Representative of y modulo the coroot lattice.  In omega-check coordinates
// alphacheck_i is column i of C, so y is a coroot iff Cinv*y is integral.
inline Vec3q reduce_mod_coroots(const Vec3q& y, AlgebraId id) {
    const auto& d = cartan(id);
    Vec3q n = mat_vec(d.Cinv, y);
    for (auto& q : n) q = frac(q);
    return mat_vec(d.C, n);
}

// Number of distinct torus points in the (even) Weyl orbit of x.
inline std::int64_t torus_orbit_size(const Vec3q& x, AlgebraId id, bool even) {
    auto orb = even ? even_orbit(x, id, Action::Coweight) : orbit(x, id, Action::Coweight);
    std::set<Vec3q> reduced;
    for (const auto& p : orb.points) reduced.insert(reduce_mod_coroots(p.coords, id));
    return static_cast<std::int64_t>(reduced.size());
}

namespace detail {

inline bool satisfies_marks(const Vec3i& s, const Vec3<int>& weights, const Vec3<int>& M, AlgebraId id,
                            bool strict) {
    const auto& d = cartan(id);
    for (const auto& f : d.factors) {
        std::int64_t sum = 0;
        for (int i = f.offset; i < f.offset + f.rank; ++i) {
            if (s[i] < (strict ? 1 : 0)) return false;
            sum += s[i] * weights[i];
        }
        int m = M[f.offset];
        if (strict ? sum >= m : sum > m) return false;
    }
    return true;
}

template <class Fn> void for_each_box_point(const Vec3<int>& M, Fn&& fn) {
    for (int a = 0; a <= M[0]; ++a)
        for (int b = 0; b <= M[1]; ++b)
            for (int c = 0; c <= M[2]; ++c) fn(Vec3i{a, b, c});
}

inline std::vector<Vec3i> marked_indices(AlgebraId id, const GridSpec& spec, const Vec3<int>& weights,
                                         bool strict) {
    const Vec3<int> M = spec.per_coordinate(id);
    std::vector<Vec3i> out;
    for_each_box_point(M, [&](const Vec3i& s) {
        if (satisfies_marks(s, weights, M, id, strict)) out.push_back(s);
    });
    return out;
}

} // namespace detail

// True when x is strictly inside F (no wall of any factor contains it).
inline bool is_interior_index(const Vec3i& s, AlgebraId id, const GridSpec& spec) {
    return detail::satisfies_marks(s, cartan(id).marks, spec.per_coordinate(id), id, true);
}

inline std::int64_t epsilon(const GridPoint& x, AlgebraId id, Family family) {
    switch (family) {
    case Family::C: return torus_orbit_size(x.coords(), id, false);
    case Family::S: return cartan(id).weyl_order;
    case Family::E: return torus_orbit_size(x.coords(), id, true);
    }
    return 0;
}

// Grid for the given family, in canonical order:
//   C: F_M, lexicographic in s.
//   S: F_M without points on any wall of F.
//   E: F_M followed by r_1 applied to the interior points of F_M.  Boundary
//      points are fixed modulo W_e^aff by an odd element, so their reflected
//      copies would be duplicates on the torus.
inline std::vector<GridPoint> grid_points(AlgebraId id, const GridSpec& spec, Family family) {
    const auto& d = cartan(id);
    const Vec3<int> M = spec.per_coordinate(id);
    std::vector<GridPoint> out;
    auto add = [&](const Vec3i& s) {
        GridPoint p{s, M, 1};
        p.eps = epsilon(p, id, family);
        out.push_back(p);
    };
    if (family == Family::S) {
        for (const auto& s : detail::marked_indices(id, spec, d.marks, true)) add(s);
        return out;
    }
    for (const auto& s : detail::marked_indices(id, spec, d.marks, false)) add(s);
    if (family == Family::E)
        for (const auto& s : detail::marked_indices(id, spec, d.marks, true))
            add(reflect_with(action_matrix(id, Action::Coweight), 0, s));
    return out;
}

namespace detail {

inline std::int64_t factor_count_closed(std::string_view factor, std::int64_t M) {
    if (factor == "A1") return M + 1;
    if (factor == "A2") return (M + 1) * (M + 1) - M * (M + 1) / 2;
    if (factor == "C2") return (M / 2 + 1) * (M + 1 - M / 2);
    if (factor == "G2") {
        std::int64_t n = M / 3 + 1;
        for (std::int64_t i = 0; i <= M / 3; ++i) n += (M - 3 * i) / 2;
        return n;
    }
    if (factor == "A3") {
        std::int64_t twice = 0;
        for (std::int64_t i = 0; i <= M; ++i) twice += (M + 1 - i) * (M + 2 - i);
        return twice / 2;
    }
    if (factor == "B3" || factor == "C3") {
        const std::int64_t h = M / 2;
        // (h+1)(h[(M+1)/2] + M + 1 - (M+2)h/2) + sum_{i<=h} i^2, kept integral by doubling.
        std::int64_t twice = (h + 1) * (2 * h * ((M + 1) / 2) + 2 * (M + 1) - (M + 2) * h);
        std::int64_t squares = h * (h + 1) * (2 * h + 1) / 6;
        return twice / 2 + squares;
    }
    throw std::invalid_argument("no closed grid formula for factor " + std::string(factor));
}

} // namespace detail

// |F_M| from the closed per-factor formulas.
inline std::int64_t grid_count(AlgebraId id, const GridSpec& spec) {
    spec.validate(id);
    std::int64_t n = 1;
    const auto& d = cartan(id);
    for (int f = 0; f < d.factor_count(); ++f) n *= detail::factor_count_closed(d.factors[f].name, spec.densities[f]);
    return n;
}

// |A_M|: number of torus points (1/M) P-check / Q-check, counted through F_M.
inline std::int64_t torus_size(AlgebraId id, const GridSpec& spec) {
    std::int64_t n = 0;
    for (const auto& p : grid_points(id, spec, Family::C)) n += p.eps;
    return n;
}

struct WeightSet {
    Family family = Family::C;
    std::vector<Weight> weights;
    std::vector<double> norms; // filled by the transform
};

// Lambda_M:
//   C: t >= 0 with sum t_i mcheck_i <= M per factor;
//   S: t >= 1 with sum t_i mcheck_i < M per factor;
//   E: Lambda_C followed by r_1 Lambda_S.
inline WeightSet lambda_set(AlgebraId id, const GridSpec& spec, Family family) {
    const auto& d = cartan(id);
    WeightSet ws{family, {}, {}};
    if (family == Family::S) {
        ws.weights = detail::marked_indices(id, spec, d.dual_marks, true);
        return ws;
    }
    ws.weights = detail::marked_indices(id, spec, d.dual_marks, false);
    if (family == Family::E)
        for (const auto& t : detail::marked_indices(id, spec, d.dual_marks, true))
            ws.weights.push_back(reflect_with(d.C, 0, t));
    return ws;
}

// Generators of the affine Weyl group: r_1..r_3 (simple = 1..3) and the
// affine reflection r_0 of each simple factor (simple = 0).
struct AffineReflection {
    int simple = 1;
    int factor = 0;

    std::string label() const {
        if (simple != 0) return "r" + std::to_string(simple);
        return factor == 0 ? "r0" : "r0." + std::to_string(factor);
    }
};

inline std::vector<AffineReflection> affine_generators(AlgebraId id) {
    std::vector<AffineReflection> g{{1, 0}, {2, 0}, {3, 0}};
    for (int f = 0; f < cartan(id).factor_count(); ++f) g.push_back({0, f});
    return g;
}

inline AffineReflection parse_affine_reflection(std::string_view text, AlgebraId id) {
    for (const auto& g : affine_generators(id))
        if (g.label() == text) return g;
    throw std::invalid_argument("unknown reflection '" + std::string(text) + "'");
}

// <x, xi_f> for the highest root of factor f; x in omega-check coordinates.
template <class T> T highest_root_level(const Vec3<T>& x, AlgebraId id, int factor) {
    const auto& d = cartan(id);
    const auto& f = d.factors.at(static_cast<std::size_t>(factor));
    T level{};
    for (int i = f.offset; i < f.offset + f.rank; ++i) level += T(d.marks[i]) * x[i];
    return level;
}

template <class T> Vec3<T> apply_reflection(const AffineReflection& g, const Vec3<T>& x, AlgebraId id) {
    if (g.simple != 0) return reflect<T>(id, g.simple, x, Action::Coweight);
    if (g.factor < 0 || g.factor >= cartan(id).factor_count()) throw std::out_of_range("factor out of range");
    const Vec3i xi = highest_root_omegacheck(id, g.factor);
    const T shift = highest_root_level(x, id, g.factor) - T(1);
    Vec3<T> out = x;
    for (int j = 0; j < 3; ++j) out[j] = x[j] - shift * T(xi[j]);
    return out;
}

template <class T>
Vec3<T> apply_word(const std::vector<AffineReflection>& word, const Vec3<T>& x, AlgebraId id) {
    Vec3<T> y = x;
    for (const auto& g : word) y = apply_reflection(g, y, id);
    return y;
}

inline bool in_fundamental_region(const Vec3d& x, AlgebraId id, double tol = 1e-12) {
    for (double c : x)
        if (c < -tol) return false;
    for (int f = 0; f < cartan(id).factor_count(); ++f)
        if (highest_root_level(x, id, f) > 1.0 + tol) return false;
    return true;
}

struct FoldResult {
    Vec3d point{};
    int sign = +1;       // (-1)^reflections
    int reflections = 0; // length of the folding word
};

// Fold an omega-check point into F by repeatedly reflecting in a violated wall.
inline FoldResult fold_to_F(const Vec3d& x, AlgebraId id, double tol = 1e-13) {
    for (double c : x)
        if (!std::isfinite(c)) throw std::domain_error("cannot fold a non-finite point");
    const double length = norm(to_orthonormal(x, Basis::OmegaCheck, id));
    const long cap = 64L * (1L + static_cast<long>(std::ceil(length)));
    FoldResult r{x, +1, 0};
    const int nf = cartan(id).factor_count();
    for (long step = 0; step <= cap; ++step) {
        AffineReflection wall{-1, 0};
        for (int i = 0; i < 3 && wall.simple < 0; ++i)
            if (r.point[i] < -tol) wall = {i + 1, 0};
        for (int f = 0; f < nf && wall.simple < 0; ++f)
            if (highest_root_level(r.point, id, f) > 1.0 + tol) wall = {0, f};
        if (wall.simple < 0) return r;
        r.point = apply_reflection(wall, r.point, id);
        r.sign = -r.sign;
        ++r.reflections;
    }
    throw std::runtime_error("fold_to_F exceeded its iteration cap");
}

// Barycenter of F in omega-check coordinates (mean of its vertices).
inline Vec3d fundamental_region_barycenter(AlgebraId id) {
    const auto verts = fundamental_region_vertices(id);
    Vec3d c{};
    for (const auto& v : verts) c = c + to_double(v);
    return scaled(c, 1.0 / static_cast<double>(verts.size()));
}

} // namespace lietrans
