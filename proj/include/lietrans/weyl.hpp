#pragma once

// Weyl group reflections and orbits.
//
// Weights live in omega coordinates, where r_i acts by (r_i v)_j = v_j - v_i C_ij.
// Points of the torus live in omega-check coordinates, where the same
// reflection reads (r_i x)_j = x_j - x_i C_ji.  Both cases go through
// reflect_with() with the appropriate matrix.

#include <algorithm>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "lietrans/algebra.hpp"

namespace lietrans {

using Weight = Vec3i;

template <class T> struct OrbitPoint {
    Vec3<T> coords;
    int parity; // +1 / -1; meaningful only when the orbit is regular

    bool operator==(const OrbitPoint&) const = default;
};

template <class T> struct Orbit {
    Vec3<T> seed;
    std::vector<OrbitPoint<T>> points; // lexicographic order on coords
    bool even = false;                 // orbit of the even subgroup
    bool parity_defined = true;        // false when the seed lies on a mirror

    std::size_t size() const { return points.size(); }
    bool contains(const Vec3<T>& v) const {
        return std::binary_search(points.begin(), points.end(), OrbitPoint<T>{v, 0},
                                  [](const auto& a, const auto& b) { return a.coords < b.coords; });
    }
};

enum class Action { Weight, Coweight };

template <class T> Vec3<T> reflect_with(const Mat3i& K, int i, const Vec3<T>& v) {
    Vec3<T> out = v;
    for (int j = 0; j < 3; ++j) out[j] = v[j] - v[i] * T(K[i][j]);
    return out;
}

inline const Mat3i& action_matrix(AlgebraId id, Action a) {
    static const auto transposed = [] {
        std::array<Mat3i, 7> t{};
        for (std::size_t k = 0; k < kAllAlgebras.size(); ++k) t[k] = transpose(cartan(kAllAlgebras[k]).C);
        return t;
    }();
    return a == Action::Weight ? cartan(id).C : transposed[static_cast<std::size_t>(id)];
}

// Simple reflection r_i, 1 <= i <= 3, on a weight in omega coordinates.
template <class T = std::int64_t> Vec3<T> reflect(AlgebraId id, int i, const Vec3<T>& v, Action a = Action::Weight) {
    if (i < 1 || i > 3) throw std::out_of_range("reflection index must be in 1..3");
    return reflect_with(action_matrix(id, a), i - 1, v);
}

template <class T> bool is_dominant(const Vec3<T>& v) { return v[0] >= T(0) && v[1] >= T(0) && v[2] >= T(0); }

template <class T> bool is_strictly_dominant(const Vec3<T>& v) {
    return v[0] > T(0) && v[1] > T(0) && v[2] > T(0);
}

namespace detail {

template <class T>
Orbit<T> full_orbit(const Mat3i& K, const Vec3<T>& seed, int weyl_order, const std::array<int, 3>& order) {
    std::map<Vec3<T>, int> parity{{seed, +1}};
    std::deque<Vec3<T>> queue{seed};
    bool conflict = false;
    while (!queue.empty()) {
        Vec3<T> v = queue.front();
        queue.pop_front();
        int p = parity[v];
        for (int i : order) {
            Vec3<T> w = reflect_with(K, i, v);
            auto [it, inserted] = parity.try_emplace(w, -p);
            if (inserted)
                queue.push_back(w);
            else if (it->second != -p)
                conflict = true;
        }
    }
    Orbit<T> orbit{seed, {}, false, !conflict};
    if (conflict && static_cast<int>(parity.size()) == weyl_order)
        throw consistency_error("regular orbit reached a point with both parities");
    orbit.points.reserve(parity.size());
    for (const auto& [v, p] : parity) orbit.points.push_back({v, p});
    return orbit;
}

template <class T> Orbit<T> even_orbit(const Mat3i& K, const Vec3<T>& seed) {
    std::map<std::pair<Vec3<T>, int>, bool> seen{{{seed, +1}, true}};
    std::deque<std::pair<Vec3<T>, int>> queue{{seed, +1}};
    while (!queue.empty()) {
        auto [v, p] = queue.front();
        queue.pop_front();
        for (int i = 0; i < 3; ++i) {
            std::pair<Vec3<T>, int> next{reflect_with(K, i, v), -p};
            if (seen.emplace(next, true).second) queue.push_back(next);
        }
    }
    Orbit<T> orbit{seed, {}, true, true};
    for (const auto& [state, unused] : seen)
        if (state.second == +1) orbit.points.push_back({state.first, +1});
    return orbit;
}

} // namespace detail

// W-orbit of v.  Every point carries the parity of the word that produced it.
// Reflections are applied in the given order during the breadth-first closure.
template <class T = std::int64_t>
Orbit<T> orbit(const Vec3<T>& v, AlgebraId id, Action a = Action::Weight,
               const std::array<int, 3>& order = {0, 1, 2}) {
    return detail::full_orbit(action_matrix(id, a), v, cartan(id).weyl_order, order);
}

// Orbit of the even subgroup W_e (words of even length).
template <class T = std::int64_t> Orbit<T> even_orbit(const Vec3<T>& v, AlgebraId id, Action a = Action::Weight) {
    return detail::even_orbit(action_matrix(id, a), v);
}

inline int zero_pattern(const Weight& v) { return (v[0] != 0) << 2 | (v[1] != 0) << 1 | (v[2] != 0); }

// Size of the orbit through a dominant weight with the given nonzero mask.
inline int orbit_size(int pattern, AlgebraId id) {
    if (pattern < 0 || pattern > 7) throw std::out_of_range("zero pattern must be in 0..7");
    return cartan(id).orbit_sizes[static_cast<std::size_t>(pattern)];
}

inline int orbit_size(const Weight& dominant, AlgebraId id) { return orbit_size(zero_pattern(dominant), id); }

// The dominant representative of the orbit through v.
inline Weight dominant_representative(const Weight& v, AlgebraId id) {
    Weight w = v;
    for (int guard = 0; guard < 1000; ++guard) {
        int i = 0;
        while (i < 3 && w[i] >= 0) ++i;
        if (i == 3) return w;
        w = reflect_with(cartan(id).C, i, w);
    }
    throw consistency_error("dominant representative search did not terminate");
}

} // namespace lietrans
