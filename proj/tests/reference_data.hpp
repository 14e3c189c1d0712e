#pragma once

// Hand-transcribed reference tables: generic orbit lists, grid examples,
// orbit-size tables and Cartan data.  Kept separate from the library tables so
// tests compare two independent copies.

#include <set>
#include <vector>

#include "lietrans/lietrans.hpp"

namespace ref {

using lietrans::AlgebraId;
using lietrans::Vec3i;

struct Tables {
    std::array<std::array<int, 3>, 3> C;
    std::array<std::array<int, 3>, 3> Cinv_num;
    int Cinv_den;
    std::array<int, 3> marks;
    double volume;
    std::array<int, 8> orbit_sizes; // (abc, ab0, a0c, 0bc, a00, 0b0, 00c, 000)
};

inline Tables tables(AlgebraId id) {
    const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
    switch (id) {
    case AlgebraId::A1xA1xA1:
        return {{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}}, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 2, {1, 1, 1},
                1 / (2 * r2), {8, 4, 4, 4, 2, 2, 2, 1}};
    case AlgebraId::A2xA1:
        return {{{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}}, {{{4, 2, 0}, {2, 4, 0}, {0, 0, 3}}}, 6, {1, 1, 1},
                1 / (2 * r6), {12, 6, 6, 6, 3, 3, 2, 1}};
    case AlgebraId::C2xA1:
        return {{{{2, -1, 0}, {-2, 2, 0}, {0, 0, 2}}}, {{{2, 1, 0}, {2, 2, 0}, {0, 0, 1}}}, 2, {2, 1, 1},
                1 / (4 * r2), {16, 8, 8, 8, 4, 4, 2, 1}};
    case AlgebraId::G2xA1:
        return {{{{2, -3, 0}, {-1, 2, 0}, {0, 0, 2}}}, {{{4, 6, 0}, {2, 4, 0}, {0, 0, 1}}}, 2, {2, 3, 1},
                r6 / 24, {24, 12, 12, 12, 6, 6, 2, 1}};
    case AlgebraId::A3:
        return {{{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}, {{{3, 2, 1}, {2, 4, 2}, {1, 2, 3}}}, 4, {1, 1, 1},
                1.0 / 12, {24, 12, 12, 12, 4, 6, 4, 1}};
    case AlgebraId::B3:
        return {{{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}}, {{{2, 2, 2}, {2, 4, 4}, {1, 2, 3}}}, 2, {1, 2, 2},
                1.0 / 24, {48, 24, 24, 24, 6, 12, 8, 1}};
    case AlgebraId::C3:
        return {{{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}}, {{{2, 2, 1}, {2, 4, 2}, {2, 4, 3}}}, 2, {2, 2, 1},
                r2 / 24, {48, 24, 24, 24, 6, 12, 8, 1}};
    }
    return {};
}

// Zero patterns in table order.
inline const std::array<Vec3i, 8> kPatterns = {Vec3i{1, 1, 1}, Vec3i{1, 1, 0}, Vec3i{1, 0, 1}, Vec3i{0, 1, 1},
                                              Vec3i{1, 0, 0}, Vec3i{0, 1, 0}, Vec3i{0, 0, 1}, Vec3i{0, 0, 0}};

// Omega-check basis rows in the orthonormal basis (C2xA1 row 1 is (1,1,0)).
inline std::array<std::array<double, 3>, 3> omegacheck_rows(AlgebraId id) {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    switch (id) {
    case AlgebraId::A1xA1xA1: return {{{1 / r2, 0, 0}, {0, 1 / r2, 0}, {0, 0, 1 / r2}}};
    case AlgebraId::A2xA1: return {{{2.0 / 3, -1.0 / 3, -1.0 / 3}, {1.0 / 3, 1.0 / 3, -2.0 / 3}, {1 / r6, 1 / r6, 1 / r6}}};
    case AlgebraId::C2xA1: return {{{1, 1, 0}, {1, 0, 0}, {0, 0, 1 / r2}}};
    case AlgebraId::G2xA1: return {{{1 / r2, r3 / r2, 0}, {0, r6, 0}, {0, 0, 1 / r2}}};
    case AlgebraId::A3: return {{{5.0 / 6, -1.0 / 6, -1.0 / 6}, {2.0 / 3, 2.0 / 3, -1.0 / 3}, {0.5, 0.5, 0.5}}};
    case AlgebraId::B3: return {{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}};
    case AlgebraId::C3: return {{{r2, 0, 0}, {r2, r2, 0}, {1 / r2, 1 / r2, 1 / r2}}};
    }
    return {};
}

// Vertices of F, as multiples of the omega-check basis.
inline std::set<std::array<double, 3>> vertices(AlgebraId id) {
    switch (id) {
    case AlgebraId::A1xA1xA1:
        return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    case AlgebraId::A2xA1: return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
    case AlgebraId::C2xA1: return {{0, 0, 0}, {0.5, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0.5, 0, 1}, {0, 1, 1}};
    case AlgebraId::G2xA1: return {{0, 0, 0}, {0.5, 0, 0}, {0, 1.0 / 3, 0}, {0, 0, 1}, {0.5, 0, 1}, {0, 1.0 / 3, 1}};
    case AlgebraId::A3: return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case AlgebraId::B3: return {{0, 0, 0}, {1, 0, 0}, {0, 0.5, 0}, {0, 0, 0.5}};
    case AlgebraId::C3: return {{0, 0, 0}, {0.5, 0, 0}, {0, 0.5, 0}, {0, 0, 1}};
    }
    return {};
}

// Generic orbit of (a,b,c).
inline std::set<Vec3i> generic_orbit(AlgebraId id, std::int64_t a, std::int64_t b, std::int64_t c) {
    std::vector<Vec3i> half;
    std::set<Vec3i> out;
    auto with_pm = [&] {
        for (const auto& v : half) {
            out.insert(v);
            out.insert(Vec3i{-v[0], -v[1], -v[2]});
        }
        return out;
    };
    switch (id) {
    case AlgebraId::A1xA1xA1:
        for (int sa : {-1, 1})
            for (int sb : {-1, 1})
                for (int sc : {-1, 1}) out.insert({sa * a, sb * b, sc * c});
        return out;
    case AlgebraId::A2xA1:
        for (int sc : {-1, 1})
            for (const auto& v : std::vector<Vec3i>{{a, b, 0}, {-a, a + b, 0}, {a + b, -b, 0}, {b, -(a + b), 0},
                                                    {-(a + b), a, 0}, {-b, -a, 0}})
                out.insert({v[0], v[1], sc * c});
        return out;
    case AlgebraId::C2xA1:
        half = {{a, b, c},      {a, b, -c},           {-a, a + b, c},           {a + 2 * b, -b, c},
                {a + 2 * b, -(a + b), c}, {-a, a + b, -c}, {a + 2 * b, -(a + b), -c}, {a + 2 * b, -b, -c}};
        return with_pm();
    case AlgebraId::G2xA1:
        for (std::int64_t sc : {1, -1}) {
            const std::int64_t z = sc * c;
            for (const auto& v :
                 std::vector<Vec3i>{{a, b, z}, {-a, 3 * a + b, z}, {a + b, -b, z}, {2 * a + b, -(3 * a + b), z},
                                    {-(a + b), 3 * a + 2 * b, z}, {-(2 * a + b), 3 * a + 2 * b, z}})
                half.push_back(v);
        }
        return with_pm();
    case AlgebraId::A3:
        return {{a, b, c},
                {-a, a + b, c},
                {a + b, -b, b + c},
                {a, b + c, -c},
                {b, -(a + b), a + b + c},
                {-a, a + b + c, -c},
                {-(a + b), a, b + c},
                {a + b, c, -(b + c)},
                {a + b + c, -(b + c), b}, // source lists c as the last entry, which leaves the orbit
                {b, c, -(a + b + c)},
                {b + c, -(a + b + c), a + b},
                {-b, -a, a + b + c},
                {-(a + b), a + b + c, -(b + c)},
                {-(a + b + c), a, b},
                {a + b + c, -c, -b},
                {b + c, -c, -(a + b)},
                {-b, b + c, -(a + b + c)},
                {c, -(a + b + c), a},
                {-(b + c), -a, a + b},
                {-(a + b + c), a + b, -b},
                {c, -(b + c), -a},
                {-(b + c), b, -(a + b)},
                {-c, -(a + b), a},
                {-c, -b, -a}};
    case AlgebraId::B3:
        half = {{a, b, c},
                {-a, a + b, c},
                {a + b, -b, 2 * b + c},
                {a, b + c, -c},
                {b, -(a + b), 2 * a + 2 * b + c},
                {-a, a + b + c, -c},
                {-(a + b), a, 2 * b + c},
                {a + b, b + c, -(2 * b + c)},
                {a + b + c, -(b + c), 2 * b + c},
                {b, a + b + c, -(2 * a + 2 * b + c)},
                {b + c, -(a + b + c), 2 * a + 2 * b + c},
                {-b, -a, 2 * a + 2 * b + c},
                {-(a + b), a + 2 * b + c, -(2 * b + c)},
                {a + 2 * b + c, -(b + c), c},
                {-(a + b + c), a, 2 * b + c},
                {a + b + c, b, -(2 * b + c)},
                {a + 2 * b + c, -(a + b + c), c},
                {b + c, a + b, -(2 * a + 2 * b + c)},
                {-b, a + 2 * b + c, -(2 * a + 2 * b + c)},
                {b + c, -(a + 2 * b + c), 2 * a + 2 * b + c},
                {-(a + 2 * b + c), a + b, c},
                {a + 2 * b + c, -b, -c},
                {-(b + c), -a, 2 * a + 2 * b + c},
                {-(a + b + c), a + 2 * b + c, -(2 * b + c)}};
        return with_pm();
    case AlgebraId::C3:
        half = {{a, b, c},
                {-a, a + b, c},
                {a + b, -b, b + c},
                {a, b + 2 * c, -c},
                {b, -(a + b), a + b + c},
                {-a, a + b + 2 * c, -c},
                {-(a + b), a, b + c},
                {a + b, b + 2 * c, -(b + c)},
                {a + b + 2 * c, -(b + 2 * c), b + c},
                {b, a + b + 2 * c, -(a + b + c)},
                {b + 2 * c, -(a + b + 2 * c), a + b + c},
                {-b, -a, a + b + c},
                {-(a + b), a + 2 * b + 2 * c, -(b + c)},
                {a + 2 * b + 2 * c, -(b + 2 * c), c},
                {-(a + b + 2 * c), a, b + c},
                {a + b + 2 * c, b, -(b + c)},
                {a + 2 * b + 2 * c, -(a + b + 2 * c), c},
                {b + 2 * c, a + b, -(a + b + c)},
                {-b, a + 2 * b + 2 * c, -(a + b + c)},
                {b + 2 * c, -(a + 2 * b + 2 * c), a + b + c},
                {-(a + 2 * b + 2 * c), a + b, c},
                {a + 2 * b + 2 * c, -b, -c},
                {-(b + 2 * c), -a, a + b + c},
                {-(a + b + 2 * c), a + 2 * b + 2 * c, -(b + c)}};
        return with_pm();
    }
    return out;
}

inline std::size_t generic_orbit_size(AlgebraId id) { return static_cast<std::size_t>(tables(id).orbit_sizes[0]); }

// Grid examples as index sets.
inline std::set<Vec3i> grid_a1_113() {
    std::set<Vec3i> s;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 3; ++c) s.insert({a, b, c});
    return s;
}

// The eight points of F_{2,1,3} that are new relative to F_{1,1,3} (odd s_1).
inline std::set<Vec3i> grid_a1_213_extra() {
    return {{1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}, {1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}};
}

inline std::set<Vec3i> grid_a2a1_23() {
    return {{0, 2, 0}, {0, 2, 3}, {0, 2, 2}, {0, 2, 1}, {2, 0, 0}, {2, 0, 3}, {2, 0, 2}, {2, 0, 1},
            {0, 0, 0}, {0, 0, 3}, {0, 0, 2}, {0, 0, 1}, {0, 1, 0}, {0, 1, 3}, {0, 1, 2}, {0, 1, 1},
            {1, 0, 0}, {1, 0, 3}, {1, 0, 2}, {1, 0, 1}, {1, 1, 0}, {1, 1, 3}, {1, 1, 2}, {1, 1, 1}};
}

inline std::set<Vec3i> grid_c2a1_32() {
    return {{1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 2, 0}, {0, 2, 1}, {0, 2, 2},
            {1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 3, 0}, {0, 3, 1}, {0, 3, 2}};
}

inline std::set<Vec3i> grid_g2a1_43() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3},
            {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}, {2, 0, 0}, {2, 0, 1}, {2, 0, 2}, {2, 0, 3}};
}

inline std::set<Vec3i> grid_g2a1_32() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
}

inline std::set<Vec3i> grid_a3_3() {
    return {{0, 0, 0}, {0, 0, 3}, {0, 3, 0}, {3, 0, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 1, 2}, {1, 2, 0}, {0, 2, 1},
            {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 0, 0}, {0, 0, 2}, {0, 2, 0}};
}

// Reference listing with the index order reversed: each triple is [s3,s2,s1].
inline std::set<Vec3i> grid_b3_4_as_listed() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 1, 2},
            {1, 0, 2}, {0, 0, 4}, {0, 0, 3}, {1, 1, 0}, {2, 0, 0}, {0, 1, 0}, {1, 0, 0}};
}

// Reference listing; contains [1,1,2] and [1,1,1], which violate 2s1+2s2+s3 <= 4.
inline std::set<Vec3i> grid_c3_4_as_listed() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 1, 0}, {0, 1, 1}, {0, 0, 4},
            {2, 0, 0}, {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 1, 2}, {1, 1, 0}, {1, 1, 1}};
}

} // namespace ref
