#pragma once

// Static root-system data for the seven semisimple Lie algebras of rank 3.
//
// Conventions: long roots have squared length 2; a weight is written in the
// basis of fundamental weights (omega), a point of the torus in the basis of
// fundamental coweights (omega-check).  The pairing <omega_i, omegacheck_j>
// is Cinv_ij.

#include <algorithm>
#include <array>
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lietrans/types.hpp"

namespace lietrans {

enum class AlgebraId { A1xA1xA1, A2xA1, C2xA1, G2xA1, A3, B3, C3 };

inline constexpr std::array<AlgebraId, 7> kAllAlgebras = {AlgebraId::A1xA1xA1, AlgebraId::A2xA1, AlgebraId::C2xA1,
                                                          AlgebraId::G2xA1,    AlgebraId::A3,    AlgebraId::B3,
                                                          AlgebraId::C3};

inline std::string_view name(AlgebraId id) {
    switch (id) {
    case AlgebraId::A1xA1xA1: return "A1xA1xA1";
    case AlgebraId::A2xA1: return "A2xA1";
    case AlgebraId::C2xA1: return "C2xA1";
    case AlgebraId::G2xA1: return "G2xA1";
    case AlgebraId::A3: return "A3";
    case AlgebraId::B3: return "B3";
    case AlgebraId::C3: return "C3";
    }
    return "?";
}

// Accepts the canonical names case-insensitively; throws std::invalid_argument.
inline AlgebraId parse_algebra(std::string_view text) {
    std::string key;
    for (char c : text)
        if (c != ' ') key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (key == "A1^3" || key == "A1A1A1") key = "A1XA1XA1";
    for (AlgebraId id : kAllAlgebras) {
        std::string canon;
        for (char c : name(id)) canon.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        if (canon == key) return id;
    }
    throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
}

// One simple constituent; its simple roots occupy indices [offset, offset+rank).
struct SimpleFactor {
    std::string_view name;
    int rank;
    int offset;
};

struct CartanData {
    AlgebraId id;
    std::vector<SimpleFactor> factors;
    Mat3i C;
    Mat3q Cinv;
    Vec3q rootlen2;
    Vec3<int> marks;
    Vec3<int> comarks;
    Vec3<int> dual_marks;
    // Rows are basis vectors written in the orthonormal basis {e_i}.
    Mat3d alpha_ortho;
    Mat3d omega_ortho;
    Mat3d alphacheck_ortho;
    Mat3d omegacheck_ortho;
    double volF;
    int weyl_order;
    // Orbit sizes indexed by the nonzero mask (a!=0)<<2 | (b!=0)<<1 | (c!=0).
    std::array<int, 8> orbit_sizes;

    int factor_of(int i) const {
        for (int f = 0; f < static_cast<int>(factors.size()); ++f)
            if (i >= factors[f].offset && i < factors[f].offset + factors[f].rank) return f;
        throw std::out_of_range("root index out of range");
    }
    int factor_count() const { return static_cast<int>(factors.size()); }
};

namespace detail {

inline Mat3q rational_matrix(const Mat3i& num, std::int64_t den) {
    Mat3q m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rational(num[i][j], den);
    return m;
}

inline void finish(CartanData& d) {
    for (int i = 0; i < 3; ++i) {
        double scale = 2.0 / to_double(d.rootlen2[i]);
        for (int k = 0; k < 3; ++k) {
            d.alphacheck_ortho[i][k] = scale * d.alpha_ortho[i][k];
            d.omegacheck_ortho[i][k] = scale * d.omega_ortho[i][k];
        }
    }
}

inline CartanData make(AlgebraId id) {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const double r6 = std::sqrt(6.0);
    CartanData d{};
    d.id = id;
    switch (id) {
    case AlgebraId::A1xA1xA1:
        d.factors = {{"A1", 1, 0}, {"A1", 1, 1}, {"A1", 1, 2}};
        d.C = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
        d.Cinv = rational_matrix({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 2);
        d.rootlen2 = {Rational(2), Rational(2), Rational(2)};
        d.marks = {1, 1, 1};
        d.comarks = {1, 1, 1};
        d.dual_marks = {1, 1, 1};
        d.alpha_ortho = {{{r2, 0, 0}, {0, r2, 0}, {0, 0, r2}}};
        d.omega_ortho = {{{1 / r2, 0, 0}, {0, 1 / r2, 0}, {0, 0, 1 / r2}}};
        d.volF = 1.0 / (2.0 * r2);
        d.weyl_order = 8;
        d.orbit_sizes = {1, 2, 2, 4, 2, 4, 4, 8};
        break;
    case AlgebraId::A2xA1:
        d.factors = {{"A2", 2, 0}, {"A1", 1, 2}};
        d.C = {{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}};
        d.Cinv = rational_matrix({{{4, 2, 0}, {2, 4, 0}, {0, 0, 3}}}, 6);
        d.rootlen2 = {Rational(2), Rational(2), Rational(2)};
        d.marks = {1, 1, 1};
        d.comarks = {1, 1, 1};
        d.dual_marks = {1, 1, 1};
        d.alpha_ortho = {{{1, -1, 0}, {0, 1, -1}, {r2 / r3, r2 / r3, r2 / r3}}};
        d.omega_ortho = {{{2.0 / 3, -1.0 / 3, -1.0 / 3}, {1.0 / 3, 1.0 / 3, -2.0 / 3}, {1 / r6, 1 / r6, 1 / r6}}};
        d.volF = 1.0 / (2.0 * r6);
        d.weyl_order = 12;
        // masks: 000,001,010,011,100,101,110,111
        d.orbit_sizes = {1, 2, 3, 6, 3, 6, 6, 12};
        break;
    case AlgebraId::C2xA1:
        d.factors = {{"C2", 2, 0}, {"A1", 1, 2}};
        d.C = {{{2, -1, 0}, {-2, 2, 0}, {0, 0, 2}}};
        d.Cinv = rational_matrix({{{2, 1, 0}, {2, 2, 0}, {0, 0, 1}}}, 2);
        d.rootlen2 = {Rational(1), Rational(2), Rational(2)};
        d.marks = {2, 1, 1};
        d.comarks = {1, 1, 1};
        d.dual_marks = {1, 2, 1};
        d.alpha_ortho = {{{0, 1, 0}, {1, -1, 0}, {0, 0, r2}}};
        d.omega_ortho = {{{0.5, 0.5, 0}, {1, 0, 0}, {0, 0, 1 / r2}}};
        d.volF = 1.0 / (4.0 * r2);
        d.weyl_order = 16;
        d.orbit_sizes = {1, 2, 4, 8, 4, 8, 8, 16};
        break;
    case AlgebraId::G2xA1:
        d.factors = {{"G2", 2, 0}, {"A1", 1, 2}};
        d.C = {{{2, -3, 0}, {-1, 2, 0}, {0, 0, 2}}};
        d.Cinv = rational_matrix({{{4, 6, 0}, {2, 4, 0}, {0, 0, 1}}}, 2);
        d.rootlen2 = {Rational(2), Rational(2, 3), Rational(2)};
        d.marks = {2, 3, 1};
        d.comarks = {2, 1, 1};
        d.dual_marks = {3, 2, 1};
        d.alpha_ortho = {{{r2, 0, 0}, {-1 / r2, 1 / r6, 0}, {0, 0, r2}}};
        d.omega_ortho = {{{1 / r2, r3 / r2, 0}, {0, r2 / r3, 0}, {0, 0, 1 / r2}}};
        d.volF = r6 / 24.0;
        d.weyl_order = 24;
        d.orbit_sizes = {1, 2, 6, 12, 6, 12, 12, 24};
        break;
    case AlgebraId::A3:
        d.factors = {{"A3", 3, 0}};
        d.C = {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
        d.Cinv = rational_matrix({{{3, 2, 1}, {2, 4, 2}, {1, 2, 3}}}, 4);
        d.rootlen2 = {Rational(2), Rational(2), Rational(2)};
        d.marks = {1, 1, 1};
        d.comarks = {1, 1, 1};
        d.dual_marks = {1, 1, 1};
        d.alpha_ortho = {{{1, -1, 0}, {0, 1, -1}, {1.0 / 3, 1.0 / 3, 4.0 / 3}}};
        d.omega_ortho = {{{5.0 / 6, -1.0 / 6, -1.0 / 6}, {2.0 / 3, 2.0 / 3, -1.0 / 3}, {0.5, 0.5, 0.5}}};
        d.volF = 1.0 / 12.0;
        d.weyl_order = 24;
        d.orbit_sizes = {1, 4, 6, 12, 4, 12, 12, 24};
        break;
    case AlgebraId::B3:
        d.factors = {{"B3", 3, 0}};
        d.C = {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}};
        d.Cinv = rational_matrix({{{2, 2, 2}, {2, 4, 4}, {1, 2, 3}}}, 2);
        d.rootlen2 = {Rational(2), Rational(2), Rational(1)};
        d.marks = {1, 2, 2};
        d.comarks = {1, 2, 1};
        d.dual_marks = {2, 2, 1};
        d.alpha_ortho = {{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}};
        d.omega_ortho = {{{1, 0, 0}, {1, 1, 0}, {0.5, 0.5, 0.5}}};
        d.volF = 1.0 / 24.0;
        d.weyl_order = 48;
        d.orbit_sizes = {1, 8, 12, 24, 6, 24, 24, 48};
        break;
    case AlgebraId::C3:
        d.factors = {{"C3", 3, 0}};
        d.C = {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}};
        d.Cinv = rational_matrix({{{2, 2, 1}, {2, 4, 2}, {2, 4, 3}}}, 2);
        d.rootlen2 = {Rational(1), Rational(1), Rational(2)};
        d.marks = {2, 2, 1};
        d.comarks = {1, 1, 1};
        d.dual_marks = {1, 2, 2};
        d.alpha_ortho = {{{1 / r2, -1 / r2, 0}, {0, 1 / r2, -1 / r2}, {0, 0, r2}}};
        d.omega_ortho = {{{1 / r2, 0, 0}, {1 / r2, 1 / r2, 0}, {1 / r2, 1 / r2, 1 / r2}}};
        d.volF = r2 / 24.0;
        d.weyl_order = 48;
        d.orbit_sizes = {1, 8, 12, 24, 6, 24, 24, 48};
        break;
    }
    finish(d);
    return d;
}

} // namespace detail

inline const CartanData& cartan(AlgebraId id) {
    static const std::array<CartanData, 7> table = [] {
        std::array<CartanData, 7> t{};
        for (std::size_t i = 0; i < kAllAlgebras.size(); ++i) t[i] = detail::make(kAllAlgebras[i]);
        return t;
    }();
    return table[static_cast<std::size_t>(id)];
}

// Coefficients of the highest coroot of the dual root system over the coroot basis.
inline Vec3<int> dual_marks(AlgebraId id) { return cartan(id).dual_marks; }

enum class Basis { Alpha, Omega, AlphaCheck, OmegaCheck, Orthonormal };

inline Basis parse_basis(std::string_view tag) {
    if (tag == "alpha") return Basis::Alpha;
    if (tag == "omega") return Basis::Omega;
    if (tag == "alphacheck" || tag == "coroot") return Basis::AlphaCheck;
    if (tag == "omegacheck" || tag == "coweight") return Basis::OmegaCheck;
    if (tag == "ortho" || tag == "orthonormal" || tag == "e") return Basis::Orthonormal;
    throw std::invalid_argument("unknown basis tag '" + std::string(tag) + "'");
}

inline const Mat3d& basis_rows(const CartanData& d, Basis b) {
    static const Mat3d identity = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    switch (b) {
    case Basis::Alpha: return d.alpha_ortho;
    case Basis::Omega: return d.omega_ortho;
    case Basis::AlphaCheck: return d.alphacheck_ortho;
    case Basis::OmegaCheck: return d.omegacheck_ortho;
    case Basis::Orthonormal: return identity;
    }
    throw std::invalid_argument("unknown basis tag");
}

inline Vec3d to_orthonormal(const Vec3d& coords, Basis b, AlgebraId id) {
    return vec_mat(coords, basis_rows(cartan(id), b));
}

// omega-check coordinates of an orthonormal vector: x_i = <v, alpha_i>.
inline Vec3d omegacheck_from_orthonormal(const Vec3d& v, AlgebraId id) {
    const auto& a = cartan(id).alpha_ortho;
    return {dot(v, a[0]), dot(v, a[1]), dot(v, a[2])};
}

// omega coordinates of an orthonormal vector: y_i = <v, alphacheck_i>.
inline Vec3d omega_from_orthonormal(const Vec3d& v, AlgebraId id) {
    const auto& a = cartan(id).alphacheck_ortho;
    return {dot(v, a[0]), dot(v, a[1]), dot(v, a[2])};
}

// Exact omega coordinates of a vector given in a non-orthonormal basis.
inline Vec3q to_omega(const Vec3q& u, Basis b, AlgebraId id) {
    const auto& d = cartan(id);
    Vec3q out{};
    switch (b) {
    case Basis::Omega: return u;
    case Basis::Alpha: // alpha_i = sum_j C_ij omega_j
        return vec_mat(u, d.C);
    case Basis::OmegaCheck:
        for (int i = 0; i < 3; ++i) out[i] = u[i] * Rational(2) / d.rootlen2[i];
        return out;
    case Basis::AlphaCheck: {
        Vec3q scaledu{};
        for (int i = 0; i < 3; ++i) scaledu[i] = u[i] * Rational(2) / d.rootlen2[i];
        return vec_mat(scaledu, d.C);
    }
    case Basis::Orthonormal: break;
    }
    throw std::invalid_argument("orthonormal coordinates have no exact omega form");
}

struct GramPair {
    Mat3q gram_omega;               // <omega_i, omega_j>
    Mat3q gram_alpha;               // <alpha_i, alpha_j>
    Mat3q pairing_omega_omegacheck; // <omega_i, omegacheck_j>
};

inline GramPair gram(AlgebraId id) {
    const auto& d = cartan(id);
    GramPair g{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g.gram_omega[i][j] = d.rootlen2[j] / Rational(2) * d.Cinv[i][j];
            g.gram_alpha[i][j] = d.rootlen2[j] / Rational(2) * Rational(d.C[i][j]);
        }
    g.pairing_omega_omegacheck = d.Cinv;
    return g;
}

// Exact scalar product for non-orthonormal bases.
inline Rational scalar_product_exact(const Vec3q& u, Basis ub, const Vec3q& v, Basis vb, AlgebraId id) {
    const auto g = gram(id);
    return dot(vec_mat(to_omega(u, ub, id), g.gram_omega), to_omega(v, vb, id));
}

inline double scalar_product(const Vec3d& u, Basis ub, const Vec3d& v, Basis vb, AlgebraId id) {
    return dot(to_orthonormal(u, ub, id), to_orthonormal(v, vb, id));
}

// Pairing <mu, x> of a weight (omega coords) with a point (omega-check coords).
inline double pairing(const Vec3d& mu, const Vec3d& x, AlgebraId id) {
    const auto& ci = cartan(id).Cinv;
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += mu[i] * to_double(ci[i][j]) * x[j];
    return s;
}

// Highest root of each simple factor in omega-check coordinates (it equals its
// own coroot, so this is C * comarks restricted to the factor).
inline Vec3i highest_root_omegacheck(AlgebraId id, int factor) {
    const auto& d = cartan(id);
    const auto& f = d.factors.at(static_cast<std::size_t>(factor));
    Vec3i xi{};
    for (int j = 0; j < 3; ++j)
        for (int k = f.offset; k < f.offset + f.rank; ++k) xi[j] += static_cast<std::int64_t>(d.C[j][k]) * d.comarks[k];
    return xi;
}

// Vertices of F in omega-check coordinates: Cartesian product over factors of
// {0, omegacheck_i / m_i}.
inline std::vector<Vec3q> fundamental_region_vertices(AlgebraId id) {
    const auto& d = cartan(id);
    std::vector<Vec3q> verts{Vec3q{}};
    for (const auto& f : d.factors) {
        std::vector<Vec3q> next;
        for (const auto& v : verts) {
            next.push_back(v);
            for (int i = f.offset; i < f.offset + f.rank; ++i) {
                Vec3q w = v;
                w[i] = Rational(1, d.marks[i]);
                next.push_back(w);
            }
        }
        verts = std::move(next);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

// Euclidean volume of F from the triple product of its edge vectors
// omegacheck_i / m_i, divided by the product of rank! over the factors.
inline double fundamental_region_volume(AlgebraId id) {
    const auto& d = cartan(id);
    Mat3d edges{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) edges[i][k] = d.omegacheck_ortho[i][k] / d.marks[i];
    double denom = 1;
    for (const auto& f : d.factors)
        for (int r = 2; r <= f.rank; ++r) denom *= r;
    return std::abs(det(edges)) / denom;
}

} // namespace lietrans
