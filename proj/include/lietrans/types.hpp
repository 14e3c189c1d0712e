#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74's mixed `rational == integer` templates recurse forever under
// C++20 rewritten comparisons.  Exact non-template overloads win resolution.
namespace boost {
inline constexpr bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
    return a == rational<std::int64_t>(b);
}
inline constexpr bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline constexpr bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline constexpr bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
} // namespace boost

namespace lietrans {

using Rational = boost::rational<std::int64_t>;

template <class T> using Vec3 = std::array<T, 3>;
template <class T> using Mat3 = std::array<std::array<T, 3>, 3>;

using Vec3i = Vec3<std::int64_t>;
using Vec3q = Vec3<Rational>;
using Vec3d = Vec3<double>;
using Mat3i = Mat3<int>;
using Mat3q = Mat3<Rational>;
using Mat3d = Mat3<double>;

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Thrown when a file or sample vector does not match what was requested.
class data_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operation not defined for the given algebra or family.
class unsupported_operation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// An internal invariant did not hold (e.g. conflicting Weyl parity).
class consistency_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline Vec3d to_double(const Vec3q& v) { return {to_double(v[0]), to_double(v[1]), to_double(v[2])}; }

template <class T> Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class T> Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class T, class S> Vec3<T> scaled(const Vec3<T>& a, const S& s) {
    return {a[0] * s, a[1] * s, a[2] * s};
}

template <class T> T dot(const Vec3<T>& a, const Vec3<T>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

// Row-vector times matrix: (v^T M)_j = sum_i v_i M_ij.
template <class T, class U> Vec3<T> vec_mat(const Vec3<T>& v, const Mat3<U>& m) {
    Vec3<T> out{};
    for (int j = 0; j < 3; ++j) {
        T acc{};
        for (int i = 0; i < 3; ++i) acc += v[i] * T(m[i][j]);
        out[j] = acc;
    }
    return out;
}

// Matrix times column vector.
template <class T, class U> Vec3<T> mat_vec(const Mat3<U>& m, const Vec3<T>& v) {
    Vec3<T> out{};
    for (int i = 0; i < 3; ++i) {
        T acc{};
        for (int j = 0; j < 3; ++j) acc += T(m[i][j]) * v[j];
        out[i] = acc;
    }
    return out;
}

template <class T> Mat3<T> transpose(const Mat3<T>& m) {
    Mat3<T> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

inline double det(const Mat3d& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Fractional part in [0, 1).
inline Rational frac(const Rational& q) {
    std::int64_t n = q.numerator();
    std::int64_t d = q.denominator();
    std::int64_t r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

template <class T> std::string format_vec(const Vec3<T>& v) {
    auto one = [](const T& x) {
        if constexpr (std::is_same_v<T, Rational>) {
            if (x.denominator() == 1) return std::to_string(x.numerator());
            return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
        } else {
            return std::to_string(x);
        }
    };
    return "(" + one(v[0]) + "," + one(v[1]) + "," + one(v[2]) + ")";
}

} // namespace lietrans
