#pragma once

// C-, S- and E-functions: sums of exponentials exp(2 pi i <mu, x>) over a Weyl
// group orbit (with signs for S, over an even-subgroup orbit for E).

#include <numeric>
#include <vector>

#include "lietrans/lattice.hpp"

namespace lietrans {

class OrbitFunction {
  public:
    OrbitFunction(AlgebraId id, Family family, const Weight& lambda) : id_(id), family_(family), lambda_(lambda) {
        check_domain();
        orbit_ = family == Family::E ? even_orbit(lambda, id) : orbit(lambda, id);
        if (family == Family::S && !orbit_.parity_defined)
            throw consistency_error("S-function orbit without well-defined parities");

        const auto& d = cartan(id);
        cden_ = 1;
        for (const auto& row : d.Cinv)
            for (const auto& q : row) cden_ = std::lcm(cden_, q.denominator());
        Mat3i cnum{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                cnum[i][j] = static_cast<int>((d.Cinv[i][j] * Rational(cden_)).numerator());

        terms_.reserve(orbit_.size());
        for (const auto& p : orbit_.points) {
            Term t;
            t.exact = vec_mat(p.coords, cnum);
            for (int j = 0; j < 3; ++j) t.pairing[j] = static_cast<double>(t.exact[j]) / static_cast<double>(cden_);
            t.sign = family == Family::S ? p.parity : 1;
            terms_.push_back(t);
        }
    }

    AlgebraId algebra() const { return id_; }
    Family family() const { return family_; }
    const Weight& weight() const { return lambda_; }
    const Orbit<std::int64_t>& orbit_points() const { return orbit_; }
    std::size_t size() const { return terms_.size(); }

    // x in omega-check coordinates.
    Complex operator()(const Vec3d& x) const {
        Complex acc{};
        for (const auto& t : terms_) {
            double phase = kTwoPi * dot(t.pairing, x);
            acc += static_cast<double>(t.sign) * Complex(std::cos(phase), std::sin(phase));
        }
        return acc;
    }

    // Exact reduction of every phase modulo 1 before the exponential.
    Complex operator()(const GridPoint& x) const {
        const std::int64_t lcmM = std::lcm(std::lcm<std::int64_t>(x.M[0], x.M[1]), static_cast<std::int64_t>(x.M[2]));
        const std::int64_t L = cden_ * lcmM;
        Complex acc{};
        for (const auto& t : terms_) {
            std::int64_t num = 0;
            for (int i = 0; i < 3; ++i) num += t.exact[i] * x.s[i] * (lcmM / x.M[i]);
            num %= L;
            if (num < 0) num += L;
            double phase = kTwoPi * static_cast<double>(num) / static_cast<double>(L);
            acc += static_cast<double>(t.sign) * Complex(std::cos(phase), std::sin(phase));
        }
        return acc;
    }

  private:
    struct Term {
        Vec3i exact{};    // cden * mu^T Cinv
        Vec3d pairing{};  // mu^T Cinv
        int sign = 1;
    };

    void check_domain() const {
        switch (family_) {
        case Family::C:
            if (!is_dominant(lambda_)) throw std::invalid_argument("C-functions need a dominant weight");
            break;
        case Family::S:
            if (!is_strictly_dominant(lambda_)) throw std::invalid_argument("S-functions need a strictly dominant weight");
            break;
        case Family::E:
            if (!is_dominant(lambda_) && !is_strictly_dominant(reflect(id_, 1, lambda_)))
                throw std::invalid_argument("E-functions need a weight in P+ or r_1 P++");
            break;
        }
    }

    AlgebraId id_;
    Family family_;
    Weight lambda_;
    Orbit<std::int64_t> orbit_;
    std::int64_t cden_ = 1;
    std::vector<Term> terms_;
};

// <lambda, lambda> from the omega Gram matrix.
inline Rational weight_norm2(const Weight& lambda, AlgebraId id) {
    Vec3q q{Rational(lambda[0]), Rational(lambda[1]), Rational(lambda[2])};
    return dot(vec_mat(q, gram(id).gram_omega), q);
}

inline double laplace_eigenvalue(const Weight& lambda, AlgebraId id) {
    return -2.0 * kTwoPi * std::numbers::pi * to_double(weight_norm2(lambda, id));
}

// |f(w x) - sigma f(x)| for a word of affine reflections.  sigma is 1 for C,
// det(w) for S.  An E-function is invariant under even words; an odd word
// maps E_lambda to E_{r_1 lambda}, which is what the residual compares against.
inline double symmetry_check(const OrbitFunction& f, const Vec3d& x, const std::vector<AffineReflection>& word) {
    const Vec3d wx = apply_word(word, x, f.algebra());
    const bool odd = word.size() % 2 == 1;
    switch (f.family()) {
    case Family::C: return std::abs(f(wx) - f(x));
    case Family::S: return std::abs(f(wx) - (odd ? -1.0 : 1.0) * f(x));
    case Family::E: {
        if (!odd) return std::abs(f(wx) - f(x));
        // On a mirror the even orbit is the whole orbit, so E_{r_1 lambda} = E_lambda.
        if (!is_strictly_dominant(dominant_representative(f.weight(), f.algebra()))) return std::abs(f(wx) - f(x));
        OrbitFunction partner(f.algebra(), Family::E, reflect(f.algebra(), 1, f.weight()));
        return std::abs(f(wx) - partner(x));
    }
    }
    return 0;
}

} // namespace lietrans
